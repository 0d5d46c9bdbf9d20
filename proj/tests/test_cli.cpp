// End-to-end checks of the command-line surface: every subcommand named in
// the interface exists and speaks the documented formats.
#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "matcharr/io.hpp"

using namespace matcharr;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static const std::string bin = MATCHARR_CLI_PATH;
  const fs::path out_path = fs::temp_directory_path() / "matcharr_cli_out.txt";
  const std::string cmd = bin + " " + args + " > " + out_path.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, CharpolyC4Json) {
  auto g = write_temp("cli_c4.json", R"({"vertex_count":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  auto r = run_cli("charpoly --graph " + g.string() + " --prime-floor 7 --json");
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["coefficients"], Json::parse("[64, -112, 60, -13, 1]"));
  EXPECT_EQ(j["regions"], 250);
  EXPECT_EQ(j["primes_used"], Json::parse("[7, 11, 13, 17, 19, 23]"));
  EXPECT_EQ(j["factored"], "(x-1)(x-4)^3");
}

TEST(Cli, CharpolyMethodsAgree) {
  auto g = write_temp("cli_c3.json", R"({"vertex_count":3,"edges":[[0,1],[1,2],[2,0]]})");
  auto ff = run_cli("charpoly --graph " + g.string() + " --json");
  auto po = run_cli("charpoly --graph " + g.string() + " --method poset --json");
  auto cl = run_cli("charpoly --graph " + g.string() + " --method closed:odd-cycle --json");
  ASSERT_EQ(ff.exit_code, 0);
  ASSERT_EQ(po.exit_code, 0);
  ASSERT_EQ(cl.exit_code, 0);
  EXPECT_EQ(Json::parse(ff.out)["coefficients"], Json::parse(po.out)["coefficients"]);
  EXPECT_EQ(Json::parse(ff.out)["coefficients"], Json::parse(cl.out)["coefficients"]);
}

TEST(Cli, PosetDump) {
  auto g = write_temp("cli_edge.json", R"({"vertex_count":2,"edges":[[0,1]]})");
  auto r = run_cli("poset --graph " + g.string() + " --dump");
  ASSERT_EQ(r.exit_code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["flats"].size(), 2u);
  EXPECT_EQ(j["flats"][1]["mobius"], -1);
  EXPECT_EQ(j["chi"], Json::parse("[-1, 1]"));
}

TEST(Cli, CheckWeights) {
  auto g = write_temp("cli_tri.json", R"({"vertex_count":3,"edges":[[0,1],[1,2],[2,0]]})");
  auto wp = write_temp("cli_w_proper.json", R"({"p":5,"k":1,"rows":[[1],[2],[4]]})");
  auto wi = write_temp("cli_w_improper.json", R"({"p":5,"k":1,"rows":[[2],[2],[1]]})");
  auto rp = run_cli("check-weights --graph " + g.string() + " --weights " + wp.string());
  EXPECT_EQ(rp.exit_code, 0);
  EXPECT_EQ(rp.out, "proper\n");
  auto ri = run_cli("check-weights --graph " + g.string() + " --weights " + wi.string() + " --json");
  EXPECT_EQ(ri.exit_code, 0);
  Json j = Json::parse(ri.out);
  EXPECT_EQ(j["result"], "improper");
  EXPECT_EQ(j["witness"]["edges"], Json::parse("[0, 1]"));
}

TEST(Cli, CountProper) {
  auto g = write_temp("cli_tri2.json", R"({"vertex_count":3,"edges":[[0,1],[1,2],[2,0]]})");
  auto r = run_cli("count-proper --graph " + g.string() + " --p 5 --k 1 --json");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["count"], 24);
}

TEST(Cli, ReduceAndSolve) {
  auto cnf = write_temp("cli_f.cnf", "p cnf 3 1\n1 2 3 0\n");
  auto inst = fs::temp_directory_path() / "cli_inst.json";
  auto r1 = run_cli("reduce-3sat --cnf " + cnf.string() + " --p 3 --out " + inst.string());
  ASSERT_EQ(r1.exit_code, 0);
  Json j = Json::parse(read_file(inst.string()));
  EXPECT_EQ(j["graph"]["vertex_count"], 18);
  EXPECT_TRUE(j.contains("weights"));
  EXPECT_TRUE(j.contains("labels"));

  auto r2 = run_cli("solve-reduced --instance " + inst.string() + " --canonical-only --json");
  ASSERT_EQ(r2.exit_code, 0);
  Json s = Json::parse(r2.out);
  EXPECT_EQ(s["result"], "improper");
  EXPECT_EQ(s["assignment"].size(), 3u);

  auto r3 = run_cli("solve-reduced --instance " + inst.string() + " --json");
  ASSERT_EQ(r3.exit_code, 0);
  EXPECT_EQ(Json::parse(r3.out)["result"], "improper");
}

TEST(Cli, CryptoPipelineAndManifest) {
  auto pub = fs::temp_directory_path() / "cli_pub.json";
  auto priv = fs::temp_directory_path() / "cli_priv.json";
  auto cipher = fs::temp_directory_path() / "cli_c.json";
  auto manifest = fs::temp_directory_path() / "cli_m.json";
  auto r1 = run_cli("keygen --m 4 --p 59 --seed 7 --out-pub " + pub.string() + " --out-priv " +
                    priv.string());
  ASSERT_EQ(r1.exit_code, 0);
  auto r2 = run_cli("encrypt --pub " + pub.string() + " --message NO --out " + cipher.string() +
                    " --manifest " + manifest.string());
  ASSERT_EQ(r2.exit_code, 0);
  Json mf = Json::parse(read_file(manifest.string()));
  EXPECT_TRUE(mf.contains("inputs"));
  EXPECT_TRUE(mf.contains("wall_time_ms"));
  auto r3 = run_cli("decrypt --priv " + priv.string() + " --cipher " + cipher.string());
  ASSERT_EQ(r3.exit_code, 0);
  EXPECT_EQ(r3.out, "NO\n");

  // manifests are reproducible: rerun and compare output digests
  auto manifest2 = fs::temp_directory_path() / "cli_m2.json";
  run_cli("encrypt --pub " + pub.string() + " --message NO --out " + cipher.string() +
          " --manifest " + manifest2.string());
  EXPECT_EQ(Json::parse(read_file(manifest2.string()))["outputs"],
            mf["outputs"]);
}

TEST(Cli, KeygenIsByteIdenticalForFixedSeed) {
  auto p1 = fs::temp_directory_path() / "cli_kg1.json";
  auto p2 = fs::temp_directory_path() / "cli_kg2.json";
  auto v1 = fs::temp_directory_path() / "cli_kgp1.json";
  auto v2 = fs::temp_directory_path() / "cli_kgp2.json";
  ASSERT_EQ(run_cli("keygen --m 4 --p 59 --seed 424242 --out-pub " + p1.string() +
                    " --out-priv " + v1.string()).exit_code, 0);
  ASSERT_EQ(run_cli("keygen --m 4 --p 59 --seed 424242 --out-pub " + p2.string() +
                    " --out-priv " + v2.string()).exit_code, 0);
  EXPECT_EQ(read_file(p1.string()), read_file(p2.string()));
  EXPECT_EQ(read_file(v1.string()), read_file(v2.string()));
}

TEST(Cli, DemoSubcommandPasses) {
  auto r = run_cli("demo-paper");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("path (c,e) -> NO : PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("charpoly --no-such-flag").exit_code, 2);
  EXPECT_EQ(run_cli("nonexistent-subcommand").exit_code, 2);
}

TEST(Cli, DomainErrorsExitOneWithErrorName) {
  auto g = write_temp("cli_loop.json", R"({"vertex_count":1,"edges":[[0,0]]})");
  const fs::path err = fs::temp_directory_path() / "cli_err.txt";
  static const std::string bin = MATCHARR_CLI_PATH;
  int status = std::system(
      (bin + " charpoly --graph " + g.string() + " 2> " + err.string() + " >/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
  std::ifstream in(err);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("LoopEdge"), std::string::npos);
}
