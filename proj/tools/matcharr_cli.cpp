// matcharr: matching arrangements, improper weight functions, and the
// alternating-weighted-path cryptosystem.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "matcharr/arrangement.hpp"
#include "matcharr/awp.hpp"
#include "matcharr/graph.hpp"
#include "matcharr/io.hpp"
#include "matcharr/poset.hpp"
#include "matcharr/satreduce.hpp"
#include "matcharr/weightfn.hpp"

using namespace matcharr;

namespace {

struct Manifest {
  std::string path;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Json parameters = Json::object();
  std::string command;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void note_input(const std::string& name, const std::string& content) {
    if (!path.empty()) inputs[name] = digest(content);
  }
  void note_output(const std::string& name, const std::string& content) {
    if (!path.empty()) outputs[name] = digest(content);
  }
  void write() {
    if (path.empty()) return;
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["parameters"] = parameters;
    j["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    write_file(path, j.dump(2) + "\n");
  }
};

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Graph load_graph(const std::string& path, Manifest& mf, bool strict = false) {
  const std::string text = read_file(path);
  mf.note_input(path, text);
  Graph g = graph_from_json(Json::parse(text), strict);
  // index <-> pair table, stderr so stdout stays machine-readable
  std::cerr << "loaded graph: " << g.vertex_count() << " vertices, " << g.edge_count()
            << " edges\n";
  for (EdgeIndex i = 0; i < g.edge_count(); ++i)
    std::cerr << "  e" << i << " = (" << g.edge(i).first << "," << g.edge(i).second << ")\n";
  return g;
}

std::string seq_kind(const AltSeq& s) {
  return s.kind == AltSeq::Kind::Path ? "path" : "even-cycle";
}

Json seq_to_json(const AltSeq& s) {
  return Json{{"kind", seq_kind(s)}, {"edges", s.edges}};
}

// family detection so `charpoly` can print the factored closed form when one
// applies to the loaded graph
std::optional<std::pair<ClosedFamily, unsigned>> detect_closed_family(const Graph& g) {
  const unsigned n = static_cast<unsigned>(g.edge_count());
  std::vector<unsigned> deg(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    ++deg[u];
    ++deg[v];
  }
  const bool all_deg2 = std::all_of(deg.begin(), deg.end(), [](unsigned d) { return d == 2; });
  if (all_deg2 && g.vertex_count() == n && n >= 3) {
    // single cycle iff connected; walk it
    std::vector<char> seen(g.vertex_count(), 0);
    VertexId cur = 0, prev = g.vertex_count();
    unsigned steps = 0;
    while (!seen[cur]) {
      seen[cur] = 1;
      ++steps;
      auto& nb = g.adjacency()[cur];
      VertexId next = (nb[0].first != prev) ? nb[0].first : nb[1].first;
      prev = cur;
      cur = next;
    }
    if (steps == g.vertex_count())
      return std::make_pair(n % 2 == 0 ? ClosedFamily::EvenCycle : ClosedFamily::OddCycle, n);
    return std::nullopt;
  }
  // triangle with a tail: degrees {3, 2 x (n-2), 1}, triangle at the deg-3 vertex
  if (n >= 4 && g.vertex_count() == n) {
    unsigned ones = 0, twos = 0, threes = 0;
    VertexId hub = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (deg[v] == 1) ++ones;
      else if (deg[v] == 2) ++twos;
      else if (deg[v] == 3) { ++threes; hub = v; }
      else return std::nullopt;
    }
    if (ones == 1 && threes == 1 && twos == g.vertex_count() - 2) {
      const auto& nb = g.adjacency()[hub];
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          VertexId a = nb[i].first, b = nb[j].first;
          const auto& an = g.adjacency()[a];
          for (auto [w, e] : an)
            if (w == b) return std::make_pair(ClosedFamily::TriangleTail, n);
        }
    }
  }
  return std::nullopt;
}

std::string factored_string(ClosedFamily fam, unsigned n) {
  // multiplicity map of roots, in increasing root order
  std::map<unsigned, unsigned> mult;
  switch (fam) {
    case ClosedFamily::EvenCycle:
      mult[1] = 1;
      mult[n] = n - 1;
      break;
    case ClosedFamily::OddCycle:
      for (unsigned c = 1; c <= 2 * n - 3; c += 2) ++mult[c];
      ++mult[n - 1];
      break;
    case ClosedFamily::TriangleTail:
      ++mult[1];
      for (unsigned c = 3; c <= n - 2; ++c) ++mult[c];
      mult[n - 1] += 2;
      ++mult[n];
      break;
  }
  std::string out;
  for (auto [root, count] : mult) {
    out += "(x-" + std::to_string(root) + ")";
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

int run_charpoly(const std::string& graph_path, std::uint64_t prime_floor,
                 const std::string& method, unsigned threads, bool as_json, Manifest& mf) {
  Graph g = load_graph(graph_path, mf);
  mf.parameters["prime_floor"] = prime_floor;
  mf.parameters["method"] = method;
  const std::size_t n = g.edge_count();

  IntPolynomial chi;
  std::vector<std::uint64_t> primes_used;
  std::string factored;

  if (method == "ff" || method == "poset") {
    Arrangement a = build_matching_arrangement(g);
    if (method == "ff") {
      auto res = charpoly_finite_field(a, prime_floor, threads);
      chi = res.chi;
      primes_used = res.primes_used;
    } else {
      chi = charpoly_poset(a);
    }
    if (auto fam = detect_closed_family(g)) {
      if (closed_form_charpoly(fam->first, fam->second) == chi)
        factored = factored_string(fam->first, fam->second);
    }
  } else if (method.rfind("closed:", 0) == 0) {
    const std::string name = method.substr(7);
    ClosedFamily fam;
    if (name == "even-cycle") fam = ClosedFamily::EvenCycle;
    else if (name == "odd-cycle") fam = ClosedFamily::OddCycle;
    else if (name == "triangle-tail") fam = ClosedFamily::TriangleTail;
    else {
      std::cerr << "unknown closed family '" << name << "'\n";
      return 2;
    }
    auto detected = detect_closed_family(g);
    if (!detected || detected->first != fam)
      fail(errc::bad_format, "graph does not match family " + name);
    chi = closed_form_charpoly(fam, static_cast<unsigned>(n));
    factored = factored_string(fam, static_cast<unsigned>(n));
  } else {
    std::cerr << "unknown method '" << method << "'\n";
    return 2;
  }

  const BigInt regions = region_count(chi, n);
  if (as_json) {
    Json out;
    out["coefficients"] = polynomial_to_json(chi);
    out["regions"] = big_to_json(regions);
    out["primes_used"] = primes_used;
    if (!factored.empty()) out["factored"] = factored;
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    mf.note_output("stdout", text);
  } else {
    std::cout << "chi(x) = " << chi.to_string() << "\n";
    if (!factored.empty()) std::cout << "factored: " << factored << "\n";
    std::cout << "regions: " << regions.str() << "\n";
    if (!primes_used.empty()) {
      std::cout << "primes used:";
      for (auto p : primes_used) std::cout << " " << p;
      std::cout << "\n";
    }
  }
  return 0;
}

int run_poset(const std::string& graph_path, bool dump, bool as_json, Manifest& mf) {
  Graph g = load_graph(graph_path, mf);
  Arrangement a = build_matching_arrangement(g);
  IntersectionPoset poset = intersection_poset(a);
  if (dump || as_json) {
    Json flats = Json::array();
    for (const auto& f : poset.flats) {
      Json basis = Json::array();
      for (const auto& row : f.basis) {
        Json r = Json::array();
        for (const auto& x : row) {
          if (x.denominator() == 1)
            r.push_back(static_cast<std::int64_t>(x.numerator()));
          else
            r.push_back(std::to_string(x.numerator()) + "/" + std::to_string(x.denominator()));
        }
        basis.push_back(r);
      }
      flats.push_back(Json{{"dim", static_cast<long long>(poset.dimension) - f.rank},
                           {"mobius", f.mobius},
                           {"basis", basis}});
    }
    Json out;
    out["dimension"] = poset.dimension;
    out["flats"] = flats;
    out["chi"] = polynomial_to_json(charpoly_poset(a));
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    mf.note_output("stdout", text);
  } else {
    std::map<int, int> by_rank;
    for (const auto& f : poset.flats) ++by_rank[f.rank];
    std::cout << "flats: " << poset.flats.size() << "\n";
    for (auto [r, c] : by_rank) std::cout << "  rank " << r << ": " << c << "\n";
    std::cout << "chi(x) = " << charpoly_poset(a).to_string() << "\n";
  }
  return 0;
}

int run_check_weights(const std::string& graph_path, const std::string& weights_path,
                      bool as_json, Manifest& mf) {
  Graph g = load_graph(graph_path, mf, true);
  const std::string wtext = read_file(weights_path);
  mf.note_input(weights_path, wtext);
  WeightFunction w = weights_from_json(Json::parse(wtext));
  Classification cls = classify_weight_function(g, w);
  if (as_json) {
    Json out;
    out["result"] = cls.proper ? "proper" : "improper";
    if (cls.witness) out["witness"] = seq_to_json(*cls.witness);
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    mf.note_output("stdout", text);
  } else if (cls.proper) {
    std::cout << "proper\n";
  } else {
    std::cout << "improper\nwitness (" << seq_kind(*cls.witness) << "):";
    for (auto e : cls.witness->edges) std::cout << " e" << e;
    std::cout << "\n";
  }
  return 0;
}

int run_count_proper(const std::string& graph_path, std::uint64_t p, std::size_t k,
                     std::uint64_t limit, bool as_json, Manifest& mf) {
  Graph g = load_graph(graph_path, mf, true);
  mf.parameters["p"] = p;
  mf.parameters["k"] = k;
  const std::uint64_t count = count_proper_functions(g, p, k, limit);
  if (as_json) {
    const std::string text = Json{{"count", count}}.dump(2) + "\n";
    std::cout << text;
    mf.note_output("stdout", text);
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int run_reduce(const std::string& cnf_path, std::uint64_t p, const std::string& out_path,
               Manifest& mf) {
  const std::string text = read_file(cnf_path);
  mf.note_input(cnf_path, text);
  mf.parameters["p"] = p;
  Cnf3 cnf = parse_dimacs(text);
  ReductionInstance inst = build_reduction(cnf, p);
  const std::string out = instance_to_json(inst).dump(2) + "\n";
  write_file(out_path, out);
  mf.note_output(out_path, out);
  std::cerr << "instance: " << inst.graph.vertex_count() << " vertices, "
            << inst.graph.edge_count() << " edges, k = " << inst.k << "\n";
  return 0;
}

int run_solve_reduced(const std::string& inst_path, bool canonical_only, bool as_json,
                      Manifest& mf) {
  const std::string text = read_file(inst_path);
  mf.note_input(inst_path, text);
  ReductionInstance inst = instance_from_json(Json::parse(text));
  std::optional<AltSeq> witness;
  if (canonical_only) {
    witness = improper_canonical_search(inst);
  } else {
    Classification cls = classify_weight_function(inst.graph, inst.weights);
    witness = cls.witness;
  }
  Json out;
  if (!witness) {
    out["result"] = "UNSAT-equivalent";
    if (!as_json) std::cout << "UNSAT-equivalent\n";
  } else {
    out["result"] = "improper";
    out["witness"] = seq_to_json(*witness);
    Json labels = Json::array();
    for (auto e : witness->edges) labels.push_back(inst.edge_name(e));
    out["witness_labels"] = labels;
    std::optional<Assignment> assignment;
    try {
      assignment = path_to_assignment(inst, *witness);
    } catch (const Error&) {
      // witness is not a canonical A_1 -> Q_m path; report it bare
    }
    if (assignment) {
      out["assignment"] = *assignment;
    }
    if (!as_json) {
      std::cout << "improper\nwitness (" << seq_kind(*witness) << "):";
      for (auto e : witness->edges) std::cout << " " << inst.edge_name(e);
      std::cout << "\n";
      if (assignment) {
        std::cout << "assignment:";
        for (std::size_t i = 0; i < assignment->size(); ++i)
          std::cout << " x" << (i + 1) << "=" << ((*assignment)[i] ? "T" : "F");
        std::cout << "\n";
      }
    }
  }
  if (as_json) {
    const std::string t = out.dump(2) + "\n";
    std::cout << t;
    mf.note_output("stdout", t);
  }
  return 0;
}

int run_keygen(unsigned m, std::uint64_t p, std::uint64_t seed, const std::string& pub_path,
               const std::string& priv_path, bool as_json, Manifest& mf) {
  mf.parameters["m"] = m;
  mf.parameters["p"] = p;
  mf.parameters["seed"] = seed;
  KeyPair kp = keygen(m, p, seed);
  const std::string pub = public_key_to_json(kp.pub).dump(2) + "\n";
  const std::string priv = keypair_to_json(kp).dump(2) + "\n";
  write_file(pub_path, pub);
  write_file(priv_path, priv);
  mf.note_output(pub_path, pub);
  mf.note_output(priv_path, priv);
  if (as_json)
    std::cout << Json{{"m", m}, {"p", p}, {"public_key", pub_path}, {"private_key", priv_path}}
                     .dump(2)
              << "\n";
  std::cerr << "wrote " << pub_path << " and " << priv_path << "\n";
  return 0;
}

int run_encrypt(const std::string& pub_path, const std::string& message,
                const std::string& out_path, bool as_json, Manifest& mf) {
  const std::string text = read_file(pub_path);
  mf.note_input(pub_path, text);
  PublicKey pub = public_key_from_json(Json::parse(text));
  const Graph km = complete_graph(pub.m);
  AltSeq seq = encode_message(km, pub.letter_map, message);
  Ciphertext c = encrypt(pub, seq);
  const std::string out = ciphertext_to_json(c).dump(2) + "\n";
  write_file(out_path, out);
  mf.note_output(out_path, out);
  if (as_json && out_path != "-") std::cout << out;
  return 0;
}

int run_decrypt(const std::string& priv_path, const std::string& cipher_path, bool as_json,
                Manifest& mf) {
  const std::string ktext = read_file(priv_path);
  mf.note_input(priv_path, ktext);
  KeyPair kp = keypair_from_json(Json::parse(ktext));
  const std::string ctext = read_file(cipher_path);
  mf.note_input(cipher_path, ctext);
  Ciphertext c = ciphertext_from_json(Json::parse(ctext));
  AltSeq seq = decrypt(kp, c);
  const std::string message = decode_message(kp.pub.letter_map, seq);
  if (as_json) {
    const std::string t =
        Json{{"message", message}, {"path", seq_to_json(seq)}}.dump(2) + "\n";
    std::cout << t;
    mf.note_output("stdout", t);
  } else {
    std::cout << message << "\n";
  }
  return 0;
}

int run_demo(unsigned threads) {
  int failures = 0;
  auto report = [&](const std::string& what, bool ok) {
    std::cout << what << " : " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) ++failures;
  };

  struct FamilyCheck {
    const char* name;
    Graph graph;
    ClosedFamily family;
    unsigned n;
  };
  const std::vector<FamilyCheck> checks = {
      {"C3 chi = (x-1)(x-2)(x-3)", cycle_graph(3), ClosedFamily::OddCycle, 3},
      {"C4 chi = (x-1)(x-4)^3", cycle_graph(4), ClosedFamily::EvenCycle, 4},
      {"C5 chi = (x-1)(x-3)(x-5)(x-7)(x-4)", cycle_graph(5), ClosedFamily::OddCycle, 5},
      {"T4 chi = (x-1)(x-3)^2(x-4)", triangle_tail_graph(4), ClosedFamily::TriangleTail, 4},
      {"T5 chi = (x-1)(x-3)(x-4)^2(x-5)", triangle_tail_graph(5), ClosedFamily::TriangleTail, 5},
  };
  for (const auto& chk : checks) {
    auto res = charpoly_finite_field(build_matching_arrangement(chk.graph), 5, threads);
    report(chk.name, res.chi == closed_form_charpoly(chk.family, chk.n));
  }

  // the worked example: easy instance m=4, p=23, target M(A) = (9,20,0,0)
  {
    EasyInstance easy = easy_weights(4, 23);
    FpVector target{23, {9, 20, 0, 0}};
    SolveTrace trace;
    auto seq = solve_easy_awp(target, easy, &trace);
    bool ok = seq.has_value();
    ok = ok && trace.residuals.size() >= 1 &&
         trace.residuals[0] == std::vector<std::uint64_t>{0, 20, 0, 22};
    ok = ok && seq->edges == std::vector<EdgeIndex>{2, 4};
    std::string letters;
    std::string message;
    if (ok) {
      for (auto e : seq->edges) letters += letters.empty() ? std::string(1, 'a' + e)
                                                           : "," + std::string(1, char('a' + e));
      message = decode_message(default_letter_map(4), *seq);
      ok = message == "NO";
    }
    report("M(A) = (9,20,0,0) -> path (" + (letters.empty() ? "?" : letters) + ") -> " +
               (message.empty() ? "?" : message),
           ok);
  }

  // a full round trip under a nontrivial disguise
  {
    KeyPair kp = keygen(4, 59, 20250809);
    const Graph km = complete_graph(4);
    AltSeq seq = encode_message(km, kp.pub.letter_map, "NO");
    Ciphertext c = encrypt(kp.pub, seq);
    AltSeq back = decrypt(kp, c);
    report("keygen(m=4, p=59) round trip \"NO\"", decode_message(kp.pub.letter_map, back) == "NO");
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching arrangement toolkit"};
  app.require_subcommand(1);

  std::string graph_path, weights_path, cnf_path, inst_path, out_path = "-";
  std::string pub_path = "pub.json", priv_path = "priv.json", cipher_path, message, method = "ff";
  std::uint64_t prime_floor = 5, p = 2, seed = 0, limit = 100000000ull;
  std::size_t k = 1;
  unsigned m = 4, threads = 0;
  bool as_json = false, dump = false, canonical_only = false;
  Manifest mf;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit JSON on stdout");
    cmd->add_option("--manifest", mf.path, "write a run manifest to this path");
    cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  };

  auto* cp = app.add_subcommand(
      "charpoly", "characteristic polynomial of MA(G); JSON coefficients ascend by degree");
  cp->add_option("--graph", graph_path, "graph JSON file")->required();
  cp->add_option("--prime-floor", prime_floor, "smallest prime considered (default 5)");
  cp->add_option("--method", method, "ff | poset | closed:even-cycle | closed:odd-cycle | closed:triangle-tail");
  add_common(cp);

  auto* ps = app.add_subcommand("poset", "intersection poset of MA(G)");
  ps->add_option("--graph", graph_path, "graph JSON file")->required();
  ps->add_flag("--dump", dump, "emit the flat list with dims and Mobius values");
  add_common(ps);

  auto* cw = app.add_subcommand("check-weights", "classify a weight function");
  cw->add_option("--graph", graph_path, "graph JSON file")->required();
  cw->add_option("--weights", weights_path, "weight function JSON file")->required();
  add_common(cw);

  auto* cpr = app.add_subcommand("count-proper", "count proper weight functions exhaustively");
  cpr->add_option("--graph", graph_path, "graph JSON file")->required();
  cpr->add_option("--p", p, "prime modulus")->required();
  cpr->add_option("--k", k, "vector length")->required();
  cpr->add_option("--limit", limit, "candidate limit (default 1e8)");
  add_common(cpr);

  auto* rd = app.add_subcommand("reduce-3sat", "transform a 3-CNF into a weight instance");
  rd->add_option("--cnf", cnf_path, "DIMACS file ('-' for stdin)")->required();
  rd->add_option("--p", p, "prime modulus (default 2)");
  rd->add_option("--out", out_path, "instance output path (default stdout)");
  add_common(rd);

  auto* sr = app.add_subcommand("solve-reduced", "search a reduced instance for a witness");
  sr->add_option("--instance", inst_path, "instance JSON file")->required();
  sr->add_flag("--canonical-only", canonical_only, "search canonical A_1->Q_m paths only");
  add_common(sr);

  auto* kg = app.add_subcommand("keygen", "generate an AWP key pair");
  kg->add_option("--m", m, "complete graph size")->required();
  kg->add_option("--p", p, "prime, must exceed 2*3^(m-1)")->required();
  kg->add_option("--seed", seed, "RNG seed")->required();
  kg->add_option("--out-pub", pub_path, "public key path (default pub.json)");
  kg->add_option("--out-priv", priv_path, "private key path (default priv.json)");
  add_common(kg);

  auto* en = app.add_subcommand("encrypt", "encrypt a letter-mapped message");
  en->add_option("--pub", pub_path, "public key JSON")->required();
  en->add_option("--message", message, "message text")->required();
  en->add_option("--out", out_path, "ciphertext output path (default stdout)");
  add_common(en);

  auto* de = app.add_subcommand("decrypt", "decrypt a ciphertext");
  de->add_option("--priv", priv_path, "private key JSON")->required();
  de->add_option("--cipher", cipher_path, "ciphertext JSON")->required();
  add_common(de);

  auto* dm = app.add_subcommand("demo-paper", "replay the worked example and closed-form checks");
  add_common(dm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  mf.command = [argc, argv] {
    std::string s;
    for (int i = 0; i < argc; ++i) {
      if (i) s += " ";
      s += argv[i];
    }
    return s;
  }();

  int rc = 0;
  try {
    if (cp->parsed())
      rc = run_charpoly(graph_path, prime_floor, method, threads, as_json, mf);
    else if (ps->parsed())
      rc = run_poset(graph_path, dump, as_json, mf);
    else if (cw->parsed())
      rc = run_check_weights(graph_path, weights_path, as_json, mf);
    else if (cpr->parsed())
      rc = run_count_proper(graph_path, p, k, limit, as_json, mf);
    else if (rd->parsed())
      rc = run_reduce(cnf_path, p, out_path, mf);
    else if (sr->parsed())
      rc = run_solve_reduced(inst_path, canonical_only, as_json, mf);
    else if (kg->parsed())
      rc = run_keygen(m, p, seed, pub_path, priv_path, as_json, mf);
    else if (en->parsed())
      rc = run_encrypt(pub_path, message, out_path, as_json, mf);
    else if (de->parsed())
      rc = run_decrypt(priv_path, cipher_path, as_json, mf);
    else if (dm->parsed())
      rc = run_demo(threads);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "BadFormat: " << e.what() << "\n";
    return 1;
  }
  mf.write();
  return rc;
}
