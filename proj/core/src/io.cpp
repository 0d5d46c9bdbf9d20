#include "matcharr/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "matcharr/modarith.hpp"

namespace matcharr {

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertex_count"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const Json& j, bool strict) {
  if (!j.contains("vertex_count") || !j.contains("edges"))
    fail(errc::bad_format, "graph JSON needs vertex_count and edges");
  VertexId vc = j.at("vertex_count").get<VertexId>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(errc::bad_format, "edge must be a [u,v] pair");
    edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return validate_graph(vc, std::move(edges), strict);
}

Json weights_to_json(const WeightFunction& w) {
  Json j;
  j["p"] = w.p;
  j["k"] = w.k;
  j["rows"] = w.rows;
  return j;
}

WeightFunction weights_from_json(const Json& j) {
  if (!j.contains("p") || !j.contains("k") || !j.contains("rows"))
    fail(errc::bad_format, "weights JSON needs p, k, rows");
  const std::uint64_t p = j.at("p").get<std::uint64_t>();
  const std::size_t k = j.at("k").get<std::size_t>();
  std::vector<std::vector<long long>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<long long>>());
  return WeightFunction::from_signed(p, k, rows);
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
      arr.push_back(static_cast<std::int64_t>(c));
    else
      arr.push_back(c.str());
  }
  return arr;
}

Json instance_to_json(const ReductionInstance& inst) {
  Json j;
  j["p"] = inst.p;
  j["k"] = inst.k;
  j["var_count"] = inst.var_count;
  j["clause_count"] = inst.clause_count;
  j["graph"] = graph_to_json(inst.graph);
  j["weights"] = weights_to_json(inst.weights);
  j["labels"] = Json{{"vertices", inst.vertex_labels}, {"edges", inst.edge_labels}};
  return j;
}

ReductionInstance instance_from_json(const Json& j) {
  ReductionInstance inst;
  inst.p = j.at("p").get<std::uint64_t>();
  inst.k = j.at("k").get<std::size_t>();
  inst.var_count = j.at("var_count").get<unsigned>();
  inst.clause_count = j.at("clause_count").get<unsigned>();
  inst.graph = graph_from_json(j.at("graph"), true);
  inst.weights = weights_from_json(j.at("weights"));
  for (const auto& [name, id] : j.at("labels").at("vertices").items())
    inst.vertex_labels[name] = id.get<VertexId>();
  for (const auto& [name, id] : j.at("labels").at("edges").items())
    inst.edge_labels[name] = id.get<EdgeIndex>();
  if (inst.weights.rows.size() != inst.graph.edge_count() || inst.weights.k != inst.k)
    fail(errc::bad_format, "instance weight table shape mismatch");
  return inst;
}

namespace {

Json letter_map_to_json(const LetterMap& map) {
  Json j = Json::object();
  for (const auto& [e, ch] : map) j[std::to_string(e)] = std::string(1, ch);
  return j;
}

LetterMap letter_map_from_json(const Json& j) {
  LetterMap map;
  for (const auto& [key, val] : j.items()) {
    const std::string s = val.get<std::string>();
    if (s.size() != 1) fail(errc::bad_format, "letter map values must be single characters");
    map[static_cast<EdgeIndex>(std::stoul(key))] = s[0];
  }
  return map;
}

}  // namespace

Json public_key_to_json(const PublicKey& pub) {
  Json j;
  j["m"] = pub.m;
  j["p"] = pub.p;
  j["weights"] = weights_to_json(pub.weights);
  j["letter_map"] = letter_map_to_json(pub.letter_map);
  return j;
}

PublicKey public_key_from_json(const Json& j) {
  PublicKey pub;
  pub.m = j.at("m").get<unsigned>();
  pub.p = j.at("p").get<std::uint64_t>();
  pub.weights = weights_from_json(j.at("weights"));
  if (j.contains("letter_map")) pub.letter_map = letter_map_from_json(j.at("letter_map"));
  if (pub.weights.k != pub.m || pub.weights.rows.size() != pub.m * (pub.m - 1) / 2)
    fail(errc::bad_format, "public key weight table must be K_m x m");
  return pub;
}

Json keypair_to_json(const KeyPair& kp) {
  Json j = public_key_to_json(kp.pub);
  j["M"] = kp.M;
  j["M_inv"] = kp.M_inv;
  return j;
}

KeyPair keypair_from_json(const Json& j) {
  KeyPair kp;
  kp.pub = public_key_from_json(j);
  kp.M = j.at("M").get<ModMatrix>();
  kp.M_inv = j.at("M_inv").get<ModMatrix>();
  if (kp.M.size() != kp.pub.m || kp.M_inv.size() != kp.pub.m)
    fail(errc::bad_format, "private operator must be m x m");
  return kp;
}

Json ciphertext_to_json(const Ciphertext& c) {
  Json j;
  j["p"] = c.vector.p;
  j["vector"] = c.vector.entries;
  return j;
}

Ciphertext ciphertext_from_json(const Json& j) {
  Ciphertext c;
  c.vector.p = j.at("p").get<std::uint64_t>();
  for (const auto& v : j.at("vector")) {
    long long x = v.get<long long>();
    c.vector.entries.push_back(mod_norm(x, c.vector.p));
  }
  return c;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_format, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::bad_format, "cannot open " + path + " for writing");
  out << data;
}

std::string digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace matcharr
