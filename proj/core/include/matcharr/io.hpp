#ifndef MATCHARR_IO_HPP
#define MATCHARR_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "matcharr/arrangement.hpp"
#include "matcharr/awp.hpp"
#include "matcharr/graph.hpp"
#include "matcharr/satreduce.hpp"
#include "matcharr/weightfn.hpp"

namespace matcharr {

using Json = nlohmann::json;

// {"vertex_count": N, "edges": [[u,v], ...]}; edge index = position after
// canonical sort.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, bool strict = false);

// {"p": P, "k": K, "rows": [[..k residues..] x n]}; signed entries accepted.
Json weights_to_json(const WeightFunction& w);
WeightFunction weights_from_json(const Json& j);

// Polynomial coefficients ascending by degree; values that fit in 64 bits
// are emitted as JSON numbers, anything larger as a decimal string.
Json polynomial_to_json(const IntPolynomial& p);

Json instance_to_json(const ReductionInstance& inst);
ReductionInstance instance_from_json(const Json& j);

Json public_key_to_json(const PublicKey& pub);
PublicKey public_key_from_json(const Json& j);
Json keypair_to_json(const KeyPair& kp);  // public fields plus M, M_inv
KeyPair keypair_from_json(const Json& j);

Json ciphertext_to_json(const Ciphertext& c);
Ciphertext ciphertext_from_json(const Json& j);

std::string read_file(const std::string& path);       // "-" reads stdin
void write_file(const std::string& path, const std::string& data);

// FNV-1a 64-bit content digest, "fnv1a64:<hex>"; stable across reruns.
std::string digest(const std::string& data);

}  // namespace matcharr

#endif
