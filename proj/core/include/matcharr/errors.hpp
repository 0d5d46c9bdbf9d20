#ifndef MATCHARR_ERRORS_HPP
#define MATCHARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matcharr {

enum class errc {
  // graph validation
  loop_edge,
  duplicate_edge,
  vertex_out_of_range,
  isolated_vertex,
  index_out_of_range,
  // arrangement
  empty_graph,
  overflow,
  interpolation_inconsistent,
  bad_parity,
  too_small,
  non_positive_result,
  // weight functions
  edge_index_out_of_range,
  search_space_too_large,
  // 3-SAT reduction
  parse_error,
  clause_arity,
  repeated_variable_in_clause,
  unsatisfied_clause,
  not_canonical_path,
  clause_unsatisfied_bug,
  // crypto
  prime_too_small,
  odd_length_message,
  not_a_simple_path,
  decryption_failed,
  unknown_symbol,
  not_encodable_as_path,
  // io
  bad_format,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace matcharr

#endif
