#include "matcharr/errors.hpp"

namespace matcharr {

const char* errc_name(errc c) {
  switch (c) {
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_graph: return "EmptyGraph";
    case errc::overflow: return "Overflow";
    case errc::interpolation_inconsistent: return "InterpolationInconsistent";
    case errc::bad_parity: return "BadParity";
    case errc::too_small: return "TooSmall";
    case errc::non_positive_result: return "NonPositiveResult";
    case errc::edge_index_out_of_range: return "EdgeIndexOutOfRange";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::parse_error: return "ParseError";
    case errc::clause_arity: return "ClauseArity";
    case errc::repeated_variable_in_clause: return "RepeatedVariableInClause";
    case errc::unsatisfied_clause: return "UnsatisfiedClause";
    case errc::not_canonical_path: return "NotCanonicalPath";
    case errc::clause_unsatisfied_bug: return "ClauseUnsatisfiedBug";
    case errc::prime_too_small: return "PrimeTooSmall";
    case errc::odd_length_message: return "OddLengthMessage";
    case errc::not_a_simple_path: return "NotASimplePath";
    case errc::decryption_failed: return "DecryptionFailed";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::not_encodable_as_path: return "NotEncodableAsPath";
    case errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

}  // namespace matcharr
