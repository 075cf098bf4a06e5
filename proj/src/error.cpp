#include "catalan/error.hpp"

namespace catalan {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::illegal_character: return "illegal_character";
    case Errc::negative_prefix: return "negative_prefix";
    case Errc::unbalanced_word: return "unbalanced_word";
    case Errc::empty_input: return "empty_input";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::size_mismatch: return "size_mismatch";
    case Errc::not_comparable: return "not_comparable";
    case Errc::crossing_partition: return "crossing_partition";
    case Errc::unknown_block: return "unknown_block";
    case Errc::malformed_map: return "malformed_map";
    case Errc::invalid_realizer: return "invalid_realizer";
    case Errc::not_stack: return "not_stack";
    case Errc::precondition: return "precondition";
    case Errc::limit_exceeded: return "limit_exceeded";
    case Errc::parse_error: return "parse_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace catalan
