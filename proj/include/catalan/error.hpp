#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace catalan {

enum class Errc {
  illegal_character,
  negative_prefix,
  unbalanced_word,
  empty_input,
  index_out_of_range,
  size_mismatch,
  not_comparable,
  crossing_partition,
  unknown_block,
  malformed_map,
  invalid_realizer,
  not_stack,
  precondition,
  limit_exceeded,
  parse_error,
  internal,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library. `position()` is set for errors that
// point into an input word (first offending character, 0-based).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace catalan
