#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace addcomb {

enum class ErrorCode {
  malformed_description,
  non_associative_table,
  element_ambient_mismatch,
  non_cancellative_ambiguity,
  ambient_mismatch,
  budget_exceeded,
  empty_set,
  not_a_unit,
  no_witness,
  precondition_violated,
  wrong_ambient,
  spec_invalid,
  ceiling_exceeded,
  malformed_instance,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to a stable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class NonAssociativeTable : public Error {
 public:
  explicit NonAssociativeTable(std::array<std::size_t, 3> triple);

  /// (x, y, z) with (x+y)+z != x+(y+z), as table indices.
  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

}  // namespace addcomb
