#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace codebound {

enum class ErrorCode {
  invalid_alphabet,
  invalid_radius,
  undefined_log,
  invalid_query,
  invalid_range,
  incompatible_words,
  undefined_distance,
  duplicate_word,
  not_systematic,
  enumeration_too_large,
  unsupported_alphabet,
  precondition_violation,
  malformed_data,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so callers
/// (and the CLI's exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace codebound
