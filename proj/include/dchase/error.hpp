#pragma once

#include <stdexcept>
#include <string>

namespace dchase {

// Categories map onto the CLI exit-code taxonomy: input and hypothesis
// problems are the caller's fault, theorem violations are ours.
enum class ErrorKind {
  ambient_mismatch,
  dimension_mismatch,
  not_induced,
  not_complex,
  hypothesis_failure,
  region_missing,
  shape,
  parse,
  theorem_violation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // True for errors that are the input's fault rather than a failed check.
  bool is_input_error() const noexcept { return kind_ != ErrorKind::theorem_violation; }

 private:
  ErrorKind kind_;
};

}  // namespace dchase
