#pragma once

#include <stdexcept>
#include <string>

namespace asg {

enum class ErrorCode {
  kMismatch,         // ambient dimension or field disagreement
  kDomain,           // operation undefined at these arguments
  kGuard,            // enumeration size guard exceeded
  kParse,            // malformed text input
  kInvalidArgument,  // anything else the caller got wrong
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace asg
