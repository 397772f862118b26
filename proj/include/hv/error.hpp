#pragma once

#include <stdexcept>
#include <string>

namespace hv {

// Error carrying a stable machine-readable code such as "NOT_FUNDAMENTAL".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace hv
