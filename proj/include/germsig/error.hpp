#pragma once

#include <stdexcept>
#include <string>

namespace germsig {

// Domain error carrying a machine-readable name ("NotRational",
// "NotSymplectic", ...) alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace germsig
