#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace escrate {

// Domain error with a stable machine-readable name. The CLI prints the name
// and maps any Error to exit code 1; tests match on name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(const char* name, const std::string& what) {
  throw Error(name, what);
}

}  // namespace escrate
