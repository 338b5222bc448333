#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hda {

enum class ErrorKind {
  InvalidArgument,   // malformed value or inconsistent arguments
  CyclicInput,       // operation requires an acyclic 1-skeleton
  UnsupportedInput,  // input outside the supported fragment
  Precondition,      // documented precondition violated
  Parse,             // text input rejected
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Accumulates human-readable violations; empty means the checked
// property holds.  Messages are deterministic given the same input.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string msg) { violations.push_back(std::move(msg)); }

  std::string to_string() const {
    std::string out;
    for (const auto& v : violations) {
      out += v;
      out += '\n';
    }
    return out;
  }
};

}  // namespace hda
