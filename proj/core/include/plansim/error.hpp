#pragma once

#include <stdexcept>
#include <string>

namespace plansim {

// Broad failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kInvalidInput,  // malformed or inconsistent data (graph, plan, matrix)
  kValidation,    // a plan or graph failed a structural check
  kUsage,         // caller violated a precondition or passed bad options
  kIo,            // file could not be read or written
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace plansim
