#include "plansim/error.hpp"

namespace plansim {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid_input";
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kUsage:
      return "usage";
    case ErrorKind::kIo:
      return "io";
  }
  return "unknown";
}

}  // namespace plansim
