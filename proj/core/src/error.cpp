#include "emojiprof/error.hpp"

namespace emojiprof {

int exit_code_for(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::Usage:
      return 2;
    case ErrorCategory::Data:
      return 3;
    case ErrorCategory::Numerical:
      return 4;
  }
  return 1;
}

}  // namespace emojiprof
