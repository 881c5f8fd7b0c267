#pragma once

#include <stdexcept>

namespace linecong {

/// An identity the engine is supposed to reproduce came out false.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linecong
