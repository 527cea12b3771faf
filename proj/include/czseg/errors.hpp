#pragma once

#include <stdexcept>
#include <string>

namespace czseg {

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A primitive produced NaN/Inf; message names the primitive.
struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Misuse of the reverse-mode record (non-scalar output, consumed record,
// input that never entered the computation).
struct TapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace czseg
