#pragma once

#include <stdexcept>
#include <string>

namespace gfo {

/// Domain error: a precondition of a mathematical operation was violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fraction-free elimination found no usable pivot.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(std::size_t stage)
      : Error("singular matrix: no nonzero pivot at elimination stage " + std::to_string(stage)),
        stage_(stage) {}
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

}  // namespace gfo
