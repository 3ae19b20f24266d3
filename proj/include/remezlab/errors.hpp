#pragma once

#include <stdexcept>
#include <string>

namespace remezlab {

// Argument outside the stated open parameter range of a formula or constructor.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result exceeds the double range. Callers that expect large values should
// switch to the log-domain API instead of catching this.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cosine-basis conversion was requested for a polynomial that is not even.
class NotEvenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |Q|^2 - level^2 vanishes identically: the sublevel boundary is degenerate.
class ConstantOnLevelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root polish or an iterative refinement failed to settle.
class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A random coefficient draw produced a numerically zero polynomial.
class DegenerateDrawError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An extremal witness failed one of its invariants; message carries diagnostics.
class WitnessFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A polynomial handed to a bound check does not satisfy the measure constraint.
class ConstraintViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every search restart degenerated; no feasible point was ever seen.
class NoFeasibleStartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file or JSON document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace remezlab
