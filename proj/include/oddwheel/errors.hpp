#pragma once
#include <stdexcept>
#include <string>

namespace oddwheel {

// Thrown when a freshly constructed object fails its own re-verification
// (constructors re-check their graphs, searches re-check their argmaxes).
// Reaching this means a bug, not bad input; the CLI maps it to exit code 3.
struct VerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigensolver exhausted its iteration budget. Carries the best estimate so
// callers can see how close it got.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, double best, double residual,
                   long long iterations)
      : std::runtime_error(msg), best(best), residual(residual),
        iterations(iterations) {}
  double best;
  double residual;
  long long iterations;
};

}  // namespace oddwheel
