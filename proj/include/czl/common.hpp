#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace czl {

using i64 = long long;

// Error categories.  The CLI maps these to exit codes; library code throws.
enum class ErrKind {
  Malformed,   // unparseable or structurally invalid input
  Domain,      // input outside the mathematical domain of the operation
  Resource,    // configured enumeration/iteration cap exceeded
  Theorem,     // a structural property that must hold failed to hold
  Precision,   // not enough exact coefficients to decide the question
  Verify,      // a certificate failed numerical re-verification
  Internal,    // broken internal invariant (a bug)
};

class CzlError : public std::runtime_error {
 public:
  CzlError(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}
  ErrKind kind;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw CzlError(kind, msg);
}

inline void require(bool cond, ErrKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

// Internal-invariant check, kept on in release builds: the math here is
// cheap relative to the series arithmetic around it.
inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) fail(ErrKind::Internal, msg);
}

// Saturating addition for precision bookkeeping (KNOWN_INF + x stays inf).
inline i64 sat_add(i64 a, i64 b) {
  const i64 kBig = std::numeric_limits<i64>::max() / 4;
  if (a >= kBig || b >= kBig) return kBig;
  return a + b;
}

}  // namespace czl
