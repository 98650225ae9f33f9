#pragma once

// Exact linear algebra over the rational function field: solutions are
// computed modulo a deterministic tower of irreducible polynomials,
// combined by the Chinese remainder theorem, lifted to fractions by
// rational reconstruction, and certified by exact polynomial arithmetic
// before being returned.  Factorizations are cached per modulus so one
// matrix can serve many right-hand sides.

#include <memory>
#include <vector>

#include "czl/ratfunc.hpp"

namespace czl {

using RatVec = std::vector<RatFunc>;
using RatMat = std::vector<RatVec>;

// index-th member of the deterministic modulus tower for F_q: the first
// monic irreducible of degree 8 + index in base-q counter order of the
// low coefficients.
Fpoly solver_modulus(const FqCtx& F, int index);

// Extended gcd: g = gcd(a, b) monic (or zero) with g = s a + t b.
void fpoly_xgcd(const Fpoly& a, const Fpoly& b, Fpoly* g, Fpoly* s,
                Fpoly* t);

// Deterministic irreducibility test (Rabin).
bool fpoly_irreducible(const Fpoly& f);

// Shared factorization for one square invertible matrix, reused across
// right-hand sides; the modulus set grows on demand.  A matrix that is
// singular modulo several independent good moduli raises a
// theorem-violation error.
class ExactSolver {
 public:
  explicit ExactSolver(RatMat a);
  ~ExactSolver();
  ExactSolver(ExactSolver&&) noexcept;
  ExactSolver& operator=(ExactSolver&&) noexcept;

  int size() const;

  // Solve A x = b; the returned vector satisfies the system exactly
  // (certified by exact arithmetic, not by probability).
  RatVec solve(const RatVec& b);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot convenience wrapper around ExactSolver.
RatVec solve_linear(const RatMat& a, const RatVec& b);

}  // namespace czl
