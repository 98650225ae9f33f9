#include "czl/anderson.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "czl/carlitz.hpp"

namespace czl {

namespace {

std::mutex g_mutex;
std::map<int, std::vector<TPoly>> g_H;  // per q: H_1, H_2, ... (index n-1)

// gamma_j(t) = prod_{l=1..j} (theta^{q^j} - t^{q^l}).
TPoly gamma_poly(const FqCtx& F, int j) {
  i64 qj = 1;
  for (int i = 0; i < j; ++i) qj *= F.q();
  TPoly g = TPoly::one(F);
  i64 ql = 1;
  for (int l = 1; l <= j; ++l) {
    ql *= F.q();
    TPoly factor = TPoly::constant(RatFunc(Fpoly::monomial(F, 1, int(qj)))) -
                   TPoly::monomial(RatFunc::one(F), int(ql));
    g = g * factor;
  }
  return g;
}

void extend_H(const FqCtx& F, std::vector<TPoly>& H, int n) {
  // B_m = coefficient of x^{m+1} in the inverted series:
  //   B_0 = 1,  B_m = sum_{j : q^j <= m} (gamma_j / D_j) * B_{m - q^j}.
  // Then alpha_n = Gamma_n * B_{n-1} and H_n swaps the variables.
  std::vector<TPoly> B;
  std::vector<TPoly> gamma_over_D;  // index j
  i64 qj = 1;
  for (int j = 0; qj <= n - 1; ++j) {
    gamma_over_D.push_back(
        gamma_poly(F, j).scaled(RatFunc(Fpoly::one(F), carlitz_factD(F, j))));
    qj *= F.q();
  }
  B.push_back(TPoly::one(F));
  for (int m = 1; m <= n - 1; ++m) {
    TPoly acc = TPoly::zero(F);
    i64 qp = 1;
    for (int j = 0; qp <= m; ++j) {
      acc = acc + gamma_over_D[size_t(j)] * B[size_t(m - qp)];
      qp *= F.q();
    }
    B.push_back(acc);
  }
  for (int m = int(H.size()); m < n; ++m) {
    TPoly alpha = B[size_t(m)].scaled(RatFunc(carlitz_gamma_fact(F, m + 1)));
    check_internal(alpha.has_polynomial_coeffs(),
                   "interpolation coefficient is not polynomial");
    H.push_back(alpha.swap_vars());
  }
}

}  // namespace

TPoly anderson_thakur_H(const FqCtx& F, int n) {
  require(n >= 1, ErrKind::Domain, "index must be >= 1");
  require(n <= 512, ErrKind::Resource, "interpolation index cap exceeded");
  std::lock_guard<std::mutex> lock(g_mutex);
  std::vector<TPoly>& H = g_H[F.q()];
  if (int(H.size()) < n) extend_H(F, H, n);
  return H[size_t(n) - 1];
}

RatFunc at_eval(const FqCtx& F, int n, int d) {
  require(d >= 0, ErrKind::Domain, "twist order must be >= 0");
  TPoly h = anderson_thakur_H(F, n);
  return h.twist(d).eval_t(RatFunc(Fpoly::x(F)));
}

}  // namespace czl
