#include "czl/carlitz.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace czl {
namespace {

std::mutex g_mu;
std::map<int, std::vector<Fpoly>> g_ell, g_factD;

i64 qpow(int q, int e) {
  i64 r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace

Fpoly carlitz_bracket(const FqCtx& F, int k) {
  require(k >= 1, ErrKind::Domain, "bracket index must be >= 1");
  // theta^{q^k} - theta
  Fpoly r = Fpoly::monomial(F, 1, int(qpow(F.q(), k)));
  return r - Fpoly::x(F);
}

Fpoly carlitz_ell(const FqCtx& F, int d) {
  require(d >= 0, ErrKind::Domain, "ell index must be >= 0");
  std::lock_guard<std::mutex> lock(g_mu);
  auto& tab = g_ell[F.q()];
  if (tab.empty()) tab.push_back(Fpoly::one(F));
  while (int(tab.size()) <= d) {
    int i = int(tab.size());
    Fpoly factor = Fpoly::x(F) - Fpoly::monomial(F, 1, int(qpow(F.q(), i)));
    tab.push_back(tab.back() * factor);
  }
  return tab[size_t(d)];
}

Fpoly carlitz_factD(const FqCtx& F, int k) {
  require(k >= 0, ErrKind::Domain, "factorial index must be >= 0");
  std::lock_guard<std::mutex> lock(g_mu);
  auto& tab = g_factD[F.q()];
  if (tab.empty()) tab.push_back(Fpoly::one(F));
  while (int(tab.size()) <= k) {
    int i = int(tab.size());
    Fpoly bracket = Fpoly::monomial(F, 1, int(qpow(F.q(), i))) - Fpoly::x(F);
    // D_i = [i] * D_{i-1}^q; the q-th power is an exponent dilation since
    // F_q coefficients are Frobenius-fixed.
    tab.push_back(bracket * tab.back().dilate(F.q()));
  }
  return tab[size_t(k)];
}

Fpoly carlitz_gamma_fact(const FqCtx& F, i64 n) {
  require(n >= 1, ErrKind::Domain, "gamma factor needs n >= 1");
  Fpoly r = Fpoly::one(F);
  i64 m = n - 1;
  int j = 0;
  while (m > 0) {
    int digit = int(m % F.q());
    m /= F.q();
    for (int c = 0; c < digit; ++c) r = r * carlitz_factD(F, j);
    ++j;
  }
  return r;
}

}  // namespace czl
