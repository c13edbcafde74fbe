#pragma once

// Discriminant of one homogeneous form f of degree d >= 2 in n variables,
// characterized by d^{a(n,d)} Disc(f) = Res(d_1 f, ..., d_n f).

#include "jacobian.hpp"

namespace elimkit {

// a(n,d) = ((d-1)^n - (-1)^n) / d.
inline long a_exponent(int n, int d) {
  if (n < 1 || d < 2) throw DegreeTooLow("a(n,d) needs n >= 1 and d >= 2");
  mpz_class num = pow_z(d - 1, static_cast<unsigned long>(n)) - ((n % 2) ? -1 : 1);
  mpz_class q;
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(d))) throw NotDivisible("a(n,d) not integral");
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d));
  if (!q.fits_slong_p()) throw TooLarge("a(n,d) overflows");
  return q.get_si();
}

// (d-1)^{n-1}: the partial degree in the coefficients, and n times it the
// total degree.
inline unsigned long hyper_power(int n, int d) {
  unsigned long r = 1;
  for (int i = 1; i < n; ++i) r *= static_cast<unsigned long>(d - 1);
  return r;
}

template <class C>
std::vector<Poly<C>> gradient(const Poly<C>& f) {
  std::vector<Poly<C>> out;
  for (int v = 0; v < f.nv; ++v) out.push_back(partial_derivative(f, v));
  return out;
}

template <class C>
typename C::elem disc_hyper(const Poly<C>& f) {
  const C& k = f.ring;
  const int d = form_degree(f);
  if (d < 2) throw DegreeTooLow("discriminant needs degree >= 2");
  if constexpr (needs_lift<C>::value) {
    return reduce_elem(k, disc_hyper(lift_poly(f)));
  } else {
    const int n = f.nv;
    auto r = resultant(gradient(f), std::vector<int>(n, d - 1));
    const auto scale = pow_z(d, static_cast<unsigned long>(a_exponent(n, d)));
    auto s = k.from_z(scale);
    if (k.is_zero(s)) throw UnsupportedRing("d^a(n,d) vanishes in this ring; use an integer lift");
    return exact_divide(k, r, s);
  }
}

// ------------------------------------------------------------ quadrics

// The symmetric matrix with 2A_ii on the diagonal and A_ij off it, where
// f = sum_{i<=j} A_ij X_i X_j.
template <class C>
Matrix<C> quadric_matrix(const Poly<C>& f) {
  if (form_degree(f) != 2) throw NotQuadratic("form is not quadratic");
  const int n = f.nv;
  const C& k = f.ring;
  Matrix<C> M(k, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[i] += 1;
      e[j] += 1;
      const auto c = f.coeff(e);
      if (i == j) {
        M.at(i, i) = k.mul_int(c, 2);
      } else {
        M.at(i, j) = c;
        M.at(j, i) = c;
      }
    }
  return M;
}

// det of the matrix above; equals 2 Disc(f) for odd n and Disc(f) for even n.
template <class C>
typename C::elem quadric_det(const Poly<C>& f) {
  return determinant(quadric_matrix(f));
}

template <class C>
typename C::elem quadric_disc(const Poly<C>& f) {
  if constexpr (needs_lift<C>::value) {
    return reduce_elem(f.ring, quadric_disc(lift_poly(f)));
  } else {
    auto det = quadric_det(f);
    if (f.nv % 2) return exact_divide(f.ring, det, f.ring.from_int(2));
    return det;
  }
}

// ------------------------------------------------------ identities

// Res(d_1 f, ..., d_{n-1} f, f), which equals Disc(f) Disc(fbar) where fbar is
// f with X_n := 0 viewed in n-1 variables.
template <class C>
typename C::elem disc_times_bar(const Poly<C>& f) {
  const int d = form_degree(f);
  const int n = f.nv;
  if (n < 2) throw SignatureMismatch("need at least two variables");
  std::vector<Poly<C>> sys;
  for (int v = 0; v + 1 < n; ++v) sys.push_back(partial_derivative(f, v));
  sys.push_back(f);
  std::vector<int> deg(n, d - 1);
  deg.back() = d;
  return resultant(sys, deg);
}

// f(X_1, ..., X_{n-1}, 0) in n-1 variables.
template <class C>
Poly<C> bar(const Poly<C>& f) {
  return drop_variable(dehomogenize(f, f.nv - 1, Dehom::zero), f.nv - 1);
}

// f(sum_j c_1j X_j, ..., sum_j c_nj X_j).
template <class C>
Poly<C> compose_linear(const Poly<C>& f, const Matrix<C>& phi) {
  const int n = f.nv;
  std::vector<Poly<C>> images;
  for (int i = 0; i < n; ++i) {
    Poly<C> l(f.ring, phi.cols);
    for (int j = 0; j < phi.cols; ++j) {
      std::vector<int> e(phi.cols, 0);
      e[j] = 1;
      l += Poly<C>::monomial(f.ring, phi.cols, e, phi.at(i, j));
    }
    images.push_back(l);
  }
  return substitute(f, images);
}

// K = Disc(f(g)) / (Disc(f)^{d^{n-1}} Res(g)^{m(m-1)^{n-1}}) with m = deg f and
// d the common degree of the g_i.
template <class C>
typename C::elem disc_hyper_basechange(const Poly<C>& f, const std::vector<Poly<C>>& gs) {
  const C& k = f.ring;
  const int m = form_degree(f);
  const int n = f.nv;
  if (m < 2) throw DegreeTooLow("deg f must be at least 2");
  if (static_cast<int>(gs.size()) != n) throw SignatureMismatch("need n forms g");
  const auto dg = degrees_of(gs);
  const int d = dg[0];
  for (int x : dg)
    if (x != d) throw SignatureMismatch("the forms g must share one degree");
  if (d < 1) throw DegreeTooLow("deg g must be positive");
  auto num = disc_hyper(substitute(f, gs));
  unsigned long pe = 1;
  for (int i = 1; i < n; ++i) pe *= static_cast<unsigned long>(d);
  auto den = ring_pow(k, disc_hyper(f), pe);
  den = k.mul(den, ring_pow(k, resultant(gs, dg), static_cast<unsigned long>(m) * hyper_power(n, m)));
  return exact_divide(k, num, den);
}

// ---------------------------------------------------- Zariski valuation

struct DiscValuation {
  long valuation = 0;
  long expected = 0;  // (d-mu)(d-1-mu)^{n-1}
  Poly<ZZ> disc, H, red;
};

inline std::vector<int> zariski_weights_hyper(const GenericSystem<ZZ>& g, int mu) {
  std::vector<int> w(g.coeffs.nv, kUnweighted);
  for (const auto& [alpha, idx] : g.var_of[0]) w[idx] = std::max(alpha.back() - mu, 0);
  return w;
}

// With f = sum_t f_{d-t} X_n^t generic: g = sum_{t>=mu} f_{d-t} X_n^{t-mu},
// gbar = f_{d-mu} and fbar = f_d, both in n-1 variables.
inline DiscValuation disc_valuation(int n, int d, int mu, const Poly<ZZ>* generic_disc = nullptr) {
  if (n < 2) throw SignatureMismatch("need at least two variables");
  if (mu < 1 || mu > d - 2) throw SignatureMismatch("mu must satisfy 1 <= mu <= d-2");
  const auto G = generic_system<ZZ>(n, {d});
  const auto& f = G.forms[0];
  DiscValuation out;
  out.disc = generic_disc ? *generic_disc : disc_hyper(f);
  const auto w = zariski_weights_hyper(G, mu);
  auto v = weight_valuation(out.disc, w, G.coeffs.names.get());
  if (!v) throw NotGeneric("discriminant vanished");
  out.valuation = *v;
  out.expected = (d - mu) * static_cast<long>(hyper_power(n, d - mu));
  out.H = isobaric_part(out.disc, w, out.valuation);

  std::vector<std::pair<Mono, Poly<ZZ>>> gt, gbt;
  for (const auto& [alpha, idx] : G.var_of[0]) {
    const int t = alpha.back();
    if (t < mu) continue;
    auto e = alpha;
    e.back() -= mu;
    gt.emplace_back(Mono::from(e), G.coeffs.var(idx));
    if (t == mu) {
      auto eb = alpha;
      eb.pop_back();
      gbt.emplace_back(Mono::from(eb), G.coeffs.var(idx));
    }
  }
  const auto gpoly = Poly<PolyRing<ZZ>>::from_terms(G.coeffs, n, std::move(gt));
  const auto gbar = Poly<PolyRing<ZZ>>::from_terms(G.coeffs, n - 1, std::move(gbt));
  const auto fbar = bar(f);
  auto num = out.H * disc_hyper(fbar);
  auto den = disc_hyper(gpoly) * disc_hyper(gbar);
  out.red = poly_exact_div(num, den);
  return out;
}

// Disc(fbar) * dD/dE_n == dS/dE_n with D = Disc(f), S = Res(d_1 f, ..., d_{n-1} f, f)
// and E_n the coefficient of X_n^d, for the generic form.
inline bool delta_n_identity(int n, int d) {
  if (n < 2 || d < 2) throw SignatureMismatch("need n >= 2 and d >= 2");
  const auto G = generic_system<ZZ>(n, {d});
  const auto& f = G.forms[0];
  std::vector<int> top(n, 0);
  top.back() = d;
  const int E = G.var(0, top);
  const auto D = disc_hyper(f);
  const auto S = disc_times_bar(f);
  return disc_hyper(bar(f)) * partial_derivative(D, E) == partial_derivative(S, E);
}

}  // namespace elimkit
