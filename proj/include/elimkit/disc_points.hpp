#pragma once

// Discriminant of n-1 homogeneous forms in n variables, characterized by
// Disc(f) * Res(f, X_i) = Res(f, J_i).

#include <random>

#include "jacobian.hpp"

namespace elimkit {

struct DiscOptions {
  int budget = 8;
  std::uint64_t seed = 0x5eed;
};

struct DiscTrace {
  int index = -1;  // 0-based i whose quotient was used
  bool lifted = false;
  int perturbations = 0;  // attempts made in the perturbed ring; 0 = none
};

// Res(fs, J_i) / Res(fs, X_i) when Res(fs, X_i) is nonzero and the quotient
// exists; nullopt otherwise. The ring must be a domain for the quotient to be
// meaningful.
template <class C>
std::optional<typename C::elem> disc_points_via_index(const std::vector<Poly<C>>& fs, const std::vector<int>& d,
                                                      int i, const std::vector<Poly<C>>& J) {
  const C& k = fs[0].ring;
  const int n = static_cast<int>(fs.size()) + 1;
  auto sys = fs;
  auto deg = d;
  deg.push_back(1);
  sys.push_back(Poly<C>::variable(k, n, i));
  auto r = resultant(sys, deg);
  if (k.is_zero(r)) return std::nullopt;
  sys.back() = J[i];
  deg.back() = 0;
  for (int x : d) deg.back() += x - 1;
  return k.div_exact(resultant(sys, deg), r);
}

template <class C>
std::optional<typename C::elem> disc_points_via_index(const std::vector<Poly<C>>& fs, const std::vector<int>& d,
                                                      int i) {
  return disc_points_via_index(fs, d, i, jac_minors(fs));
}

namespace detail {

template <class C>
std::optional<typename C::elem> disc_by_division(const std::vector<Poly<C>>& fs, const std::vector<int>& d,
                                                 DiscTrace* tr) {
  const auto J = jac_minors(fs);
  const int n = static_cast<int>(fs.size()) + 1;
  for (int i = 0; i < n; ++i) {
    auto q = disc_points_via_index(fs, d, i, J);
    if (q) {
      if (tr) tr->index = i;
      return q;
    }
  }
  return std::nullopt;
}

// Perturb f_j + t*l_j^{d_j} over the domain C, divide in C[t], set t = 0.
template <class C>
typename C::elem disc_perturbed(const std::vector<Poly<C>>& fs, const std::vector<int>& d, const DiscOptions& opt,
                                DiscTrace* tr) {
  const C& k = fs[0].ring;
  const int n = static_cast<int>(fs.size()) + 1;
  PolyRing<C> T(k, {"t"});
  const auto t = T.var(0);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 1; attempt <= opt.budget; ++attempt) {
    if (tr) tr->perturbations = attempt;
    std::vector<Poly<PolyRing<C>>> pert;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      Poly<PolyRing<C>> l(T, n);
      while (l.is_zero())
        for (int v = 0; v < n; ++v) {
          std::vector<int> e(n, 0);
          e[v] = 1;
          l += Poly<PolyRing<C>>::monomial(T, n, e, T.from_int(coef(rng)));
        }
      auto base = map_coeffs(fs[j], T, [&](const auto& x) { return T.from_base(x); });
      pert.push_back(base + poly_pow(l, d[j]).scale(t));
    }
    auto q = disc_by_division(pert, d, tr);
    if (q) return q->constant_term();
  }
  throw PerturbationDegenerate("no admissible index after " + std::to_string(opt.budget) + " perturbations");
}

}  // namespace detail

template <class C>
typename C::elem disc_points(const std::vector<Poly<C>>& fs, const std::vector<int>& d, const DiscOptions& opt = {},
                             DiscTrace* tr = nullptr) {
  if (fs.empty()) throw SignatureMismatch("need at least one form");
  const int n = static_cast<int>(fs.size()) + 1;
  check_system(fs, d, n);
  const C& k = fs[0].ring;
  for (int x : d)
    if (x < 1) throw SignatureMismatch("degrees must be positive");
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 1; })) return k.one();
  if (k.is_domain()) {
    auto q = detail::disc_by_division(fs, d, tr);
    if (q) return *q;
  }
  if constexpr (needs_lift<C>::value) {
    std::vector<decltype(lift_poly(fs[0]))> lifted;
    for (const auto& f : fs) lifted.push_back(lift_poly(f));
    if (tr) tr->lifted = true;
    return reduce_elem(k, detail::disc_perturbed(lifted, d, opt, tr));
  } else {
    if (!k.is_domain()) throw UnsupportedRing("discriminant over a ring with zero divisors");
    return detail::disc_perturbed(fs, d, opt, tr);
  }
}

template <class C>
typename C::elem disc_points(const std::vector<Poly<C>>& fs) {
  return disc_points(fs, degrees_of(fs));
}

// Partial degree of Disc in the coefficients of f_i (0-based i).
inline long disc_points_degree(const std::vector<int>& d, int i) {
  long prod = 1, sum = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != static_cast<std::size_t>(i)) prod *= d[j];
    sum += d[j] - 1;
  }
  return prod * ((d.at(i) - 1) + sum);
}

inline long disc_points_total_degree(const std::vector<int>& d) {
  long t = 0;
  for (std::size_t i = 0; i < d.size(); ++i) t += disc_points_degree(d, static_cast<int>(i));
  return t;
}

// Exponent of det(phi) in Disc(f o phi) and total weight under the scaling
// grading: d_1...d_{n-1} * sum(d_i - 1).
inline long disc_points_weight(const std::vector<int>& d) {
  long prod = 1, sum = 0;
  for (int x : d) {
    prod *= x;
    sum += x - 1;
  }
  return prod * sum;
}

// ------------------------------------------------------- split inputs

template <class C>
using LinearForm = std::vector<typename C::elem>;

template <class C>
Poly<C> linear_form(const C& k, const LinearForm<C>& l) {
  const int n = static_cast<int>(l.size());
  Poly<C> p(k, n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> e(n, 0);
    e[v] = 1;
    p += Poly<C>::monomial(k, n, e, l[v]);
  }
  return p;
}

template <class C>
Poly<C> product_of_lines(const C& k, const std::vector<LinearForm<C>>& lines) {
  if (lines.empty()) throw SignatureMismatch("empty factorization");
  Poly<C> p = linear_form(k, lines[0]);
  for (std::size_t j = 1; j < lines.size(); ++j) p *= linear_form(k, lines[j]);
  return p;
}

namespace detail {

inline bool next_multi_index(std::vector<int>& idx, const std::vector<int>& bound) {
  for (std::size_t s = 0; s < idx.size(); ++s) {
    if (++idx[s] < bound[s]) return true;
    idx[s] = 0;
  }
  return false;
}

}  // namespace detail

// (-1)^s * prod over (j_1..j_{n-1}, i, j), j > j_i, of
// det(l_{1,j_1}, ..., l_{n-1,j_{n-1}}, l_{i,j})^2 with
// s = (1/2) d_1...d_{n-1} sum(d_i - 1). Letting j range over all j != j_i
// visits every determinant twice (once per endpoint), so each unordered
// pair is taken once here; the result has the expected degree
// 2 d_1...d_{n-1} sum(d_i - 1) in the line coefficients.
template <class C>
typename C::elem linear_forms_disc(const C& k, const std::vector<std::vector<LinearForm<C>>>& lines) {
  const int slots = static_cast<int>(lines.size());
  const int n = slots + 1;
  std::vector<int> d;
  for (const auto& s : lines) {
    if (s.empty()) throw SignatureMismatch("each slot needs at least one linear form");
    for (const auto& l : s)
      if (static_cast<int>(l.size()) != n) throw SignatureMismatch("linear form of the wrong length");
    d.push_back(static_cast<int>(s.size()));
  }
  auto prod = k.one();
  std::vector<int> idx(slots, 0);
  do {
    for (int i = 0; i < slots; ++i)
      for (int j = 0; j < d[i]; ++j) {
        if (j <= idx[i]) continue;
        Matrix<C> M(k, n, n);
        for (int r = 0; r < slots; ++r)
          for (int c = 0; c < n; ++c) M.at(r, c) = lines[r][idx[r]][c];
        for (int c = 0; c < n; ++c) M.at(slots, c) = lines[i][j][c];
        const auto det = determinant(M);
        prod = k.mul(prod, k.mul(det, det));
      }
  } while (detail::next_multi_index(idx, d));
  if ((disc_points_weight(d) / 2) % 2) prod = k.neg(prod);
  return prod;
}

// ------------------------------------------------------ reduction mod delta

// Delta with J_i = X_i * Delta mod gcd(d_1, ..., d_{n-1}) for every i.
template <class C>
auto delta_mod_delta(const std::vector<Poly<C>>& fs) {
  if constexpr (needs_lift<C>::value) {
    std::vector<decltype(lift_poly(fs[0]))> lifted;
    for (const auto& f : fs) lifted.push_back(lift_poly(f));
    return delta_mod_delta(lifted);
  } else {
    static_assert(std::is_same_v<C, ZZ> || std::is_same_v<C, PolyRing<ZZ>>,
                  "reduction mod delta needs integer coefficients");
    const auto d = degrees_of(fs);
    int delta = 0;
    for (int x : d) delta = std::gcd(delta, x);
    if (delta < 2) throw DeltaIsOne("gcd of the degrees is 1");
    const int n = static_cast<int>(fs.size()) + 1;
    const auto J = jac_minors(fs);
    auto Jn = reduce_poly_mod(J[n - 1], static_cast<std::uint64_t>(delta));
    const auto& R = Jn.ring;
    auto Xn = decltype(Jn)::variable(R, n, n - 1);
    auto D = poly_exact_div(Jn, Xn);
    for (int i = 0; i + 1 < n; ++i) {
      auto Ji = reduce_poly_mod(J[i], static_cast<std::uint64_t>(delta));
      if (Ji != decltype(Jn)::variable(R, n, i) * D)
        throw NotDivisible("J_" + std::to_string(i + 1) + " is not X_" + std::to_string(i + 1) + " * Delta mod " +
                           std::to_string(delta));
    }
    return D;
  }
}

// --------------------------------------------------------- base change

// K = Disc(f o g) / (Disc(f)^{d^{n-1}} Res(g)^{d_1...d_{n-1} sum(d_i-1)}).
template <class C>
typename C::elem base_change_K(const std::vector<Poly<C>>& fs, const std::vector<Poly<C>>& gs,
                               const DiscOptions& opt = {}) {
  const C& k = fs.at(0).ring;
  const int n = static_cast<int>(fs.size()) + 1;
  if (static_cast<int>(gs.size()) != n) throw SignatureMismatch("need n forms g");
  const auto d = degrees_of(fs);
  const auto dg = degrees_of(gs);
  const int e = dg[0];
  for (int x : dg)
    if (x != e) throw SignatureMismatch("the forms g must share one degree");
  if (e < 2) throw DegreeTooLow("base change needs deg g >= 2");
  std::vector<Poly<C>> comp;
  std::vector<int> dc;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    comp.push_back(substitute(fs[i], gs));
    dc.push_back(d[i] * e);
  }
  auto num = disc_points(comp, dc, opt);
  unsigned long pe = 1;
  for (int i = 0; i + 1 < n; ++i) pe *= static_cast<unsigned long>(e);
  auto den = ring_pow(k, disc_points(fs, d, opt), pe);
  den = k.mul(den, ring_pow(k, resultant(gs, dg), static_cast<unsigned long>(disc_points_weight(d))));
  return exact_divide(k, num, den);
}

}  // namespace elimkit
