#pragma once

// Multivariate resultant of n homogeneous forms in n variables, normalized by
// Res(X1^d1, ..., Xn^dn) = 1.

#include <map>
#include <numeric>
#include <random>

#include "matrix.hpp"

namespace elimkit {

template <class C>
void check_system(const std::vector<Poly<C>>& fs, const std::vector<int>& d, int nvars) {
  if (fs.size() != d.size()) throw SignatureMismatch("form count does not match the degree list");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].nv != nvars)
      throw SignatureMismatch("form " + std::to_string(i + 1) + " has " + std::to_string(fs[i].nv) +
                              " variables, expected " + std::to_string(nvars));
    if (d[i] < 0) throw SignatureMismatch("negative degree");
    auto h = is_homogeneous(fs[i]);
    if (!h) throw NonHomogeneous("form " + std::to_string(i + 1) + " is not homogeneous");
    if (!h->any && h->degree != d[i])
      throw SignatureMismatch("form " + std::to_string(i + 1) + " has degree " + std::to_string(h->degree) +
                              ", signature says " + std::to_string(d[i]));
  }
}

template <class C>
std::vector<int> degrees_of(const std::vector<Poly<C>>& fs) {
  std::vector<int> d;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto h = is_homogeneous(fs[i]);
    if (!h) throw NonHomogeneous("form " + std::to_string(i + 1) + " is not homogeneous");
    if (h->any) throw SignatureMismatch("degree of the zero form " + std::to_string(i + 1) + " must be given");
    d.push_back(h->degree);
  }
  return d;
}

template <class C>
int form_degree(const Poly<C>& f) {
  auto h = is_homogeneous(f);
  if (!h) throw NonHomogeneous("form is not homogeneous");
  if (h->any) throw DegreeTooLow("the zero form has no degree");
  return h->degree;
}

template <class C>
PolyRing<C> main_ring(const C& coeffs, int n, const std::string& stem = "X") {
  return PolyRing<C>(coeffs, default_names(n, stem));
}

// ------------------------------------------------------------ Sylvester

template <class C>
Matrix<C> sylvester_matrix(const Poly<C>& f, const Poly<C>& g, int df, int dg) {
  const C& k = f.ring;
  const int N = df + dg;
  Matrix<C> S(k, N, N);
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) S.at(r, r + i) = f.coeff(std::vector<int>{df - i, i});
  for (int r = 0; r < df; ++r)
    for (int j = 0; j <= dg; ++j) S.at(dg + r, r + j) = g.coeff(std::vector<int>{dg - j, j});
  return S;
}

// ------------------------------------------------------------- Macaulay

template <class C>
struct MacaulaySystem {
  int n = 0;
  std::vector<int> d;
  int nu = 0;
  std::vector<std::vector<int>> monomials;  // columns, decreasing graded-lex
  std::vector<int> row_form;                // form used for each row
  std::vector<int> nonreduced;              // indices kept in the denominator
  Matrix<C> M, Mprime;
};

inline int critical_degree(const std::vector<int>& d) {
  int nu = 1;
  for (int x : d) nu += x - 1;
  return nu;
}

template <class C>
MacaulaySystem<C> macaulay_system(const std::vector<Poly<C>>& fs, const std::vector<int>& d) {
  MacaulaySystem<C> S;
  S.n = static_cast<int>(fs.size());
  S.d = d;
  S.nu = critical_degree(d);
  S.monomials = monomials_of_degree(S.n, S.nu);
  const int N = static_cast<int>(S.monomials.size());
  std::map<std::vector<int>, int> col;
  for (int j = 0; j < N; ++j) col[S.monomials[j]] = j;
  const C& k = fs[0].ring;
  S.M = Matrix<C>(k, N, N);
  for (int r = 0; r < N; ++r) {
    const auto& mo = S.monomials[r];
    int first = -1, count = 0;
    for (int i = 0; i < S.n; ++i)
      if (mo[i] >= d[i]) {
        if (first < 0) first = i;
        ++count;
      }
    if (count >= 2) S.nonreduced.push_back(r);
    S.row_form.push_back(first);
    std::vector<int> shift = mo;
    shift[first] -= d[first];
    const auto& f = fs[first];
    for (std::size_t t = 0; t < f.m.size(); ++t) {
      auto e = f.m[t].exps(S.n);
      for (int v = 0; v < S.n; ++v) e[v] += shift[v];
      S.M.at(r, col.at(e)) = f.c[t];
    }
  }
  S.Mprime = S.M.submatrix(S.nonreduced, S.nonreduced);
  return S;
}

// ------------------------------------------------------------------ GCP

struct PerturbationPlan {
  std::string t_name = "t";
  // Empty means the default plan p_i = X_i^{d_i}; otherwise one linear form
  // (coefficient vector) per slot, raised to the slot degree.
  std::vector<std::vector<long>> linear_forms;
  int budget = 8;
  std::uint64_t seed = 1;
};

namespace detail {

// Quotient P/D for monic D, coefficients listed from the top degree down.
template <class C>
std::optional<std::vector<typename C::elem>> divide_monic(const C& k, std::vector<typename C::elem> P,
                                                          const std::vector<typename C::elem>& D) {
  const std::size_t np = P.size(), nd = D.size();
  if (nd > np) {
    for (const auto& x : P)
      if (!k.is_zero(x)) return std::nullopt;
    return std::vector<typename C::elem>{k.zero()};
  }
  std::vector<typename C::elem> Q(np - nd + 1, k.zero());
  for (std::size_t i = 0; i + nd <= np; ++i) {
    Q[i] = P[i];
    if (k.is_zero(Q[i])) continue;
    for (std::size_t j = 0; j < nd; ++j) k.submul(P[i + j], Q[i], D[j]);
  }
  for (std::size_t i = np - nd + 1; i < np; ++i)
    if (!k.is_zero(P[i])) return std::nullopt;
  return Q;
}

}  // namespace detail

// Res evaluated as R(0) where R(t) = Res(f_i + t X_i^{d_i}). With this plan
// the perturbed Macaulay matrices are M + tI and M' + tI, whose
// determinants are monic in t, so the quotient is exact over any ring.
template <class C>
typename C::elem gcp_default(const MacaulaySystem<C>& S) {
  const C& k = S.M.ring;
  auto P = charpoly_berkowitz(S.M.negated());
  auto D = charpoly_berkowitz(S.Mprime.negated());
  auto Q = detail::divide_monic(k, P, D);
  if (!Q) throw PerturbationDegenerate("perturbed Macaulay quotient is not exact");
  return Q->back();
}

template <class C>
typename C::elem resultant(const std::vector<Poly<C>>& fs, const std::vector<int>& d);

// Res(f_i + t p_i) at t = 0 with p_i = l_i^{d_i} for the plan's linear
// forms, computed as a Macaulay ratio over C[t]. Retries with fresh random
// forms when the perturbed denominator still vanishes.
template <class C>
typename C::elem gcp_resultant(const std::vector<Poly<C>>& fs, const std::vector<int>& d, PerturbationPlan plan = {}) {
  const int n = static_cast<int>(fs.size());
  check_system(fs, d, n);
  const C& k = fs[0].ring;
  if (plan.linear_forms.empty()) return gcp_default(macaulay_system(fs, d));
  if (!k.is_domain()) throw UnsupportedRing("random perturbation plans need an integral domain");
  std::mt19937_64 rng(plan.seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  PolyRing<C> T(k, {plan.t_name});
  const auto t = T.var(0);
  for (int attempt = 0; attempt < plan.budget; ++attempt) {
    if (attempt > 0)
      for (auto& l : plan.linear_forms)
        for (auto& x : l) x = coef(rng);
    std::vector<Poly<PolyRing<C>>> pert;
    for (int i = 0; i < n; ++i) {
      auto lift = map_coeffs(fs[i], T, [&](const auto& x) { return T.from_base(x); });
      Poly<PolyRing<C>> l(T, n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> e(n, 0);
        e[v] = 1;
        l += Poly<PolyRing<C>>::monomial(T, n, e, T.from_int(plan.linear_forms.at(i).at(v)));
      }
      pert.push_back(lift + poly_pow(l, d[i]).scale(t));
    }
    auto S = macaulay_system(pert, d);
    auto dp = determinant(S.Mprime);
    if (dp.is_zero()) continue;
    auto q = T.div_exact(determinant(S.M), dp);
    if (!q) continue;
    return q->constant_term();
  }
  throw PerturbationDegenerate("perturbation budget exhausted");
}

template <class C>
typename C::elem macaulay_resultant(const std::vector<Poly<C>>& fs, const std::vector<int>& d) {
  const C& k = fs[0].ring;
  auto S = macaulay_system(fs, d);
  auto dp = determinant(S.Mprime);
  if (!k.is_zero(dp) && k.is_domain()) {
    auto q = k.div_exact(determinant(S.M), dp);
    if (q) return *q;
  }
  return gcp_default(S);
}

// ------------------------------------------------ three ternary quadrics

// det of the 6x6 matrix built from the coefficients of the three quadrics and
// of the three partials of their Jacobian determinant. It is a fixed integer
// multiple of the resultant; the multiple is fixed by evaluating the same
// construction at (X1^2, X2^2, X3^2).
template <class C>
typename C::elem ternary_quadric_det(const std::vector<Poly<C>>& fs) {
  const C& k = fs[0].ring;
  const auto R = main_ring(k, 3);
  Matrix<PolyRing<C>> Jm(R, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Jm.at(i, j) = partial_derivative(fs[i], j);
  const auto J = det_expand(Jm);
  static const std::vector<std::vector<int>> basis = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2},
                                                      {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  std::vector<Poly<C>> rows = fs;
  for (int v = 0; v < 3; ++v) rows.push_back(partial_derivative(J, v));
  Matrix<C> top(k, 3, 6), bot(k, 3, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      top.at(i, j) = rows[i].coeff(basis[j]);
      bot.at(i, j) = rows[3 + i].coeff(basis[j]);
    }
  // Laplace expansion along the first three rows.
  auto acc = k.zero();
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3) continue;
    std::vector<int> S, T;
    int colsum = 0;
    for (int j = 0; j < 6; ++j) {
      if (mask >> j & 1) {
        S.push_back(j);
        colsum += j;
      } else {
        T.push_back(j);
      }
    }
    auto a = det_expand(top.submatrix({0, 1, 2}, S));
    if (k.is_zero(a)) continue;
    auto b = det_expand(bot.submatrix({0, 1, 2}, T));
    if (k.is_zero(b)) continue;
    // sign (-1)^{(0+1+2) + sum S}
    if ((colsum + 3) % 2) {
      k.submul(acc, a, b);
    } else {
      k.addmul(acc, a, b);
    }
  }
  return acc;
}

template <class C>
typename C::elem ternary_quadric_resultant(const std::vector<Poly<C>>& fs) {
  const C& k = fs[0].ring;
  std::vector<Poly<C>> pure;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> e(3, 0);
    e[i] = 2;
    pure.push_back(Poly<C>::monomial(k, 3, e, k.one()));
  }
  const auto unit = ternary_quadric_det(pure);
  return exact_divide(k, ternary_quadric_det(fs), unit);
}

// ------------------------------------------------------------- dispatch

template <class C>
typename C::elem resultant(const std::vector<Poly<C>>& fs, const std::vector<int>& d) {
  const int n = static_cast<int>(fs.size());
  if (n == 0) throw SignatureMismatch("empty system");
  check_system(fs, d, n);
  const C& k = fs[0].ring;
  if constexpr (needs_lift<C>::value) {
    const bool symbolic_formula = is_poly_ring<C>::value && n == 3 && d == std::vector<int>{2, 2, 2};
    if (!k.is_domain() || symbolic_formula) {
      std::vector<decltype(lift_poly(fs[0]))> lifted;
      for (const auto& f : fs) lifted.push_back(lift_poly(f));
      return reduce_elem(k, resultant(lifted, d));
    }
  }
  for (const auto& f : fs)
    if (f.is_zero()) return k.zero();
  // A constant slot c gives c^{product of the other degrees}.
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0) continue;
    unsigned long e = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) e *= static_cast<unsigned long>(d[j]);
    return ring_pow(k, fs[i].constant_term(), e);
  }
  if (n == 1) return fs[0].coeff(std::vector<int>{d[0]});
  if (n == 2) return determinant(sylvester_matrix(fs[0], fs[1], d[0], d[1]));
  if constexpr (is_poly_ring<C>::value) {
    if (n == 3 && d == std::vector<int>{2, 2, 2} && k.characteristic() == 0) return ternary_quadric_resultant(fs);
  }
  return macaulay_resultant(fs, d);
}

template <class C>
typename C::elem resultant(const std::vector<Poly<C>>& fs) {
  return resultant(fs, degrees_of(fs));
}

// ------------------------------------------------------- inertia forms

// Kronecker substitution test: a is an inertia form of the generic system iff
// replacing each E_i (the coefficient of X_n^{d_i} in f_i) by E_i - f_i after
// dehomogenizing at X_n annihilates it.
inline bool is_inertia_form_generic(const Poly<ZZ>& a, const GenericSystem<ZZ>& g) {
  const int nu = g.coeffs.nv;
  if (a.nv != nu) throw NotGeneric("element does not live in the universal coefficient ring");
  if (static_cast<int>(g.forms.size()) != g.n) throw NotGeneric("system must have n forms");
  const int n = g.n;
  const int total = nu + n - 1;
  std::vector<Poly<ZZ>> images;
  for (int v = 0; v < nu; ++v) images.push_back(Poly<ZZ>::variable(ZZ{}, total, v));
  for (int i = 0; i < n; ++i) {
    std::vector<int> top(n, 0);
    top[n - 1] = g.degrees[i];
    const int E = g.var(i, top);
    Poly<ZZ> img(ZZ{}, total);
    for (const auto& [alpha, idx] : g.var_of[i]) {
      if (idx == E) continue;
      std::vector<int> e(total, 0);
      e[idx] = 1;
      for (int v = 0; v + 1 < n; ++v) e[nu + v] = alpha[v];
      img -= Poly<ZZ>::monomial(ZZ{}, total, e, 1);
    }
    images[E] = img;
  }
  return substitute(a, images).is_zero();
}

// ------------------------------------------------- Zariski lowest part

struct LowestPart {
  long weight = 0;
  Poly<ZZ> res, H, H1, res_g;
};

inline std::vector<int> zariski_weights(const GenericSystem<ZZ>& g, const std::vector<int>& mu) {
  std::vector<int> w(g.coeffs.nv, kUnweighted);
  for (std::size_t i = 0; i < g.var_of.size(); ++i)
    for (const auto& [alpha, idx] : g.var_of[i]) w[idx] = std::max(alpha.back() - mu[i], 0);
  return w;
}

// g_i collects the terms of f_i divisible by X_n^{mu_i}, divided by it.
inline std::vector<Poly<PolyRing<ZZ>>> zariski_split_g(const GenericSystem<ZZ>& g, const std::vector<int>& mu) {
  std::vector<Poly<PolyRing<ZZ>>> out;
  for (std::size_t i = 0; i < g.forms.size(); ++i) {
    std::vector<std::pair<Mono, Poly<ZZ>>> terms;
    for (const auto& [alpha, idx] : g.var_of[i]) {
      if (alpha.back() < mu[i]) continue;
      auto e = alpha;
      e.back() -= mu[i];
      terms.emplace_back(Mono::from(e), g.coeffs.var(idx));
    }
    out.push_back(Poly<PolyRing<ZZ>>::from_terms(g.coeffs, g.n, std::move(terms)));
  }
  return out;
}

inline LowestPart zariski_lowest_part(const GenericSystem<ZZ>& g, const std::vector<int>& mu) {
  if (mu.size() != g.forms.size() || static_cast<int>(g.forms.size()) != g.n)
    throw SignatureMismatch("need n forms and n values of mu");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] < 0 || mu[i] > g.degrees[i]) throw SignatureMismatch("mu_i must lie in [0, d_i]");
  LowestPart out;
  out.res = resultant(g.forms, g.degrees);
  const auto w = zariski_weights(g, mu);
  auto val = weight_valuation(out.res, w, g.coeffs.names.get());
  if (!val) throw NotGeneric("resultant vanished");
  out.weight = *val;
  out.H = isobaric_part(out.res, w, out.weight);
  std::vector<int> dg;
  for (std::size_t i = 0; i < mu.size(); ++i) dg.push_back(g.degrees[i] - mu[i]);
  out.res_g = resultant(zariski_split_g(g, mu), dg);
  out.H1 = poly_exact_div(out.H, out.res_g);
  return out;
}

}  // namespace elimkit
