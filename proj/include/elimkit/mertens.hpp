#pragma once

// The two Mertens formulas relating Res(f_1, ..., f_n) to the binary
// resultant and discriminant of theta = Res(f_1, ..., f_{n-1}, sum U_i X_i)
// after the substitutions
//   rho_bar: U_i -> V_i X + W_i Y
//   rho:     U_i -> V_i (sum_j W_j X_j) - W_i (sum_j V_j X_j).
//
// Everything lives in one flat integer polynomial ring whose variables are
// the coefficient parameters of the input followed by U, V, W, X, Y and the
// main variables X_1..X_n.

#include "disc_points.hpp"

namespace elimkit {

struct MertensUniverse {
  PolyRing<ZZ> R;
  int n = 0;
  int params = 0;
  int U(int i) const { return params + i; }
  int V(int i) const { return params + n + i; }
  int W(int i) const { return params + 2 * n + i; }
  int X() const { return params + 3 * n; }
  int Y() const { return params + 3 * n + 1; }
  int Xm(int i) const { return params + 3 * n + 2 + i; }
  Poly<ZZ> var(int idx) const { return R.var(idx); }
  Poly<ZZ> embed(const Poly<ZZ>& c) const { return with_nvars(c, R.nv); }
};

inline MertensUniverse mertens_universe(const PolyRing<ZZ>& coeffs, int n) {
  std::vector<std::string> names = coeffs.names ? *coeffs.names : std::vector<std::string>{};
  for (const char* stem : {"U", "V", "W"})
    for (int i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  names.push_back("X");
  names.push_back("Y");
  for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  MertensUniverse u;
  u.params = coeffs.nv;
  u.n = n;
  u.R = PolyRing<ZZ>(ZZ{}, std::move(names));
  return u;
}

// The universe polynomial p, read as a form in the listed universe variables
// with coefficients in the universe ring.
inline Poly<PolyRing<ZZ>> as_form(const MertensUniverse& u, const Poly<ZZ>& p, const std::vector<int>& mains) {
  std::map<Mono, std::vector<std::pair<Mono, mpz_class>>, std::greater<Mono>> parts;
  for (std::size_t t = 0; t < p.m.size(); ++t) {
    Mono rest = p.m[t], main;
    for (std::size_t k = 0; k < mains.size(); ++k) {
      const int e = rest.get(mains[k]);
      if (!e) continue;
      main.set(static_cast<int>(k), e);
      rest.set(mains[k], 0);
    }
    parts[main].emplace_back(rest, p.c[t]);
  }
  std::vector<std::pair<Mono, Poly<ZZ>>> terms;
  for (auto& [mo, cs] : parts) terms.emplace_back(mo, Poly<ZZ>::from_terms(ZZ{}, u.R.nv, std::move(cs)));
  return Poly<PolyRing<ZZ>>::from_terms(u.R, static_cast<int>(mains.size()), std::move(terms));
}

inline Poly<PolyRing<ZZ>> embed_form(const MertensUniverse& u, const Poly<PolyRing<ZZ>>& f) {
  return map_coeffs(f, u.R, [&](const Poly<ZZ>& c) { return u.embed(c); });
}

struct ThetaForm {
  Poly<ZZ> theta;
  std::vector<Poly<ZZ>> partials;  // d theta / d U_i
  long degree = 0;                 // d_1 ... d_{n-1}
};

inline ThetaForm theta(const MertensUniverse& u, const std::vector<Poly<PolyRing<ZZ>>>& fs) {
  const int n = u.n;
  if (static_cast<int>(fs.size()) < n - 1) throw SignatureMismatch("need at least n-1 forms");
  std::vector<Poly<PolyRing<ZZ>>> sys;
  std::vector<int> deg;
  long N = 1;
  for (int i = 0; i + 1 < n; ++i) {
    sys.push_back(embed_form(u, fs[i]));
    deg.push_back(form_degree(fs[i]));
    N *= deg.back();
  }
  Poly<PolyRing<ZZ>> L(u.R, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    L += Poly<PolyRing<ZZ>>::monomial(u.R, n, e, u.var(u.U(i)));
  }
  sys.push_back(L);
  deg.push_back(1);
  ThetaForm t;
  t.theta = resultant(sys, deg);
  t.degree = N;
  for (int i = 0; i < n; ++i) t.partials.push_back(partial_derivative(t.theta, u.U(i)));
  return t;
}

inline std::vector<Poly<ZZ>> identity_images(const MertensUniverse& u) {
  std::vector<Poly<ZZ>> im;
  for (int v = 0; v < u.R.nv; ++v) im.push_back(u.var(v));
  return im;
}

inline Poly<ZZ> rho_bar(const MertensUniverse& u, const Poly<ZZ>& p) {
  auto im = identity_images(u);
  for (int i = 0; i < u.n; ++i) im[u.U(i)] = u.var(u.V(i)) * u.var(u.X()) + u.var(u.W(i)) * u.var(u.Y());
  return substitute(p, im);
}

inline Poly<ZZ> rho(const MertensUniverse& u, const Poly<ZZ>& p) {
  auto im = identity_images(u);
  Poly<ZZ> sw(ZZ{}, u.R.nv), sv(ZZ{}, u.R.nv);
  for (int j = 0; j < u.n; ++j) {
    sw += u.var(u.W(j)) * u.var(u.Xm(j));
    sv += u.var(u.V(j)) * u.var(u.Xm(j));
  }
  for (int i = 0; i < u.n; ++i) im[u.U(i)] = u.var(u.V(i)) * sw - u.var(u.W(i)) * sv;
  return substitute(p, im);
}

// f(images) for a form f whose coefficients are parameter polynomials.
inline Poly<ZZ> evaluate_form(const MertensUniverse& u, const Poly<PolyRing<ZZ>>& f,
                              const std::vector<Poly<ZZ>>& images) {
  std::vector<std::vector<Poly<ZZ>>> pw(f.nv);
  PolyAccumulator<ZZ> acc(ZZ{}, u.R.nv);
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    Poly<ZZ> term = u.embed(f.c[t]);
    for (int v = 0; v < f.nv; ++v) {
      const int e = f.m[t].get(v);
      if (!e) continue;
      auto& cache = pw[v];
      if (cache.empty()) cache.push_back(Poly<ZZ>::constant(ZZ{}, u.R.nv, mpz_class(1)));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
      term *= cache[e];
    }
    acc.add(term);
  }
  return acc.result();
}

struct MertensSides {
  Poly<ZZ> lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

namespace detail {

inline long product_of_degrees(const std::vector<Poly<PolyRing<ZZ>>>& fs) {
  long p = 1;
  for (const auto& f : fs) p *= form_degree(f);
  return p;
}

inline void check_mertens_input(const std::vector<Poly<PolyRing<ZZ>>>& fs) {
  if (fs.empty()) throw SignatureMismatch("need n forms");
  const int n = fs[0].nv;
  if (static_cast<int>(fs.size()) != n) throw SignatureMismatch("need n forms in n variables");
  if (product_of_degrees(fs) <= 1) throw DegenerateSignature("the formulas need d_1 ... d_n > 1");
}

// (-1)^{d_1...d_n} Disc_{X,Y}(rho_bar theta)^{d_n} Res(f_1, ..., f_n).
inline Poly<ZZ> mertens_rhs(const MertensUniverse& u, const std::vector<Poly<PolyRing<ZZ>>>& fs, const Poly<ZZ>& rbt,
                            long N) {
  const int n = u.n;
  std::vector<Poly<PolyRing<ZZ>>> sys;
  std::vector<int> deg;
  for (const auto& f : fs) {
    sys.push_back(embed_form(u, f));
    deg.push_back(form_degree(f));
  }
  auto res = resultant(sys, deg);
  auto binary = as_form(u, rbt, {u.X(), u.Y()});
  auto disc = disc_points(std::vector<Poly<PolyRing<ZZ>>>{binary}, std::vector<int>{static_cast<int>(N)});
  auto rhs = poly_pow(disc, static_cast<unsigned>(deg[n - 1])) * res;
  return (product_of_degrees(fs) % 2) ? -rhs : rhs;
}

}  // namespace detail

inline MertensSides mertens_first(const std::vector<Poly<PolyRing<ZZ>>>& fs) {
  detail::check_mertens_input(fs);
  const int n = fs[0].nv;
  const auto u = mertens_universe(fs[0].ring, n);
  const auto th = theta(u, fs);
  const int dn = form_degree(fs[n - 1]);
  const int dh = dn * static_cast<int>(th.degree - 1);
  const auto rbt = rho_bar(u, th.theta);
  const auto F = rho_bar(u, evaluate_form(u, fs[n - 1], th.partials));
  MertensSides s;
  s.lhs = resultant(std::vector<Poly<PolyRing<ZZ>>>{as_form(u, rbt, {u.X(), u.Y()}), as_form(u, F, {u.X(), u.Y()})},
                    std::vector<int>{static_cast<int>(th.degree), dh});
  s.rhs = detail::mertens_rhs(u, fs, rbt, th.degree);
  return s;
}

inline MertensSides mertens_second(const std::vector<Poly<PolyRing<ZZ>>>& fs) {
  detail::check_mertens_input(fs);
  const int n = fs[0].nv;
  const auto u = mertens_universe(fs[0].ring, n);
  const auto th = theta(u, fs);
  const int dn = form_degree(fs[n - 1]);
  const int dh = dn * static_cast<int>(th.degree - 1);
  std::vector<int> mains;
  for (int i = 0; i < n; ++i) mains.push_back(u.Xm(i));
  const auto h = as_form(u, rho(u, evaluate_form(u, fs[n - 1], th.partials)), mains);
  std::vector<Poly<PolyRing<ZZ>>> sys;
  std::vector<int> deg;
  for (int i = 0; i + 1 < n; ++i) {
    sys.push_back(embed_form(u, fs[i]));
    deg.push_back(form_degree(fs[i]));
  }
  sys.push_back(h);
  deg.push_back(dh);
  MertensSides s;
  s.lhs = resultant(sys, deg);
  s.rhs = detail::mertens_rhs(u, fs, rho_bar(u, th.theta), th.degree);
  return s;
}

// Delta_lambda(Z) = det(l_{1,j_1}, ..., l_{n-1,j_{n-1}}, Z) as a linear form in
// the universe variables Z_1..Z_n (given by their indices).
inline Poly<ZZ> delta_lambda(const MertensUniverse& u, const std::vector<std::vector<LinearForm<ZZ>>>& lines,
                             const std::vector<int>& lambda, const std::vector<int>& zvars) {
  const int n = u.n;
  Poly<ZZ> out(ZZ{}, u.R.nv);
  for (int c = 0; c < n; ++c) {
    Matrix<ZZ> M(ZZ{}, n - 1, n - 1);
    for (int r = 0; r + 1 < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        M.at(r, cc++) = lines[r][lambda[r]][k];
      }
    }
    auto cof = determinant(M);
    if ((n - 1 + c) % 2) cof = -cof;
    out += u.var(zvars[c]).scale(cof);
  }
  return out;
}

// prod_{lambda < mu} (Delta_lambda(V) Delta_mu(W) - Delta_lambda(W) Delta_mu(V))^2
// over the multi-indices lambda = (j_1, ..., j_{n-1}).
inline Poly<ZZ> lemmaA_product(const MertensUniverse& u, const std::vector<std::vector<LinearForm<ZZ>>>& lines) {
  const int n = u.n;
  if (static_cast<int>(lines.size()) != n - 1) throw SignatureMismatch("need n-1 factorizations");
  std::vector<int> bound, vv, ww;
  for (const auto& s : lines) {
    if (s.empty()) throw SignatureMismatch("empty factorization");
    for (const auto& l : s)
      if (static_cast<int>(l.size()) != n) throw SignatureMismatch("linear form of the wrong length");
    bound.push_back(static_cast<int>(s.size()));
  }
  for (int i = 0; i < n; ++i) {
    vv.push_back(u.V(i));
    ww.push_back(u.W(i));
  }
  std::vector<Poly<ZZ>> dv, dw;
  std::vector<int> idx(n - 1, 0);
  do {
    dv.push_back(delta_lambda(u, lines, idx, vv));
    dw.push_back(delta_lambda(u, lines, idx, ww));
  } while (detail::next_multi_index(idx, bound));
  auto prod = Poly<ZZ>::constant(ZZ{}, u.R.nv, mpz_class(1));
  for (std::size_t a = 0; a < dv.size(); ++a)
    for (std::size_t b = a + 1; b < dv.size(); ++b) {
      auto x = dv[a] * dw[b] - dw[a] * dv[b];
      prod *= x * x;
    }
  return prod;
}

// Sign relating Disc_{X,Y}(rho_bar theta) to lemmaA_product for split input
// with N = d_1 ... d_{n-1} lines: (-1)^{N(N-1)/2}, the binary linear-forms
// product formula applied to rho_bar theta.
inline int lemmaA_sign(long N) { return ((N * (N - 1) / 2) % 2) ? -1 : 1; }

}  // namespace elimkit
