#pragma once

// Named verification suites. Each suite is a list of properties checked on
// seeded random instances (or fixed cases); a failing property records the
// first failing instance as a self-contained witness.

#include <chrono>
#include <functional>

#include "mertens.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace elimkit {

struct Outcome {
  enum class Kind { pass, skip, fail } kind = Kind::pass;
  json witness;
  std::string note;

  static Outcome ok() { return {}; }
  static Outcome skipped(std::string why) { return {Kind::skip, nullptr, std::move(why)}; }
  static Outcome failed(json w, std::string why = {}) { return {Kind::fail, std::move(w), std::move(why)}; }
  static Outcome check(bool cond, const std::function<json()>& witness, std::string why = {}) {
    return cond ? ok() : failed(witness(), std::move(why));
  }
};

struct CheckResult {
  std::string id, anchor, status, detail;
  json witness;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double seconds = 0;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "fail"; });
  }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks) {
      json j{{"id", c.id}, {"anchor", c.anchor}, {"status", c.status}, {"detail", c.detail}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      cs.push_back(std::move(j));
    }
    return {{"suite", suite}, {"seed", seed}, {"trials", trials}, {"seconds", seconds}, {"passed", ok()}, {"checks", cs}};
  }
};

class SuiteRunner {
 public:
  SuiteRunner(std::uint64_t seed, int trials) : rng(seed), trials(trials), seed_(seed) {}

  Rng rng;
  int trials;
  std::vector<CheckResult> checks;

  // Runs body(t) for t = 0..count-1 and folds the outcomes into one check.
  void property(const std::string& id, const std::string& anchor, int count, const std::function<Outcome(int)>& body) {
    CheckResult r{id, anchor, "pass", "", nullptr};
    int passed = 0, skipped = 0;
    std::string skip_note;
    for (int t = 0; t < count; ++t) {
      Outcome o;
      try {
        o = body(t);
      } catch (const Error& e) {
        o = Outcome::failed(json{{"trial", t}}, e.kind() + ": " + e.what());
      }
      if (o.kind == Outcome::Kind::fail) {
        r.status = "fail";
        r.witness = o.witness.is_null() ? json::object() : o.witness;
        r.witness["seed"] = seed_;
        r.witness["trial"] = t;
        r.detail = o.note.empty() ? "identity does not hold" : o.note;
        checks.push_back(std::move(r));
        return;
      }
      if (o.kind == Outcome::Kind::skip) {
        ++skipped;
        if (skip_note.empty()) skip_note = o.note;
      } else {
        ++passed;
      }
    }
    if (passed == 0 && skipped > 0) r.status = "skip";
    r.detail = std::to_string(passed) + " passed, " + std::to_string(skipped) + " skipped";
    if (skipped) r.detail += " (" + skip_note + ")";
    checks.push_back(std::move(r));
  }

  void once(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body) {
    property(id, anchor, 1, [&](int) { return body(); });
  }

 private:
  std::uint64_t seed_;
};

template <class K>
json witness_of(const std::vector<Poly<K>>& fs) {
  const int n = fs.empty() ? 0 : fs[0].nv;
  return document_to_json(descriptor_of(fs.at(0).ring), default_names(n), fs);
}

template <class K>
Matrix<K> to_matrix(const K& k, const std::vector<std::vector<long>>& m) {
  Matrix<K> M(k, static_cast<int>(m.size()), static_cast<int>(m[0].size()));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) M.at(i, j) = k.from_int(m[i][j]);
  return M;
}

template <class K>
std::vector<Poly<K>> compose_all(const std::vector<Poly<K>>& fs, const Matrix<K>& phi) {
  std::vector<Poly<K>> out;
  for (const auto& f : fs) out.push_back(compose_linear(f, phi));
  return out;
}

// U X_n^d + h with h generic in X_1..X_{n-1}: checks the closed form of Disc.
inline bool ux_plus_h_holds(int n, int d) {
  const auto G = generic_system<ZZ>(n - 1, {d});
  auto names = *G.coeffs.names;
  names.push_back("U");
  const PolyRing<ZZ> R(ZZ{}, names);
  const auto h = map_coeffs(G.forms[0], R, [&](const Poly<ZZ>& c) { return with_nvars(c, R.nv); });
  std::vector<int> top(n, 0);
  top.back() = d;
  const auto U = R.var(R.nv - 1);
  const auto g = with_nvars(h, n) + Poly<PolyRing<ZZ>>::monomial(R, n, top, U);
  const unsigned long p = hyper_power(n, d);
  const long e = static_cast<long>(p) + (n % 2 ? -1 : 1);
  const auto expect = R.from_z(pow_z(d, static_cast<unsigned long>(e))) * poly_pow(U, static_cast<unsigned>(p)) *
                      poly_pow(disc_hyper(h), static_cast<unsigned>(d - 1));
  return disc_hyper(g) == expect;
}

// X_1^d + U X_1 X_2^(d-1) + X_2 X_3^(d-1) + ... + X_(n-1) X_n^(d-1) over Z[U]; Disc mod d is one monomial.
inline bool chain_example_holds(int n, int d) {
  const PolyRing<ZZ> R(ZZ{}, {"U"});
  auto mono = [&](std::vector<int> e, const Poly<ZZ>& c) { return Poly<PolyRing<ZZ>>::monomial(R, n, std::move(e), c); };
  std::vector<int> e(n, 0);
  e[0] = d;
  auto g = mono(e, R.one());
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> t(n, 0);
    t[i] = 1;
    t[i + 1] = d - 1;
    g += mono(t, i == 0 ? R.var(0) : R.one());
  }
  const long ex = static_cast<long>(hyper_power(n, d)) + (n % 2 ? -1 : 1);
  const Zmod Zd(static_cast<std::uint64_t>(d));
  const auto got = reduce_poly_mod(disc_hyper(g), static_cast<std::uint64_t>(d));
  return got == Poly<Zmod>::monomial(Zd, 1, {static_cast<int>(ex)}, 1u);
}

namespace suites {

// ------------------------------------------------------------------ euler

template <class K>
Outcome euler_instance(const K& k, Rng& rng) {
  const int n = uniform_int(rng, 1, 4), d = uniform_int(rng, 1, 4);
  const auto f = random_form(k, n, d, rng, 4);
  Poly<K> lhs(k, n);
  for (int i = 0; i < n; ++i) lhs += Poly<K>::variable(k, n, i) * partial_derivative(f, i);
  return Outcome::check(lhs == f.scale(k.from_int(d)), [&] { return witness_of<K>({f}); });
}

inline void euler(SuiteRunner& r) {
  r.property("euler-integers", "Euler identity sum X_i d_i f = d f", r.trials,
             [&](int) { return euler_instance(ZZ{}, r.rng); });
  r.property("euler-rationals", "Euler identity", r.trials, [&](int) { return euler_instance(QQ{}, r.rng); });
  r.property("euler-mod7", "Euler identity", r.trials, [&](int) { return euler_instance(Zmod(7), r.rng); });
  r.property("euler-mod6", "Euler identity", r.trials, [&](int) { return euler_instance(Zmod(6), r.rng); });
  r.property("euler-polyext", "Euler identity", r.trials,
             [&](int) { return euler_instance(PolyRing<ZZ>(ZZ{}, {"a", "b"}), r.rng); });
}

// ------------------------------------------------------- Dedekind-Mertens

inline mpz_class poly_content(const Poly<ZZ>& f) { return content(ZZ{}, f.c); }

inline Outcome dedekind_mertens_instance(Rng& rng) {
  const int n = uniform_int(rng, 1, 3);
  Poly<ZZ> f, m;
  do f = random_poly(ZZ{}, n, 3, 5, rng); while (f.is_zero());
  do m = random_poly(ZZ{}, n, 3, 5, rng); while (m.is_zero());
  const auto l = static_cast<unsigned long>(m.size());
  mpz_class cf = poly_content(f), cm = poly_content(m), cfm = poly_content(f * m);
  mpz_class pl, pl1;
  mpz_pow_ui(pl.get_mpz_t(), cf.get_mpz_t(), l);
  mpz_pow_ui(pl1.get_mpz_t(), cf.get_mpz_t(), l - 1);
  return Outcome::check(pl * cm == pl1 * cfm, [&] { return json{{"f", terms_to_json(f)}, {"m", terms_to_json(m)}}; });
}

inline void dedekind_mertens(SuiteRunner& r) {
  r.property("content-identity", "c(f)^l(m) c(m) = c(f)^(l(m)-1) c(fm) over the integers", r.trials * 10,
             [&](int) { return dedekind_mertens_instance(r.rng); });
}

// --------------------------------------------------------------- res-core

inline std::vector<Poly<ZZ>> pure_powers(int n, const std::vector<int>& d) {
  std::vector<Poly<ZZ>> fs;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = d[i];
    fs.push_back(Poly<ZZ>::monomial(ZZ{}, n, e, 1));
  }
  return fs;
}

// Calls f(d) for every degree vector in [1, maxd]^n.
inline void for_each_signature(int n, int maxd, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> d(n, 1);
  for (;;) {
    f(d);
    int i = 0;
    while (i < n && d[i] == maxd) d[i++] = 1;
    if (i == n) return;
    ++d[i];
  }
}

inline Outcome normalization(int max_n, int max_d) {
  Outcome out;
  for (int n = 1; n <= max_n && out.kind == Outcome::Kind::pass; ++n)
    for_each_signature(n, max_d, [&](const std::vector<int>& d) {
      if (out.kind != Outcome::Kind::pass) return;
      if (resultant(pure_powers(n, d), d) != 1) out = Outcome::failed(json{{"n", n}, {"degrees", d}});
    });
  return out;
}

inline void res_core(SuiteRunner& r) {
  r.once("normalization", "Res(X_1^d_1, ..., X_n^d_n) = 1", [] { return normalization(4, 3); });

  r.property("linear-forms", "resultant of n linear forms is the determinant", r.trials, [&](int) {
    const int n = uniform_int(r.rng, 2, 4);
    const auto A = random_int_matrix(r.rng, n, n, 3);
    std::vector<Poly<ZZ>> fs;
    for (const auto& row : A) {
      LinearForm<ZZ> l;
      for (long x : row) l.push_back(x);
      fs.push_back(linear_form(ZZ{}, l));
    }
    return Outcome::check(resultant(fs, std::vector<int>(n, 1)) == det_expand(to_matrix(ZZ{}, A)),
                          [&] { return witness_of(fs); });
  });

  r.property("multiplicativity", "Res(f'f'', f_2, ...) = Res(f', ...) Res(f'', ...)", r.trials, [&](int t) {
    const int n = 2 + t % 2;
    const int a = uniform_int(r.rng, 1, n == 2 ? 2 : 1), b = uniform_int(r.rng, 1, n == 2 ? 2 : 1);
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(uniform_int(r.rng, 1, 2));
    const auto f1 = random_nonzero_form(ZZ{}, n, a, r.rng, 3), f2 = random_nonzero_form(ZZ{}, n, b, r.rng, 3);
    std::vector<Poly<ZZ>> others;
    for (int x : rest) others.push_back(random_form(ZZ{}, n, x, r.rng, 3));
    auto sys = [&](const Poly<ZZ>& head) {
      std::vector<Poly<ZZ>> s{head};
      s.insert(s.end(), others.begin(), others.end());
      return s;
    };
    auto deg = [&](int h) {
      std::vector<int> d{h};
      d.insert(d.end(), rest.begin(), rest.end());
      return d;
    };
    const auto lhs = resultant(sys(f1 * f2), deg(a + b));
    const mpz_class rhs = resultant(sys(f1), deg(a)) * resultant(sys(f2), deg(b));
    return Outcome::check(lhs == rhs, [&] { return witness_of(sys(f1 * f2)); });
  });

  r.property("slot-homogeneity", "Res(..., t f_i, ...) = t^(prod_{j != i} d_j) Res", r.trials, [&](int) {
    const int n = uniform_int(r.rng, 2, 3);
    std::vector<int> d;
    std::vector<Poly<ZZ>> fs;
    for (int i = 0; i < n; ++i) {
      d.push_back(uniform_int(r.rng, 1, n == 2 ? 3 : 2));
      fs.push_back(random_form(ZZ{}, n, d.back(), r.rng, 3));
    }
    const int i = uniform_int(r.rng, 0, n - 1);
    const long t = uniform_int(r.rng, 2, 3) * (uniform_int(r.rng, 0, 1) ? 1 : -1);
    unsigned long e = 1;
    for (int j = 0; j < n; ++j)
      if (j != i) e *= d[j];
    auto scaled = fs;
    scaled[i] = scaled[i].scale(mpz_class(t));
    return Outcome::check(resultant(scaled, d) == ring_pow(ZZ{}, mpz_class(t), e) * resultant(fs, d),
                          [&] { return witness_of(fs); });
  });

  r.property("specialization-stability", "reduce then Res = Res then reduce (Z -> Z/p)", r.trials, [&](int t) {
    static const std::uint64_t primes[] = {2, 3, 5, 101};
    const std::uint64_t p = primes[t % 4];
    const int n = uniform_int(r.rng, 2, 3);
    std::vector<int> d;
    std::vector<Poly<ZZ>> fs;
    std::vector<Poly<Zmod>> red;
    for (int i = 0; i < n; ++i) {
      d.push_back(uniform_int(r.rng, 1, n == 2 ? 3 : 2));
      fs.push_back(random_form(ZZ{}, n, d.back(), r.rng, 5));
      red.push_back(reduce_poly_mod(fs.back(), p));
    }
    return Outcome::check(resultant(red, d) == Zmod(p).from_z(resultant(fs, d)),
                          [&] { return json{{"modulus", p}, {"system", witness_of(fs)}}; });
  });

  r.property("path-agreement", "Sylvester, Macaulay ratio and perturbed Macaulay agree", r.trials, [&](int t) {
    const int n = 2 + t % 2;
    std::vector<int> d;
    std::vector<Poly<ZZ>> fs;
    for (int i = 0; i < n; ++i) {
      d.push_back(uniform_int(r.rng, 1, n == 2 ? 3 : 2));
      fs.push_back(random_form(ZZ{}, n, d.back(), r.rng, 4));
    }
    const auto direct = resultant(fs, d);
    const auto mac = macaulay_resultant(fs, d);
    const auto gcp = gcp_resultant(fs, d);
    return Outcome::check(direct == mac && mac == gcp, [&] { return witness_of(fs); });
  });

  r.once("degenerate-denominator", "perturbed Macaulay on a system with a singular reduced submatrix", [] {
    // (X1^2, X1 X2, X2^2 - X1 X3) share the root (0:0:1); the answer is
    // cross-checked against the Macaulay ratio after a unimodular change of
    // coordinates, where Res(f o phi) = det(phi)^(prod d) Res(f).
    const ZZ Z;
    auto X = [&](int i) { return Poly<ZZ>::variable(Z, 3, i); };
    std::vector<Poly<ZZ>> fs{X(0) * X(0), X(0) * X(1), X(1) * X(1) - X(0) * X(2)};
    const std::vector<int> d{2, 2, 2};
    const auto gcp = gcp_resultant(fs, d);
    const auto phi = to_matrix(Z, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto moved = macaulay_resultant(compose_all(fs, phi), d);
    const mpz_class det = det_expand(phi);
    return Outcome::check(gcp == 0 && moved == ring_pow(Z, det, 8) * gcp, [&] { return witness_of(fs); });
  });

  r.once("inertia-forms", "Kronecker substitution recognizes the resultant and rejects units", [] {
    const auto g = generic_system<ZZ>(2, {1, 1});
    const auto res = resultant(g.forms, g.degrees);
    const auto one = Poly<ZZ>::constant(ZZ{}, g.coeffs.nv, 1);
    const auto coeff = g.coeffs.var(g.var(0, {1, 0}));
    const bool ok = is_inertia_form_generic(res, g) && !is_inertia_form_generic(one, g) &&
                    !is_inertia_form_generic(coeff, g);
    return Outcome::check(ok, [] { return json{{"signature", "(2;1,1)"}}; });
  });
}

// ------------------------------------------------------ disc-points-props

inline std::vector<int> random_points_signature(Rng& rng, int t) {
  if (t % 3 == 2) return {uniform_int(rng, 1, 2), 2};
  return {uniform_int(rng, 2, 4)};
}

inline std::vector<Poly<ZZ>> random_system(Rng& rng, int n, const std::vector<int>& d, int bound = 4) {
  std::vector<Poly<ZZ>> fs;
  for (int x : d) fs.push_back(random_form(ZZ{}, n, x, rng, bound));
  return fs;
}

// Two generic ternary quadrics: J_i = X_i Delta mod 2 and Disc = Res(f, Delta) mod 2.
inline Outcome reduction_mod_two_example() {
  // Delta = X1 |a1 a2; b1 b2| + X2 |a1 a4; b1 b4| + X3 |a2 a4; b2 b4| with
  // coefficients a0..a5 on X1^2, X1X2, X1X3, X2^2, X2X3, X3^2.
  std::vector<std::string> names;
  for (char c : {'a', 'b'})
    for (int i = 0; i < 6; ++i) names.push_back(std::string(1, c) + std::to_string(i));
  const PolyRing<ZZ> A(ZZ{}, names);
  const std::vector<std::vector<int>> mons{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<Poly<PolyRing<ZZ>>> fs;
  for (int s = 0; s < 2; ++s) {
    Poly<PolyRing<ZZ>> f(A, 3);
    for (int i = 0; i < 6; ++i) f += Poly<PolyRing<ZZ>>::monomial(A, 3, mons[i], A.var(6 * s + i));
    fs.push_back(f);
  }
  auto a = [&](int i) { return A.var(i); };
  auto b = [&](int i) { return A.var(6 + i); };
  auto X = [&](int i) { return Poly<PolyRing<ZZ>>::variable(A, 3, i); };
  const auto printed = X(0).scale(a(1) * b(2) - a(2) * b(1)) + X(1).scale(a(1) * b(4) - a(4) * b(1)) +
                       X(2).scale(a(2) * b(4) - a(4) * b(2));
  const auto delta = delta_mod_delta(fs);
  if (delta != reduce_poly_mod(printed, 2)) return Outcome::failed(witness_of(fs), "Delta differs");
  std::vector<Poly<PolyRing<ZZ>>> sys{fs[0], fs[1], printed};
  const auto lhs = reduce_poly_mod(disc_points(fs, {2, 2}), 2);
  const auto rhs = reduce_poly_mod(resultant(sys, {2, 2, 1}), 2);
  return Outcome::check(lhs == rhs, [&] { return witness_of(fs); }, "Disc differs from Res(f, Delta) mod 2");
}

inline void disc_points_props(SuiteRunner& r) {
  r.property("index-independence", "Res(f, J_i) / Res(f, X_i) is the same for every admissible i", r.trials,
             [&](int t) {
               const auto d = random_points_signature(r.rng, t);
               const int n = static_cast<int>(d.size()) + 1;
               const auto fs = random_system(r.rng, n, d);
               std::optional<mpz_class> first;
               for (int i = 0; i < n; ++i) {
                 auto q = disc_points_via_index(fs, d, i);
                 if (!q) continue;
                 if (first && *first != *q) return Outcome::failed(witness_of(fs), "index " + std::to_string(i + 1));
                 first = q;
               }
               return first ? Outcome::ok() : Outcome::skipped("no admissible index");
             });

  r.property("generic-cache", "fast path equals the specialized universal discriminant", r.trials, [&](int t) {
    static const std::vector<std::vector<int>> sigs{{2}, {3}, {2, 2}};
    static const std::uint64_t primes[] = {2, 3, 5, 101};
    const auto& d = sigs[t % sigs.size()];
    const int n = static_cast<int>(d.size()) + 1;
    const auto e = generic_disc(DiscKind::points, n, d);
    const auto fs = random_system(r.rng, n, d, 6);
    if (disc_points(fs, d) != specialize(*e, fs)) return Outcome::failed(witness_of(fs), "over the integers");
    const auto p = primes[(t / sigs.size()) % 4];
    std::vector<Poly<Zmod>> red;
    for (const auto& f : fs) red.push_back(reduce_poly_mod(f, p));
    return Outcome::check(disc_points(red, d) == specialize(*e, red), [&] { return witness_of(red); });
  });

  r.property("jacobian-substitution", "Res(f, F(J_1..J_n)) = Disc(f)^deg F Res(f, F) over Z/101", r.trials,
             [&](int t) {
               const Zmod k(101);
               const bool three = t % 3 == 2;
               const std::vector<int> d = three ? std::vector<int>{2, 2} : std::vector<int>{uniform_int(r.rng, 2, 3)};
               const int n = static_cast<int>(d.size()) + 1;
               const int dF = three ? 1 : uniform_int(r.rng, 1, 2);
               std::vector<Poly<Zmod>> fs;
               for (int x : d) fs.push_back(random_form(k, n, x, r.rng));
               const auto F = random_nonzero_form(k, n, dF, r.rng);
               const auto FJ = substitute(F, jac_minors(fs));
               int dJ = 0;
               for (int x : d) dJ += x - 1;
               auto sys = fs;
               auto deg = d;
               sys.push_back(FJ);
               deg.push_back(dF * dJ);
               const auto lhs = resultant(sys, deg);
               sys.back() = F;
               deg.back() = dF;
               const auto rhs = k.mul(ring_pow(k, disc_points(fs, d), dF), resultant(sys, deg));
               return Outcome::check(lhs == rhs, [&] { return witness_of(fs); });
             });

  r.property("permutation-invariance", "Disc(f_2, f_1) = Disc(f_1, f_2)", r.trials, [&](int) {
    const std::vector<int> d{uniform_int(r.rng, 1, 2), 2};
    const auto fs = random_system(r.rng, 3, d);
    return Outcome::check(disc_points(fs, d) == disc_points<ZZ>({fs[1], fs[0]}, {d[1], d[0]}),
                          [&] { return witness_of(fs); });
  });

  r.property("elementary-invariance", "Disc(f_1, f_2 + h f_1) = Disc(f_1, f_2)", r.trials, [&](int) {
    const std::vector<int> d{uniform_int(r.rng, 1, 2), 2};
    auto fs = random_system(r.rng, 3, d);
    const auto h = random_form(ZZ{}, 3, d[1] - d[0], r.rng, 3);
    const auto moved = std::vector<Poly<ZZ>>{fs[0], fs[1] + h * fs[0]};
    return Outcome::check(disc_points(fs, d) == disc_points(moved, d), [&] { return witness_of(fs); });
  });

  r.property("multiplicativity", "Disc(f'f'', ...) = (-1)^s Disc(f', ...) Disc(f'', ...) Res(f', f'', ...)^2",
             r.trials, [&](int t) {
               const bool three = t % 2;
               const int n = three ? 3 : 2;
               const int a = uniform_int(r.rng, 1, three ? 1 : 2), b = uniform_int(r.rng, 1, three ? 1 : 2);
               const auto f1 = random_nonzero_form(ZZ{}, n, a, r.rng, 3);
               const auto f2 = random_nonzero_form(ZZ{}, n, b, r.rng, 3);
               std::vector<Poly<ZZ>> rest;
               std::vector<int> drest;
               if (three) {
                 drest.push_back(2);
                 rest.push_back(random_form(ZZ{}, n, 2, r.rng, 3));
               }
               auto with = [&](std::vector<Poly<ZZ>> head) {
                 head.insert(head.end(), rest.begin(), rest.end());
                 return head;
               };
               auto degs = [&](std::vector<int> head) {
                 head.insert(head.end(), drest.begin(), drest.end());
                 return head;
               };
               long s = a * b;
               for (int x : drest) s *= x;
               const auto lhs = disc_points(with({f1 * f2}), degs({a + b}));
               const auto res = resultant(with({f1, f2}), degs({a, b}));
               mpz_class rhs = disc_points(with({f1}), degs({a})) * disc_points(with({f2}), degs({b})) * res * res;
               if (s % 2) rhs = -rhs;
               return Outcome::check(lhs == rhs, [&] { return witness_of(with({f1, f2})); });
             });

  r.property("linear-forms-product", "split inputs: Disc equals the signed product of squared determinants",
             r.trials, [&](int t) {
               const bool three = t % 4 == 3;
               const std::vector<int> d = three ? std::vector<int>{2, 2} : std::vector<int>{2 + t % 3};
               const int n = static_cast<int>(d.size()) + 1;
               std::vector<std::vector<LinearForm<ZZ>>> lines;
               std::vector<Poly<ZZ>> fs;
               for (int x : d) {
                 lines.emplace_back();
                 for (int j = 0; j < x; ++j) {
                   LinearForm<ZZ> l;
                   for (int v = 0; v < n; ++v) l.push_back(uniform_int(r.rng, -3, 3));
                   lines.back().push_back(l);
                 }
                 fs.push_back(product_of_lines(ZZ{}, lines.back()));
               }
               if (std::any_of(fs.begin(), fs.end(), [](const auto& f) { return f.is_zero(); }))
                 return Outcome::skipped("a line was zero");
               return Outcome::check(disc_points(fs, d) == linear_forms_disc(ZZ{}, lines),
                                     [&] { return witness_of(fs); });
             });

  r.property("linear-change", "Disc(f o phi) = det(phi)^(d_1..d_{n-1} sum(d_i-1)) Disc(f)", r.trials, [&](int t) {
    const auto d = random_points_signature(r.rng, t);
    const int n = static_cast<int>(d.size()) + 1;
    const auto fs = random_system(r.rng, n, d, 3);
    const auto phi = to_matrix(ZZ{}, random_int_matrix(r.rng, n, n, 2));
    const auto lhs = disc_points(compose_all(fs, phi), d);
    const mpz_class rhs = ring_pow(ZZ{}, det_expand(phi), disc_points_weight(d)) * disc_points(fs, d);
    return Outcome::check(lhs == rhs, [&] { return witness_of(fs); });
  });

  r.property("covariance", "Disc(phi . f) = prod_d det(phi_d)^e_d Disc(f) for block-adapted phi", r.trials,
             [&](int t) {
               // Either one block of equal degrees, or two 1x1 blocks.
               const bool same = t % 2 == 0;
               const std::vector<int> d = same ? std::vector<int>{2, 2} : std::vector<int>{1, 2};
               const auto fs = random_system(r.rng, 3, d, 3);
               const auto u = random_int_matrix(r.rng, 2, 2, 3);
               long sum = 0, prod = 1;
               for (int x : d) sum += x - 1, prod *= x;
               std::vector<Poly<ZZ>> moved;
               mpz_class factor = 1;
               if (same) {
                 for (int i = 0; i < 2; ++i) moved.push_back(fs[0].scale(u[i][0]) + fs[1].scale(u[i][1]));
                 const mpz_class det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
                 factor = ring_pow(ZZ{}, det, prod * ((2 - 1) + sum) / 2);
               } else {
                 for (int i = 0; i < 2; ++i) moved.push_back(fs[i].scale(u[i][i]));
                 for (int i = 0; i < 2; ++i)
                   factor *= ring_pow(ZZ{}, mpz_class(u[i][i]), prod * ((d[i] - 1) + sum) / d[i]);
               }
               return Outcome::check(disc_points(moved, d) == factor * disc_points(fs, d),
                                     [&] { return witness_of(fs); });
             });

  r.property("variable-reduction", "Disc(f_1, ..., f_{n-2}, X_n) = Disc(f_1|X_n=0, ..., f_{n-2}|X_n=0)",
             r.trials, [&](int t) {
               const int n = 3 + t % 2;
               std::vector<int> d;
               for (int i = 0; i + 2 < n; ++i) d.push_back(uniform_int(r.rng, 1, n == 3 ? 3 : 2));
               auto fs = random_system(r.rng, n, d, 3);
               std::vector<Poly<ZZ>> bars;
               for (const auto& f : fs) bars.push_back(bar(f));
               auto full = fs;
               full.push_back(Poly<ZZ>::variable(ZZ{}, n, n - 1));
               auto dfull = d;
               dfull.push_back(1);
               return Outcome::check(disc_points(full, dfull) == disc_points(bars, d), [&] { return witness_of(full); });
             });

  r.once("reduction-mod-2", "two ternary quadrics: J_i = X_i Delta mod 2 and Disc = Res(f, Delta) mod 2",
         reduction_mod_two_example);

  r.property("base-change-factor", "K(f, g) exists and has the stated degrees in f and g", r.trials, [&](int) {
    const int m = uniform_int(r.rng, 2, 3), e = 2;
    const auto f = random_nonzero_form(ZZ{}, 2, m, r.rng, 3);
    const std::vector<Poly<ZZ>> gs{random_nonzero_form(ZZ{}, 2, e, r.rng, 3), random_nonzero_form(ZZ{}, 2, e, r.rng, 3)};
    if (disc_points<ZZ>({f}) == 0 || resultant(gs) == 0) return Outcome::skipped("degenerate draw");
    const auto K = base_change_K<ZZ>({f}, gs);
    // degree in the g coefficients n(n-1)(e-1)e^{n-2} d_1 and in f n(e-1)e^{n-2}
    const long tdeg = 2L * (e - 1) * m, fdeg = 2L * (e - 1);
    const mpz_class s = 2;
    const auto Kg = base_change_K<ZZ>({f}, {gs[0].scale(s), gs[1].scale(s)});
    const auto Kf = base_change_K<ZZ>({f.scale(s)}, gs);
    const bool ok = Kg == ring_pow(ZZ{}, s, tdeg) * K && Kf == ring_pow(ZZ{}, s, fdeg) * K;
    return Outcome::check(ok, [&] { return json{{"f", witness_of<ZZ>({f})}, {"g", witness_of(gs)}}; });
  });

  r.once("degree-formula", "universal Disc has partial degree (d_1..d_{n-1}/d_i)((d_i-1)+sum(d_j-1)) in f_i", [] {
    for (const auto& d : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
      const int n = static_cast<int>(d.size()) + 1;
      const auto e = generic_disc(DiscKind::points, n, d);
      long total = 0;
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> w(e->disc.nv, 0);
        for (const auto& [alpha, idx] : e->sys.var_of[i]) w[idx] = 1;
        const auto v = weight_valuation(e->disc, w);
        const long expect = disc_points_degree(d, i);
        if (!v || *v != expect || isobaric_part(e->disc, w, expect) != e->disc || expect % 2)
          return Outcome::failed(json{{"degrees", d}, {"slot", i + 1}, {"expected", expect}});
        total += expect;
      }
      if (total != disc_points_total_degree(d)) return Outcome::failed(json{{"degrees", d}, {"total", total}});
    }
    return Outcome::ok();
  });

  r.property("jacobian-expansion", "J(f_1, ..., f_{n-1}, F) = sum_i dF/dX_i J_i", r.trials, [&](int t) {
    const int n = 2 + t % 3;
    std::vector<int> d;
    for (int i = 0; i + 1 < n; ++i) d.push_back(uniform_int(r.rng, 1, 3));
    const auto fs = random_system(r.rng, n, d, 3);
    const auto F = random_form(ZZ{}, n, uniform_int(r.rng, 1, 3), r.rng, 3);
    Poly<ZZ> sum(ZZ{}, n);
    for (int i = 0; i < n; ++i) sum += partial_derivative(F, i) * jac_minor(fs, i);
    return Outcome::check(jac_full(fs, F) == sum, [&] { return witness_of(fs); });
  });

  r.property("euler-resultants", "Res(f, X_i) Res(f, J(f, F)) = d^(d_1..d_{n-1}) Res(f, F) Res(f, J_i) over Z/101",
             r.trials, [&](int t) {
               const Zmod k(101);
               const int n = 2 + t % 2;
               std::vector<int> d;
               for (int i = 0; i + 1 < n; ++i) d.push_back(uniform_int(r.rng, 1, n == 2 ? 3 : 2));
               std::vector<Poly<Zmod>> fs;
               for (int x : d) fs.push_back(random_form(k, n, x, r.rng));
               const int dF = uniform_int(r.rng, 1, 2);
               const auto F = random_form(k, n, dF, r.rng);
               const int i = uniform_int(r.rng, 0, n - 1);
               int dJ = 0;
               unsigned long N = 1;
               for (int x : d) dJ += x - 1, N *= static_cast<unsigned long>(x);
               auto res_with = [&](const Poly<Zmod>& last, int dl) {
                 auto sys = fs;
                 auto deg = d;
                 sys.push_back(last);
                 deg.push_back(dl);
                 return resultant(sys, deg);
               };
               const auto lhs = k.mul(res_with(Poly<Zmod>::variable(k, n, i), 1), res_with(jac_full(fs, F), dF - 1 + dJ));
               const auto rhs = k.mul(k.mul(ring_pow(k, k.from_int(dF), N), res_with(F, dF)), res_with(jac_minor(fs, i), dJ));
               return Outcome::check(lhs == rhs, [&] { return witness_of(fs); });
             });
}

// ------------------------------------------------------- disc-hyper-props

inline std::pair<int, int> random_hyper_signature(Rng& rng, int t) {
  switch (t % 4) {
    case 0: return {2, uniform_int(rng, 2, 4)};
    case 1: return {3, 2};
    case 2: return {3, 3};
    default: return {uniform_int(rng, 2, 4), 2};
  }
}

inline void disc_hyper_props(SuiteRunner& r) {
  r.property("scaling", "Disc(t f) = t^(n (d-1)^(n-1)) Disc(f)", r.trials, [&](int t) {
    const auto [n, d] = random_hyper_signature(r.rng, t);
    const auto f = random_nonzero_form(ZZ{}, n, d, r.rng, 3);
    const mpz_class s = uniform_int(r.rng, 2, 3);
    return Outcome::check(disc_hyper(f.scale(s)) == ring_pow(ZZ{}, s, n * hyper_power(n, d)) * disc_hyper(f),
                          [&] { return witness_of<ZZ>({f}); });
  });

  r.property("linear-change", "Disc(f o phi) = det(phi)^(d (d-1)^(n-1)) Disc(f)", r.trials, [&](int t) {
    const auto [n, d] = random_hyper_signature(r.rng, t);
    const auto f = random_nonzero_form(ZZ{}, n, d, r.rng, 3);
    const auto phi = to_matrix(ZZ{}, random_int_matrix(r.rng, n, n, 2));
    const auto g = compose_linear(f, phi);
    const mpz_class rhs = ring_pow(ZZ{}, det_expand(phi), d * hyper_power(n, d)) * disc_hyper(f);
    if (g.is_zero()) return Outcome::check(rhs == 0, [&] { return witness_of<ZZ>({f}); });
    return Outcome::check(disc_hyper(g) == rhs, [&] { return witness_of<ZZ>({f}); });
  });

  r.property("gradient-resultant-split", "d^((d-1)^(n-1)) Res(d_1 f..d_{n-1} f, f) = Res(grad f) Res(grad fbar)",
             r.trials, [&](int t) {
               const auto [n, d] = random_hyper_signature(r.rng, t);
               const auto f = random_nonzero_form(ZZ{}, n, d, r.rng, 3);
               const auto fb = bar(f);
               const mpz_class lhs = pow_z(d, hyper_power(n, d)) * disc_times_bar(f);
               const mpz_class rhs = resultant(gradient(f), std::vector<int>(n, d - 1)) *
                                resultant(gradient(fb), std::vector<int>(n - 1, d - 1));
               return Outcome::check(lhs == rhs, [&] { return witness_of<ZZ>({f}); });
             });

  r.property("disc-times-bar", "Disc(f) Disc(fbar) = Res(d_1 f, ..., d_{n-1} f, f)", r.trials, [&](int t) {
    const auto [n, d] = random_hyper_signature(r.rng, t);
    const auto f = random_nonzero_form(ZZ{}, n, d, r.rng, 3);
    const auto fb = bar(f);
    const auto rhs = disc_times_bar(f);
    if (fb.is_zero()) return Outcome::check(rhs == 0, [&] { return witness_of<ZZ>({f}); });
    return Outcome::check(disc_hyper(f) * disc_hyper(fb) == rhs, [&] { return witness_of<ZZ>({f}); });
  });

  r.property("bordered-identity", "Disc(f) Disc(f(X phi^t)) = Res(f, grad f o phi)", r.trials, [&](int t) {
    const int n = 2 + t % 2;
    const int d = n == 2 ? uniform_int(r.rng, 2, 3) : 2;
    const auto f = random_nonzero_form(ZZ{}, n, d, r.rng, 3);
    const auto c = random_int_matrix(r.rng, n, n - 1, 2);
    std::vector<Poly<ZZ>> images;
    for (int i = 0; i < n; ++i) {
      LinearForm<ZZ> l;
      for (int j = 0; j < n - 1; ++j) l.push_back(c[i][j]);
      images.push_back(linear_form(ZZ{}, l));
    }
    const auto restricted = substitute(f, images);
    const auto grad = gradient(f);
    std::vector<Poly<ZZ>> sys{f};
    for (int j = 0; j < n - 1; ++j) {
      Poly<ZZ> g(ZZ{}, n);
      for (int i = 0; i < n; ++i) g += grad[i].scale(mpz_class(c[i][j]));
      sys.push_back(g);
    }
    std::vector<int> deg(n, d - 1);
    deg[0] = d;
    const auto rhs = resultant(sys, deg);
    const mpz_class lhs = restricted.is_zero() ? mpz_class(0) : mpz_class(disc_hyper(f) * disc_hyper(restricted));
    return Outcome::check(lhs == rhs, [&] { return witness_of<ZZ>({f}); });
  });

  r.property("quadric-determinant", "quadric discriminant from the symmetric matrix equals the general one",
             r.trials, [&](int) {
               const int n = uniform_int(r.rng, 2, 4);
               const auto f = random_nonzero_form(ZZ{}, n, 2, r.rng, 4);
               return Outcome::check(quadric_disc(f) == disc_hyper(f), [&] { return witness_of<ZZ>({f}); });
             });

  r.property("generic-cache", "fast path equals the specialized universal discriminant", r.trials, [&](int t) {
    static const std::vector<std::pair<int, int>> sigs{{2, 2}, {2, 3}, {3, 2}};
    static const std::uint64_t primes[] = {2, 3, 5, 101};
    const auto [n, d] = sigs[t % sigs.size()];
    const auto e = generic_disc(DiscKind::hyper, n, {d});
    const auto f = random_form(ZZ{}, n, d, r.rng, 6);
    if (f.is_zero()) return Outcome::skipped("zero form");
    if (disc_hyper(f) != specialize<ZZ>(*e, {f})) return Outcome::failed(witness_of<ZZ>({f}), "over the integers");
    const auto red = reduce_poly_mod(f, primes[(t / sigs.size()) % 4]);
    if (red.is_zero()) return Outcome::skipped("zero after reduction");
    return Outcome::check(disc_hyper(red) == specialize<Zmod>(*e, {red}), [&] { return witness_of<Zmod>({red}); });
  });

  r.property("diagonal-form", "Disc(sum A_i X_i^d) = d^(n(d-1)^(n-1) - a(n,d)) (A_1..A_n)^((d-1)^(n-1))",
             r.trials, [&](int t) {
               const auto [n, d] = random_hyper_signature(r.rng, t);
               Poly<ZZ> f(ZZ{}, n);
               mpz_class prod = 1;
               for (int i = 0; i < n; ++i) {
                 const mpz_class a = uniform_int(r.rng, 1, 4) * (uniform_int(r.rng, 0, 1) ? 1 : -1);
                 std::vector<int> e(n, 0);
                 e[i] = d;
                 f += Poly<ZZ>::monomial(ZZ{}, n, e, a);
                 prod *= a;
               }
               const auto pw = hyper_power(n, d);
               const mpz_class expect =
                   pow_z(d, static_cast<unsigned long>(static_cast<long>(n * pw) - a_exponent(n, d))) *
                   ring_pow(ZZ{}, prod, pw);
               return Outcome::check(disc_hyper(f) == expect, [&] { return witness_of<ZZ>({f}); });
             });

  r.once("primitive", "the universal discriminant has content 1", [] {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
      if (content(ZZ{}, generic_disc(DiscKind::hyper, n, {d})->disc.c) != 1)
        return Outcome::failed(json{{"n", n}, {"d", d}});
    return Outcome::ok();
  });

  r.property("base-change-factor", "Disc(f(g)) / (Disc(f)^(d^(n-1)) Res(g)^(m (m-1)^(n-1))) is exact", r.trials,
             [&](int t) {
               const Zmod k(101);
               const auto f = random_nonzero_form(k, 2, 2, r.rng);
               if (t == 0) {
                 const std::vector<Poly<Zmod>> id{Poly<Zmod>::variable(k, 2, 0), Poly<Zmod>::variable(k, 2, 1)};
                 if (disc_hyper(f) == 0) return Outcome::skipped("degenerate draw");
                 return Outcome::check(disc_hyper_basechange(f, id) == 1u, [&] { return witness_of<Zmod>({f}); },
                                       "identity substitution gives K != 1");
               }
               const std::vector<Poly<Zmod>> gs{random_nonzero_form(k, 2, 2, r.rng), random_nonzero_form(k, 2, 2, r.rng)};
               if (disc_hyper(f) == 0 || resultant(gs) == 0) return Outcome::skipped("degenerate draw");
               (void)disc_hyper_basechange(f, gs);
               return Outcome::ok();
             });

  r.once("ux-plus-h", "Disc(U X_n^d + h) = d^((d-1)^(n-1) + (-1)^n) U^((d-1)^(n-1)) Disc(h)^(d-1), h generic", [] {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
      if (!ux_plus_h_holds(n, d)) return Outcome::failed(json{{"n", n}, {"d", d}});
    }
    return Outcome::ok();
  });

  r.once("mod-d-chain", "Disc(X_1^d + U X_1 X_2^(d-1) + ... + X_(n-1) X_n^(d-1)) = U^((d-1)^(n-1) + (-1)^n) mod d", [] {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}}) {
      if (!chain_example_holds(n, d)) return Outcome::failed(json{{"n", n}, {"d", d}});
    }
    return Outcome::ok();
  });

  r.once("total-degree", "universal Disc is homogeneous of degree n (d-1)^(n-1) in the coefficients", [] {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      const auto& disc = generic_disc(DiscKind::hyper, n, {d})->disc;
      const std::vector<int> w(disc.nv, 1);
      const auto v = weight_valuation(disc, w);
      const long expect = n * static_cast<long>(hyper_power(n, d));
      if (!v || *v != expect || isobaric_part(disc, w, expect) != disc)
        return Outcome::failed(json{{"n", n}, {"d", d}, {"expected", expect}});
    }
    return Outcome::ok();
  });
}

// ---------------------------------------------------------------- mertens

inline std::vector<Poly<PolyRing<ZZ>>> constant_coefficient_system(Rng& rng, int n, const std::vector<int>& d) {
  const PolyRing<ZZ> R(ZZ{}, {});
  std::vector<Poly<PolyRing<ZZ>>> fs;
  for (int x : d) fs.push_back(random_nonzero_form(R, n, x, rng, 5));
  return fs;
}

inline void mertens(SuiteRunner& r) {
  static const std::vector<std::vector<int>> sigs{{2, 1}, {2, 2}, {1, 1, 2}};
  for (const auto& d : sigs) {
    std::string tag;
    for (int x : d) tag += std::to_string(x);
    const int n = static_cast<int>(d.size());
    r.once("generic-" + tag, "both Mertens formulas for generic forms", [&] {
      const auto g = generic_system<ZZ>(n, d);
      const bool ok = mertens_first(g.forms).holds() && mertens_second(g.forms).holds();
      return Outcome::check(ok, [&] { return json{{"degrees", d}}; });
    });
    r.property("random-" + tag, "both Mertens formulas on random integer forms", r.trials, [&](int) {
      const auto fs = constant_coefficient_system(r.rng, n, d);
      const bool ok = mertens_first(fs).holds() && mertens_second(fs).holds();
      return Outcome::check(ok, [&] { return witness_of(fs); });
    });
  }
  r.property("lemma-a", "Disc(rho_bar theta) = (-1)^(N(N-1)/2) prod (cross determinants)^2 on split input",
             r.trials, [&](int t) {
               const int n = 2 + t % 2;
               const std::vector<int> d = n == 2 ? std::vector<int>{uniform_int(r.rng, 2, 3)} : std::vector<int>{1, 2};
               std::vector<std::vector<LinearForm<ZZ>>> lines;
               const PolyRing<ZZ> R(ZZ{}, {});
               std::vector<Poly<PolyRing<ZZ>>> fs;
               long N = 1;
               for (int x : d) {
                 N *= x;
                 lines.emplace_back();
                 for (int j = 0; j < x; ++j) {
                   LinearForm<ZZ> l;
                   for (int v = 0; v < n; ++v) l.push_back(uniform_int(r.rng, -3, 3));
                   lines.back().push_back(l);
                 }
                 auto p = product_of_lines(ZZ{}, lines.back());
                 if (p.is_zero()) return Outcome::skipped("a line was zero");
                 fs.push_back(map_coeffs(p, R, [&](const mpz_class& c) { return R.from_z(c); }));
               }
               fs.push_back(random_nonzero_form(R, n, 1, r.rng, 3));
               const auto u = mertens_universe(R, n);
               const auto th = theta(u, std::vector<Poly<PolyRing<ZZ>>>(fs.begin(), fs.end() - 1));
               const auto binary = as_form(u, rho_bar(u, th.theta), {u.X(), u.Y()});
               const auto disc = disc_points(std::vector<Poly<PolyRing<ZZ>>>{binary}, {static_cast<int>(N)});
               auto prod = lemmaA_product(u, lines);
               if (lemmaA_sign(N) < 0) prod = -prod;
               return Outcome::check(disc == prod, [&] { return witness_of(fs); });
             });
}

// ---------------------------------------------------------------- zariski

inline void zariski(SuiteRunner& r) {
  for (auto [n, d, mu] : std::vector<std::tuple<int, int, int>>{{2, 3, 1}, {2, 4, 1}, {2, 4, 2}, {3, 3, 1}}) {
    const std::string id = "valuation-" + std::to_string(n) + std::to_string(d) + std::to_string(mu);
    r.once(id, "Zariski valuation of Disc is (d-mu)(d-1-mu)^(n-1); reduced resultant is exact", [&] {
      const auto cached = generic_disc(DiscKind::hyper, n, {d});
      const auto v = disc_valuation(n, d, mu, &cached->disc);
      return Outcome::check(v.valuation == v.expected && !v.red.is_zero(),
                            [&] { return json{{"valuation", v.valuation}, {"expected", v.expected}}; });
    });
  }
  for (const auto& [d, mu] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{1, 1}, {0, 0}}, {{2, 1}, {1, 0}}, {{2, 1, 1}, {1, 0, 0}}, {{2, 1, 1}, {1, 1, 0}}}) {
    std::string id = "lowest-part-";
    for (int x : d) id += std::to_string(x);
    id += "-";
    for (int x : mu) id += std::to_string(x);
    r.once(id, "lowest isobaric part of Res factors as Res(g) H_1 with weight prod(d_i - mu_i)", [&] {
      const auto g = generic_system<ZZ>(static_cast<int>(d.size()), d);
      const auto lp = zariski_lowest_part(g, mu);
      long expect = 1;
      for (std::size_t i = 0; i < d.size(); ++i) expect *= d[i] - mu[i];
      return Outcome::check(lp.weight == expect && lp.H == lp.res_g * lp.H1,
                            [&] { return json{{"weight", lp.weight}, {"expected", expect}}; });
    });
  }
  r.once("delta-n-identity", "Disc(fbar) dDisc/dE_n = dS/dE_n", [] {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
      if (!delta_n_identity(n, d)) return Outcome::failed(json{{"n", n}, {"d", d}});
    return Outcome::ok();
  });
}

// -------------------------------------------------------------------- poi

inline void poi(SuiteRunner& r) {
  auto conics = [](std::uint64_t q) {
    const Zmod F(q);
    auto X = [F](int i) { return Poly<Zmod>::variable(F, 3, i); };
    return std::make_pair(F, X);
  };
  r.once("nodal-instance", "tangent conics: Disc = 0 and a singular point exists", [&] {
    auto [F, X] = conics(5);
    const std::vector<Poly<Zmod>> fs{X(0) * X(2) - X(1) * X(1), X(0) * X(2) - X(1) * X(1) + X(0) * X(0)};
    const auto res = poi_check(fs);
    return Outcome::check(res.verdict == PoiVerdict::consistent && res.disc == 0u, [&] { return witness_of(fs); });
  });
  r.once("infinite-locus", "identical forms are skipped", [&] {
    auto [F, X] = conics(7);
    const std::vector<Poly<Zmod>> fs{X(0) * X(2) - X(1) * X(1), X(0) * X(2) - X(1) * X(1)};
    return Outcome::check(poi_check(fs).verdict == PoiVerdict::skipped, [&] { return witness_of(fs); });
  });

  int skipped = 0, total = 0;
  const int draws = r.trials * 10;
  r.property("random-conic-pairs", "Disc = 0 iff a singular common zero exists (over F_5, F_7)", draws, [&](int t) {
    const std::uint64_t q = t % 2 ? 7 : 5;
    const Zmod F(q);
    std::vector<Poly<Zmod>> fs;
    if (t % 10 == 9) {
      // shared line: the locus contains a curve
      const auto l = random_nonzero_form(F, 3, 1, r.rng);
      fs = {l * random_nonzero_form(F, 3, 1, r.rng), l * random_nonzero_form(F, 3, 1, r.rng)};
    } else {
      fs = {random_nonzero_form(F, 3, 2, r.rng), random_nonzero_form(F, 3, 2, r.rng)};
    }
    ++total;
    const auto res = poi_check(fs);
    if (res.verdict == PoiVerdict::inconsistent) return Outcome::failed(witness_of(fs), res.reason);
    if (res.verdict == PoiVerdict::skipped) {
      ++skipped;
      return Outcome::skipped(res.reason);
    }
    return Outcome::ok();
  });
  r.checks.back().detail += "; skip rate " + std::to_string(skipped) + "/" + std::to_string(total);

  r.property("minor-relation", "J_i(xi) = xi_i J_n(xi) at common zeros with xi_n = 1", r.trials, [&](int t) {
    const Zmod F(t % 2 ? 7 : 5);
    const std::vector<Poly<Zmod>> fs{random_nonzero_form(F, 3, 2, r.rng), random_nonzero_form(F, 3, 2, r.rng)};
    return Outcome::check(!minor_relation_violation(fs, 2), [&] { return witness_of(fs); });
  });
}

// ----------------------------------------------------------- char2-square

inline void char2_square(SuiteRunner& r) {
  r.once("hyper-quadric-n4", "generic quaternary quadric: Disc mod 2 is a perfect square", [] {
    const auto e = generic_disc(DiscKind::hyper, 4, {2});
    return Outcome::check(poly_sqrt(reduce_poly_mod(e->disc, 2)).has_value(), [] { return json{{"n", 4}}; });
  });
  r.once("points-22", "generic pair of ternary quadrics: Disc mod 2 is a perfect square", [] {
    const auto e = generic_disc(DiscKind::points, 3, {2, 2});
    return Outcome::check(poly_sqrt(reduce_poly_mod(e->disc, 2)).has_value(), [] { return json{{"n", 3}}; });
  });
  r.once("points-binary", "generic binary forms of degree 2 and 3: Disc mod 2 is a perfect square", [] {
    for (int d : {2, 3})
      if (!poly_sqrt(reduce_poly_mod(generic_disc(DiscKind::points, 2, {d})->disc, 2)))
        return Outcome::failed(json{{"d", d}});
    return Outcome::ok();
  });
  r.once("hessian", "char 2 quadrics: Hessian determinant is 0 for n = 3 and a square for n = 4", [] {
    const Zmod F(2);
    const auto h3 = hess_det(generic_system<Zmod>(3, {2}, F).forms[0]).constant_term();
    const auto h4 = hess_det(generic_system<Zmod>(4, {2}, F).forms[0]).constant_term();
    return Outcome::check(h3.is_zero() && poly_sqrt(h4).has_value(), [] { return json::object(); });
  });
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"euler",      "dedekind-mertens", "res-core", "disc-points-props",
                                              "disc-hyper-props", "mertens",   "zariski",  "poi",
                                              "char2-square"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials) {
  static const std::map<std::string, std::function<void(SuiteRunner&)>> table{
      {"euler", suites::euler},
      {"dedekind-mertens", suites::dedekind_mertens},
      {"res-core", suites::res_core},
      {"disc-points-props", suites::disc_points_props},
      {"disc-hyper-props", suites::disc_hyper_props},
      {"mertens", suites::mertens},
      {"zariski", suites::zariski},
      {"poi", suites::poi},
      {"char2-square", suites::char2_square},
  };
  const auto start = std::chrono::steady_clock::now();
  SuiteRunner runner(seed, trials);
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.trials = trials;
  if (name == "all") {
    for (const auto& s : suite_names()) {
      const std::size_t before = runner.checks.size();
      table.at(s)(runner);
      for (std::size_t i = before; i < runner.checks.size(); ++i) runner.checks[i].id = s + "/" + runner.checks[i].id;
    }
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw UnknownSuite("unknown suite '" + name + "'");
    it->second(runner);
  }
  rep.checks = std::move(runner.checks);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace elimkit
