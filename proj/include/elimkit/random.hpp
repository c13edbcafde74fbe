#pragma once

// Seeded random instances for property checks.

#include <random>

#include "mpoly.hpp"

namespace elimkit {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline mpz_class random_elem(const ZZ&, Rng& rng, int bound) { return uniform_int(rng, -bound, bound); }

inline mpq_class random_elem(const QQ&, Rng& rng, int bound) {
  mpq_class q(uniform_int(rng, -bound, bound), uniform_int(rng, 1, bound));
  q.canonicalize();
  return q;
}

inline std::uint64_t random_elem(const Zmod& k, Rng& rng, int) {
  return std::uniform_int_distribution<std::uint64_t>(0, k.m - 1)(rng);
}

inline std::uint32_t random_elem(const GF& k, Rng& rng, int) {
  return std::uniform_int_distribution<std::uint32_t>(0, k.t->size - 1)(rng);
}

// A random affine-linear polynomial in the extension variables.
template <class K>
Poly<K> random_elem(const PolyRing<K>& r, Rng& rng, int bound) {
  auto p = r.from_base(random_elem(r.base, rng, bound));
  for (int v = 0; v < r.nv; ++v) p += r.var(v).scale(random_elem(r.base, rng, bound));
  return p;
}

template <class K>
Poly<K> random_form(const K& k, int n, int d, Rng& rng, int bound = 5) {
  std::vector<std::pair<Mono, typename K::elem>> terms;
  for (const auto& e : monomials_of_degree(n, d)) terms.emplace_back(Mono::from(e), random_elem(k, rng, bound));
  return Poly<K>::from_terms(k, n, std::move(terms));
}

// Random form that is not zero.
template <class K>
Poly<K> random_nonzero_form(const K& k, int n, int d, Rng& rng, int bound = 5) {
  for (;;) {
    auto f = random_form(k, n, d, rng, bound);
    if (!f.is_zero()) return f;
  }
}

// Random polynomial (not necessarily homogeneous) with up to max_terms terms
// of total degree <= max_deg.
template <class K>
Poly<K> random_poly(const K& k, int n, int max_deg, int max_terms, Rng& rng, int bound = 9) {
  std::vector<std::pair<Mono, typename K::elem>> terms;
  const int count = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n, 0);
    int budget = uniform_int(rng, 0, max_deg);
    for (int v = 0; v < n && budget > 0; ++v) {
      const int x = (v == n - 1) ? budget : uniform_int(rng, 0, budget);
      e[v] = x;
      budget -= x;
    }
    terms.emplace_back(Mono::from(e), random_elem(k, rng, bound));
  }
  return Poly<K>::from_terms(k, n, std::move(terms));
}

inline std::vector<std::vector<long>> random_int_matrix(Rng& rng, int rows, int cols, int bound) {
  std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
  for (auto& row : m)
    for (auto& x : row) x = uniform_int(rng, -bound, bound);
  return m;
}

}  // namespace elimkit
