#pragma once

// Dense matrices over a ring context and exact determinants.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "mpoly.hpp"

namespace elimkit {

template <class K>
struct Matrix {
  using elem = typename K::elem;
  K ring{};
  int rows = 0, cols = 0;
  std::vector<elem> a;

  Matrix() = default;
  Matrix(const K& k, int r, int c) : ring(k), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, k.zero()) {}

  elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
    Matrix s(ring, static_cast<int>(ri.size()), static_cast<int>(ci.size()));
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) s.at(i, j) = at(ri[i], ci[j]);
    return s;
  }
  Matrix negated() const {
    Matrix s = *this;
    for (auto& x : s.a) x = ring.neg(x);
    return s;
  }
};

// Laplace expansion by rows, memoized on the set of used columns. Division
// free, so valid over any commutative ring; cost grows with the number of
// reachable column subsets, which stays small for sparse or tiny matrices.
template <class K>
typename K::elem det_expand(const Matrix<K>& M) {
  const K& k = M.ring;
  const int n = M.rows;
  if (n != M.cols) throw SignatureMismatch("determinant of a non-square matrix");
  if (n == 0) return k.one();
  if (n > 63) throw TooLarge("expansion limited to 63 columns");
  std::unordered_map<std::uint64_t, typename K::elem> cur, next;
  cur.emplace(0, k.one());
  for (int r = 0; r < n; ++r) {
    next.clear();
    for (auto& [mask, val] : cur) {
      for (int j = 0; j < n; ++j) {
        if (mask >> j & 1) continue;
        const auto& e = M.at(r, j);
        if (k.is_zero(e)) continue;
        const int above = __builtin_popcountll(mask >> (j + 1));
        auto prod = k.mul(val, e);
        if (above & 1) prod = k.neg(prod);
        auto it = next.find(mask | (1ULL << j));
        if (it == next.end()) {
          next.emplace(mask | (1ULL << j), std::move(prod));
        } else {
          k.add_to(it->second, prod);
        }
      }
    }
    cur.swap(next);
    for (auto it = cur.begin(); it != cur.end();) {
      if (k.is_zero(it->second)) {
        it = cur.erase(it);
      } else {
        ++it;
      }
    }
    if (cur.empty()) return k.zero();
  }
  return cur.begin()->second;
}

// Fraction-free Gaussian elimination; requires an integral domain.
template <class K>
typename K::elem det_bareiss(Matrix<K> M) {
  const K& k = M.ring;
  const int n = M.rows;
  if (n != M.cols) throw SignatureMismatch("determinant of a non-square matrix");
  if (n == 0) return k.one();
  bool negate = false;
  typename K::elem prev = k.one();
  for (int p = 0; p < n - 1; ++p) {
    int best = -1;
    std::size_t best_size = 0;
    for (int i = p; i < n; ++i) {
      if (k.is_zero(M.at(i, p))) continue;
      const std::size_t s = k.size_hint(M.at(i, p));
      if (best < 0 || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best < 0) return k.zero();
    if (best != p) {
      for (int j = 0; j < n; ++j) std::swap(M.at(p, j), M.at(best, j));
      negate = !negate;
    }
    const auto piv = M.at(p, p);
    for (int i = p + 1; i < n; ++i) {
      const auto lead = M.at(i, p);
      const bool lead_zero = k.is_zero(lead);
      for (int j = p + 1; j < n; ++j) {
        auto v = k.mul(M.at(i, j), piv);
        if (!lead_zero && !k.is_zero(M.at(p, j))) k.submul(v, lead, M.at(p, j));
        if (!k.is_one(prev)) v = exact_divide(k, v, prev);
        M.at(i, j) = std::move(v);
      }
      M.at(i, p) = k.zero();
    }
    prev = piv;
  }
  auto d = M.at(n - 1, n - 1);
  return negate ? k.neg(d) : d;
}

// Gaussian elimination over a field.
template <class K>
typename K::elem det_field(Matrix<K> M) {
  const K& k = M.ring;
  const int n = M.rows;
  if (n != M.cols) throw SignatureMismatch("determinant of a non-square matrix");
  typename K::elem det = k.one();
  for (int p = 0; p < n; ++p) {
    int piv = -1;
    for (int i = p; i < n; ++i)
      if (!k.is_zero(M.at(i, p))) {
        piv = i;
        break;
      }
    if (piv < 0) return k.zero();
    if (piv != p) {
      for (int j = 0; j < n; ++j) std::swap(M.at(p, j), M.at(piv, j));
      det = k.neg(det);
    }
    det = k.mul(det, M.at(p, p));
    for (int i = p + 1; i < n; ++i) {
      if (k.is_zero(M.at(i, p))) continue;
      const auto f = exact_divide(k, M.at(i, p), M.at(p, p));
      for (int j = p + 1; j < n; ++j) k.submul(M.at(i, j), f, M.at(p, j));
      M.at(i, p) = k.zero();
    }
  }
  return det;
}

// Characteristic polynomial det(tI - A) by Berkowitz's division-free
// algorithm. Returns p[0..n] with det(tI - A) = sum_k p[k] t^{n-k}.
template <class K>
std::vector<typename K::elem> charpoly_berkowitz(const Matrix<K>& A) {
  using E = typename K::elem;
  const K& k = A.ring;
  const int n = A.rows;
  if (n == 0) return {k.one()};
  std::vector<E> vect{k.one(), k.neg(A.at(0, 0))};
  for (int r = 1; r < n; ++r) {
    std::vector<E> Q{k.one(), k.neg(A.at(r, r))};
    std::vector<E> v(r);
    for (int i = 0; i < r; ++i) v[i] = A.at(i, r);
    for (int step = 0; step < r; ++step) {
      E dot = k.zero();
      for (int i = 0; i < r; ++i) k.addmul(dot, A.at(r, i), v[i]);
      Q.push_back(k.neg(dot));
      if (step + 1 < r) {
        std::vector<E> w(r, k.zero());
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            if (!k.is_zero(A.at(i, j)) && !k.is_zero(v[j])) k.addmul(w[i], A.at(i, j), v[j]);
        v.swap(w);
      }
    }
    std::vector<E> nv(r + 2, k.zero());
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= r && j <= i; ++j)
        if (i - j < static_cast<int>(Q.size())) k.addmul(nv[i], Q[i - j], vect[j]);
    vect.swap(nv);
  }
  return vect;
}

template <class K>
typename K::elem det_berkowitz(const Matrix<K>& A) {
  auto p = charpoly_berkowitz(A);
  auto d = p.back();
  return (A.rows % 2) ? A.ring.neg(d) : d;
}

namespace detail {

// Prefix counts over a 0/1 activity vector.
struct Fenwick {
  std::vector<int> t;
  explicit Fenwick(int n) : t(n + 1, 0) {
    for (int i = 0; i < n; ++i) add(i, 1);
  }
  void add(int i, int v) {
    for (++i; i < static_cast<int>(t.size()); i += i & -i) t[i] += v;
  }
  int before(int i) const {
    int s = 0;
    for (; i > 0; i -= i & -i) s += t[i];
    return s;
  }
};

template <class K>
std::optional<typename K::elem> unit_inverse(const K& k, const typename K::elem& a) {
  if (k.is_one(a) || k.is_one(k.neg(a))) return a;
  if (k.is_field() && !k.is_zero(a)) return k.div_exact(k.one(), a);
  return std::nullopt;
}

}  // namespace detail

// Sparse reduction before a dense determinant: rows or columns with a single
// entry are expanded directly, and columns are cleared with unit pivots
// (least Markowitz cost first), which needs no division. Returns the
// accumulated factor and the dense remainder whose determinant completes it.
template <class K>
std::pair<typename K::elem, Matrix<K>> det_sparse_reduce(const Matrix<K>& M) {
  using E = typename K::elem;
  const K& k = M.ring;
  const int n = M.rows;
  std::vector<std::map<int, E>> rows(n);
  std::vector<std::set<int>> cols(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!k.is_zero(M.at(i, j))) {
        rows[i].emplace(j, M.at(i, j));
        cols[j].insert(i);
      }
  std::vector<char> row_on(n, 1), col_on(n, 1);
  detail::Fenwick rpos(n), cpos(n);
  E factor = k.one();
  int left = n;

  auto expand_at = [&](int r, int c) {
    auto v = rows[r].at(c);
    if ((rpos.before(r) + cpos.before(c)) % 2) v = k.neg(v);
    factor = k.mul(factor, v);
    for (const auto& [j, x] : rows[r])
      if (j != c) cols[j].erase(r);
    for (int i : cols[c])
      if (i != r) rows[i].erase(c);
    rows[r].clear();
    cols[c].clear();
    row_on[r] = col_on[c] = 0;
    rpos.add(r, -1);
    cpos.add(c, -1);
    --left;
  };

  while (left > 0) {
    int sr = -1, sc = -1;
    for (int i = 0; i < n && sr < 0; ++i) {
      if (!row_on[i]) continue;
      if (rows[i].empty()) return {k.zero(), Matrix<K>(k, 0, 0)};
      if (rows[i].size() == 1) sr = i, sc = rows[i].begin()->first;
    }
    for (int j = 0; j < n && sr < 0; ++j) {
      if (!col_on[j]) continue;
      if (cols[j].empty()) return {k.zero(), Matrix<K>(k, 0, 0)};
      if (cols[j].size() == 1) sr = *cols[j].begin(), sc = j;
    }
    if (sr >= 0) {
      expand_at(sr, sc);
      continue;
    }
    long best_cost = -1;
    int pr = -1, pc = -1;
    E inv = k.zero();
    for (int i = 0; i < n; ++i) {
      if (!row_on[i]) continue;
      for (const auto& [j, x] : rows[i]) {
        const long cost = static_cast<long>(rows[i].size() - 1) * static_cast<long>(cols[j].size() - 1);
        if (best_cost >= 0 && cost >= best_cost) continue;
        auto u = detail::unit_inverse(k, x);
        if (!u) continue;
        best_cost = cost;
        pr = i, pc = j;
        inv = std::move(*u);
      }
    }
    if (pr < 0) break;
    const auto pivot_row = rows[pr];
    const std::vector<int> targets(cols[pc].begin(), cols[pc].end());
    for (int i : targets) {
      if (i == pr) continue;
      const auto f = k.mul(rows[i].at(pc), inv);
      for (const auto& [j, x] : pivot_row) {
        auto it = rows[i].find(j);
        if (it == rows[i].end()) {
          rows[i].emplace(j, k.neg(k.mul(f, x)));
          cols[j].insert(i);
        } else {
          k.submul(it->second, f, x);
          if (k.is_zero(it->second)) {
            rows[i].erase(it);
            cols[j].erase(i);
          }
        }
      }
    }
    expand_at(pr, pc);
  }

  std::vector<int> ri, ci;
  for (int i = 0; i < n; ++i) {
    if (row_on[i]) ri.push_back(i);
    if (col_on[i]) ci.push_back(i);
  }
  Matrix<K> rest(k, left, left);
  for (int a = 0; a < left; ++a)
    for (const auto& [j, x] : rows[ri[a]]) {
      const int b = static_cast<int>(std::lower_bound(ci.begin(), ci.end(), j) - ci.begin());
      rest.at(a, b) = x;
    }
  return {factor, rest};
}

template <class K>
typename K::elem determinant_dense(const Matrix<K>& M) {
  if (M.rows <= 4) return det_expand(M);
  if (is_poly_ring<K>::value && M.rows <= 16) return det_expand(M);
  if (M.ring.is_field()) return det_field(M);
  if (M.ring.is_domain()) return det_bareiss(M);
  return det_berkowitz(M);
}

// Cofactor expansion for small sizes, elimination otherwise. Over polynomial
// rings the expansion stays preferable much longer: fraction-free elimination
// carries minors of growing size through every pivot step.
template <class K>
typename K::elem determinant(const Matrix<K>& M) {
  if (M.rows != M.cols) throw SignatureMismatch("determinant of a non-square matrix");
  if (M.rows <= 4) return det_expand(M);
  auto [factor, rest] = det_sparse_reduce(M);
  if (M.ring.is_zero(factor) || rest.rows == 0) return factor;
  return M.ring.mul(factor, determinant_dense(rest));
}

}  // namespace elimkit
