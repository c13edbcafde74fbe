#pragma once

// Jacobian minors, bordered Jacobians and Hessians. Variable indices are
// 0-based throughout: jac_minor(fs, i) is J_{i+1} in the usual numbering.

#include "resultant.hpp"

namespace elimkit {

template <class C>
Matrix<PolyRing<C>> jacobian_matrix(const std::vector<Poly<C>>& fs, int nvars) {
  const C& k = fs.at(0).ring;
  Matrix<PolyRing<C>> J(main_ring(k, nvars), static_cast<int>(fs.size()), nvars);
  for (std::size_t r = 0; r < fs.size(); ++r)
    for (int v = 0; v < nvars; ++v) J.at(static_cast<int>(r), v) = partial_derivative(fs[r], v);
  return J;
}

// J_i = (-1)^{n-i} det(d f_j / d X_k), k != i, for n-1 forms in n variables.
template <class C>
Poly<C> jac_minor(const std::vector<Poly<C>>& fs, int i) {
  if (fs.empty()) throw SignatureMismatch("need at least one form");
  const int n = fs[0].nv;
  if (static_cast<int>(fs.size()) != n - 1) throw SignatureMismatch("need n-1 forms in n variables");
  if (i < 0 || i >= n) throw SignatureMismatch("minor index out of range");
  for (const auto& f : fs)
    if (f.nv != n) throw SignatureMismatch("forms live in different variable sets");
  std::vector<int> rows(n - 1), cols;
  std::iota(rows.begin(), rows.end(), 0);
  for (int v = 0; v < n; ++v)
    if (v != i) cols.push_back(v);
  auto m = determinant(jacobian_matrix(fs, n).submatrix(rows, cols));
  // 1-based exponent n - (i+1)
  return ((n - 1 - i) % 2) ? -m : m;
}

template <class C>
std::vector<Poly<C>> jac_minors(const std::vector<Poly<C>>& fs) {
  std::vector<Poly<C>> out;
  const int n = fs.at(0).nv;
  for (int i = 0; i < n; ++i) out.push_back(jac_minor(fs, i));
  return out;
}

// det of the n x n Jacobian of (f_1, ..., f_{n-1}, F).
template <class C>
Poly<C> jac_full(const std::vector<Poly<C>>& fs, const Poly<C>& F) {
  const int n = F.nv;
  if (static_cast<int>(fs.size()) != n - 1) throw SignatureMismatch("need n-1 forms in n variables");
  auto all = fs;
  all.push_back(F);
  return determinant(jacobian_matrix(all, n));
}

template <class C>
Matrix<PolyRing<C>> hessian(const Poly<C>& f) {
  const int n = f.nv;
  Matrix<PolyRing<C>> H(main_ring(f.ring, n), n, n);
  for (int i = 0; i < n; ++i) {
    const auto di = partial_derivative(f, i);
    for (int j = i; j < n; ++j) {
      H.at(i, j) = partial_derivative(di, j);
      H.at(j, i) = H.at(i, j);
    }
  }
  return H;
}

template <class C>
Poly<C> hess_det(const Poly<C>& f) {
  return determinant(hessian(f));
}

}  // namespace elimkit
