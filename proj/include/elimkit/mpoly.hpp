#pragma once

// Sparse multivariate polynomials over a ring context K.
//
// Terms are kept sorted in strictly decreasing graded-lex order (X1 > X2 > ...)
// with no zero coefficients. Exponents are packed one byte per variable behind
// a 16-bit total-degree field, so comparing the packed words lexicographically
// is exactly the graded-lex comparison.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace elimkit {

constexpr int kMaxVars = 30;
constexpr int kMaxDegree = 127;

struct Mono {
  std::array<std::uint64_t, 4> w{};

  static int word_of(int v) { return v < 6 ? 0 : 1 + (v - 6) / 8; }
  static int shift_of(int v) { return v < 6 ? 40 - 8 * v : 56 - 8 * ((v - 6) % 8); }

  int deg() const { return static_cast<int>(w[0] >> 48); }
  int get(int v) const { return static_cast<int>((w[word_of(v)] >> shift_of(v)) & 0xff); }
  void set(int v, int e) {
    if (e < 0 || e > kMaxDegree) throw TooLarge("exponent out of range");
    const int old = get(v);
    const int d = deg() - old + e;
    if (d > kMaxDegree) throw TooLarge("total degree exceeds " + std::to_string(kMaxDegree));
    auto& word = w[word_of(v)];
    word &= ~(std::uint64_t(0xff) << shift_of(v));
    word |= std::uint64_t(e) << shift_of(v);
    w[0] = (w[0] & 0x0000ffffffffffffULL) | (std::uint64_t(d) << 48);
  }

  static Mono from(const std::vector<int>& e) {
    if (static_cast<int>(e.size()) > kMaxVars) throw TooLarge("too many variables");
    Mono m;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) m.set(static_cast<int>(i), e[i]);
    return m;
  }
  std::vector<int> exps(int nv) const {
    std::vector<int> e(nv);
    for (int i = 0; i < nv; ++i) e[i] = get(i);
    return e;
  }

  friend bool operator==(const Mono& a, const Mono& b) { return a.w == b.w; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.w != b.w; }
  friend bool operator<(const Mono& a, const Mono& b) { return a.w < b.w; }
  friend bool operator>(const Mono& a, const Mono& b) { return b.w < a.w; }

  friend Mono operator*(const Mono& a, const Mono& b) {
    if (a.deg() + b.deg() > kMaxDegree)
      throw TooLarge("total degree exceeds " + std::to_string(kMaxDegree));
    Mono r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] + b.w[i];
    return r;
  }
  // b | a, using that every byte is below 0x80.
  static bool divides(const Mono& b, const Mono& a) {
    constexpr std::uint64_t H = 0x8080808080808080ULL;
    for (int i = 0; i < 4; ++i)
      if ((((a.w[i] | H) - b.w[i]) & H) != H) return false;
    return true;
  }
  friend Mono operator/(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] - b.w[i];
    return r;
  }
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : m.w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Monomials of total degree d in n variables, in decreasing graded-lex order.
inline std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  return out;
}

template <class K>
class Poly {
 public:
  using elem = typename K::elem;

  K ring{};
  int nv = 0;
  std::vector<Mono> m;
  std::vector<elem> c;

  Poly() = default;
  Poly(const K& k, int nvars) : ring(k), nv(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw TooLarge("too many variables");
  }

  static Poly constant(const K& k, int nvars, const elem& v) {
    Poly p(k, nvars);
    if (!k.is_zero(v)) {
      p.m.push_back(Mono{});
      p.c.push_back(v);
    }
    return p;
  }
  static Poly variable(const K& k, int nvars, int i) {
    Poly p(k, nvars);
    Mono mo;
    mo.set(i, 1);
    p.m.push_back(mo);
    p.c.push_back(k.one());
    return p;
  }
  static Poly monomial(const K& k, int nvars, const std::vector<int>& e, const elem& v) {
    Poly p(k, nvars);
    if (!k.is_zero(v)) {
      p.m.push_back(Mono::from(e));
      p.c.push_back(v);
    }
    return p;
  }
  // Builds from unsorted terms, combining duplicates.
  static Poly from_terms(const K& k, int nvars, std::vector<std::pair<Mono, elem>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Poly p(k, nvars);
    for (auto& t : terms) {
      if (!p.m.empty() && p.m.back() == t.first) {
        k.add_to(p.c.back(), t.second);
      } else {
        if (!p.m.empty() && k.is_zero(p.c.back())) {
          p.m.pop_back();
          p.c.pop_back();
        }
        p.m.push_back(t.first);
        p.c.push_back(std::move(t.second));
      }
    }
    if (!p.m.empty() && k.is_zero(p.c.back())) {
      p.m.pop_back();
      p.c.pop_back();
    }
    return p;
  }

  std::size_t size() const { return m.size(); }
  bool is_zero() const { return m.empty(); }
  bool is_constant() const { return m.empty() || (m.size() == 1 && m[0].deg() == 0); }
  elem constant_term() const {
    if (!m.empty() && m.back().deg() == 0) return c.back();
    return ring.zero();
  }
  int total_degree() const { return m.empty() ? -1 : m.front().deg(); }
  int degree_in(int v) const {
    int d = m.empty() ? -1 : 0;
    for (const auto& mo : m) d = std::max(d, mo.get(v));
    return d;
  }
  elem coeff(const Mono& mo) const {
    auto it = std::lower_bound(m.begin(), m.end(), mo, [](const Mono& a, const Mono& b) { return a > b; });
    if (it != m.end() && *it == mo) return c[it - m.begin()];
    return ring.zero();
  }
  elem coeff(const std::vector<int>& e) const { return coeff(Mono::from(e)); }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nv != b.nv || a.m != b.m) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (!a.ring.equal(a.c[i], b.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = ring.neg(x);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly& operator+=(const Poly& b) { return *this = merge(*this, b, false); }
  Poly& operator-=(const Poly& b) { return *this = merge(*this, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  Poly& operator*=(const Poly& b) { return *this = multiply(*this, b); }

  Poly scale(const elem& s) const {
    Poly r(ring, nv);
    if (ring.is_zero(s)) return r;
    r.m.reserve(m.size());
    r.c.reserve(c.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      elem v = ring.mul(c[i], s);
      if (ring.is_zero(v)) continue;
      r.m.push_back(m[i]);
      r.c.push_back(std::move(v));
    }
    return r;
  }
  Poly mul_term(const Mono& mo, const elem& s) const {
    Poly r = scale(s);
    for (auto& x : r.m) x = x * mo;
    return r;
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    const K& k = a.m.empty() ? b.ring : a.ring;
    Poly r(k, std::max(a.nv, b.nv));
    r.m.reserve(a.m.size() + b.m.size());
    r.c.reserve(a.m.size() + b.m.size());
    std::size_t i = 0, j = 0;
    while (i < a.m.size() || j < b.m.size()) {
      if (j == b.m.size() || (i < a.m.size() && a.m[i] > b.m[j])) {
        r.m.push_back(a.m[i]);
        r.c.push_back(a.c[i]);
        ++i;
      } else if (i == a.m.size() || b.m[j] > a.m[i]) {
        r.m.push_back(b.m[j]);
        r.c.push_back(subtract ? k.neg(b.c[j]) : b.c[j]);
        ++j;
      } else {
        elem v = subtract ? k.sub(a.c[i], b.c[j]) : k.add(a.c[i], b.c[j]);
        if (!k.is_zero(v)) {
          r.m.push_back(a.m[i]);
          r.c.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Heap-based product: terms are produced in decreasing order and
  // accumulated in place.
  static Poly multiply(const Poly& a, const Poly& b) {
    const K& k = a.ring;
    Poly r(k, std::max(a.nv, b.nv));
    if (a.m.empty() || b.m.empty()) return r;
    if (a.m.size() > b.m.size()) return multiply(b, a);
    if (a.m.size() == 1) return b.mul_term(a.m[0], a.c[0]);
    struct Node {
      Mono mo;
      std::uint32_t i, j;
    };
    auto less = [](const Node& x, const Node& y) { return x.mo < y.mo; };
    std::vector<Node> heap;
    heap.reserve(a.m.size());
    heap.push_back({a.m[0] * b.m[0], 0, 0});
    std::vector<std::pair<std::uint32_t, std::uint32_t>> popped;
    elem acc = k.zero();
    while (!heap.empty()) {
      const Mono cur = heap.front().mo;
      acc = k.zero();
      popped.clear();
      while (!heap.empty() && heap.front().mo == cur) {
        std::pop_heap(heap.begin(), heap.end(), less);
        Node nd = heap.back();
        heap.pop_back();
        k.addmul(acc, a.c[nd.i], b.c[nd.j]);
        popped.emplace_back(nd.i, nd.j);
      }
      for (auto [i, j] : popped) {
        if (j + 1 < b.m.size()) {
          heap.push_back({a.m[i] * b.m[j + 1], i, j + 1});
          std::push_heap(heap.begin(), heap.end(), less);
        }
        if (j == 0 && i + 1 < a.m.size()) {
          heap.push_back({a.m[i + 1] * b.m[0], i + 1, 0});
          std::push_heap(heap.begin(), heap.end(), less);
        }
      }
      if (!k.is_zero(acc)) {
        r.m.push_back(cur);
        r.c.push_back(std::move(acc));
      }
    }
    return r;
  }

  // Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<Poly> try_divide(const Poly& a, const Poly& b, Poly* remainder_witness = nullptr) {
    const K& k = a.ring;
    if (b.m.empty()) throw DivisionByZero();
    Poly q(k, std::max(a.nv, b.nv));
    if (a.m.empty()) return q;
    if (b.m.size() == 1) {
      for (std::size_t i = 0; i < a.m.size(); ++i) {
        auto qc = Mono::divides(b.m[0], a.m[i]) ? k.div_exact(a.c[i], b.c[0]) : std::nullopt;
        if (!qc) {
          if (remainder_witness) *remainder_witness = monomial_of(k, a.nv, a.m[i], a.c[i]);
          return std::nullopt;
        }
        if (k.is_zero(*qc)) continue;
        q.m.push_back(a.m[i] / b.m[0]);
        q.c.push_back(std::move(*qc));
      }
      return q;
    }
    struct Node {
      Mono mo;
      std::uint32_t i, j;
    };
    auto less = [](const Node& x, const Node& y) { return x.mo < y.mo; };
    std::vector<Node> heap;
    std::size_t ai = 0;
    const Mono lb = b.m[0];
    while (ai < a.m.size() || !heap.empty()) {
      Mono cur;
      if (heap.empty() || (ai < a.m.size() && a.m[ai] > heap.front().mo)) {
        cur = a.m[ai];
      } else {
        cur = heap.front().mo;
      }
      elem acc = k.zero();
      if (ai < a.m.size() && a.m[ai] == cur) {
        acc = a.c[ai];
        ++ai;
      }
      while (!heap.empty() && heap.front().mo == cur) {
        std::pop_heap(heap.begin(), heap.end(), less);
        Node nd = heap.back();
        heap.pop_back();
        k.submul(acc, q.c[nd.i], b.c[nd.j]);
        if (nd.j + 1 < b.m.size()) {
          heap.push_back({q.m[nd.i] * b.m[nd.j + 1], nd.i, nd.j + 1});
          std::push_heap(heap.begin(), heap.end(), less);
        }
      }
      if (k.is_zero(acc)) continue;
      std::optional<elem> qc;
      if (Mono::divides(lb, cur)) qc = k.div_exact(acc, b.c[0]);
      if (!qc || k.is_zero(*qc)) {
        if (remainder_witness) *remainder_witness = monomial_of(k, a.nv, cur, acc);
        return std::nullopt;
      }
      q.m.push_back(cur / lb);
      q.c.push_back(std::move(*qc));
      const auto qi = static_cast<std::uint32_t>(q.m.size() - 1);
      heap.push_back({q.m[qi] * b.m[1], qi, 1});
      std::push_heap(heap.begin(), heap.end(), less);
    }
    return q;
  }

  static Poly monomial_of(const K& k, int nvars, const Mono& mo, const elem& v) {
    Poly p(k, nvars);
    p.m.push_back(mo);
    p.c.push_back(v);
    return p;
  }
};

// Collects terms in any order and normalizes once at the end.
template <class K>
struct PolyAccumulator {
  K ring;
  int nv;
  std::vector<std::pair<Mono, typename K::elem>> terms;
  PolyAccumulator(const K& k, int nvars) : ring(k), nv(nvars) {}
  void add(const Poly<K>& p) {
    for (std::size_t i = 0; i < p.m.size(); ++i) terms.emplace_back(p.m[i], p.c[i]);
  }
  void add_term(const Mono& mo, typename K::elem v) { terms.emplace_back(mo, std::move(v)); }
  Poly<K> result() { return Poly<K>::from_terms(ring, nv, std::move(terms)); }
};

// ----------------------------------------------------------- polynomial ring

template <class K>
struct PolyRing {
  using elem = Poly<K>;
  using base_ring = K;

  K base{};
  int nv = 0;
  std::shared_ptr<const std::vector<std::string>> names;

  PolyRing() = default;
  PolyRing(const K& b, std::vector<std::string> vnames)
      : base(b), nv(static_cast<int>(vnames.size())),
        names(std::make_shared<const std::vector<std::string>>(std::move(vnames))) {
    if (nv > kMaxVars) throw TooLarge("too many variables");
  }

  elem zero() const { return elem(base, nv); }
  elem one() const { return elem::constant(base, nv, base.one()); }
  elem from_int(long long k) const { return elem::constant(base, nv, base.from_int(k)); }
  elem from_z(const mpz_class& z) const { return elem::constant(base, nv, base.from_z(z)); }
  elem from_base(const typename K::elem& v) const { return elem::constant(base, nv, v); }
  elem var(int i) const { return elem::variable(base, nv, i); }
  elem var(const std::string& name) const { return var(index_of(name)); }
  int index_of(const std::string& name) const {
    for (int i = 0; i < nv; ++i)
      if ((*names)[i] == name) return i;
    throw UnweightedSymbol("unknown variable " + name);
  }

  bool is_zero(const elem& a) const { return a.is_zero(); }
  bool is_one(const elem& a) const { return a.m.size() == 1 && a.m[0].deg() == 0 && base.is_one(a.c[0]); }
  bool equal(const elem& a, const elem& b) const { return a == b; }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  void add_to(elem& a, const elem& b) const { a += b; }
  void sub_from(elem& a, const elem& b) const { a -= b; }
  void addmul(elem& acc, const elem& b, const elem& c) const { acc += b * c; }
  void submul(elem& acc, const elem& b, const elem& c) const { acc -= b * c; }
  elem mul_int(const elem& a, long long k) const { return a.scale(base.from_int(k)); }

  std::optional<elem> div_exact(const elem& a, const elem& b) const { return elem::try_divide(a, b); }

  bool is_domain() const { return base.is_domain(); }
  bool is_field() const { return nv == 0 && base.is_field(); }
  unsigned long characteristic() const { return base.characteristic(); }
  std::size_t size_hint(const elem& a) const { return a.size(); }
  std::string str(const elem& a) const;
  std::string name() const {
    std::string s = "polynomial-extension(" + base.name() + ";";
    for (int i = 0; i < nv; ++i) s += (i ? "," : "") + (*names)[i];
    return s + ")";
  }
  bool operator==(const PolyRing& o) const {
    if (!(base == o.base) || nv != o.nv) return false;
    return names == o.names || (names && o.names && *names == *o.names);
  }
};

template <class T>
struct is_poly_ring : std::false_type {};
template <class K>
struct is_poly_ring<PolyRing<K>> : std::true_type {};

// ---------------------------------------------------------------- printing

inline std::vector<std::string> default_names(int nv, const std::string& stem = "X") {
  std::vector<std::string> v;
  for (int i = 0; i < nv; ++i) v.push_back(stem + std::to_string(i + 1));
  return v;
}

template <class K>
std::string to_string(const Poly<K>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < p.m.size(); ++t) {
    std::string cs = p.ring.str(p.c[t]);
    const bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
    if (t) os << " + ";
    const bool unit = p.ring.is_one(p.c[t]);
    bool first = true;
    if (!unit || p.m[t].deg() == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      first = false;
    }
    for (int v = 0; v < p.nv; ++v) {
      int e = p.m[t].get(v);
      if (!e) continue;
      if (!first) os << "*";
      first = false;
      os << names[v];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

template <class K>
std::string PolyRing<K>::str(const elem& a) const {
  return to_string(a, names ? *names : default_names(nv, "T"));
}

// --------------------------------------------------------------- utilities

template <class K>
Poly<K> poly_pow(const Poly<K>& p, unsigned e) {
  Poly<K> r = Poly<K>::constant(p.ring, p.nv, p.ring.one());
  Poly<K> b = p;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class K2, class K, class F>
Poly<K2> map_coeffs(const Poly<K>& p, const K2& target, F&& fn) {
  std::vector<std::pair<Mono, typename K2::elem>> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.m.size(); ++i) terms.emplace_back(p.m[i], fn(p.c[i]));
  return Poly<K2>::from_terms(target, p.nv, std::move(terms));
}

// Same ring, more variables appended at the end (exponents unchanged).
template <class K>
Poly<K> with_nvars(const Poly<K>& p, int nvars) {
  Poly<K> r = p;
  if (nvars < p.nv) {
    for (const auto& mo : p.m)
      for (int v = nvars; v < p.nv; ++v)
        if (mo.get(v)) throw RingMismatch("cannot drop a variable in use");
  }
  if (nvars > kMaxVars) throw TooLarge("too many variables");
  r.nv = nvars;
  return r;
}

struct Homogeneity {
  bool any = false;  // zero polynomial
  int degree = 0;
};

template <class K>
std::optional<Homogeneity> is_homogeneous(const Poly<K>& f) {
  if (f.is_zero()) return Homogeneity{true, 0};
  const int d = f.m.front().deg();
  for (const auto& mo : f.m)
    if (mo.deg() != d) return std::nullopt;
  return Homogeneity{false, d};
}

// Partial derivative in variable i (0-based).
template <class K>
Poly<K> partial_derivative(const Poly<K>& f, int i) {
  if (i < 0 || i >= f.nv) throw SignatureMismatch("variable index out of range");
  Poly<K> r(f.ring, f.nv);
  Mono xi;
  xi.set(i, 1);
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    const int e = f.m[t].get(i);
    if (!e) continue;
    auto v = f.ring.mul_int(f.c[t], e);
    if (f.ring.is_zero(v)) continue;
    r.m.push_back(f.m[t] / xi);
    r.c.push_back(std::move(v));
  }
  return r;
}

enum class Dehom { one, zero };

// mode one: X_i := 1 and the variable is removed. mode zero: X_i := 0, same
// variable count.
template <class K>
Poly<K> dehomogenize(const Poly<K>& f, int i, Dehom mode) {
  if (i < 0 || i >= f.nv) throw SignatureMismatch("variable index out of range");
  if (mode == Dehom::zero) {
    Poly<K> r(f.ring, f.nv);
    for (std::size_t t = 0; t < f.m.size(); ++t)
      if (!f.m[t].get(i)) {
        r.m.push_back(f.m[t]);
        r.c.push_back(f.c[t]);
      }
    return r;
  }
  std::vector<std::pair<Mono, typename K::elem>> terms;
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    auto e = f.m[t].exps(f.nv);
    e.erase(e.begin() + i);
    terms.emplace_back(Mono::from(e), f.c[t]);
  }
  return Poly<K>::from_terms(f.ring, f.nv - 1, std::move(terms));
}

// Removes variable i from a polynomial that does not involve it.
template <class K>
Poly<K> drop_variable(const Poly<K>& f, int i) {
  if (f.degree_in(i) > 0) throw RingMismatch("variable still present");
  return dehomogenize(f, i, Dehom::one);
}

// Inserts a fresh variable at position i.
template <class K>
Poly<K> insert_variable(const Poly<K>& f, int i) {
  std::vector<std::pair<Mono, typename K::elem>> terms;
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    auto e = f.m[t].exps(f.nv);
    e.insert(e.begin() + i, 0);
    terms.emplace_back(Mono::from(e), f.c[t]);
  }
  return Poly<K>::from_terms(f.ring, f.nv + 1, std::move(terms));
}

// f(images) where the coefficients of f are carried into the images' ring by
// embed. All images must share one ring and variable count.
template <class K, class K2, class Embed>
Poly<K2> substitute(const Poly<K>& f, const std::vector<Poly<K2>>& images, const K2& target, int target_nv,
                    Embed&& embed) {
  if (static_cast<int>(images.size()) != f.nv) throw SignatureMismatch("substitute: image count");
  for (const auto& g : images)
    if (!(g.ring == target) || g.nv != target_nv) throw RingMismatch("substitute: image ring");
  std::vector<std::vector<Poly<K2>>> powers(f.nv);
  auto power = [&](int v, int e) -> const Poly<K2>& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Poly<K2>::constant(target, target_nv, target.one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  PolyAccumulator<K2> acc(target, target_nv);
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    Poly<K2> term = Poly<K2>::constant(target, target_nv, embed(f.c[t]));
    for (int v = 0; v < f.nv && !term.is_zero(); ++v) {
      const int e = f.m[t].get(v);
      if (e) term = term * power(v, e);
    }
    acc.add(term);
  }
  return acc.result();
}

template <class K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images) {
  if (images.empty()) {
    if (f.nv != 0) throw SignatureMismatch("substitute: image count");
    return f;
  }
  return substitute(f, images, images[0].ring, images[0].nv, [](const auto& x) { return x; });
}

template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> witness;
  auto q = Poly<K>::try_divide(a, b, &witness);
  if (!q) {
    throw NotDivisible("polynomial division leaves remainder term " +
                       to_string(witness, default_names(witness.nv)));
  }
  return *q;
}

// ------------------------------------------------------------ square roots

namespace detail {

inline std::optional<mpz_class> coeff_sqrt(const ZZ&, const mpz_class& a) {
  if (sgn(a) < 0 || !mpz_perfect_square_p(a.get_mpz_t())) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}
inline std::optional<mpq_class> coeff_sqrt(const QQ&, const mpq_class& a) {
  if (sgn(a) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), a.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), a.get_den_mpz_t());
  return mpq_class(n, d);
}
inline std::optional<std::uint64_t> coeff_sqrt(const Zmod& k, std::uint64_t a) {
  if (!k.prime) return std::nullopt;
  if (k.m > 1000000) throw UnsupportedRing("square roots only over small prime fields");
  for (std::uint64_t x = 0; x <= k.m / 2; ++x)
    if (k.mul(x, x) == a) return x;
  return std::nullopt;
}
inline std::optional<std::uint32_t> coeff_sqrt(const GF& k, std::uint32_t a) {
  for (std::uint32_t x = 0; x < k.order(); ++x)
    if (k.mul(x, x) == a) return x;
  return std::nullopt;
}

template <class K>
bool positive_lead(const K& k, const typename K::elem& v) {
  if constexpr (std::is_same_v<K, ZZ> || std::is_same_v<K, QQ>) {
    return sgn(v) > 0;
  } else if constexpr (std::is_same_v<K, Zmod>) {
    return v <= k.m / 2;
  } else {
    (void)k;
    (void)v;
    return true;
  }
}

}  // namespace detail

// s with s*s == a, canonical sign (positive leading coefficient), or nullopt.
template <class K>
std::optional<Poly<K>> poly_sqrt(const Poly<K>& a) {
  const K& k = a.ring;
  Poly<K> zero(k, a.nv);
  if (a.is_zero()) return zero;
  if (k.characteristic() == 2) {
    // Frobenius: (sum s_i m_i)^2 = sum s_i^2 m_i^2.
    std::vector<std::pair<Mono, typename K::elem>> terms;
    for (std::size_t t = 0; t < a.m.size(); ++t) {
      std::vector<int> e = a.m[t].exps(a.nv);
      for (auto& x : e) {
        if (x % 2) return std::nullopt;
        x /= 2;
      }
      auto r = detail::coeff_sqrt(k, a.c[t]);
      if (!r) return std::nullopt;
      terms.emplace_back(Mono::from(e), *r);
    }
    auto s = Poly<K>::from_terms(k, a.nv, std::move(terms));
    if (s * s != a) return std::nullopt;
    return s;
  }
  std::vector<int> e0 = a.m[0].exps(a.nv);
  for (auto& x : e0) {
    if (x % 2) return std::nullopt;
    x /= 2;
  }
  auto c0 = detail::coeff_sqrt(k, a.c[0]);
  if (!c0) return std::nullopt;
  Poly<K> s = Poly<K>::monomial(k, a.nv, e0, *c0);
  const Mono lead = s.m[0];
  const auto two_lead = k.mul_int(*c0, 2);
  Poly<K> r = a - s * s;
  std::size_t guard = a.size() + 2;
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    if (!Mono::divides(lead, r.m[0])) return std::nullopt;
    auto qc = k.div_exact(r.c[0], two_lead);
    if (!qc || k.is_zero(*qc)) return std::nullopt;
    Mono qm = r.m[0] / lead;
    if (!(qm < lead)) return std::nullopt;
    Poly<K> t = Poly<K>::monomial_of(k, a.nv, qm, *qc);
    r = r - (s.scale(k.from_int(2)) + t) * t;
    s = s + t;
  }
  if (!detail::positive_lead(k, s.c[0])) s = -s;
  return s;
}

// ------------------------------------------------------------------ weights

constexpr int kUnweighted = -1;

inline long term_weight(const Mono& mo, int nv, const std::vector<int>& w) {
  long wt = 0;
  for (int v = 0; v < nv; ++v) {
    const int e = mo.get(v);
    if (!e) continue;
    if (v >= static_cast<int>(w.size()) || w[v] < 0) throw UnweightedSymbol("variable " + std::to_string(v + 1));
    wt += static_cast<long>(e) * w[v];
  }
  return wt;
}

template <class K>
Poly<K> isobaric_part(const Poly<K>& f, const std::vector<int>& w, long v) {
  Poly<K> r(f.ring, f.nv);
  for (std::size_t t = 0; t < f.m.size(); ++t)
    if (term_weight(f.m[t], f.nv, w) == v) {
      r.m.push_back(f.m[t]);
      r.c.push_back(f.c[t]);
    }
  return r;
}

// Valuation of a form whose coefficients are polynomials in weighted
// indeterminates: the minimum over all coefficients.
template <class K>
std::optional<long> weight_valuation(const Poly<PolyRing<K>>& f, const std::vector<int>& w) {
  std::optional<long> best;
  for (const auto& cf : f.c) {
    auto v = weight_valuation(cf, w, f.ring.names.get());
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

// ------------------------------------------------------- generic systems

// Forms f_1..f_r in n variables whose coefficients are distinct fresh
// indeterminates U{i}_{alpha} of a polynomial ring over base.
template <class K>
struct GenericSystem {
  int n = 0;
  std::vector<int> degrees;
  PolyRing<K> coeffs;
  std::vector<Poly<PolyRing<K>>> forms;
  // var_of[i][alpha] = index of the indeterminate U_{i,alpha}
  std::vector<std::map<std::vector<int>, int>> var_of;

  int var(int i, const std::vector<int>& alpha) const { return var_of.at(i).at(alpha); }
};

inline std::string generic_name(const std::string& prefix, const std::vector<int>& alpha) {
  std::string s = prefix;
  for (int a : alpha) s += "_" + std::to_string(a);
  return s;
}

template <class K = ZZ>
GenericSystem<K> generic_system(int n, const std::vector<int>& degrees, const K& base = K{},
                                std::vector<std::string> prefixes = {}) {
  GenericSystem<K> g;
  g.n = n;
  g.degrees = degrees;
  std::vector<std::string> names;
  g.var_of.resize(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const std::string pre = i < prefixes.size() ? prefixes[i] : "U" + std::to_string(i + 1);
    for (const auto& alpha : monomials_of_degree(n, degrees[i])) {
      g.var_of[i][alpha] = static_cast<int>(names.size());
      names.push_back(generic_name(pre, alpha));
    }
  }
  g.coeffs = PolyRing<K>(base, names);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Poly<PolyRing<K>> f(g.coeffs, n);
    std::vector<std::pair<Mono, Poly<K>>> terms;
    for (const auto& [alpha, idx] : g.var_of[i]) terms.emplace_back(Mono::from(alpha), g.coeffs.var(idx));
    g.forms.push_back(Poly<PolyRing<K>>::from_terms(g.coeffs, n, std::move(terms)));
  }
  return g;
}

template <class K = ZZ>
Poly<PolyRing<K>> generic_polynomial(int n, int d, const K& base = K{}) {
  return generic_system<K>(n, {d}, base).forms[0];
}

// ------------------------------------------------- lifting and reduction

inline ZZ lift_ring(const Zmod&) { return ZZ{}; }
inline mpz_class lift_elem(const Zmod& k, std::uint64_t a) { return canonical_lift(k, a); }
inline PolyRing<ZZ> lift_ring(const PolyRing<Zmod>& r) { return PolyRing<ZZ>(ZZ{}, *r.names); }
inline Poly<ZZ> lift_elem(const PolyRing<Zmod>& r, const Poly<Zmod>& p) {
  return map_coeffs(p, ZZ{}, [&](std::uint64_t x) { return canonical_lift(r.base, x); });
}

inline std::uint64_t reduce_elem(const Zmod& k, const mpz_class& z) { return k.from_z(z); }
inline Poly<Zmod> reduce_elem(const PolyRing<Zmod>& r, const Poly<ZZ>& p) {
  return map_coeffs(p, r.base, [&](const mpz_class& z) { return r.base.from_z(z); });
}

template <class K>
struct needs_lift : std::false_type {};
template <>
struct needs_lift<Zmod> : std::true_type {};
template <>
struct needs_lift<PolyRing<Zmod>> : std::true_type {};

// Lifts every coefficient of a form over Zmod or Zmod[params] to the integers.
template <class K>
auto lift_poly(const Poly<K>& f) {
  auto L = lift_ring(f.ring);
  return map_coeffs(f, L, [&](const auto& x) { return lift_elem(f.ring, x); });
}

template <class K>
auto reduce_ring_of(const K& k, std::uint64_t m) {
  if constexpr (std::is_same_v<K, ZZ>) {
    (void)k;
    return Zmod(m);
  } else {
    return PolyRing<Zmod>(Zmod(m), *k.names);
  }
}

// Minimum total weight over the terms of f (nullopt for the zero polynomial,
// the +infinity sentinel). Weights are indexed by variable; -1 = unweighted.
template <class K>
std::optional<long> weight_valuation(const Poly<K>& f, const std::vector<int>& w,
                                     const std::vector<std::string>* names = nullptr) {
  std::optional<long> best;
  for (const auto& mo : f.m) {
    for (int v = 0; v < f.nv; ++v)
      if (mo.get(v) && (v >= static_cast<int>(w.size()) || w[v] < 0))
        throw UnweightedSymbol(names ? (*names)[v] : "variable " + std::to_string(v + 1));
    const long wt = term_weight(mo, f.nv, w);
    if (!best || wt < *best) best = wt;
  }
  return best;
}


inline std::uint64_t reduce_elem_mod(const Zmod& t, const mpz_class& z) { return t.from_z(z); }
inline Poly<Zmod> reduce_elem_mod(const PolyRing<Zmod>& t, const Poly<ZZ>& p) { return reduce_elem(t, p); }

template <class K>
auto reduce_poly_mod(const Poly<K>& f, std::uint64_t m) {
  auto T = reduce_ring_of(f.ring, m);
  return map_coeffs(f, T, [&](const auto& x) { return reduce_elem_mod(T, x); });
}

}  // namespace elimkit
