#pragma once

// Exact coefficient rings. Each ring is a small value-type context object whose
// elements are plain values; all arithmetic goes through the context so that
// rings with runtime parameters (modulus, extension tables) need no globals.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace elimkit {

// ---------------------------------------------------------------- integers

struct ZZ {
  using elem = mpz_class;

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long long k) const { return mpz_class(static_cast<long>(k)); }
  elem from_z(const mpz_class& z) const { return z; }

  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool is_one(const elem& a) const { return a == 1; }
  bool equal(const elem& a, const elem& b) const { return a == b; }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  void add_to(elem& a, const elem& b) const { a += b; }
  void sub_from(elem& a, const elem& b) const { a -= b; }
  void addmul(elem& acc, const elem& b, const elem& c) const {
    mpz_addmul(acc.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  }
  void submul(elem& acc, const elem& b, const elem& c) const {
    mpz_submul(acc.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  }
  elem mul_int(const elem& a, long long k) const { return a * static_cast<long>(k); }

  std::optional<elem> div_exact(const elem& a, const elem& b) const {
    if (sgn(b) == 0) throw DivisionByZero();
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  bool is_domain() const { return true; }
  bool is_field() const { return false; }
  unsigned long characteristic() const { return 0; }
  std::size_t size_hint(const elem& a) const { return mpz_size(a.get_mpz_t()); }
  std::string str(const elem& a) const { return a.get_str(); }
  std::string name() const { return "integers"; }
  bool operator==(const ZZ&) const { return true; }
};

// --------------------------------------------------------------- rationals

struct QQ {
  using elem = mpq_class;

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long long k) const { return mpq_class(static_cast<long>(k)); }
  elem from_z(const mpz_class& z) const { return mpq_class(z); }

  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool is_one(const elem& a) const { return a == 1; }
  bool equal(const elem& a, const elem& b) const { return a == b; }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem neg(const elem& a) const { return -a; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  void add_to(elem& a, const elem& b) const { a += b; }
  void sub_from(elem& a, const elem& b) const { a -= b; }
  void addmul(elem& acc, const elem& b, const elem& c) const { acc += b * c; }
  void submul(elem& acc, const elem& b, const elem& c) const { acc -= b * c; }
  elem mul_int(const elem& a, long long k) const { return a * static_cast<long>(k); }

  std::optional<elem> div_exact(const elem& a, const elem& b) const {
    if (sgn(b) == 0) throw DivisionByZero();
    return elem(a / b);
  }

  bool is_domain() const { return true; }
  bool is_field() const { return true; }
  unsigned long characteristic() const { return 0; }
  std::size_t size_hint(const elem& a) const {
    return mpz_size(a.get_num_mpz_t()) + mpz_size(a.get_den_mpz_t());
  }
  std::string str(const elem& a) const { return a.get_str(); }
  std::string name() const { return "rationals"; }
  bool operator==(const QQ&) const { return true; }
};

// ------------------------------------------------------- modular integers

inline bool is_prime_u64(std::uint64_t m) {
  mpz_class z(std::to_string(m));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

// Z/mZ for any m >= 2. Elements are stored reduced to [0, m).
struct Zmod {
  using elem = std::uint64_t;

  std::uint64_t m = 2;
  bool prime = true;

  Zmod() = default;
  explicit Zmod(std::uint64_t modulus) : m(modulus) {
    if (modulus < 2) throw UnsupportedRing("modulus must be >= 2");
    if (modulus > (std::uint64_t(1) << 62)) throw UnsupportedRing("modulus too large");
    prime = is_prime_u64(modulus);
  }

  elem zero() const { return 0; }
  elem one() const { return 1 % m; }
  elem from_int(long long k) const {
    long long r = k % static_cast<long long>(m);
    return r < 0 ? static_cast<elem>(r + static_cast<long long>(m)) : static_cast<elem>(r);
  }
  elem from_z(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), m); }

  bool is_zero(elem a) const { return a == 0; }
  bool is_one(elem a) const { return a == one(); }
  bool equal(elem a, elem b) const { return a == b; }

  elem add(elem a, elem b) const {
    elem s = a + b;
    return s >= m ? s - m : s;
  }
  elem sub(elem a, elem b) const { return a >= b ? a - b : a + (m - b); }
  elem neg(elem a) const { return a == 0 ? 0 : m - a; }
  elem mul(elem a, elem b) const {
    return static_cast<elem>((static_cast<unsigned __int128>(a) * b) % m);
  }
  void add_to(elem& a, elem b) const { a = add(a, b); }
  void sub_from(elem& a, elem b) const { a = sub(a, b); }
  void addmul(elem& acc, elem b, elem c) const { acc = add(acc, mul(b, c)); }
  void submul(elem& acc, elem b, elem c) const { acc = sub(acc, mul(b, c)); }
  elem mul_int(elem a, long long k) const { return mul(a, from_int(k)); }

  // Inverse of a unit, or nullopt if gcd(a, m) != 1.
  std::optional<elem> inverse(elem a) const {
    mpz_class r, z(std::to_string(a)), mm(std::to_string(m));
    if (mpz_invert(r.get_mpz_t(), z.get_mpz_t(), mm.get_mpz_t()) == 0) return std::nullopt;
    return from_z(r);
  }

  // Unique q with q*b = a; nullopt when no solution or several.
  std::optional<elem> div_exact(elem a, elem b) const {
    if (b == 0) throw DivisionByZero();
    auto inv = inverse(b);
    if (!inv) return std::nullopt;
    return mul(a, *inv);
  }

  bool is_domain() const { return prime; }
  bool is_field() const { return prime; }
  unsigned long characteristic() const { return static_cast<unsigned long>(m); }
  std::size_t size_hint(elem) const { return 1; }
  std::string str(elem a) const { return std::to_string(a); }
  std::string name() const { return "modular(" + std::to_string(m) + ")"; }
  bool operator==(const Zmod& o) const { return m == o.m; }
};

// ------------------------------------------------- small extension fields

// Monic irreducible polynomials (low-to-high coefficients, leading 1 implied)
// used to realize F_{q^e}. Each is verified rootless at construction, which
// suffices for irreducibility in degree 2 and 3.
inline std::vector<std::uint32_t> gf_modulus_poly(std::uint32_t q, int e) {
  struct Row { std::uint32_t q; int e; std::array<std::uint32_t, 3> low; };
  static const Row table[] = {
      {2, 2, {1, 1, 0}},  {2, 3, {1, 1, 0}},  {3, 2, {1, 0, 0}},  {3, 3, {1, 2, 0}},
      {5, 2, {2, 0, 0}},  {5, 3, {1, 1, 0}},  {7, 2, {1, 0, 0}},  {7, 3, {2, 0, 0}},
      {11, 2, {1, 0, 0}}, {11, 3, {4, 1, 0}}, {13, 2, {2, 0, 0}}, {13, 3, {2, 0, 0}},
  };
  for (const auto& r : table)
    if (r.q == q && r.e == e) return std::vector<std::uint32_t>(r.low.begin(), r.low.begin() + e);
  throw UnsupportedRing("no extension field table for q=" + std::to_string(q) +
                        " e=" + std::to_string(e));
}

struct GFTables {
  std::uint32_t q = 2;
  int e = 1;
  std::uint32_t size = 2;
  std::vector<std::uint32_t> modpoly;           // low coefficients of the monic modulus
  std::vector<std::array<std::uint8_t, 3>> digits;
  std::vector<std::uint32_t> exp_table, log_table;
};

// F_{q^e} with q prime <= 13 and e <= 3. Elements are encoded as
// sum c_i q^i for the residue polynomial sum c_i t^i.
struct GF {
  using elem = std::uint32_t;
  std::shared_ptr<const GFTables> t;

  GF() : GF(2, 1) {}
  GF(std::uint32_t q, int e) {
    if (q > 13 || !is_prime_u64(q)) throw UnsupportedRing("GF: q must be a prime <= 13");
    if (e < 1 || e > 3) throw UnsupportedRing("GF: degree must be 1..3");
    auto tab = std::make_shared<GFTables>();
    tab->q = q;
    tab->e = e;
    tab->size = 1;
    for (int i = 0; i < e; ++i) tab->size *= q;
    if (e > 1) {
      tab->modpoly = gf_modulus_poly(q, e);
      for (std::uint32_t x = 0; x < q; ++x) {
        std::uint64_t xe = 1;
        for (int i = 0; i < e; ++i) xe = xe * x % q;
        std::uint64_t low = 0;
        for (int i = e - 1; i >= 0; --i) low = (low * x + tab->modpoly[i]) % q;
        if ((xe + low) % q == 0) throw UnsupportedRing("GF modulus has a root");
      }
    }
    tab->digits.resize(tab->size);
    for (std::uint32_t a = 0; a < tab->size; ++a) {
      std::uint32_t v = a;
      for (int i = 0; i < 3; ++i) {
        tab->digits[a][i] = static_cast<std::uint8_t>(i < e ? v % q : 0);
        if (i < e) v /= q;
      }
    }
    // Find a generator of the multiplicative group by brute force.
    const std::uint32_t order = tab->size - 1;
    tab->exp_table.assign(2 * order, 0);
    tab->log_table.assign(tab->size, 0);
    for (std::uint32_t g = 2 % tab->size; g < tab->size; ++g) {
      if (g == 0) continue;
      std::uint32_t x = 1, k = 0;
      std::vector<bool> seen(tab->size, false);
      bool ok = true;
      for (k = 0; k < order; ++k) {
        if (seen[x]) { ok = false; break; }
        seen[x] = true;
        tab->exp_table[k] = x;
        tab->log_table[x] = k;
        x = slow_mul(*tab, x, g);
      }
      if (ok && x == 1) break;
    }
    for (std::uint32_t k = 0; k < order; ++k) tab->exp_table[k + order] = tab->exp_table[k];
    t = std::move(tab);
  }

  static std::uint32_t slow_mul(const GFTables& T, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t q = T.q;
    const int e = T.e;
    std::array<std::uint32_t, 6> prod{};
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        prod[i + j] = (prod[i + j] + std::uint32_t(T.digits[a][i]) * T.digits[b][j]) % q;
    for (int k = 2 * e - 2; k >= e; --k) {
      std::uint32_t c = prod[k];
      if (!c) continue;
      prod[k] = 0;
      for (int i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (q - c) * T.modpoly[i]) % q;
    }
    if (e == 1) prod[0] %= q;
    std::uint32_t r = 0;
    for (int i = e - 1; i >= 0; --i) r = r * q + prod[i];
    return r;
  }

  elem zero() const { return 0; }
  elem one() const { return 1; }
  elem from_int(long long k) const {
    long long r = k % static_cast<long long>(t->q);
    return static_cast<elem>(r < 0 ? r + t->q : r);
  }
  elem from_z(const mpz_class& z) const { return static_cast<elem>(mpz_fdiv_ui(z.get_mpz_t(), t->q)); }

  bool is_zero(elem a) const { return a == 0; }
  bool is_one(elem a) const { return a == 1; }
  bool equal(elem a, elem b) const { return a == b; }

  elem add(elem a, elem b) const {
    const auto& da = t->digits[a];
    const auto& db = t->digits[b];
    elem r = 0;
    for (int i = t->e - 1; i >= 0; --i) r = r * t->q + (da[i] + db[i]) % t->q;
    return r;
  }
  elem neg(elem a) const {
    const auto& da = t->digits[a];
    elem r = 0;
    for (int i = t->e - 1; i >= 0; --i) r = r * t->q + (t->q - da[i]) % t->q;
    return r;
  }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    return t->exp_table[t->log_table[a] + t->log_table[b]];
  }
  void add_to(elem& a, elem b) const { a = add(a, b); }
  void sub_from(elem& a, elem b) const { a = sub(a, b); }
  void addmul(elem& acc, elem b, elem c) const { acc = add(acc, mul(b, c)); }
  void submul(elem& acc, elem b, elem c) const { acc = sub(acc, mul(b, c)); }
  elem mul_int(elem a, long long k) const { return mul(a, from_int(k)); }

  std::optional<elem> div_exact(elem a, elem b) const {
    if (b == 0) throw DivisionByZero();
    if (a == 0) return elem(0);
    const std::uint32_t order = t->size - 1;
    return t->exp_table[(t->log_table[a] + order - t->log_table[b]) % order];
  }

  bool is_domain() const { return true; }
  bool is_field() const { return true; }
  unsigned long characteristic() const { return t->q; }
  std::size_t size_hint(elem) const { return 1; }
  std::uint32_t order() const { return t->size; }
  std::string str(elem a) const { return std::to_string(a); }
  std::string name() const {
    return "GF(" + std::to_string(t->q) + "^" + std::to_string(t->e) + ")";
  }
  bool operator==(const GF& o) const { return t->q == o.t->q && t->e == o.t->e; }
};

// -------------------------------------------------------- ring-level ops

template <class K>
typename K::elem exact_divide(const K& k, const typename K::elem& a, const typename K::elem& b) {
  auto q = k.div_exact(a, b);
  if (!q) throw NotDivisible(k.str(a) + " / " + k.str(b) + " in " + k.name());
  return *q;
}

template <class K>
typename K::elem ring_pow(const K& k, typename K::elem base, unsigned long e) {
  typename K::elem r = k.one();
  while (e) {
    if (e & 1) r = k.mul(r, base);
    e >>= 1;
    if (e) base = k.mul(base, base);
  }
  return r;
}

inline mpz_class canonical_lift(const Zmod& k, Zmod::elem a) {
  if (a >= k.m) throw WrongRing("element not reduced");
  return mpz_class(std::to_string(a));
}

inline mpz_class content(const ZZ&, const std::vector<mpz_class>& cs) {
  mpz_class g = 0;
  for (const auto& c : cs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline Zmod::elem content(const Zmod& k, const std::vector<Zmod::elem>& cs) {
  if (!k.prime) throw UnsupportedRing("content needs a gcd ring; modulus is composite");
  for (auto c : cs)
    if (c) return 1;
  return 0;
}

inline mpz_class pow_z(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

}  // namespace elimkit
