#pragma once

// Independent ground truth: fully generic discriminants (cached in memory and
// optionally on disk as JSON), their specializations, and brute-force
// enumeration of projective points over small finite fields.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "disc_hyper.hpp"
#include "disc_points.hpp"
#include "json_io.hpp"

namespace elimkit {

enum class DiscKind { points, hyper };

inline const char* kind_name(DiscKind k) { return k == DiscKind::points ? "points" : "hyper"; }

// Bumped whenever a change could alter cached generic discriminants.
inline constexpr int kCacheVersion = 1;

struct GenericCacheEntry {
  DiscKind kind = DiscKind::points;
  int n = 0;
  std::vector<int> degrees;
  GenericSystem<ZZ> sys;
  Poly<ZZ> disc;  // in the indeterminates of sys.coeffs
};

namespace detail {

inline long binom(int a, int b) {
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline std::string cache_key(DiscKind kind, int n, const std::vector<int>& d) {
  std::string s = std::string(kind_name(kind)) + "-n" + std::to_string(n) + "-d";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "_" : "") + std::to_string(d[i]);
  return s + "-v" + std::to_string(kCacheVersion);
}

inline void check_generic_size(DiscKind kind, int n, const std::vector<int>& d) {
  long unknowns = 0;
  for (int x : d) unknowns += binom(x + n - 1, n - 1);
  if (unknowns <= 16) return;
  std::vector<int> sys = d;
  if (kind == DiscKind::hyper) sys.assign(n, d[0] - 1);
  else sys.push_back(1);
  const int nu = critical_degree(sys);
  throw TooLarge(std::to_string(unknowns) + " coefficient indeterminates; Macaulay matrix about " +
                 std::to_string(binom(nu + n - 1, n - 1)) + " columns with polynomial entries");
}

inline std::optional<Poly<ZZ>> load_cached(const std::filesystem::path& file, const GenericSystem<ZZ>& sys) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
    if (j.at("variables").get<std::vector<std::string>>() != *sys.coeffs.names) return std::nullopt;
    return terms_from_json(ZZ{}, sys.coeffs.nv, j.at("terms"));
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

inline void store_cached(const std::filesystem::path& file, const GenericCacheEntry& e) {
  json j;
  j["version"] = kCacheVersion;
  j["kind"] = kind_name(e.kind);
  j["n"] = e.n;
  j["degrees"] = e.degrees;
  j["variables"] = *e.sys.coeffs.names;
  j["terms"] = terms_to_json(e.disc);
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace detail

// The universal discriminant for a signature: n-1 degrees for points, one
// degree for hyper. Memoized per process; when ELIMKIT_CACHE_DIR is set the
// result is also read from and written to <dir>/<kind>-n<n>-d<...>-v<version>.json.
inline std::shared_ptr<const GenericCacheEntry> generic_disc(DiscKind kind, int n, const std::vector<int>& degrees) {
  if (kind == DiscKind::points && static_cast<int>(degrees.size()) != n - 1)
    throw SignatureMismatch("points discriminant needs n-1 degrees");
  if (kind == DiscKind::hyper && (degrees.size() != 1 || degrees[0] < 2))
    throw SignatureMismatch("hypersurface discriminant needs one degree >= 2");
  for (int x : degrees)
    if (x < 1) throw SignatureMismatch("degrees must be positive");
  detail::check_generic_size(kind, n, degrees);

  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const GenericCacheEntry>> memo;
  const auto key = detail::cache_key(kind, n, degrees);
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto e = std::make_shared<GenericCacheEntry>();
  e->kind = kind;
  e->n = n;
  e->degrees = degrees;
  e->sys = generic_system<ZZ>(n, degrees);
  std::optional<std::filesystem::path> file;
  if (const char* dir = std::getenv("ELIMKIT_CACHE_DIR"); dir && *dir)
    file = std::filesystem::path(dir) / (key + ".json");
  std::optional<Poly<ZZ>> loaded;
  if (file) loaded = detail::load_cached(*file, e->sys);
  if (loaded) {
    e->disc = std::move(*loaded);
  } else {
    e->disc = kind == DiscKind::points ? disc_points(e->sys.forms, degrees) : disc_hyper(e->sys.forms[0]);
    if (file) detail::store_cached(*file, *e);
  }
  memo.emplace(key, e);
  return e;
}

// p evaluated at vals (one value per variable of p) inside the ring k.
template <class C>
typename C::elem evaluate_in(const Poly<ZZ>& p, const C& k, const std::vector<typename C::elem>& vals) {
  if (static_cast<int>(vals.size()) != p.nv) throw SignatureMismatch("evaluate: value count");
  std::vector<std::vector<typename C::elem>> pw(p.nv);
  auto power = [&](int v, int e) -> const typename C::elem& {
    auto& row = pw[v];
    if (row.empty()) row.push_back(k.one());
    while (static_cast<int>(row.size()) <= e) row.push_back(k.mul(row.back(), vals[v]));
    return row[e];
  };
  auto acc = k.zero();
  for (std::size_t t = 0; t < p.m.size(); ++t) {
    auto term = k.from_z(p.c[t]);
    for (int v = 0; v < p.nv && !k.is_zero(term); ++v)
      if (const int e = p.m[t].get(v)) term = k.mul(term, power(v, e));
    k.add_to(acc, term);
  }
  return acc;
}

// The cached discriminant with every U_{i,alpha} replaced by the coefficient
// of X^alpha in fs[i].
template <class C>
typename C::elem specialize(const GenericCacheEntry& e, const std::vector<Poly<C>>& fs) {
  if (fs.size() != e.degrees.size()) throw SignatureMismatch("specialize: form count");
  check_system(fs, e.degrees, e.n);
  const C& k = fs[0].ring;
  std::vector<typename C::elem> vals(e.sys.coeffs.nv, k.zero());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& [alpha, idx] : e.sys.var_of[i]) vals[idx] = fs[i].coeff(alpha);
  return evaluate_in(e.disc, k, vals);
}

// ----------------------------------------------------- projective points

using PointGF = std::vector<GF::elem>;

// Representatives of P^{n-1}(F_{q^e}) with first nonzero coordinate 1.
struct ProjectivePointSet {
  GF field;
  int n = 0;
  std::vector<PointGF> points;

  ProjectivePointSet(std::uint32_t q, int e, int nvars) : field(q, e), n(nvars) {
    if (n < 1) throw SignatureMismatch("projective space needs n >= 1");
    const std::uint32_t Q = field.t->size;
    for (int lead = 0; lead < n; ++lead) {
      const int free = n - 1 - lead;
      std::uint64_t total = 1;
      for (int i = 0; i < free; ++i) total *= Q;
      for (std::uint64_t code = 0; code < total; ++code) {
        PointGF p(n, 0);
        p[lead] = 1;
        std::uint64_t c = code;
        for (int i = n - 1; i > lead; --i) {
          p[i] = static_cast<GF::elem>(c % Q);
          c /= Q;
        }
        points.push_back(std::move(p));
      }
    }
  }

  static std::uint64_t expected_count(std::uint32_t q, int e, int n) {
    std::uint64_t Q = 1, qn = 1;
    for (int i = 0; i < e; ++i) Q *= q;
    for (int i = 0; i < n; ++i) qn *= Q;
    return (qn - 1) / (Q - 1);
  }
};

// Shared, lazily built point sets keyed by (q, e, n).
inline const ProjectivePointSet& projective_points(std::uint32_t q, int e, int n) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, int, int>, std::unique_ptr<ProjectivePointSet>> sets;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = sets[{q, e, n}];
  if (!slot) slot = std::make_unique<ProjectivePointSet>(q, e, n);
  return *slot;
}

template <class K>
typename K::elem evaluate_at(const Poly<K>& f, const std::vector<typename K::elem>& x) {
  const K& k = f.ring;
  auto acc = k.zero();
  for (std::size_t t = 0; t < f.m.size(); ++t) {
    auto term = f.c[t];
    for (int v = 0; v < f.nv; ++v)
      for (int i = f.m[t].get(v); i > 0; --i) term = k.mul(term, x[v]);
    k.add_to(acc, term);
  }
  return acc;
}

inline Poly<GF> to_gf(const Poly<Zmod>& f, const GF& G) {
  if (f.ring.m != G.t->q) throw RingMismatch("form modulus differs from the field characteristic");
  return map_coeffs(f, G, [&](std::uint64_t c) { return G.from_int(static_cast<long long>(c)); });
}

// Rank of a small dense matrix over a field by Gaussian elimination.
inline int rank_gf(const GF& G, std::vector<std::vector<GF::elem>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!G.is_zero(rows[r][c])) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const auto inv = *G.div_exact(G.one(), rows[rank][c]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (G.is_zero(rows[r][c])) continue;
      const auto f = G.mul(rows[r][c], inv);
      for (int j = c; j < cols; ++j) rows[r][j] = G.sub(rows[r][j], G.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

struct LocusOverField {
  int e = 1;
  std::vector<PointGF> zeros;     // common zeros of the forms
  std::vector<PointGF> singular;  // zeros where the Jacobian drops rank
};

// Common zeros of forms over F_q in P^{n-1}(F_{q^e}) and the singular ones among
// them: points where the r x n Jacobian has rank < r, i.e. all maximal minors
// (for r = n-1, all J_i) vanish.
inline LocusOverField locus_over(const std::vector<Poly<Zmod>>& fs, int e) {
  if (fs.empty()) throw SignatureMismatch("need at least one form");
  const auto q = static_cast<std::uint32_t>(fs[0].ring.m);
  if (!fs[0].ring.prime || q > 13) throw UnsupportedRing("finite-field enumeration needs a prime q <= 13");
  const int n = fs[0].nv;
  const auto& P = projective_points(q, e, n);
  const GF& G = P.field;
  std::vector<Poly<GF>> g;
  std::vector<std::vector<Poly<GF>>> grad;
  for (const auto& f : fs) {
    if (f.nv != n) throw SignatureMismatch("forms live in different variable sets");
    g.push_back(to_gf(f, G));
    grad.push_back(gradient(g.back()));
  }
  LocusOverField out;
  out.e = e;
  for (const auto& x : P.points) {
    bool zero = true;
    for (const auto& f : g)
      if (!G.is_zero(evaluate_at(f, x))) { zero = false; break; }
    if (!zero) continue;
    out.zeros.push_back(x);
    std::vector<std::vector<GF::elem>> J;
    for (const auto& row : grad) {
      J.emplace_back();
      for (const auto& d : row) J.back().push_back(evaluate_at(d, x));
    }
    if (rank_gf(G, J) < static_cast<int>(fs.size())) out.singular.push_back(x);
  }
  return out;
}

inline std::vector<PointGF> singular_points(const std::vector<Poly<Zmod>>& fs, int e = 1) {
  return locus_over(fs, e).singular;
}

// At every common zero xi with xi_n = 1, J_i(xi) = xi_i * J_n(xi): the Euler
// relation puts xi in the kernel of the Jacobian. Returns the first violating
// point, if any.
inline std::optional<PointGF> minor_relation_violation(const std::vector<Poly<Zmod>>& fs, int e = 1) {
  const auto loc = locus_over(fs, e);
  const int n = fs[0].nv;
  const GF G(static_cast<std::uint32_t>(fs[0].ring.m), e);
  std::vector<Poly<GF>> J;
  for (const auto& m : jac_minors(fs)) J.push_back(to_gf(m, G));
  for (const auto& x : loc.zeros) {
    if (G.is_zero(x[n - 1])) continue;
    const auto inv = *G.div_exact(G.one(), x[n - 1]);
    PointGF y = x;
    for (auto& c : y) c = G.mul(c, inv);
    const auto jn = evaluate_at(J[n - 1], y);
    for (int i = 0; i < n; ++i)
      if (evaluate_at(J[i], y) != G.mul(y[i], jn)) return y;
  }
  return std::nullopt;
}

// ------------------------------------------------- geometric vanishing check

enum class PoiVerdict { consistent, inconsistent, skipped };

inline const char* verdict_name(PoiVerdict v) {
  switch (v) {
    case PoiVerdict::consistent: return "consistent";
    case PoiVerdict::inconsistent: return "inconsistent";
    case PoiVerdict::skipped: return "skipped";
  }
  return "?";
}

struct PoiResult {
  PoiVerdict verdict = PoiVerdict::skipped;
  std::string reason;
  std::optional<std::uint64_t> disc;
  std::vector<std::size_t> zero_counts;  // per extension degree 1..
  std::optional<int> singular_degree;    // smallest e with a singular point
  std::optional<PointGF> witness;
};

// Compares Disc(fs) = 0 with the existence of a singular common zero, searched
// over F_{q^e} for e <= max_e. Skips when the characteristic divides a degree
// or when point counts exceed the Bezout bound (the zero locus is not finite).
// A vanishing discriminant with no singular point found is reported as skipped,
// since the search covers only finitely many extensions.
inline PoiResult poi_check(const std::vector<Poly<Zmod>>& fs, int max_e = 3) {
  PoiResult out;
  if (fs.empty()) throw SignatureMismatch("need at least one form");
  const int n = static_cast<int>(fs.size()) + 1;
  check_system(fs, degrees_of(fs), n);
  const auto d = degrees_of(fs);
  const auto q = fs[0].ring.m;
  long bezout = 1;
  for (int x : d) {
    if (x % static_cast<long>(q) == 0) {
      out.reason = "characteristic divides a degree";
      return out;
    }
    bezout *= x;
  }
  std::vector<LocusOverField> loci;
  for (int e = 1; e <= max_e; ++e) {
    loci.push_back(locus_over(fs, e));
    out.zero_counts.push_back(loci.back().zeros.size());
    if (static_cast<long>(loci.back().zeros.size()) > bezout) {
      out.reason = "zero locus is not finite";
      return out;
    }
  }
  out.disc = disc_points(fs, d);
  for (const auto& loc : loci)
    if (!loc.singular.empty()) {
      out.singular_degree = loc.e;
      out.witness = loc.singular.front();
      break;
    }
  const bool disc_zero = *out.disc == 0;
  if (disc_zero == out.singular_degree.has_value()) {
    out.verdict = PoiVerdict::consistent;
  } else if (!disc_zero) {
    out.verdict = PoiVerdict::inconsistent;
    out.reason = "singular point found but Disc is nonzero";
  } else {
    out.reason = "closure search exhausted";
  }
  return out;
}

}  // namespace elimkit
