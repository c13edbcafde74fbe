#pragma once

// JSON interchange: ring descriptors, ring elements and polynomial-system
// documents. Polynomials are written as term lists in graded-lex order with
// integer coefficients as decimal strings, so printing is canonical and
// re-parsing a printed document reproduces it exactly.
//
// Over a polynomial extension a coefficient is either a decimal string (a
// constant) or a nested term list over the base ring in the extension
// variables.

#include <nlohmann/json.hpp>

#include <set>
#include <variant>

#include "mpoly.hpp"

namespace elimkit {

using json = nlohmann::json;

struct RingDescriptor {
  enum class Kind { integers, rationals, modular, polyext };
  Kind kind = Kind::integers;
  std::uint64_t modulus = 0;
  std::shared_ptr<const RingDescriptor> base;
  std::vector<std::string> variables;

  static RingDescriptor integers() { return {}; }
  static RingDescriptor rationals() { return {Kind::rationals, 0, nullptr, {}}; }
  static RingDescriptor modular(std::uint64_t m) {
    if (m < 2) throw ParseError("modulus must be at least 2");
    return {Kind::modular, m, nullptr, {}};
  }
  static RingDescriptor polyext(const RingDescriptor& b, std::vector<std::string> names) {
    if (b.kind == Kind::polyext) throw UnsupportedRing("nested polynomial extensions are not supported");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw ParseError("extension variable names must be distinct");
    return {Kind::polyext, 0, std::make_shared<const RingDescriptor>(b), std::move(names)};
  }
};

inline json ring_to_json(const RingDescriptor& r) {
  switch (r.kind) {
    case RingDescriptor::Kind::integers:
      return {{"kind", "integers"}};
    case RingDescriptor::Kind::rationals:
      return {{"kind", "rationals"}};
    case RingDescriptor::Kind::modular:
      return {{"kind", "modular"}, {"modulus", r.modulus}};
    case RingDescriptor::Kind::polyext:
      return {{"kind", "polyext"}, {"base", ring_to_json(*r.base)}, {"variables", r.variables}};
  }
  return {};
}

inline RingDescriptor ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("ring: missing kind");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "integers") return RingDescriptor::integers();
  if (kind == "rationals") return RingDescriptor::rationals();
  if (kind == "modular") {
    if (!j.contains("modulus") || !j["modulus"].is_number_unsigned()) throw ParseError("ring: bad modulus");
    return RingDescriptor::modular(j["modulus"].get<std::uint64_t>());
  }
  if (kind == "polyext") {
    if (!j.contains("base") || !j.contains("variables") || !j["variables"].is_array())
      throw ParseError("ring: polyext needs base and variables");
    std::vector<std::string> names;
    for (const auto& v : j["variables"]) {
      if (!v.is_string()) throw ParseError("ring: variable names must be strings");
      names.push_back(v.get<std::string>());
    }
    return RingDescriptor::polyext(ring_from_json(j["base"]), std::move(names));
  }
  throw ParseError("ring: unknown kind '" + kind + "'");
}

// Flag syntax: int | rat | mod:M | polyext:BASE:a,b,c  (BASE one of int, rat, mod@M).
inline RingDescriptor ring_from_flag(const std::string& s) {
  auto simple = [](const std::string& t) -> RingDescriptor {
    if (t == "int") return RingDescriptor::integers();
    if (t == "rat") return RingDescriptor::rationals();
    for (const char* pre : {"mod:", "mod@"}) {
      if (t.rfind(pre, 0) == 0) {
        const auto digits = t.substr(4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("bad modulus in ring flag '" + t + "'");
        return RingDescriptor::modular(std::stoull(digits));
      }
    }
    throw ParseError("unknown ring '" + t + "'");
  };
  if (s.rfind("polyext:", 0) != 0) return simple(s);
  const auto rest = s.substr(8);
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw ParseError("polyext ring flag needs BASE:names");
  std::vector<std::string> names;
  std::stringstream ss(rest.substr(colon + 1));
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  return RingDescriptor::polyext(simple(rest.substr(0, colon)), std::move(names));
}

// --------------------------------------------------------- element codecs

inline mpz_class parse_integer(const std::string& s) {
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
    throw ParseError("not a decimal integer: '" + s + "'");
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

inline json elem_to_json(const ZZ&, const mpz_class& a) { return a.get_str(); }
inline mpz_class elem_from_json(const ZZ&, const json& j) {
  if (!j.is_string()) throw ParseError("integer coefficient must be a decimal string");
  return parse_integer(j.get<std::string>());
}

inline json elem_to_json(const QQ&, const mpq_class& a) { return a.get_str(); }
inline mpq_class elem_from_json(const QQ&, const json& j) {
  if (!j.is_string()) throw ParseError("rational coefficient must be a string");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const auto den_str = s.substr(slash + 1);
  if (den_str.empty() || den_str[0] == '-' || den_str[0] == '+') throw ParseError("bad denominator in '" + s + "'");
  const mpz_class den = parse_integer(den_str);
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline json elem_to_json(const Zmod&, std::uint64_t a) { return std::to_string(a); }
inline std::uint64_t elem_from_json(const Zmod& k, const json& j) {
  if (!j.is_string()) throw ParseError("modular coefficient must be a decimal string");
  return k.from_z(parse_integer(j.get<std::string>()));
}

template <class K>
json terms_to_json(const Poly<K>& p) {
  json terms = json::array();
  for (std::size_t t = 0; t < p.m.size(); ++t)
    terms.push_back({{"coeff", elem_to_json(p.ring, p.c[t])}, {"exp", p.m[t].exps(p.nv)}});
  return terms;
}

template <class K>
Poly<K> terms_from_json(const K& k, int nvars, const json& terms) {
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::vector<std::pair<Mono, typename K::elem>> out;
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") || !t["exp"].is_array())
      throw ParseError("term needs coeff and exp");
    std::vector<int> e;
    for (const auto& x : t["exp"]) {
      if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > kMaxDegree)
        throw ParseError("exponents must be integers in [0, " + std::to_string(kMaxDegree) + "]");
      e.push_back(x.get<int>());
    }
    if (static_cast<int>(e.size()) != nvars) throw ParseError("exponent vector has the wrong length");
    out.emplace_back(Mono::from(e), elem_from_json(k, t["coeff"]));
  }
  return Poly<K>::from_terms(k, nvars, std::move(out));
}

template <class K>
json elem_to_json(const PolyRing<K>& r, const Poly<K>& a) {
  if (a.is_constant()) return elem_to_json(r.base, a.constant_term());
  return terms_to_json(a);
}

template <class K>
Poly<K> elem_from_json(const PolyRing<K>& r, const json& j) {
  if (j.is_string()) return r.from_base(elem_from_json(r.base, j));
  return terms_from_json(r.base, r.nv, j);
}

inline RingDescriptor descriptor_of(const ZZ&) { return RingDescriptor::integers(); }
inline RingDescriptor descriptor_of(const QQ&) { return RingDescriptor::rationals(); }
inline RingDescriptor descriptor_of(const Zmod& k) { return RingDescriptor::modular(k.m); }
template <class K>
RingDescriptor descriptor_of(const PolyRing<K>& r) {
  return RingDescriptor::polyext(descriptor_of(r.base), r.names ? *r.names : default_names(r.nv, "T"));
}

// ------------------------------------------------------ ring dispatch

template <class F>
decltype(auto) with_ring(const RingDescriptor& d, F&& f) {
  using Kind = RingDescriptor::Kind;
  switch (d.kind) {
    case Kind::integers:
      return f(ZZ{});
    case Kind::rationals:
      return f(QQ{});
    case Kind::modular:
      return f(Zmod(d.modulus));
    case Kind::polyext:
      switch (d.base->kind) {
        case Kind::integers:
          return f(PolyRing<ZZ>(ZZ{}, d.variables));
        case Kind::rationals:
          return f(PolyRing<QQ>(QQ{}, d.variables));
        case Kind::modular:
          return f(PolyRing<Zmod>(Zmod(d.base->modulus), d.variables));
        default:
          break;
      }
  }
  throw UnsupportedRing("unsupported ring descriptor");
}

// ------------------------------------------------- polynomial documents

struct PolySystemDocument {
  RingDescriptor ring;
  int nvars = 0;
  std::vector<std::string> variables;
  std::vector<json> polynomials;  // raw {degree, terms}; decoded per ring by forms()

  template <class K>
  std::vector<Poly<K>> forms(const K& k) const {
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < polynomials.size(); ++i) {
      const auto& pj = polynomials[i];
      if (!pj.is_object() || !pj.contains("terms")) throw ParseError("polynomial needs terms");
      auto p = terms_from_json(k, nvars, pj["terms"]);
      if (pj.contains("degree") && !pj["degree"].is_null()) {
        if (!pj["degree"].is_number_integer()) throw ParseError("degree must be an integer");
        const int d = pj["degree"].get<int>();
        for (const auto& mo : p.m)
          if (mo.deg() != d)
            throw ParseError("polynomial " + std::to_string(i + 1) + ": a term has degree " +
                             std::to_string(mo.deg()) + ", declared " + std::to_string(d));
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<std::optional<int>> declared_degrees() const {
    std::vector<std::optional<int>> out;
    for (const auto& pj : polynomials) {
      if (pj.contains("degree") && pj["degree"].is_number_integer())
        out.push_back(pj["degree"].get<int>());
      else
        out.push_back(std::nullopt);
    }
    return out;
  }
};

inline PolySystemDocument document_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be an object");
  PolySystemDocument doc;
  doc.ring = j.contains("ring") ? ring_from_json(j["ring"]) : RingDescriptor::integers();
  if (!j.contains("nvars") || !j["nvars"].is_number_integer()) throw ParseError("document needs nvars");
  doc.nvars = j["nvars"].get<int>();
  if (doc.nvars < 1 || doc.nvars > kMaxVars) throw ParseError("nvars out of range");
  if (j.contains("variables")) {
    for (const auto& v : j["variables"]) {
      if (!v.is_string()) throw ParseError("variable names must be strings");
      doc.variables.push_back(v.get<std::string>());
    }
    if (static_cast<int>(doc.variables.size()) != doc.nvars) throw ParseError("variables length differs from nvars");
  } else {
    doc.variables = default_names(doc.nvars);
  }
  std::set<std::string> seen(doc.variables.begin(), doc.variables.end());
  if (seen.size() != doc.variables.size()) throw ParseError("variable names must be distinct");
  if (doc.ring.kind == RingDescriptor::Kind::polyext)
    for (const auto& v : doc.ring.variables)
      if (seen.count(v)) throw ParseError("extension variable '" + v + "' clashes with a main variable");
  if (!j.contains("polynomials") || !j["polynomials"].is_array()) throw ParseError("document needs polynomials");
  for (const auto& p : j["polynomials"]) doc.polynomials.push_back(p);
  return doc;
}

inline PolySystemDocument document_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

template <class K>
json poly_to_json(const Poly<K>& p) {
  const auto h = is_homogeneous(p);
  json out;
  out["degree"] = (h && !h->any) ? json(h->degree) : json(nullptr);
  out["terms"] = terms_to_json(p);
  return out;
}

template <class K>
json document_to_json(const RingDescriptor& ring, const std::vector<std::string>& variables,
                      const std::vector<Poly<K>>& polys) {
  json out;
  out["ring"] = ring_to_json(ring);
  out["nvars"] = variables.size();
  out["variables"] = variables;
  out["polynomials"] = json::array();
  for (const auto& p : polys) out["polynomials"].push_back(poly_to_json(p));
  return out;
}

inline std::string canonical_dump(const json& j) { return j.dump(); }

}  // namespace elimkit
