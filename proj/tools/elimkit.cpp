// elimkit command-line front end: reads polynomial systems as JSON documents,
// runs one computation and prints the result as JSON (or text).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "elimkit.hpp"
#include "elimkit/suites.hpp"

using namespace elimkit;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

struct Options {
  std::string input = "-";
  std::string ring;
  std::string format = "json";
  std::uint64_t seed = 1;
  int trials = 20;
  int budget = 8;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

PolySystemDocument load(const Options& o) {
  auto doc = document_from_string(read_input(o.input));
  if (!o.ring.empty()) doc.ring = ring_from_flag(o.ring);
  return doc;
}

// Declared degrees win (a zero form carries its slot degree); otherwise inferred.
template <class K>
std::vector<int> slot_degrees(const PolySystemDocument& doc, const std::vector<Poly<K>>& fs) {
  const auto declared = doc.declared_degrees();
  std::vector<int> d;
  for (std::size_t i = 0; i < fs.size(); ++i) d.push_back(declared[i] ? *declared[i] : form_degree(fs[i]));
  return d;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "text")
    std::cout << text << "\n";
  else
    std::cout << j.dump() << "\n";
}

template <class K>
void emit_elem(const Options& o, const std::string& op, const K& k, const typename K::elem& e) {
  emit(o, json{{"op", op}, {"ring", ring_to_json(descriptor_of(k))}, {"result", elem_to_json(k, e)}}, k.str(e));
}

template <class K>
void emit_polys(const Options& o, const std::string& op, const RingDescriptor& ring,
                const std::vector<std::string>& vars, const std::vector<Poly<K>>& ps) {
  auto j = document_to_json(ring, vars, ps);
  j["op"] = op;
  std::string text;
  for (const auto& p : ps) text += (text.empty() ? "" : "\n") + to_string(p, vars);
  emit(o, j, text);
}

void require_count(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want)
    throw SignatureMismatch("expected " + std::to_string(want) + " " + what + ", got " + std::to_string(got));
}

// ------------------------------------------------------------- commands

void cmd_res(const Options& o) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    const auto fs = doc.forms(k);
    require_count(fs.size(), doc.nvars, "forms");
    emit_elem(o, "res", k, resultant(fs, slot_degrees(doc, fs)));
  });
}

void cmd_disc_points(const Options& o) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    const auto fs = doc.forms(k);
    require_count(fs.size(), doc.nvars - 1, "forms");
    DiscOptions opt;
    opt.budget = o.budget;
    opt.seed = o.seed;
    emit_elem(o, "disc-points", k, disc_points(fs, slot_degrees(doc, fs), opt));
  });
}

void cmd_disc_hyper(const Options& o) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    const auto fs = doc.forms(k);
    require_count(fs.size(), 1, "form");
    emit_elem(o, "disc-hyper", k, disc_hyper(fs[0]));
  });
}

void cmd_quadric_disc(const Options& o) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    const auto fs = doc.forms(k);
    require_count(fs.size(), 1, "form");
    emit_elem(o, "quadric-disc", k, quadric_disc(fs[0]));
  });
}

void cmd_jacobian(const Options& o, bool hessian_det) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const auto fs = doc.forms(k);
    std::vector<Poly<K>> out;
    if (hessian_det) {
      require_count(fs.size(), 1, "form");
      out.push_back(hess_det(fs[0]));
    } else if (static_cast<int>(fs.size()) == doc.nvars) {
      // n forms: the last one is F in J(f_1, ..., f_{n-1}, F)
      std::vector<Poly<K>> head(fs.begin(), fs.end() - 1);
      out.push_back(jac_full(head, fs.back()));
    } else {
      require_count(fs.size(), doc.nvars - 1, "forms");
      out = jac_minors(fs);
    }
    emit_polys(o, "jacobian", doc.ring, doc.variables, out);
  });
}

void cmd_delta_mod(const Options& o) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    if constexpr (std::is_same_v<K, QQ> || std::is_same_v<K, PolyRing<QQ>>) {
      throw WrongRing("delta-mod needs integer or modular coefficients");
    } else {
      const auto fs = doc.forms(k);
      require_count(fs.size(), doc.nvars - 1, "forms");
      const auto delta = delta_mod_delta(fs);
      emit_polys(o, "delta-mod", descriptor_of(delta.ring), doc.variables, std::vector<std::decay_t<decltype(delta)>>{delta});
    }
  });
}

void cmd_k_factor(const Options& o, const std::string& kind) {
  const auto doc = load(o);
  with_ring(doc.ring, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const auto all = doc.forms(k);
    const std::size_t n = doc.nvars;
    const std::size_t nf = kind == "hyper" ? 1 : n - 1;
    require_count(all.size(), nf + n, "forms (the f's followed by n forms g)");
    const std::vector<Poly<K>> fs(all.begin(), all.begin() + nf), gs(all.begin() + nf, all.end());
    if (kind == "hyper") {
      emit_elem(o, "k-factor", k, disc_hyper_basechange(fs[0], gs));
    } else {
      DiscOptions opt;
      opt.budget = o.budget;
      opt.seed = o.seed;
      emit_elem(o, "k-factor", k, base_change_K(fs, gs, opt));
    }
  });
}

void cmd_zariski(const Options& o, int n, int d, int mu, bool reduced) {
  const auto v = disc_valuation(n, d, mu);
  const PolyRing<ZZ> R(ZZ{}, *generic_system<ZZ>(n, {d}).coeffs.names);
  json j{{"op", reduced ? "reduced-res" : "zariski-valuation"},
         {"n", n},
         {"d", d},
         {"mu", mu},
         {"valuation", v.valuation},
         {"expected", v.expected}};
  std::string text = "valuation " + std::to_string(v.valuation) + " (expected " + std::to_string(v.expected) + ")";
  if (reduced) {
    j["ring"] = ring_to_json(descriptor_of(R));
    j["result"] = elem_to_json(R, v.red);
    text = R.str(v.red);
  }
  emit(o, j, text);
}

std::vector<int> parse_signature(const std::string& s) {
  std::vector<int> d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      d.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad signature '" + s + "'");
    }
  }
  if (d.empty()) throw ParseError("empty signature");
  return d;
}

int cmd_mertens(const Options& o, int which, const std::string& sig, bool generic) {
  const auto d = parse_signature(sig);
  const int n = static_cast<int>(d.size());
  Rng rng(o.seed);
  auto check = [&](const std::vector<Poly<PolyRing<ZZ>>>& fs) {
    bool ok = true;
    if (which != 2) ok = ok && mertens_first(fs).holds();
    if (which != 1) ok = ok && mertens_second(fs).holds();
    return ok;
  };
  json trials = json::array();
  int failed = 0;
  if (generic) {
    const bool ok = check(generic_system<ZZ>(n, d).forms);
    failed += !ok;
    trials.push_back({{"trial", "generic"}, {"holds", ok}});
  }
  for (int t = 0; t < o.trials; ++t) {
    const auto fs = suites::constant_coefficient_system(rng, n, d);
    const bool ok = check(fs);
    json entry{{"trial", t}, {"holds", ok}};
    if (!ok) {
      ++failed;
      entry["witness"] = witness_of(fs);
    }
    trials.push_back(std::move(entry));
  }
  emit(o,
       json{{"op", "mertens-check"}, {"which", which}, {"signature", d}, {"seed", o.seed}, {"failed", failed},
            {"trials", trials}},
       std::to_string(trials.size() - failed) + "/" + std::to_string(trials.size()) + " hold");
  return failed ? kVerifyFailed : kOk;
}

int cmd_poi(const Options& o, int max_e) {
  const auto doc = load(o);
  if (doc.ring.kind != RingDescriptor::Kind::modular) throw WrongRing("poi-check needs a modular ring");
  const Zmod k(doc.ring.modulus);
  const auto fs = doc.forms(k);
  require_count(fs.size(), doc.nvars - 1, "forms");
  const auto r = poi_check(fs, max_e);
  json j{{"op", "poi-check"}, {"verdict", verdict_name(r.verdict)}, {"reason", r.reason}, {"zero_counts", r.zero_counts}};
  j["disc"] = r.disc ? json(std::to_string(*r.disc)) : json(nullptr);
  if (r.singular_degree) j["singular_degree"] = *r.singular_degree;
  if (r.witness) j["witness"] = *r.witness;
  emit(o, j, std::string(verdict_name(r.verdict)) + (r.reason.empty() ? "" : ": " + r.reason));
  return r.verdict == PoiVerdict::inconsistent ? kVerifyFailed : kOk;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const auto rep = run_suite(suite, o.seed, o.trials);
  std::string text;
  for (const auto& c : rep.checks) text += c.status + "  " + c.id + "  " + c.detail + "\n";
  text += rep.ok() ? "ok" : "FAILED";
  emit(o, rep.to_json(), text);
  return rep.ok() ? kOk : kVerifyFailed;
}

int fail(int code, const std::string& kind, const std::string& msg) {
  std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
  return code;
}

int exit_code_for(const Error& e) {
  const auto& k = e.kind();
  if (k == "ParseError") return kParse;
  if (k == "PerturbationDegenerate" || k == "NotDivisible") return kInternal;
  return kPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resultants and discriminants of homogeneous polynomial systems"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool input = true) {
    if (input) {
      c->add_option("input", o.input, "JSON polynomial document (- for stdin)");
      c->add_option("--ring", o.ring, "override ring: int | rat | mod:M | polyext:BASE:a,b,...");
      c->add_option("--budget", o.budget, "perturbation retries")->check(CLI::PositiveNumber);
    }
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--trials", o.trials, "random trials")->check(CLI::NonNegativeNumber);
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* res = app.add_subcommand("res", "resultant of n forms in n variables");
  auto* dpts = app.add_subcommand("disc-points", "discriminant of n-1 forms in n variables");
  auto* dhyp = app.add_subcommand("disc-hyper", "discriminant of one form");
  auto* jac = app.add_subcommand("jacobian", "Jacobian minors J_1..J_n, or J(f, F) given n forms");
  bool hess = false;
  jac->add_flag("--hessian", hess, "print the Hessian determinant of a single form instead");
  auto* quad = app.add_subcommand("quadric-disc", "discriminant of a quadric from its symmetric matrix");
  auto* dmod = app.add_subcommand("delta-mod", "Delta with J_i = X_i Delta mod gcd(d_i)");
  auto* kfac = app.add_subcommand("k-factor", "base-change factor K for f o g");
  std::string kind = "points";
  kfac->add_option("--kind", kind, "points | hyper")->check(CLI::IsMember({"points", "hyper"}));
  for (auto* c : {res, dpts, dhyp, jac, quad, dmod, kfac}) common(c);

  int zn = 2, zd = 3, zmu = 1;
  auto* zval = app.add_subcommand("zariski-valuation", "Zariski valuation of the generic Disc");
  auto* rres = app.add_subcommand("reduced-res", "reduced resultant of the generic Disc");
  for (auto* c : {zval, rres}) {
    common(c, false);
    c->add_option("--n", zn, "number of variables")->required();
    c->add_option("--d", zd, "degree")->required();
    c->add_option("--mu", zmu, "split exponent")->required();
  }

  int which = 0;
  std::string sig;
  bool generic = false;
  auto* mert = app.add_subcommand("mertens-check", "check the Mertens formulas");
  common(mert, false);
  mert->add_option("--which", which, "1, 2, or 0 for both")->check(CLI::Range(0, 2));
  mert->add_option("--sig", sig, "degrees d_1,...,d_n")->required();
  mert->add_flag("--generic", generic, "also check fully generic coefficients");

  int max_e = 3;
  auto* poi = app.add_subcommand("poi-check", "compare Disc = 0 with singular common zeros over F_q");
  common(poi);
  poi->add_option("--max-ext", max_e, "largest extension degree searched")->check(CLI::Range(1, 3));

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  common(ver, false);
  ver->add_option("suite", suite, "suite name or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kParse, "ParseError", e.what());
  }

  try {
    if (*res) cmd_res(o);
    if (*dpts) cmd_disc_points(o);
    if (*dhyp) cmd_disc_hyper(o);
    if (*jac) cmd_jacobian(o, hess);
    if (*quad) cmd_quadric_disc(o);
    if (*dmod) cmd_delta_mod(o);
    if (*kfac) cmd_k_factor(o, kind);
    if (*zval) cmd_zariski(o, zn, zd, zmu, false);
    if (*rres) cmd_zariski(o, zn, zd, zmu, true);
    if (*mert) return cmd_mertens(o, which, sig, generic);
    if (*poi) return cmd_poi(o, max_e);
    if (*ver) return cmd_verify(o, suite);
  } catch (const Error& e) {
    return fail(exit_code_for(e), e.kind(), e.what());
  } catch (const json::exception& e) {
    return fail(kParse, "ParseError", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "InternalError", e.what());
  }
  return kOk;
}
