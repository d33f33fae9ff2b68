#include "verify.hpp"

#include <chrono>
#include <numeric>
#include <random>

#include "ghl/comparison.hpp"
#include "ghl/transfer.hpp"

namespace ghl::app {

namespace {

using Factors = std::vector<long>;

struct ValueCheck {
  std::string name;
  Theory theory;
  std::string group, module;
  int lo;
  std::vector<Factors> expected;
  std::string note;
};

std::vector<ValueCheck> reference_values() {
  using T = Theory;
  std::vector<ValueCheck> v{
      {"HS_*(Z2, Z[Z2])", T::SymHomology, "cyclic:2", "regular", 0, {{2, 0}, {}}, ""},
      {"HS_*(Z2, Z)", T::SymHomology, "cyclic:2", "trivial:Z", 0, {{0}, {}},
       "expected value disagrees with the direct computation: BS_1(Z2) is Z with the sign action, so Z (x)_G BS_1 = Z/2"},
      {"HS_*(Z2, Z/5)", T::SymHomology, "cyclic:2", "trivial:Z/5", 0, {{5}, {}}, ""},
      {"HS_*(Z3, Z[Z3])", T::SymHomology, "cyclic:3", "regular", 0, {{2, 2, 0}, {3}, {}, {}},
       "degree 0 compared with the presentation Z[G]/2(augmentation ideal)"},
      {"HS_*(Z3, Z)", T::SymHomology, "cyclic:3", "trivial:Z", 0, {{0}, {9}, {}, {}}, ""},
      {"HS_*(Z3, Z/3)", T::SymHomology, "cyclic:3", "trivial:Z/3", 0, {{3}, {3}, {3}, {}}, ""},
      {"H^lambda_*(Z3, Z)", T::ExtHomology, "cyclic:3", "trivial:Z", 0, {{0}, {3}, {}}, ""},
      {"H^lambda_*(Z3, Z/3)", T::ExtHomology, "cyclic:3", "trivial:Z/3", 0, {{3}, {3}, {3}}, ""},
      {"H_lambda^*(Z2, Z/2)", T::ExtCohomology, "cyclic:2", "trivial:Z/2", 0, {{2}, {2}, {}, {}}, ""},
      {"H_lambda^*(Z3, Z/3)", T::ExtCohomology, "cyclic:3", "trivial:Z/3", 0, {{3}, {3}, {3}, {}, {}}, ""},
      {"H_lambda^*(Z5, Z/5)", T::ExtCohomology, "cyclic:5", "trivial:Z/5", 0, {{5}, {5}, {5}, {5}, {5}, {}}, ""},
      {"HS^*(Z2, Z/2)", T::SymCohomology, "cyclic:2", "trivial:Z/2", 0, {{2}, {2}, {}, {}, {}, {2}}, ""},
      {"HS^2(Z4, Z)", T::SymCohomology, "cyclic:4", "trivial:Z", 2, {{2}}, ""},
      {"HS^2(Z2, Z)", T::SymCohomology, "cyclic:2", "trivial:Z", 2, {{}}, ""},
      {"HS^4(Z2, Z)", T::SymCohomology, "cyclic:2", "trivial:Z", 4, {{}}, ""},
      {"HS^2(Z2, Z/2)", T::SymCohomology, "cyclic:2", "trivial:Z/2", 2, {{}}, ""},
      {"HS^2(Z2, Z/3)", T::SymCohomology, "cyclic:2", "trivial:Z/3", 2, {{}}, ""},
      {"H_lambda_3(Z4, Z)", T::ExtHomology, "cyclic:4", "trivial:Z", 3, {{2}}, "regression value from this engine"},
  };
  for (auto [g, m] : {std::pair{"cyclic:2", "trivial:Z/2"}, {"cyclic:3", "trivial:Z"}, {"cyclic:4", "trivial:Z"}}) {
    std::string tag = std::string("(") + g + ", " + m + ")";
    v.push_back({"H_clambda^0..1" + tag, T::CLambda, g, m, 0, {{}, {}}, ""});
    v.push_back({"H_slambda^0..4" + tag, T::SLambda, g, m, 0, {{}, {}, {}, {}, {}}, ""});
  }
  return v;
}

std::string render(const std::vector<Factors>& v) {
  std::string s;
  for (auto& f : v) {
    if (!s.empty()) s += " | ";
    json j = json::array();
    for (long x : f) j.push_back(x);
    s += render_factors(j);
  }
  return s;
}

template <class F>
CheckReport timed(const std::string& suite, const std::string& name, F&& body) {
  CheckReport r;
  r.suite = suite;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.computed = std::string("error: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckReport value_check(const ValueCheck& c, const VerifyOptions& opt, const ResultCache& cache) {
  return timed("paper", c.name, [&](CheckReport& r) {
    JobSpec spec;
    spec.theory = c.theory;
    spec.group_spec = c.group;
    spec.module_spec = c.module;
    spec.degrees = {c.lo, c.lo + static_cast<int>(c.expected.size()) - 1};
    spec.budget = opt.budget;
    std::vector<Factors> got;
    for (auto& rec : run_compute(spec, cache)) got.push_back(rec["invariant_factors"].get<Factors>());
    r.expected = render(c.expected);
    r.computed = render(got);
    r.ok = got == c.expected;
    r.note = c.note;
  });
}

CheckReport from_check(const std::string& suite, const std::string& name, const std::function<CheckResult()>& f) {
  return timed(suite, name, [&](CheckReport& r) {
    CheckResult c = f();
    r.ok = c.ok;
    r.expected = "holds";
    r.computed = c.ok ? "holds" : "fails: " + c.witness;
  });
}

std::vector<std::function<CheckReport()>> reference_checks(const VerifyOptions& opt, const ResultCache& cache) {
  std::vector<std::function<CheckReport()>> out;
  for (auto& c : reference_values()) out.push_back([c, &opt, &cache] { return value_check(c, opt, cache); });
  for (auto& [name, g] : catalog_groups()) {
    out.push_back([name, g, &opt] {
      return from_check("paper", "top exterior boundary closed form " + name, [&] {
        ExtModel m(g, g.order() - 1);
        if (opt.mutate_ext_sign) m.inject_sign_error(g.order() - 1, 1);
        return check_top_boundary(m);
      });
    });
    out.push_back([name, g] {
      return from_check("paper", "top exterior coboundary " + name, [&] {
        auto m = std::make_shared<ExtModel>(g, g.order() - 1);
        for (const GModule& a : {trivial_z(g), trivial_zn(g, 2), regular_module(g, Side::Left)}) {
          CheckResult r = check_top_coboundary(m, a);
          if (!r.ok) return r;
        }
        return CheckResult::pass();
      });
    });
  }
  out.push_back([] {
    return from_check("paper", "non-oriented catalog groups have even order", [] {
      for (auto& [name, g] : catalog_groups())
        if (!is_oriented(g) && g.order() % 2) return CheckResult::fail(name);
      return CheckResult::pass();
    });
  });
  return out;
}

CheckResult agree(const std::vector<Integer>& a, const std::vector<Integer>& b, const std::string& what) {
  if (a == b) return CheckResult::pass();
  return CheckResult::fail(what + ": " + describe_factors(a) + " vs " + describe_factors(b));
}

std::vector<std::function<CheckReport()>> property_checks(const VerifyOptions& opt) {
  std::vector<std::function<CheckReport()>> out;
  auto groups = catalog_groups();
  unsigned seed = opt.seed;
  for (auto& [name, g] : groups) {
    out.push_back([name, g] {
      return from_check("properties", "d o d = 0 " + name, [&] {
        int top = g.order() >= 8 ? 4 : std::min(g.order() + 1, 5);
        for (auto r : {check_dd_zero(BarModel(g, top, 1u << 20), top), check_dd_zero(SkewModel(g, top, 1u << 20), top),
                       check_dd_zero(ExtModel(g, std::min(top, g.order() - 1)), top),
                       check_dd_zero(SymDirectModel(g, std::min(top, g.order() - 1)), top)})
          if (!r.ok) return r;
        return CheckResult::pass();
      });
    });
    out.push_back([name, g] {
      return from_check("properties", "comparison identities " + name, [&] {
        for (int n = 0; n <= 3; ++n) {
          CheckResult r = check_comparison_identities(g, n);
          if (!r.ok) return r;
        }
        return CheckResult::pass();
      });
    });
    out.push_back([name, g, seed] {
      return from_check("properties", "orientation invariant under relabeling " + name, [&] {
        std::mt19937 rng(seed + static_cast<unsigned>(g.order()));
        for (int t = 0; t < 5; ++t) {
          std::vector<int> perm(g.order());
          std::iota(perm.begin(), perm.end(), 0);
          std::shuffle(perm.begin() + 1, perm.end(), rng);
          if (is_oriented(g.relabeled(perm)) != is_oriented(g)) return CheckResult::fail("relabeling changes orientation");
        }
        return CheckResult::pass();
      });
    });
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < 4; ++t) {
    auto& [name, g] = groups[rng() % groups.size()];
    long m = 2 + static_cast<long>(rng() % 4);
    out.push_back([name = name, g = g, m] {
      return from_check("properties", "symmetric homology: direct vs scaled " + name + ", Z/" + std::to_string(m), [&] {
        int top = std::min(3, g.order() - 1);
        GModule a = trivial_zn(g, m);
        TensorComplex d = tensor_over_G(a, std::make_shared<SymDirectModel>(g, top), top);
        TensorComplex s = tensor_over_G(a, std::make_shared<ExtModel>(g, top, true), top);
        for (int n = 0; n < top; ++n) {
          CheckResult r = agree(homology_factors(d.cx, n), homology_factors(s.cx, n), "degree " + std::to_string(n));
          if (!r.ok) return r;
        }
        return CheckResult::pass();
      });
    });
    out.push_back([name = name, g = g, m] {
      return from_check("properties", "exterior cohomology two routes " + name + ", Z/" + std::to_string(m), [&] {
        GModule a = trivial_zn(g, m);
        for (int n = 0; n <= 2; ++n) {
          CheckResult r = agree(theory_factors(Theory::ExtCohomology, a, n), ext_cohomology_via_functions(a, n),
                                "degree " + std::to_string(n));
          if (!r.ok) return r;
        }
        return CheckResult::pass();
      });
    });
  }
  for (int m = 2; m <= 6; ++m)
    out.push_back([m] {
      return from_check("properties", "bar complex vs periodic resolution Z" + std::to_string(m), [&] {
        FiniteGroup g = cyclic_group(m);
        for (const GModule& a : {trivial_z(g), trivial_zn(g, m)}) {
          auto bar = std::make_shared<BarModel>(g, 5, 1u << 20);
          ComplexOfFp t = tensor_over_G(a, bar, 5).cx, h = hom_over_G(bar, a, 5).cx;
          ComplexOfFp pt = cyclic_periodic_complex(a, Variance::Chain, 5);
          ComplexOfFp ph = cyclic_periodic_complex(a, Variance::Cochain, 5);
          for (int n = 0; n <= 4; ++n) {
            CheckResult r = agree(homology_factors(t, n), homology_factors(pt, n), "H_" + std::to_string(n));
            if (r.ok) r = agree(homology_factors(h, n), homology_factors(ph, n), "H^" + std::to_string(n));
            if (!r.ok) return r;
          }
        }
        return CheckResult::pass();
      });
    });
  struct Pair {
    std::string name;
    FiniteGroup g;
    std::vector<int> h;
  };
  for (auto& p : {Pair{"Z4>Z2", cyclic_group(4), {0, 2}}, Pair{"Z6>Z3", cyclic_group(6), {0, 2, 4}},
                  Pair{"Z6>Z2", cyclic_group(6), {0, 3}}})
    out.push_back([p] {
      return from_check("properties", "transfer identities " + p.name, [&] {
        for (const GModule& a : {trivial_z(p.g), regular_module(p.g, Side::Left)}) {
          TransferContext c = make_transfer_context(p.g, p.h, a);
          FunctionCochains cg(c.a, 3, 1u << 22), ch(c.ah, 3, 1u << 22);
          auto kg = hom_over_G(std::make_shared<BarModel>(p.g, 3), c.a, 3);
          auto kh = hom_over_G(std::make_shared<BarModel>(c.h.group, 3), c.ah, 3);
          for (int n = 0; n <= 2; ++n) {
            if (!(psi_matrix(kg, cg, n) * trace_equivariant(c, kh, kg, n) == tr_function(c, n) * psi_matrix(kh, ch, n)))
              return CheckResult::fail("Tr is not psi-conjugate to tr in degree " + std::to_string(n));
            if (!(cg.delta(n) * tr_function(c, n) == tr_function(c, n + 1) * ch.delta(n)))
              return CheckResult::fail("tr does not commute with delta in degree " + std::to_string(n));
            FpHom cr = transfer_on_cohomology(Theory::ClassicalCohomology, c, TransferMap::CoresRes, n);
            IntMatrix k = Integer(c.cosets.index()) * IntMatrix::identity(cr.source().gens());
            if (!cr.equals(FpHom(cr.source(), cr.source(), k)))
              return CheckResult::fail("cores o res is not the index in degree " + std::to_string(n));
          }
        }
        return CheckResult::pass();
      });
    });
  for (auto& [gname, m] : {std::pair{"cyclic:2", 2L}, {"cyclic:3", 0L}})
    out.push_back([gname = std::string(gname), m] {
      return from_check("properties", "long exact sequences " + gname, [&] {
        FiniteGroup g = group_from_spec(gname);
        CochainTower tw = cochain_tower(m ? trivial_zn(g, m) : trivial_z(g), 5);
        ComplexOfFp q1 = quotient_complex(tw.kl.cx, tw.k.cx, tw.kl_in_k);
        ComplexOfFp q2 = quotient_complex(tw.kl.cx, tw.ks.cx, tw.kl.incl);
        std::string where;
        if (!long_exact_sequence(tw.kl.cx, tw.k.cx, q1, tw.kl_in_k, 0, 3).exact(&where))
          return CheckResult::fail("K_lambda in K: " + where);
        if (!long_exact_sequence(tw.kl.cx, tw.ks.cx, q2, tw.kl.incl, 0, 3).exact(&where))
          return CheckResult::fail("K_lambda in KS: " + where);
        return CheckResult::pass();
      });
    });
  return out;
}

}  // namespace

std::vector<CheckReport> run_verify(const VerifyOptions& opt, const ResultCache& cache) {
  if (opt.suite != "paper" && opt.suite != "properties" && opt.suite != "all")
    throw UsageError("unknown suite: " + opt.suite);
  std::vector<std::function<CheckReport()>> checks;
  if (opt.suite != "properties") checks = reference_checks(opt, cache);
  if (opt.suite != "paper")
    for (auto& c : property_checks(opt)) checks.push_back(std::move(c));
  std::vector<CheckReport> out(checks.size());
  parallel_for(checks.size(), opt.jobs, [&](std::size_t i) { out[i] = checks[i](); });
  return out;
}

json reports_to_json(const std::vector<CheckReport>& r) {
  json a = json::array();
  std::size_t failed = 0;
  for (auto& c : r) {
    json j{{"suite", c.suite}, {"check", c.name},         {"expected", c.expected},
           {"computed", c.computed}, {"status", c.ok ? "pass" : "fail"}, {"ms", std::round(c.ms)}};
    if (!c.note.empty()) j["note"] = c.note;
    failed += c.ok ? 0 : 1;
    a.push_back(j);
  }
  return {{"checks", a}, {"total", r.size()}, {"failed", failed}};
}

namespace {

std::vector<Integer> canonical(std::vector<Integer> f) {
  return FpAbGroup::cyclic_sum(f).invariant_factors();
}

}  // namespace

json experiment_conjecture_cyclic(int max_n, const std::vector<std::string>& modules, std::size_t budget) {
  if (max_n < 2 || max_n > 8) throw UsageError("conjecture-cyclic takes 2 <= n <= 8");
  json rows = json::array();
  for (int n = 2; n <= max_n; ++n) {
    FiniteGroup g = cyclic_group(n);
    for (auto& ms : modules) {
      GModule a = parse_module(g, ms);
      if (!a.is_trivial_action()) throw UsageError("conjecture-cyclic needs trivial modules");
      std::vector<Integer> predicted;
      for (auto& d : a.underlying().invariant_factors()) {
        if (n % 2 == 0)
          predicted.push_back(d == 0 ? Integer(2) : Integer(gcd(d, Integer(2))));
        else if (d != 0)
          predicted.push_back(gcd(d, Integer(n)));
      }
      predicted = canonical(predicted);
      auto computed = theory_factors(Theory::ExtHomology, a, n - 1, budget);
      rows.push_back({{"n", n},
                      {"module", ms},
                      {"degree", n - 1},
                      {"computed", factors_to_json(computed)},
                      {"predicted", factors_to_json(predicted)},
                      {"agrees", computed == predicted}});
    }
  }
  return {{"experiment", "conjecture-cyclic"}, {"rows", rows}};
}

json experiment_cores_res_index(std::size_t budget) {
  json rows = json::array();
  struct Pair {
    std::string g, h;
    std::vector<int> elems;
  };
  for (auto& p : {Pair{"cyclic:4", "{0,2}", {0, 2}}, Pair{"cyclic:6", "{0,2,4}", {0, 2, 4}},
                  Pair{"cyclic:6", "{0,3}", {0, 3}}}) {
    FiniteGroup g = group_from_spec(p.g);
    for (auto& ms : {std::string("trivial:Z"), std::string("trivial:Z/2")})
      for (Theory t : {Theory::ClassicalCohomology, Theory::SymCohomology, Theory::ExtCohomology})
        for (int n = 0; n <= 2; ++n) {
          TransferContext c = make_transfer_context(g, p.elems, parse_module(g, ms));
          FpHom f = transfer_on_cohomology(t, c, TransferMap::CoresRes, n, budget);
          IntMatrix k = Integer(c.cosets.index()) * IntMatrix::identity(f.source().gens());
          rows.push_back({{"group", p.g},
                          {"subgroup", p.h},
                          {"module", ms},
                          {"theory", theory_name(t)},
                          {"degree", n},
                          {"index", c.cosets.index()},
                          {"group_factors", factors_to_json(f.source().invariant_factors())},
                          {"matrix", matrix_to_json(f.matrix())},
                          {"equals_index_multiplication", f.equals(FpHom(f.source(), f.source(), k))}});
        }
  }
  return {{"experiment", "cores-res-index"}, {"rows", rows}};
}

}  // namespace ghl::app
