#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ghl/comparison.hpp"
#include "ghl/transfer.hpp"
#include "verify.hpp"

namespace ghl::app {

namespace {

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_subgroup(const FiniteGroup& g, const std::string& spec) {
  std::vector<int> gens;
  std::string item;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ',') {
      if (!item.empty()) {
        int x = g.find_label(item);
        if (x < 0 && item.find_first_not_of("0123456789") == std::string::npos) x = std::stoi(item);
        if (x < 0 || x >= g.order()) throw UsageError("unknown group element: " + item);
        gens.push_back(x);
      }
      item.clear();
    } else if (spec[i] != ' ' && spec[i] != '{' && spec[i] != '}') {
      item += spec[i];
    }
  }
  return generated_subgroup(g, gens);
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exterior and symmetric (co)homology of finite groups"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultBudget;
  unsigned jobs = 1;
  app.add_option("--budget", budget, "generator budget per complex")->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads")->capture_default_str();

  JobSpec spec;
  std::string theory, degrees, format = "json", emit_complex;
  bool no_cache = false;
  auto* compute = app.add_subcommand("compute", "(co)homology groups in a degree range");
  compute->add_option("--group", spec.group_spec)->required();
  compute->add_option("--theory", theory)->required();
  compute->add_option("--module", spec.module_spec)->capture_default_str();
  compute->add_option("--degrees", degrees, "a..b or n");
  compute->add_option("--format", format)->capture_default_str();
  compute->add_flag("--no-cache", no_cache);
  compute->add_option("--emit-complex", emit_complex, "write the complex for the top degree as JSON");

  std::string t_group, t_sub, t_module = "trivial:Z", t_theory = "classical-cohomology", t_map = "res", t_reps;
  int t_degree = 0;
  auto* transfer = app.add_subcommand("transfer", "restriction and corestriction on cohomology");
  transfer->add_option("--group", t_group)->required();
  transfer->add_option("--subgroup", t_sub, "generating elements, comma separated")->required();
  transfer->add_option("--module", t_module)->capture_default_str();
  transfer->add_option("--theory", t_theory)->capture_default_str();
  transfer->add_option("--map", t_map)->capture_default_str();
  transfer->add_option("--degree", t_degree)->required();
  transfer->add_option("--reps", t_reps, "coset representatives, comma separated");

  std::string o_group;
  auto* orientation = app.add_subcommand("orientation", "Cayley sign character");
  orientation->add_option("--group", o_group)->required();

  VerifyOptions vopt;
  std::string mutate;
  auto* verify = app.add_subcommand("verify", "reference values and property checks");
  verify->add_option("--suite", vopt.suite)->capture_default_str();
  verify->add_option("--seed", vopt.seed)->capture_default_str();
  verify->add_option("--mutate", mutate, "ext-sign: inject a sign error into the exterior boundary");

  std::string e_name;
  int e_max_n = 8;
  std::vector<std::string> e_modules{"trivial:Z", "trivial:Z/2", "trivial:Z/3"};
  auto* experiment = app.add_subcommand("experiment", "non-asserting tables");
  experiment->add_option("name", e_name, "conjecture-cyclic | cores-res-index")->required();
  experiment->add_option("--max-n", e_max_n)->capture_default_str();
  experiment->add_option("--module", e_modules);

  auto* catalog = app.add_subcommand("catalog", "groups used by the checks");

  auto* cache_cmd = app.add_subcommand("cache", "result cache maintenance");
  cache_cmd->require_subcommand(1);
  auto* gc = cache_cmd->add_subcommand("gc", "remove stale entries");
  auto* stats = cache_cmd->add_subcommand("stats", "entry count and size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ResultCache cache(ResultCache::default_dir(), !no_cache);
  try {
    if (*compute) {
      spec.theory = as_usage([&] { return parse_theory(theory); });
      Format f = parse_format(format);
      FiniteGroup g = as_usage([&] { return parse_group(spec.group_spec); });
      GModule a = as_usage([&] { return parse_module(g, spec.module_spec); });
      if (!degrees.empty()) spec.degrees = parse_degree_range(degrees);
      spec.budget = budget;
      spec.jobs = jobs;
      spec.use_cache = !no_cache;
      auto records = run_compute(spec, cache);
      emit_records(records, f, out);
      if (!emit_complex.empty()) {
        int top = spec.degrees ? spec.degrees->second : default_window_top(spec.theory, g);
        std::ofstream o(emit_complex);
        o << complex_to_json(theory_complex(spec.theory, a, top, budget)).dump() << '\n';
        if (!o) throw Error("cannot write " + emit_complex);
      }
      return 0;
    }
    if (*transfer) {
      Theory t = as_usage([&] { return parse_theory(t_theory); });
      if (!has_transfer(t)) throw UsageError("transfer needs a cohomology theory with transfer: " + t_theory);
      TransferMap m = as_usage([&] { return parse_transfer_map(t_map); });
      FiniteGroup g = as_usage([&] { return parse_group(t_group); });
      GModule a = as_usage([&] { return parse_module(g, t_module); });
      std::vector<int> h = parse_subgroup(g, t_sub);
      std::vector<int> reps;
      if (!t_reps.empty()) {
        std::string item;
        for (std::size_t i = 0; i <= t_reps.size(); ++i) {
          if (i == t_reps.size() || t_reps[i] == ',') {
            int x = g.find_label(item);
            if (x < 0) throw UsageError("unknown group element: " + item);
            reps.push_back(x);
            item.clear();
          } else {
            item += t_reps[i];
          }
        }
      }
      TransferContext c = as_usage([&] { return make_transfer_context(g, h, a, reps); });
      FpHom f = transfer_on_cohomology(t, c, m, t_degree, budget);
      json hj = json::array();
      for (int x : h) hj.push_back(g.label(x));
      out << json{{"map", transfer_map_name(m)},
                  {"theory", theory_name(t)},
                  {"group", t_group},
                  {"subgroup", hj},
                  {"module", t_module},
                  {"degree", t_degree},
                  {"index", c.cosets.index()},
                  {"source", group_to_json(f.source())},
                  {"target", group_to_json(f.target())},
                  {"matrix", matrix_to_json(f.matrix())}}
                 .dump(2)
          << '\n';
      return 0;
    }
    if (*orientation) {
      FiniteGroup g = as_usage([&] { return parse_group(o_group); });
      out << (is_oriented(g) ? "oriented" : "non-oriented") << '\n';
      for (int x = 0; x < g.order(); ++x) out << g.label(x) << '\t' << (cayley_sign(g, x) > 0 ? "+1" : "-1") << '\n';
      return 0;
    }
    if (*verify) {
      if (!mutate.empty() && mutate != "ext-sign") throw UsageError("unknown mutation: " + mutate);
      vopt.mutate_ext_sign = mutate == "ext-sign";
      vopt.jobs = jobs;
      vopt.budget = budget;
      json report = reports_to_json(run_verify(vopt, cache));
      out << report.dump(2) << '\n';
      return report["failed"].get<std::size_t>() == 0 ? 0 : 1;
    }
    if (*experiment) {
      json r;
      if (e_name == "conjecture-cyclic")
        r = experiment_conjecture_cyclic(e_max_n, e_modules, budget);
      else if (e_name == "cores-res-index")
        r = experiment_cores_res_index(budget);
      else
        throw UsageError("unknown experiment: " + e_name);
      out << r.dump(2) << '\n';
      return 0;
    }
    if (*catalog) {
      for (auto& [name, g] : catalog_groups())
        out << name << "\torder " << g.order() << '\t' << (is_oriented(g) ? "oriented" : "non-oriented") << '\n';
      return 0;
    }
    if (*gc) {
      out << "removed " << cache.gc() << " files from " << cache.dir().string() << '\n';
      return 0;
    }
    if (*stats) {
      auto s = cache.stats();
      out << json{{"dir", cache.dir().string()}, {"entries", s.entries}, {"bytes", s.bytes}, {"stale", s.stale}}.dump()
          << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "resource error: " << e.what() << " (raise --budget)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ghl::app
