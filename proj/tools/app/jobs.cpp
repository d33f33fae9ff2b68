#include "jobs.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <thread>

namespace ghl::app {

std::pair<int, int> parse_degree_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad degree range: " + s);
    return std::stoi(t);
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int n = to_int(s);
    return {n, n};
  }
  int a = to_int(s.substr(0, dots)), b = to_int(s.substr(dots + 2));
  if (a > b) throw UsageError("empty degree range: " + s);
  return {a, b};
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex m;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!err) err = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

std::vector<json> run_compute(const JobSpec& spec, const ResultCache& cache) {
  FiniteGroup g = parse_group(spec.group_spec);
  GModule a = parse_module(g, spec.module_spec);
  auto [lo, hi] = spec.degrees.value_or(std::pair<int, int>{0, default_window_top(spec.theory, g)});
  std::string theory = theory_name(spec.theory);
  std::vector<json> out(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(out.size(), spec.jobs, [&](std::size_t i) {
    int n = lo + static_cast<int>(i);
    std::string key = job_key(g, a, theory, n);
    json cached = spec.use_cache ? cache.get(key).value_or(json()) : json();
    json base{{"theory", theory}, {"group", spec.group_spec}, {"module", spec.module_spec}, {"degree", n}};
    if (cached.is_object()) {
      base["invariant_factors"] = cached.at("invariant_factors");
      base["runtime_ms"] = cached.at("runtime_ms");
    } else {
      auto t0 = std::chrono::steady_clock::now();
      auto f = theory_factors(spec.theory, a, n, spec.budget);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      base["invariant_factors"] = factors_to_json(f);
      base["runtime_ms"] = std::round(ms * 1000.0) / 1000.0;
      if (spec.use_cache)
        cache.put(key, {{"invariant_factors", base["invariant_factors"]}, {"runtime_ms", base["runtime_ms"]}});
    }
    out[i] = std::move(base);
  });
  return out;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw UsageError("unknown format: " + s);
}

std::string render_factors(const json& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (auto& f : factors) {
    std::string v = f.is_string() ? f.get<std::string>() : std::to_string(f.get<long>());
    if (!s.empty()) s += " + ";
    s += v == "0" ? "Z" : "Z/" + v;
  }
  return s;
}

namespace {

std::string factor_list(const json& factors) {
  std::string s;
  for (auto& f : factors) {
    if (!s.empty()) s += ' ';
    s += f.is_string() ? f.get<std::string>() : std::to_string(f.get<long>());
  }
  return s;
}

}  // namespace

void emit_records(const std::vector<json>& records, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json:
      out << json(records).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "theory,group,module,degree,invariant_factors,runtime_ms\n";
      for (auto& r : records)
        out << r["theory"].get<std::string>() << ',' << r["group"].get<std::string>() << ','
            << r["module"].get<std::string>() << ',' << r["degree"] << ",\"" << factor_list(r["invariant_factors"])
            << "\"," << r["runtime_ms"] << '\n';
      break;
    case Format::Table:
      for (auto& r : records)
        out << std::left << std::setw(22) << r["theory"].get<std::string>() << std::setw(6)
            << ("n=" + std::to_string(r["degree"].get<int>())) << render_factors(r["invariant_factors"]) << '\n';
      break;
  }
}

}  // namespace ghl::app
