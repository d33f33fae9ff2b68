#pragma once

#include <functional>
#include <iosfwd>

#include "cache.hpp"
#include "ghl/theories.hpp"

namespace ghl::app {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct JobSpec {
  Theory theory = Theory::ClassicalHomology;
  std::string group_spec, module_spec = "trivial:Z";
  std::optional<std::pair<int, int>> degrees;  // default window when empty
  std::size_t budget = kDefaultBudget;
  unsigned jobs = 1;
  bool use_cache = true;
};

/// "a..b" or "n".
std::pair<int, int> parse_degree_range(const std::string& s);

/// One record per degree in ascending order.  Cached records are returned verbatim.
std::vector<json> run_compute(const JobSpec& spec, const ResultCache& cache);

/// Runs f(i) for i in [0, n) on up to `jobs` threads; the first exception is rethrown.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

enum class Format { Json, Csv, Table };
Format parse_format(const std::string& s);
void emit_records(const std::vector<json>& records, Format f, std::ostream& out);

/// Z/2 + Z style rendering of invariant factors; "0" for the trivial group.
std::string render_factors(const json& factors);

}  // namespace ghl::app
