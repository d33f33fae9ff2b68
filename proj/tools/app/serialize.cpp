#include "serialize.hpp"

#include <algorithm>
#include <fstream>

namespace ghl::app {

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw Error("not an integer: " + j.get<std::string>());
    return v;
  }
  throw Error("expected an integer, got " + j.dump());
}

json factors_to_json(const std::vector<Integer>& f) {
  json a = json::array();
  for (auto& x : f) a.push_back(integer_to_json(x));
  return a;
}

json triplets_to_json(const IntMatrix& m) {
  json t = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (auto& [i, v] : m.column(j).entries()) t.push_back({i, j, v.get_str()});
  return t;
}

json matrix_to_json(const IntMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"triplets", triplets_to_json(m)}};
}

namespace {

IntMatrix from_triplet_list(std::size_t rows, std::size_t cols, const json& t) {
  if (!t.is_array()) throw Error("triplets must be an array");
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> trip;
  for (auto& e : t) {
    if (!e.is_array() || e.size() != 3) throw Error("bad triplet " + e.dump());
    auto i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>();
    if (i >= rows || j >= cols) throw Error("triplet out of range " + e.dump());
    trip.emplace_back(i, j, integer_from_json(e[2]));
  }
  return IntMatrix::from_triplets(rows, cols, trip);
}

}  // namespace

IntMatrix matrix_from_json(const json& j) {
  return from_triplet_list(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(), j.at("triplets"));
}

json group_to_json(const FpAbGroup& g) { return {{"invariant_factors", factors_to_json(g.invariant_factors())}}; }

FpAbGroup ab_group_from_json(const json& j) {
  std::vector<Integer> f;
  for (auto& x : j.at("invariant_factors")) f.push_back(integer_from_json(x));
  return FpAbGroup::cyclic_sum(f);
}

json finite_group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}};
}

FiniteGroup finite_group_from_json(const json& j) {
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  int order = j.at("order").get<int>();
  if (static_cast<int>(table.size()) != order) throw Error("group table does not match the order");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j["labels"].get<std::vector<std::string>>();
  else
    for (int i = 0; i < order; ++i) labels.push_back(std::to_string(i));
  return FiniteGroup(std::move(table), std::move(labels));
}

json module_to_json(const GModule& m) {
  std::size_t r = m.rank();
  std::vector<Integer> orders(r, 0);
  bool diagonal = true;
  for (auto& b : m.relations().basis()) {
    if (b.entries().size() != 1) diagonal = false;
    else orders[b.last_index()] = b.last_value();
  }
  std::size_t free_rank = 0;
  while (free_rank < r && orders[free_rank] == 0) ++free_rank;
  for (std::size_t i = free_rank; i < r; ++i)
    if (orders[i] == 0) diagonal = false;
  json j;
  j["side"] = m.side() == Side::Left ? "left" : "right";
  if (diagonal) {
    j["free_rank"] = free_rank;
    j["torsion"] = factors_to_json(std::vector<Integer>(orders.begin() + free_rank, orders.end()));
  } else {
    j["generators"] = r;
    j["relations"] = triplets_to_json(m.relations().basis_matrix());
  }
  json act = json::object();
  for (int x = 0; x < m.group().order(); ++x) act[m.group().label(x)] = triplets_to_json(m.act(x));
  j["action"] = act;
  return j;
}

GModule module_from_json(const FiniteGroup& g, const json& j) {
  Side side = j.value("side", std::string("right")) == "left" ? Side::Left : Side::Right;
  FpAbGroup base;
  if (j.contains("relations")) {
    std::size_t r = j.at("generators").get<std::size_t>();
    std::size_t cols = 0;
    for (auto& e : j["relations"]) cols = std::max(cols, e.at(1).get<std::size_t>() + 1);
    IntMatrix rel = from_triplet_list(r, cols, j["relations"]);
    base = FpAbGroup(r, Lattice::column_span(rel));
  } else {
    std::vector<Integer> orders(j.value("free_rank", std::size_t{0}), Integer(0));
    for (auto& t : j.value("torsion", json::array())) {
      Integer v = integer_from_json(t);
      if (v <= 0) throw Error("torsion orders must be positive");
      orders.push_back(v);
    }
    base = FpAbGroup::cyclic_sum(orders);
  }
  std::size_t r = base.gens();
  std::vector<IntMatrix> act(g.order(), IntMatrix::identity(r));
  const json& a = j.at("action");
  for (auto it = a.begin(); it != a.end(); ++it) {
    int x = g.find_label(it.key());
    if (x < 0) throw Error("action names an unknown element: " + it.key());
    act[x] = it->is_object() ? matrix_from_json(*it) : from_triplet_list(r, r, *it);
  }
  GModule m(g, base, std::move(act), side);
  m.set_description("file");
  return m;
}

json complex_to_json(const ComplexOfFp& c) {
  json out = json::array();
  for (int n = 0; n <= c.top(); ++n) {
    json rec{{"degree", n}, {"group", factors_to_json(c.group(n).invariant_factors())}};
    rec["boundary"] = c.has_out(n) ? triplets_to_json(c.out(n)) : json(nullptr);
    out.push_back(rec);
  }
  return out;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace

FiniteGroup parse_group(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return finite_group_from_json(read_json_file(spec.substr(5)));
  return group_from_spec(spec);
}

GModule parse_module(const FiniteGroup& g, const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    GModule m = module_from_json(g, read_json_file(spec.substr(5)));
    m.set_description(spec);
    return m;
  }
  return module_from_spec(g, spec, Side::Right);
}

}  // namespace ghl::app
