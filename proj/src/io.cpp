#include "gaunt/io.hpp"

#include <limits>

namespace gaunt {

namespace {

Json coefficient(const Integer& k) {
  if (k >= std::numeric_limits<std::int64_t>::min() && k <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(k);
  return k.str();
}

Integer coefficient_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

Json to_json(const Complex& x) {
  Json j;
  j["name"] = x.name();
  j["generators"] = Json::array();
  j["differential"] = Json::object();
  for (int d = 0; d <= x.top_degree(); ++d) {
    Json names = Json::array();
    for (std::size_t i = 0; i < x.count(d); ++i) {
      names.push_back(x.generator_name(d, i));
      if (d == 0) continue;
      Json terms = Json::array();
      const Chain& b = x.boundary(d, i);
      for (std::size_t k = 0; k < b.width(); ++k)
        if (b[k] != 0) terms.push_back(Json::array({coefficient(b[k]), x.generator_name(d - 1, k)}));
      j["differential"][x.generator_name(d, i)] = terms;
    }
    j["generators"].push_back(names);
  }
  if (x.endpoints())
    j["endpoints"] = Json::array({x.generator_name(0, x.endpoints()->bottom),
                                  x.generator_name(0, x.endpoints()->top)});
  return j;
}

Complex complex_from_json(const Json& j) {
  ComplexBuilder b(j.value("name", std::string("unnamed")));
  const Json& gens = j.at("generators");
  const Json diff = j.value("differential", Json::object());
  for (std::size_t d = 0; d < gens.size(); ++d)
    for (const auto& name : gens[d]) {
      std::vector<ComplexBuilder::Term> terms;
      const auto n = name.get<std::string>();
      if (diff.contains(n))
        for (const auto& t : diff.at(n)) terms.emplace_back(coefficient_from(t.at(0)), t.at(1).get<std::string>());
      b.add(static_cast<int>(d), n, std::move(terms));
    }
  if (j.contains("endpoints"))
    b.endpoints(j["endpoints"].at(0).get<std::string>(), j["endpoints"].at(1).get<std::string>());
  return b.build();
}

Json to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  j["leq"] = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) j["leq"].push_back(Json::array({a, b}));
  return j;
}

Poset poset_from_json(const Json& j) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (const auto& e : j.at("leq")) rel.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return Poset::from_preorder(j.at("elements").get<std::vector<std::string>>(), rel);
}

Json to_json(const Complex& x, const CellTable& t) {
  Json j = Json::array();
  for (const auto& [lo, hi] : t.entries) j.push_back(Json::array({x.format(lo), x.format(hi)}));
  return j;
}

CellTable table_from_json(const Complex& x, const Json& j) {
  CellTable t;
  int k = 0;
  for (const auto& e : j) {
    t.entries.emplace_back(parse_chain(x, k, e.at(0).get<std::string>()),
                           parse_chain(x, k, e.at(1).get<std::string>()));
    ++k;
  }
  return t;
}

Json to_json(const StratifiedSimplicialSet& s) {
  Json j;
  j["dimension"] = s.dimension();
  j["simplices"] = Json::array();
  for (int m = 0; m <= s.dimension(); ++m) {
    Json level = Json::array();
    for (std::size_t k = 0; k < s.count(m); ++k) {
      Json e;
      Json faces = Json::array(), degens = Json::array();
      for (int i = 0; m >= 1 && i <= m; ++i) faces.push_back(s.face(m, k, i));
      for (int i = 0; m < s.dimension() && i <= m; ++i) degens.push_back(s.degeneracy(m, k, i));
      e["faces"] = faces;
      e["degeneracies"] = degens;
      e["thin"] = s.thin(m, k);
      e["degenerate"] = s.degenerate(m, k);
      level.push_back(e);
    }
    j["simplices"].push_back(level);
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gaunt
