#include "heckecell/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace heckecell {

Json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer in JSON");
}

Json to_json(const LaurentPoly& p) {
  Json e = Json::array(), c = Json::array();
  for (const auto& t : p.terms()) {
    e.push_back(t.exp);
    c.push_back(to_json(t.coeff));
  }
  return Json{{"e", e}, {"c", c}};
}

LaurentPoly poly_from_json(const Json& j) {
  const auto& e = j.at("e");
  const auto& c = j.at("c");
  if (e.size() != c.size()) throw std::invalid_argument("LaurentPoly JSON: length mismatch");
  std::vector<int> exps;
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < e.size(); ++i) {
    exps.push_back(e[i].get<int>());
    coeffs.push_back(integer_from_json(c[i]));
  }
  return LaurentPoly::from_terms(exps, coeffs);
}

Json to_json(const IntMatrix& m) {
  Json data = Json::array();
  for (const auto& x : m.data()) data.push_back(to_json(x));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& data = j.at("data");
  if (data.size() != m.data().size()) throw std::invalid_argument("IntMatrix JSON: wrong data length");
  for (std::size_t i = 0; i < data.size(); ++i) m.data()[i] = integer_from_json(data[i]);
  return m;
}

Json to_json(const PolyMatrix& m) {
  Json data = Json::array();
  for (const auto& x : m.data()) data.push_back(to_json(x));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  PolyMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& data = j.at("data");
  if (data.size() != m.data().size()) throw std::invalid_argument("PolyMatrix JSON: wrong data length");
  for (std::size_t i = 0; i < data.size(); ++i) m.data()[i] = poly_from_json(data[i]);
  return m;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json item{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) item["witness"] = c.witness;
    checks.push_back(item);
  }
  return Json{{"passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace heckecell
