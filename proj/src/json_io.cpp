#include "rsf/json_io.hpp"

#include "rsf/error.hpp"

namespace rsf {

namespace {

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw_parse("bad rational", j.dump());
  }
}

}  // namespace

Json monomial_to_json(const Monomial& m) {
  Json j = Json::object();
  for (const auto& [v, e] : m.entries()) j[v.name()] = e;
  return j;
}

Monomial monomial_from_json(const Json& j) {
  if (!j.is_object()) throw_parse("bad monomial", j.dump());
  Monomial m;
  for (const auto& [name, e] : j.items()) {
    if (!e.is_number_integer()) throw_parse("bad monomial", j.dump());
    m.set(VarId::named(name), e.get<int>());
  }
  return m;
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const Term& t : p.terms()) a.push_back({{"c", t.coef.get_str()}, {"e", monomial_to_json(t.mono)}});
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw_parse("bad polynomial", j.dump());
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("c") || !t.contains("e")) throw_parse("bad term", t.dump());
    terms.push_back(Term{monomial_from_json(t["e"]), rational_from_json(t["c"])});
  }
  return Poly::from_terms(std::move(terms));
}

Json to_json(const NiceRational& f) {
  Json den = Json::array();
  for (const auto& [fac, k] : f.den()) {
    if (fac.is_standard()) {
      den.push_back({{"kind", "standard"}, {"mono", monomial_to_json(fac.mono)}, {"pow", k}});
    } else {
      den.push_back({{"kind", "pivoted"},
                     {"zvar", fac.zvar.name()},
                     {"zexp", fac.zexp},
                     {"mono", monomial_to_json(fac.mono)},
                     {"pow", k}});
    }
  }
  return {{"num", poly_to_json(f.num())}, {"den", den}};
}

NiceRational nice_rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num")) throw_parse("bad nice rational", j.dump());
  Poly num = poly_from_json(j["num"]);
  Denominator den;
  if (j.contains("den")) {
    for (const Json& f : j["den"]) {
      std::string kind = f.value("kind", "standard");
      int k = f.value("pow", 1);
      if (k < 1) throw_parse("bad factor power", f.dump());
      Monomial m = monomial_from_json(f.at("mono"));
      if (kind == "standard") {
        den[BinomialFactor::standard(m)] += k;
      } else if (kind == "pivoted") {
        den[BinomialFactor::pivoted(VarId::named(f.at("zvar").get<std::string>()), f.at("zexp").get<int>(), m)] += k;
      } else {
        throw_parse("bad factor kind", kind);
      }
    }
  }
  return NiceRational(std::move(num), den);
}

Json to_json(const SchurExpansion& e) {
  Json entries = Json::array();
  for (const auto& [lambda, m] : e.entries) {
    Json mj = m.get_den() == 1 ? Json(m.get_num().get_si()) : Json(m.get_str());
    entries.push_back({{"lambda", lambda.parts()}, {"m", mj}});
  }
  return {{"N", e.n}, {"entries", entries}};
}

SchurExpansion schur_expansion_from_json(const Json& j) {
  SchurExpansion e;
  e.n = j.at("N").get<int>();
  for (const Json& x : j.at("entries"))
    e.entries[Partition(x.at("lambda").get<std::vector<int>>())] = rational_from_json(x.at("m"));
  return e;
}

}  // namespace rsf
