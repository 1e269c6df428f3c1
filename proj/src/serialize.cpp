#include "cyclofix/serialize.hpp"

#include <string>
#include <vector>

namespace cyclofix {

void to_json(Json& j, const CycloNum& a) {
  Json coeffs = Json::array();
  for (const Rat& q : a.coeffs()) coeffs.push_back(to_string(q));
  j = Json{{"conductor", a.conductor()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, CycloNum& a) {
  const long m = j.at("conductor").get<long>();
  std::vector<Rat> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
  a = CycloNum(m, coeffs);
}

void to_json(Json& j, const Poly& p) {
  Json coeffs = Json::array();
  for (const CycloNum& c : p.coeffs()) coeffs.push_back(Json(c).at("coeffs"));
  j = Json{{"conductor", p.conductor()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const Json& j, Poly& p) {
  const long m = j.at("conductor").get<long>();
  std::vector<CycloNum> coeffs;
  for (const auto& c : j.at("coeffs")) {
    coeffs.push_back(Json{{"conductor", m}, {"coeffs", c}}.get<CycloNum>());
  }
  p = Poly(std::move(coeffs)).promote(m);
}

void to_json(Json& j, const RationalFunction& R) {
  j = Json{{"x_shift", R.x_shift()}, {"num", R.num()}, {"den", R.den()}};
}

void from_json(const Json& j, RationalFunction& R) {
  R = RationalFunction(j.at("num").get<Poly>(), j.at("den").get<Poly>(),
                       j.at("x_shift").get<long>());
}

void to_json(Json& j, const LaurentPrefix& a) {
  j = Json{{"n_min", a.n_min}, {"coeffs", a.coeffs}};
}

void from_json(const Json& j, LaurentPrefix& a) {
  a.n_min = j.at("n_min").get<long>();
  a.coeffs = j.at("coeffs").get<std::vector<CycloNum>>();
}

void to_json(Json& j, const CosetRecord& c) {
  j = Json{{"s", c.s}, {"r", c.r}, {"rep", c.rep}, {"ord", c.ord}, {"members", c.members}};
}

void from_json(const Json& j, CosetRecord& c) {
  c.s = j.at("s").get<long>();
  c.r = j.at("r").get<long>();
  c.rep = j.at("rep").get<long>();
  c.ord = j.at("ord").get<long>();
  c.members = j.at("members").get<std::vector<long>>();
}

void to_json(Json& j, const OmegaTable& t) {
  Json rows = Json::array();
  for (const OmegaRow& row : t.rows) {
    Json jr{{"r", row.r}};
    jr["ord"] = row.coprime ? Json(row.ord) : Json(nullptr);
    jr["beta_mod_r"] = row.coprime ? Json(row.beta_mod_r) : Json(nullptr);
    jr["distinguished"] = row.distinguished;
    rows.push_back(std::move(jr));
  }
  j = Json{{"s", t.s}, {"t", t.t}, {"max_r", t.max_r}, {"members", t.members},
           {"rows", std::move(rows)}};
}

void from_json(const Json& j, OmegaTable& t) {
  t.s = j.at("s").get<long>();
  t.t = j.at("t").get<long>();
  t.max_r = j.at("max_r").get<long>();
  t.members = j.at("members").get<std::vector<long>>();
  t.rows.clear();
  for (const auto& jr : j.at("rows")) {
    OmegaRow row;
    row.r = jr.at("r").get<long>();
    row.coprime = !jr.at("ord").is_null();
    if (row.coprime) {
      row.ord = jr.at("ord").get<long>();
      row.beta_mod_r = jr.at("beta_mod_r").get<long>();
    }
    row.distinguished = jr.at("distinguished").get<bool>();
    t.rows.push_back(row);
  }
}

void to_json(Json& j, const PsiElement& e) {
  Json terms = Json::array();
  for (const PsiTerm& term : e.terms) terms.push_back(Json{{"scale", term.scale}, {"pole", term.pole}});
  j = Json{{"s", e.s},          {"t", e.t},       {"r", e.r},
           {"n", e.n},          {"key", e.key().str()}, {"terms", std::move(terms)},
           {"reduced", e.reduced}, {"text", canonical_text(e.reduced)}};
}

void from_json(const Json& j, PsiElement& e) {
  e.s = j.at("s").get<long>();
  e.t = j.at("t").get<long>();
  e.r = j.at("r").get<long>();
  e.n = j.at("n").get<long>();
  e.terms.clear();
  for (const auto& jt : j.at("terms")) {
    e.terms.push_back({jt.at("scale").get<CycloNum>(), jt.at("pole").get<CycloNum>()});
  }
  e.reduced = j.at("reduced").get<RationalFunction>();
}

void to_json(Json& j, const FixedBasis& b) {
  Json elements = Json::object();
  for (const PsiElement& e : b.elements) elements[e.key().str()] = e;
  j = Json{{"s", b.s},         {"t", b.t},         {"t_frame", b.t_frame},
           {"u", b.u},         {"max_r", b.max_r}, {"elements", std::move(elements)}};
}

void from_json(const Json& j, FixedBasis& b) {
  b.s = j.at("s").get<long>();
  b.t = j.at("t").get<long>();
  b.t_frame = j.at("t_frame").get<long>();
  b.u = j.at("u").get<long>();
  b.max_r = j.at("max_r").get<long>();
  b.elements.clear();
  for (const auto& [key, value] : j.at("elements").items()) {
    b.elements.push_back(value.get<PsiElement>());
    if (b.elements.back().key().str() != key) {
      throw nlohmann::json::other_error::create(501, "basis key " + key + " does not match element",
                                                &j);
    }
  }
}

void to_json(Json& j, const Decomposition& d) {
  Json combo = Json::object();
  for (const auto& [key, coeff] : d.combo) combo[key.str()] = coeff;
  j = Json{{"s", d.s},       {"t", d.t},
           {"t_frame", d.t_frame}, {"u", d.u},
           {"combo", std::move(combo)}, {"residual_ok", d.residual_ok}};
}

void from_json(const Json& j, Decomposition& d) {
  d.s = j.at("s").get<long>();
  d.t = j.at("t").get<long>();
  d.t_frame = j.at("t_frame").get<long>();
  d.u = j.at("u").get<long>();
  d.combo.clear();
  for (const auto& [key, value] : j.at("combo").items()) {
    d.combo.emplace_back(BasisKey::parse(key), value.get<CycloNum>());
  }
  d.residual_ok = j.at("residual_ok").get<bool>();
}

}  // namespace cyclofix
