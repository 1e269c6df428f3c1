#pragma once

// JSON forms of the library's value types. Objects keep insertion order so
// basis elements and combinations print in key order.

#include <json.hpp>

#include "cyclofix/cosets.hpp"
#include "cyclofix/fixedpoints.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

using Json = nlohmann::ordered_json;

// {conductor, coeffs: ["p/q", ...]} with phi(conductor) entries.
void to_json(Json& j, const CycloNum& a);
void from_json(const Json& j, CycloNum& a);

// {conductor, coeffs: [[...], ...]}, lowest degree first.
void to_json(Json& j, const Poly& p);
void from_json(const Json& j, Poly& p);

// {x_shift, num, den}
void to_json(Json& j, const RationalFunction& R);
void from_json(const Json& j, RationalFunction& R);

// {n_min, coeffs: [CycloNum, ...]}
void to_json(Json& j, const LaurentPrefix& a);
void from_json(const Json& j, LaurentPrefix& a);

void to_json(Json& j, const CosetRecord& c);
void from_json(const Json& j, CosetRecord& c);

// rows carry null ord / beta_mod_r when gcd(r, s) != 1.
void to_json(Json& j, const OmegaTable& t);
void from_json(const Json& j, OmegaTable& t);

void to_json(Json& j, const PsiElement& e);
void from_json(const Json& j, PsiElement& e);

// elements: {"r:n": PsiElement, ...}
void to_json(Json& j, const FixedBasis& b);
void from_json(const Json& j, FixedBasis& b);

// combo: {"r:n": CycloNum, ...}
void to_json(Json& j, const Decomposition& d);
void from_json(const Json& j, Decomposition& d);

}  // namespace cyclofix
