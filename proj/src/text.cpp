#include <cctype>
#include <optional>
#include <string>

#include "cyclofix/error.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

namespace {

std::string power_suffix(const char* var, std::size_t i) {
  if (i == 0) return "";
  return i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i);
}

std::string pole_factor(long r, long c) {
  if (r == 1) return "1 - x";
  if (r == 2) return "1 + x";
  return c == 1 ? "1 - w{" + std::to_string(r) + "}*x"
                : "1 - w{" + std::to_string(r) + "}^" + std::to_string(c) + "*x";
}

// Appends "+ term" / "- term" handling the sign of rational coefficients.
void append_signed(std::string& out, const CycloNum& c, const std::string& tail,
                   bool tail_is_product) {
  if (c.is_rational()) {
    const Rat q = c.to_rat();
    const bool negative = sgn(q) < 0;
    const Rat mag = abs(q);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (tail.empty()) {
      out += to_string(mag);
    } else if (mag == 1 && tail_is_product) {
      out += tail;
    } else if (mag.get_den() == 1 || !tail_is_product) {
      out += to_string(mag) + (tail_is_product ? "*" : "") + tail;
    } else {
      out += "(" + to_string(mag) + ")*" + tail;
    }
    return;
  }
  if (!out.empty()) out += " + ";
  out += coefficient_text(c);
  if (!tail.empty()) out += (tail_is_product ? "*" : "") + tail;
}

}  // namespace

std::string coefficient_text(const CycloNum& c) {
  if (c.is_rational()) return to_string(c.to_rat());
  const CycloNum small = minimal_conductor(c);
  return "(" + to_text(small, "w{" + std::to_string(small.conductor()) + "}") + ")";
}

std::string poly_text(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const CycloNum& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    append_signed(out, c, power_suffix("x", i), true);
  }
  return out.empty() ? "0" : out;
}

std::string fraction_text(const RationalFunction& R) {
  if (R.is_zero()) return "0";
  const long k = R.x_shift();
  const bool bare = R.num().degree() == 0 && R.num().coeff(0).is_rational();
  std::string top = bare ? poly_text(R.num()) : "(" + poly_text(R.num()) + ")";
  if (k > 0) {
    const std::string xs = power_suffix("x", static_cast<std::size_t>(k));
    top = R.num() == Poly::one() ? xs : top + "*" + xs;
  }
  const std::string xs = k < 0 ? power_suffix("x", static_cast<std::size_t>(-k)) : "";
  if (R.den().degree() == 0) return xs.empty() ? top : top + "/" + xs;
  const std::string den = "(" + poly_text(R.den()) + ")";
  return top + "/" + (xs.empty() ? den : "(" + den + "*" + xs + ")");
}

std::string canonical_text(const RationalFunction& R) {
  if (R.is_zero()) return "0";
  if (R.den().degree() == 0) {
    // Laurent polynomial: one term per power, negative powers as c/x^k.
    const CycloNum scale = R.den().coeff(0).inverse();
    std::string out;
    for (std::size_t i = 0; i < R.num().coeffs().size(); ++i) {
      const CycloNum c = R.num().coeffs()[i] * scale;
      if (c.is_zero()) continue;
      const long e = R.x_shift() + static_cast<long>(i);
      if (e >= 0) {
        append_signed(out, c, power_suffix("x", static_cast<std::size_t>(e)), true);
      } else {
        append_signed(out, c, "/" + power_suffix("x", static_cast<std::size_t>(-e)), false);
      }
    }
    return out;
  }
  if (R.x_shift() < 0) return fraction_text(R);
  std::optional<PartialFractions> pf;
  try {
    pf = partial_fractions(R);
  } catch (const Error&) {
    return fraction_text(R);
  }
  std::string out;
  const Poly& poly = pf->polynomial_part;
  for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
    const CycloNum& c = poly.coeffs()[i];
    if (!c.is_zero()) append_signed(out, c, power_suffix("x", i), true);
  }
  for (const PoleTerm& t : pf->terms) {
    append_signed(out, t.residue, "/(" + pole_factor(t.r, t.c) + ")", false);
  }
  return out;
}

}  // namespace cyclofix
