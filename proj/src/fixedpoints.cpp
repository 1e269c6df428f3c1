#include "cyclofix/fixedpoints.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "cyclofix/cosets.hpp"
#include "cyclofix/decimation.hpp"

namespace cyclofix {

namespace {

void require_psi_pair(long s, long t) {
  if (s < 2 || t < 0) {
    throw std::invalid_argument("psi needs s >= 2 and t >= 0 (got s=" + std::to_string(s) +
                                ", t=" + std::to_string(t) + ")");
  }
}

// Exponent e with x^e the r = 0 element in frame t, if there is one.
std::optional<long> monomial_element(long s, long t) {
  if (t == 0) return 0;
  if (t == s - 1) return -1;
  return std::nullopt;
}

PsiElement one_over_one_minus_x(long s, long t, long r, long n) {
  PsiElement e{s, t, r, n, {{CycloNum(1), CycloNum(1)}}, {}};
  e.reduced = RationalFunction::coprime(Poly::one(), Poly({CycloNum(1), CycloNum(-1)}));
  return e;
}

std::vector<std::pair<CycloNum, CycloNum>> as_pairs(const std::vector<PsiTerm>& terms,
                                                    const CycloNum& coeff) {
  std::vector<std::pair<CycloNum, CycloNum>> out;
  out.reserve(terms.size());
  for (const PsiTerm& term : terms) out.emplace_back(coeff * term.scale, term.pole);
  return out;
}

}  // namespace

BasisKey BasisKey::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("basis key must look like r:n");
  return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
}

const char* to_string(FixedPointFailure failure) {
  switch (failure) {
    case FixedPointFailure::negative_support:
      return "negative support";
    case FixedPointFailure::non_cyclotomic_pole:
      return "non-cyclotomic pole";
    case FixedPointFailure::repeated_pole:
      return "repeated pole";
    case FixedPointFailure::non_distinguished:
      return "non-distinguished r";
    case FixedPointFailure::coset_pattern_mismatch:
      return "coset pattern mismatch";
    case FixedPointFailure::illegal_polynomial_part:
      return "polynomial part illegal";
  }
  return "unknown";
}

std::pair<long, long> shift_reduce(long s, long t) {
  if (s < 2) throw std::invalid_argument("shift_reduce needs s >= 2");
  const long q = s - 1;
  long u = t / q;
  long t_prime = t % q;
  if (t_prime < 0) {
    t_prime += q;
    --u;
  }
  return {t_prime, u};
}

std::pair<long, long> basis_frame(long s, long t) {
  if (s >= 2 && t >= 0 && t <= s - 1) return {t, 0};
  return shift_reduce(s, t);
}

RationalFunction transport(const RationalFunction& R, long u) {
  if (R.is_zero()) return R;
  return R * RationalFunction::monomial(-u);
}

PsiElement psi(long s, long t, long r, long n) {
  require_psi_pair(s, t);
  if (r < 0 || n < 0) throw BadIndex("psi indices must be nonnegative");
  const std::optional<long> mono = monomial_element(s, t);
  if (r == 0 ? !mono : !is_distinguished(r, s, t)) {
    throw NotDistinguished(std::to_string(r) + " is not distinguished for (s,t) = (" +
                           std::to_string(s) + "," + std::to_string(t) + ")");
  }
  if (r == 0) return PsiElement{s, t, 0, n, {}, RationalFunction::monomial(*mono)};
  if (n == 0 || r == 1) return one_over_one_minus_x(s, t, r, n);
  if (std::gcd(n, r) != 1) {
    throw BadIndex("gcd(" + std::to_string(n) + ", " + std::to_string(r) + ") != 1");
  }
  PsiElement e{s, t, r, n, {}, {}};
  const long order = ord(s, r);
  const long sm = s % r;
  long beta_j = 0;       // beta_{s,t}(j) mod r
  long power = n % r;    // n s^j mod r
  for (long j = 1; j <= order; ++j) {
    beta_j = (sm * beta_j + t) % r;
    power = (power * sm) % r;
    const long scale_exp = static_cast<long>(static_cast<__int128>(n) * beta_j % r);
    e.terms.push_back({root_of_unity(r, scale_exp), root_of_unity(r, power)});
  }
  e.reduced = from_partial_fractions(Poly(), as_pairs(e.terms, CycloNum(1)));
  return e;
}

long fixed_check_bound(const RationalFunction& R) {
  const long k = std::max(0L, R.x_shift());
  const long num_deg = R.num().degree() + k;
  const long den_deg = R.den().degree();
  const long poly_deg = std::max(0L, num_deg - den_deg);
  return num_deg + 2 * den_deg + poly_deg + 1;
}

bool is_fixed(const RationalFunction& R, long s, long t) {
  if (s == 1 && t == 0) return true;
  if (R.is_zero()) return true;
  if (s == 1 || s == 0) return false;
  if (s < 0) {
    if (!R.is_laurent_polynomial()) return false;
    return phi_rational(R, s, t) == R;
  }
  const auto [t_prime, u] = shift_reduce(s, t);
  const RationalFunction Rt = transport(R, -u);
  if (Rt.x_shift() < 0) return false;
  const long bound = fixed_check_bound(Rt);
  const LaurentPrefix a = expand_series(Rt, s * bound + t_prime);
  for (long n = 0; n <= bound; ++n) {
    if (!(a.at(n) == a.at(s * n + t_prime))) return false;
  }
  return true;
}

FixedBasis basis(long s, long t, long max_r) {
  if (max_r < 1) throw std::invalid_argument("max_r must be at least 1");
  const auto [t_frame, u] = basis_frame(s, t);
  FixedBasis out{s, t, t_frame, u, max_r, {}};
  if (monomial_element(s, t_frame)) out.elements.push_back(psi(s, t_frame, 0, 0));
  out.elements.push_back(psi(s, t_frame, 1, 0));
  for (long r = 2; r <= max_r; ++r) {
    if (!is_distinguished(r, s, t_frame)) continue;
    for (long n : coset_reps(s, r)) out.elements.push_back(psi(s, t_frame, r, n));
  }
  return out;
}

RationalFunction combine(long s, long t_frame,
                         const std::vector<std::pair<BasisKey, CycloNum>>& combo) {
  CycloNum monomial_coeff;
  std::vector<std::pair<CycloNum, CycloNum>> terms;
  for (const auto& [key, coeff] : combo) {
    const PsiElement e = psi(s, t_frame, key.r, key.n);
    if (key.r == 0) {
      monomial_coeff += coeff;
      continue;
    }
    const auto pairs = as_pairs(e.terms, coeff);
    terms.insert(terms.end(), pairs.begin(), pairs.end());
  }
  const std::optional<long> mono = monomial_element(s, t_frame);
  if (!mono || monomial_coeff.is_zero()) return from_partial_fractions(Poly(), terms);
  if (*mono == 0) return from_partial_fractions(Poly::constant(monomial_coeff), terms);
  return from_partial_fractions(Poly(), terms) +
         RationalFunction::monomial(*mono).scaled(monomial_coeff);
}

RationalFunction recombine(const Decomposition& d) {
  return transport(combine(d.s, d.t_frame, d.combo), d.u);
}

Decomposition decompose(const RationalFunction& R, long s, long t) {
  const auto [t_frame, u] = basis_frame(s, t);
  Decomposition out{s, t, t_frame, u, {}, false};
  if (R.is_zero()) {
    out.residual_ok = true;
    return out;
  }
  RationalFunction Rt = transport(R, -u);
  const std::optional<long> mono = monomial_element(s, t_frame);
  const long lowest = std::min(0L, mono.value_or(0));
  if (Rt.x_shift() < lowest) {
    throw NotAFixedPoint(FixedPointFailure::negative_support,
                         "lowest power x^" + std::to_string(Rt.x_shift()));
  }
  // In the t = s - 1 frame the x^-1 coefficient belongs to the monomial element.
  CycloNum monomial_coeff;
  if (lowest < 0 && Rt.x_shift() == lowest) {
    monomial_coeff = Rt.num().coeff(0);
    Rt = Rt - RationalFunction::monomial(lowest).scaled(monomial_coeff);
  }
  PartialFractions pf;
  try {
    pf = partial_fractions(Rt);
  } catch (const NonCyclotomicPole& e) {
    throw NotAFixedPoint(FixedPointFailure::non_cyclotomic_pole, e.what());
  } catch (const RepeatedPole& e) {
    throw NotAFixedPoint(FixedPointFailure::repeated_pole, e.what());
  }

  std::map<std::pair<long, long>, CycloNum> residues;
  for (const PoleTerm& term : pf.terms) {
    if (!is_distinguished(term.r, s, t_frame)) {
      throw NotAFixedPoint(FixedPointFailure::non_distinguished,
                           "pole of order " + std::to_string(term.r));
    }
    residues.emplace(std::make_pair(term.r, term.c), term.residue);
  }

  std::map<BasisKey, CycloNum> combo;
  for (const PoleTerm& term : pf.terms) {
    if (term.r == 1) {
      combo.emplace(BasisKey{1, 0}, term.residue);
      continue;
    }
    const long rep = coset(s, term.r, term.c).rep;
    const BasisKey key{term.r, rep};
    if (combo.contains(key)) continue;
    auto lead = residues.find({term.r, rep});
    if (lead == residues.end()) {
      throw NotAFixedPoint(FixedPointFailure::coset_pattern_mismatch,
                           "no pole at zeta_" + std::to_string(term.r) + "^" + std::to_string(rep));
    }
    const CycloNum coeff = lead->second;
    const PsiElement e = psi(s, t_frame, term.r, rep);
    long c = rep;
    for (std::size_t j = 0; j < e.terms.size(); ++j) {
      c = static_cast<long>(static_cast<__int128>(c) * (s % term.r) % term.r);
      auto it = residues.find({term.r, c});
      if (it == residues.end() || !(it->second == coeff * e.terms[j].scale)) {
        throw NotAFixedPoint(FixedPointFailure::coset_pattern_mismatch,
                             "residue at zeta_" + std::to_string(term.r) + "^" + std::to_string(c) +
                                 " breaks the psi pattern of " + key.str());
      }
    }
    combo.emplace(key, coeff);
  }

  const Poly& poly = pf.polynomial_part;
  if (!poly.is_zero()) {
    if (mono != 0L || poly.degree() > 0) {
      throw NotAFixedPoint(FixedPointFailure::illegal_polynomial_part,
                           "polynomial part of degree " + std::to_string(poly.degree()));
    }
    monomial_coeff = poly.coeff(0);
  }
  if (!monomial_coeff.is_zero()) combo.emplace(BasisKey{0, 0}, monomial_coeff);

  out.combo.assign(combo.begin(), combo.end());
  out.residual_ok = recombine(out) == R;
  return out;
}

}  // namespace cyclofix
