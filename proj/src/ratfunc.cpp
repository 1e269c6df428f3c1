#include "cyclofix/ratfunc.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cyclofix/error.hpp"

namespace cyclofix {

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction() = default;

RationalFunction::RationalFunction(const Poly& num, const Poly& den, long x_shift)
    : x_shift_(x_shift), num_(num), den_(den) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    *this = RationalFunction();
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  normalize_units();
}

RationalFunction::RationalFunction(Trusted, Poly num, Poly den, long x_shift)
    : x_shift_(x_shift), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    *this = RationalFunction();
    return;
  }
  normalize_units();
}

void RationalFunction::normalize_units() {
  const std::size_t vn = num_.x_valuation();
  const std::size_t vd = den_.x_valuation();
  x_shift_ += static_cast<long>(vn) - static_cast<long>(vd);
  num_ = num_.shifted_down(vn);
  den_ = den_.shifted_down(vd);
  const CycloNum c = den_.coeff(0);
  if (!c.is_one()) {
    const CycloNum inv = c.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::constant(const CycloNum& c) {
  return RationalFunction(Trusted{}, Poly::constant(c), Poly::one(), 0);
}

RationalFunction RationalFunction::monomial(long k) {
  return RationalFunction(Trusted{}, Poly::one(), Poly::one(), k);
}

RationalFunction RationalFunction::coprime(const Poly& num, const Poly& den, long x_shift) {
  return RationalFunction(Trusted{}, num, den, x_shift);
}

long RationalFunction::conductor() const {
  return unify_conductor(num_.conductor(), den_.conductor());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::scaled(const CycloNum& c) const {
  if (c.is_zero() || is_zero()) return RationalFunction();
  return RationalFunction(Trusted{}, num_ * c, den_, x_shift_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction result = constant(CycloNum(1));
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroDenominator("division by the zero rational function");
  return RationalFunction(Trusted{}, den_, num_, -x_shift_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long k = std::min(a.x_shift_, b.x_shift_);
  const Poly pa = a.num_.shifted_up(static_cast<std::size_t>(a.x_shift_ - k));
  const Poly pb = b.num_.shifted_up(static_cast<std::size_t>(b.x_shift_ - k));
  // With g = gcd(den_a, den_b) only factors of g can cancel from the sum.
  const Poly g = gcd(a.den_, b.den_);
  if (g.degree() == 0) {
    const Poly num = pa * b.den_ + pb * a.den_;
    if (num.is_zero()) return RationalFunction();
    return RationalFunction::coprime(num, a.den_ * b.den_, k);
  }
  const Poly ca = divmod(a.den_, g).first;
  const Poly cb = divmod(b.den_, g).first;
  Poly num = pa * cb + pb * ca;
  if (num.is_zero()) return RationalFunction();
  Poly den = ca * b.den_;
  const Poly h = gcd(num, g);
  if (h.degree() > 0) {
    num = divmod(num, h).first;
    den = divmod(den, h).first;
  }
  return RationalFunction::coprime(num, den, k);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) {
    return RationalFunction::coprime(a.num_ * b.num_, Poly::one(), a.x_shift_ + b.x_shift_);
  }
  // Both inputs are reduced, so only the cross pairs can share factors.
  const auto cross = [](const Poly& num, const Poly& den) {
    return num.degree() == 0 || den.degree() == 0 ? Poly::one() : gcd(num, den);
  };
  const Poly g1 = cross(a.num_, b.den_);
  const Poly g2 = cross(b.num_, a.den_);
  const auto cut = [](const Poly& p, const Poly& g) { return g.degree() == 0 ? p : divmod(p, g).first; };
  return RationalFunction::coprime(cut(a.num_, g1) * cut(b.num_, g2), cut(a.den_, g2) * cut(b.den_, g1),
                 a.x_shift_ + b.x_shift_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.x_shift_ == b.x_shift_ && a.num_ == b.num_ && a.den_ == b.den_;
}

// ---------------------------------------------------------------------------
// Series

CycloNum LaurentPrefix::at(long n) const {
  if (n < n_min) return coeffs.empty() ? CycloNum() : CycloNum::zero(coeffs.front().conductor());
  if (n > n_max()) {
    throw InsufficientWindow("coefficient " + std::to_string(n) + " beyond prefix end " +
                             std::to_string(n_max()));
  }
  return coeffs[static_cast<std::size_t>(n - n_min)];
}

LaurentPrefix expand_series(const RationalFunction& R, long N) {
  LaurentPrefix out;
  if (R.is_zero()) {
    out.n_min = 0;
    out.coeffs.assign(static_cast<std::size_t>(std::max(N + 1, 0L)), CycloNum());
    return out;
  }
  if (N < R.x_shift()) {
    out.n_min = N + 1;
    return out;
  }
  const long m = R.conductor();
  const Poly P = R.num().promote(m);
  const Poly Q = R.den().promote(m);
  const std::size_t count = static_cast<std::size_t>(N - R.x_shift() + 1);
  const std::size_t d = static_cast<std::size_t>(Q.degree());
  out.n_min = R.x_shift();
  out.coeffs.reserve(count);
  // a_j = p_j - sum_{i=1..d} q_i a_{j-i}, using Q(0) = 1.
  for (std::size_t j = 0; j < count; ++j) {
    CycloNum acc = P.coeff(j);
    const std::size_t top = std::min(j, d);
    for (std::size_t i = 1; i <= top; ++i) {
      const CycloNum& q = Q.coeffs()[i];
      if (q.is_zero()) continue;
      acc -= q * out.coeffs[j - i];
    }
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclotomic factorization

namespace {

using RatPoly = std::vector<Rat>;

// Divides p by the monic integer polynomial phi when the remainder is zero.
bool try_divide(RatPoly& p, const std::vector<long>& phi) {
  const std::size_t nb = phi.size();
  if (p.size() < nb) return false;
  RatPoly rem = p;
  RatPoly quot(rem.size() - nb + 1, Rat(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Rat c = rem[i + nb - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) rem[i + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i + 1 < nb; ++i) {
    if (rem[i] != 0) return false;
  }
  p = std::move(quot);
  return true;
}

// Multiplicity of Phi_r in a monic rational polynomial, for every r that
// divides it. Removes the factors found from p.
std::vector<std::pair<long, int>> rational_cyclotomic_factors(RatPoly& p) {
  std::vector<std::pair<long, int>> found;
  const long d0 = static_cast<long>(p.size()) - 1;
  if (d0 <= 0) return found;
  // phi(r) >= sqrt(r / 2), so phi(r) <= d forces r <= 2 d^2.
  const long bound = std::min(2 * d0 * d0, max_conductor());
  std::vector<long> phi_of(static_cast<std::size_t>(bound) + 1);
  std::iota(phi_of.begin(), phi_of.end(), 0L);
  for (long i = 2; i <= bound; ++i) {
    if (phi_of[static_cast<std::size_t>(i)] != i) continue;
    for (long j = i; j <= bound; j += i) phi_of[static_cast<std::size_t>(j)] -= phi_of[static_cast<std::size_t>(j)] / i;
  }
  for (long r = 1; r <= bound; ++r) {
    const long deg = static_cast<long>(p.size()) - 1;
    if (deg <= 0) break;
    if (phi_of[static_cast<std::size_t>(r)] > deg) continue;
    int mult = 0;
    while (try_divide(p, cyclotomic_poly(r))) ++mult;
    if (mult > 0) found.emplace_back(r, mult);
  }
  return found;
}

RatPoly to_rat_poly(const Poly& p) {
  RatPoly out;
  out.reserve(p.coeffs().size());
  for (const CycloNum& c : p.coeffs()) out.push_back(c.to_rat());
  return out;
}

std::vector<long> units_mod(long r) {
  std::vector<long> out;
  if (r == 1) return {0};
  for (long c = 1; c < r; ++c) {
    if (std::gcd(c, r) == 1) out.push_back(c);
  }
  return out;
}

// Synthetic division by (x - root); returns false when the remainder is nonzero.
bool divide_linear(Poly& p, const CycloNum& root) {
  const long m = unify_conductor(p.conductor(), root.conductor());
  const Poly pp = p.promote(m);
  const auto& c = pp.coeffs();
  if (c.empty()) return false;
  std::vector<CycloNum> quot(c.size() - 1, CycloNum::zero(m));
  CycloNum carry = CycloNum::zero(m);
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = carry * root + c[i];
    quot[i - 1] = carry;
  }
  if (!(carry * root + c[0]).is_zero()) return false;
  p = Poly(std::move(quot));
  return true;
}


using Cx = std::complex<double>;

Cx approx(const CycloNum& a) {
  Cx acc = 0;
  const double m = static_cast<double>(a.conductor());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (sgn(a.numerators()[i]) == 0) continue;
    acc += a.coeff(i).get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / m);
  }
  return acc;
}

// Simultaneous (Aberth) approximation of all roots of a monic polynomial.
std::vector<Cx> approx_roots(const Poly& monic) {
  std::vector<Cx> c;
  for (const CycloNum& a : monic.coeffs()) c.push_back(approx(a));
  const std::size_t d = c.size() - 1;
  std::vector<Cx> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    z[k] = std::polar(0.9, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4);
  }
  for (int iter = 0; iter < 500; ++iter) {
    double step = 0;
    for (std::size_t k = 0; k < d; ++k) {
      Cx p = c[d];
      Cx dp = 0;
      for (std::size_t i = d; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (p == Cx(0)) continue;
      const Cx ratio = p / dp;
      Cx repulsion = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Cx w = ratio / (1.0 - ratio * repulsion);
      z[k] -= w;
      step = std::max(step, std::abs(w));
    }
    if (step < 1e-15) break;
  }
  return z;
}

// Roots of unity zeta_r^c near z, from the continued-fraction convergents of
// arg(z) / 2 pi, smallest order first.
std::vector<std::pair<long, long>> nearby_roots_of_unity(Cx z, long max_order) {
  std::vector<std::pair<long, long>> out;
  if (std::abs(std::abs(z) - 1) > 1e-4) return out;
  double theta = std::arg(z) / (2 * std::numbers::pi);
  if (theta < 0) theta += 1;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = theta;
  for (int k = 0; k < 40; ++k) {
    const double a = std::floor(x);
    const long p2 = static_cast<long>(a) * p1 + p0;
    const long q2 = static_cast<long>(a) * q1 + q0;
    if (q2 > max_order) break;
    if (std::abs(theta - static_cast<double>(p2) / static_cast<double>(q2)) < 1e-4) {
      out.emplace_back(q2, ((p2 % q2) + q2) % q2);
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - a;
    if (frac < 1e-12) break;
    x = 1 / frac;
  }
  return out;
}
}  // namespace

PoleSpec detect_cyclotomic_denominator(const Poly& Q) {
  if (Q.is_zero() || !Q.coeff(0).is_one()) {
    throw std::invalid_argument("denominator must satisfy Q(0) = 1");
  }
  PoleSpec spec;
  const long d = Q.degree();
  if (d == 0) return spec;
  const Poly rev = Q.reversed(static_cast<std::size_t>(d));  // monic

  if (rev.is_rational()) {
    RatPoly p = to_rat_poly(rev);
    for (const auto& [r, mult] : rational_cyclotomic_factors(p)) {
      for (long c : units_mod(r)) spec.entries.push_back({r, c, mult});
    }
    if (p.size() > 1) {
      throw NonCyclotomicFactor("denominator has a factor of degree " +
                                std::to_string(p.size() - 1) + " with non-root-of-unity roots");
    }
  } else {
    // Numerical roots suggest candidate roots of unity; each is confirmed by
    // exact division, so the approximation only affects speed.
    Poly rest = rev;
    std::map<std::pair<long, long>, int> found;
    for (int round = 0; round < 3 && rest.degree() > 0; ++round) {
      bool progress = false;
      for (const Cx& z : approx_roots(rest)) {
        for (const auto& [r, c] : nearby_roots_of_unity(z, max_conductor())) {
          bool divided = false;
          try {
            divided = divide_linear(rest, root_of_unity(r, c));
          } catch (const ConductorLimit&) {
          }
          if (divided) {
            ++found[{r, c}];
            progress = true;
            break;
          }
        }
        if (rest.degree() == 0) break;
      }
      if (!progress) break;
    }
    if (rest.degree() > 0) {
      // The norm over Q(zeta_m)/Q is rational and shares every root of rest
      // up to conjugation; its cyclotomic factors list the candidate orders.
      const long m = rest.conductor();
      Poly norm = Poly::one();
      for (long k : units_mod(m)) norm = norm * rest.galois(k);
      RatPoly p = to_rat_poly(norm);
      for (const auto& cand : rational_cyclotomic_factors(p)) {
        for (long c : units_mod(cand.first)) {
          while (rest.degree() > 0 && divide_linear(rest, root_of_unity(cand.first, c))) {
            ++found[{cand.first, c}];
          }
        }
      }
    }
    if (rest.degree() > 0) {
      throw NonCyclotomicFactor("denominator has a factor of degree " +
                                std::to_string(rest.degree()) +
                                " with non-root-of-unity roots");
    }
    for (const auto& [rc, mult] : found) spec.entries.push_back({rc.first, rc.second, mult});
  }
  std::sort(spec.entries.begin(), spec.entries.end(), [](const PoleEntry& a, const PoleEntry& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  return spec;
}

// ---------------------------------------------------------------------------
// Partial fractions

PartialFractions partial_fractions(const RationalFunction& R) {
  PartialFractions out;
  if (R.is_zero()) return out;
  if (R.x_shift() < 0) throw NonCyclotomicPole("pole at x = 0");
  const Poly P = R.num().shifted_up(static_cast<std::size_t>(R.x_shift()));
  const Poly& Q = R.den();
  PoleSpec spec;
  try {
    spec = detect_cyclotomic_denominator(Q);
  } catch (const NonCyclotomicFactor& e) {
    throw NonCyclotomicPole(e.what());
  }
  long m = R.conductor();
  for (const PoleEntry& e : spec.entries) {
    if (e.multiplicity > 1) {
      throw RepeatedPole("pole zeta_" + std::to_string(e.r) + "^" + std::to_string(e.c) +
                         " has multiplicity " + std::to_string(e.multiplicity));
    }
    m = unify_conductor(m, e.r);
  }
  auto [poly_part, rem] = divmod(P.promote(m), Q.promote(m));
  out.polynomial_part = std::move(poly_part);

  std::vector<CycloNum> poles;
  std::vector<CycloNum> inv_poles;
  for (const PoleEntry& e : spec.entries) {
    poles.push_back(root_of_unity(e.r, e.c).promote(m));
    inv_poles.push_back(root_of_unity(e.r, -e.c).promote(m));
  }
  const CycloNum one = CycloNum::one(m);
  for (std::size_t j = 0; j < poles.size(); ++j) {
    CycloNum denom = one;
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if (i != j) denom *= one - poles[i] * inv_poles[j];
    }
    const CycloNum residue = rem.eval(inv_poles[j]) / denom;
    out.terms.push_back({spec.entries[j].r, spec.entries[j].c, poles[j], residue});
  }
  return out;
}

RationalFunction from_partial_fractions(const Poly& polynomial_part,
                                        const std::vector<std::pair<CycloNum, CycloNum>>& terms) {
  std::vector<std::pair<CycloNum, CycloNum>> merged;  // (pole, residue)
  for (const auto& [residue, pole] : terms) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& pr) { return pr.first == pole; });
    if (it == merged.end()) {
      merged.emplace_back(pole, residue);
    } else {
      it->second += residue;
    }
  }
  std::erase_if(merged, [](const auto& pr) { return pr.second.is_zero(); });

  long m = polynomial_part.conductor();
  for (const auto& [pole, residue] : merged) {
    m = unify_conductor(m, unify_conductor(pole.conductor(), residue.conductor()));
  }
  Poly Q = Poly::one().promote(m);
  for (const auto& pr : merged) {
    Q = Q * Poly(std::vector<CycloNum>{CycloNum::one(m), -pr.first.promote(m)});
  }
  Poly P = polynomial_part.promote(m) * Q;
  const auto& qc = Q.coeffs();
  for (const auto& [pole_raw, residue_raw] : merged) {
    // Q / (1 - pole x) by synthetic division: s_i = q_i + pole s_{i-1}.
    const CycloNum pole = pole_raw.promote(m);
    std::vector<CycloNum> cofactor(qc.size() - 1, CycloNum::zero(m));
    CycloNum prev = CycloNum::zero(m);
    for (std::size_t i = 0; i + 1 < qc.size(); ++i) {
      prev = qc[i] + pole * prev;
      cofactor[i] = prev;
    }
    P += Poly(std::move(cofactor)) * residue_raw.promote(m);
  }
  return RationalFunction::coprime(P, Q);
}

}  // namespace cyclofix
