#include <algorithm>
#include <stdexcept>

#include "cyclofix/error.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

Poly::Poly(std::vector<CycloNum> coeffs) : coeffs_(std::move(coeffs)) {
  long m = 1;
  for (const CycloNum& c : coeffs_) m = unify_conductor(m, c.conductor());
  conductor_ = m;
  for (CycloNum& c : coeffs_) {
    if (c.conductor() != m) c = c.promote(m);
  }
  trim();
}

Poly Poly::constant(const CycloNum& c) { return Poly(std::vector<CycloNum>{c}); }

Poly Poly::monomial(const CycloNum& c, std::size_t degree) {
  std::vector<CycloNum> coeffs(degree + 1, CycloNum::zero(c.conductor()));
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CycloNum Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : CycloNum::zero(conductor_);
}

std::size_t Poly::x_valuation() const noexcept {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return k == coeffs_.size() ? 0 : k;
}

bool Poly::is_rational() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const CycloNum& c) { return c.is_rational(); });
}

Poly Poly::promote(long m) const {
  if (m == conductor_) return *this;
  Poly out;
  out.conductor_ = m;
  out.coeffs_.reserve(coeffs_.size());
  for (const CycloNum& c : coeffs_) out.coeffs_.push_back(c.promote(m));
  return out;
}

CycloNum Poly::eval(const CycloNum& at) const {
  CycloNum acc = CycloNum::zero(conductor_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
  return acc;
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly out = *this;
  out.coeffs_.insert(out.coeffs_.begin(), k, CycloNum::zero(conductor_));
  return out;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (k > x_valuation() && !is_zero()) throw std::logic_error("x^k does not divide polynomial");
  if (is_zero() || k == 0) return *this;
  Poly out = *this;
  out.coeffs_.erase(out.coeffs_.begin(), out.coeffs_.begin() + static_cast<long>(k));
  return out;
}

Poly Poly::reversed(std::size_t d) const {
  if (static_cast<long>(d) < degree()) throw std::invalid_argument("reverse degree too small");
  std::vector<CycloNum> out(d + 1, CycloNum::zero(conductor_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[d - i] = coeffs_[i];
  Poly p(std::move(out));
  if (p.is_zero()) p.conductor_ = conductor_;
  return p;
}

Poly Poly::truncated(std::size_t n) const {
  if (coeffs_.size() <= n) return *this;
  Poly out = *this;
  out.coeffs_.resize(n);
  out.trim();
  return out;
}

Poly Poly::galois(long k) const {
  Poly out = *this;
  for (CycloNum& c : out.coeffs_) c = c.galois(k);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (CycloNum& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  const long m = unify_conductor(conductor_, rhs.conductor_);
  if (m != conductor_) *this = promote(m);
  const Poly& other = rhs.conductor_ == m ? rhs : rhs.promote(m);
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), CycloNum::zero(m));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  const long m = unify_conductor(lhs.conductor_, rhs.conductor_);
  Poly out;
  out.conductor_ = m;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  if (lhs.conductor_ != m || rhs.conductor_ != m) return lhs.promote(m) * rhs.promote(m);
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, CycloNum::zero(m));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Poly operator*(const Poly& lhs, const CycloNum& rhs) {
  if (rhs.is_zero()) {
    Poly out;
    out.conductor_ = unify_conductor(lhs.conductor_, rhs.conductor());
    return out;
  }
  std::vector<CycloNum> coeffs;
  coeffs.reserve(lhs.coeffs_.size());
  for (const CycloNum& c : lhs.coeffs_) coeffs.push_back(c * rhs);
  Poly out(std::move(coeffs));
  if (out.is_zero()) out.conductor_ = unify_conductor(lhs.conductor_, rhs.conductor());
  return out;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return false;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (!(lhs.coeffs_[i] == rhs.coeffs_[i])) return false;
  }
  return true;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const long m = unify_conductor(a.conductor(), b.conductor());
  std::vector<CycloNum> rem = a.promote(m).coeffs();
  const Poly bp = b.promote(m);
  const std::vector<CycloNum>& bc = bp.coeffs();
  if (rem.size() < bc.size()) return {Poly::constant(CycloNum::zero(m)), a.promote(m)};
  std::vector<CycloNum> quot(rem.size() - bc.size() + 1, CycloNum::zero(m));
  const CycloNum lead_inv = bc.back().inverse();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const CycloNum& top = rem[i + bc.size() - 1];
    if (top.is_zero()) continue;
    CycloNum q = top * lead_inv;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= q * bc[j];
    quot[i] = std::move(q);
  }
  return {Poly(std::move(quot)), Poly(std::move(rem)).promote(m)};
}

Poly gcd(const Poly& a, const Poly& b) {
  // Monic remainders keep coefficient growth in check.
  const auto monic = [](const Poly& p) { return p.is_zero() ? p : p * p.leading().inverse(); };
  Poly r0 = monic(a);
  Poly r1 = monic(b);
  while (!r1.is_zero()) {
    if (r1.degree() == 0) return Poly::one();
    Poly rem = monic(divmod(r0, r1).second);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return r0;
}

}  // namespace cyclofix
