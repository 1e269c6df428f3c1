#pragma once

// Polynomials and rational functions with coefficients in Q(zeta_m).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclofix/exactnum.hpp"

namespace cyclofix {

// Dense univariate polynomial in x. All coefficients share one conductor and
// the leading coefficient is nonzero (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CycloNum> coeffs);

  static Poly constant(const CycloNum& c);
  static Poly monomial(const CycloNum& c, std::size_t degree);
  static Poly one() { return constant(CycloNum(1)); }
  static Poly x() { return monomial(CycloNum(1), 1); }

  long conductor() const noexcept { return conductor_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CycloNum>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^i, zero past the degree.
  CycloNum coeff(std::size_t i) const;
  const CycloNum& leading() const { return coeffs_.back(); }
  // Largest k with x^k dividing the polynomial (0 for the zero polynomial).
  std::size_t x_valuation() const noexcept;
  bool is_rational() const noexcept;

  Poly promote(long m) const;
  CycloNum eval(const CycloNum& at) const;
  Poly shifted_up(std::size_t k) const;    // times x^k
  Poly shifted_down(std::size_t k) const;  // divided by x^k, exactly
  // x^d P(1/x) for d >= degree.
  Poly reversed(std::size_t d) const;
  Poly truncated(std::size_t n) const;  // mod x^n
  Poly galois(long k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Poly& lhs, const CycloNum& rhs);
  friend bool operator==(const Poly& lhs, const Poly& rhs);

 private:
  void trim();

  long conductor_ = 1;
  std::vector<CycloNum> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Monic greatest common divisor (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

// x^x_shift * num / den in lowest terms with den(0) = 1 and num(0) != 0
// (the x-power lives entirely in x_shift). Zero is num = 0, den = 1, shift 0.
// With these rules the representation is unique up to the conductor used to
// store the coefficients.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(const Poly& num, const Poly& den, long x_shift = 0);
  explicit RationalFunction(const Poly& num) : RationalFunction(num, Poly::one()) {}

  static RationalFunction constant(const CycloNum& c);
  static RationalFunction monomial(long k);  // x^k, k may be negative
  // For callers that know gcd(num, den) = 1; still normalizes den(0) and x.
  static RationalFunction coprime(const Poly& num, const Poly& den, long x_shift = 0);

  long x_shift() const noexcept { return x_shift_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  long conductor() const;
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent_polynomial() const noexcept { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction scaled(const CycloNum& c) const;
  RationalFunction pow(unsigned e) const;
  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Trusted {};
  RationalFunction(Trusted, Poly num, Poly den, long x_shift);
  void normalize_units();

  long x_shift_ = 0;
  Poly num_;
  Poly den_ = Poly::one();
};

// Coefficients a_{n_min} .. a_{n_min + size - 1} of a Laurent expansion at 0.
// Indices below n_min are zero by construction.
struct LaurentPrefix {
  long n_min = 0;
  std::vector<CycloNum> coeffs;

  long n_max() const noexcept { return n_min + static_cast<long>(coeffs.size()) - 1; }
  // Throws InsufficientWindow above n_max.
  CycloNum at(long n) const;
  friend bool operator==(const LaurentPrefix&, const LaurentPrefix&) = default;
};

// One denominator factor (1 - zeta_r^c x)^multiplicity.
struct PoleEntry {
  long r = 1;
  long c = 0;
  int multiplicity = 1;

  CycloNum lambda() const { return root_of_unity(r, c); }
  friend bool operator==(const PoleEntry&, const PoleEntry&) = default;
};

struct PoleSpec {
  std::vector<PoleEntry> entries;  // sorted by (r, c)
  friend bool operator==(const PoleSpec&, const PoleSpec&) = default;
};

// residue / (1 - pole * x), pole = zeta_r^c.
struct PoleTerm {
  long r = 1;
  long c = 0;
  CycloNum pole;
  CycloNum residue;
};

struct PartialFractions {
  Poly polynomial_part;
  std::vector<PoleTerm> terms;  // sorted by (r, c)
};

// Laurent coefficients of R up to index N. When N < x_shift the prefix is
// empty with n_min = N + 1.
LaurentPrefix expand_series(const RationalFunction& R, long N);

// R = polynomial_part + sum residue_j / (1 - pole_j x). Requires x_shift >= 0,
// cyclotomic simple poles.
PartialFractions partial_fractions(const RationalFunction& R);

// Rebuilds the reduced rational function from a polynomial part plus
// (residue, pole) pairs read as residue / (1 - pole x). Equal poles are merged
// and zero residues dropped.
RationalFunction from_partial_fractions(const Poly& polynomial_part,
                                        const std::vector<std::pair<CycloNum, CycloNum>>& terms);

// Factors x^d Q(1/x) into linear factors (x - zeta_r^c). Requires Q(0) = 1.
PoleSpec detect_cyclotomic_denominator(const Poly& Q);

RationalFunction parse_expression(std::string_view text);

// Stable text form accepted by parse_expression: polynomial part followed by
// pole terms sorted by (r, c) when R has simple cyclotomic poles, otherwise a
// numerator/denominator quotient.
std::string canonical_text(const RationalFunction& R);
std::string fraction_text(const RationalFunction& R);
std::string poly_text(const Poly& p);
// CycloNum rendered with conductor-tagged atoms w{m}; non-rational values are
// parenthesized.
std::string coefficient_text(const CycloNum& c);

}  // namespace cyclofix
