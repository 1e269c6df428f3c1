#pragma once

// Exact scalars: GMP integers and rationals, and elements of the cyclotomic
// field Q(zeta_m) stored as residues modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclofix {

using Integer = mpz_class;
using Rat = mpq_class;

// Accepts "p" or "p/q" with an optional sign; throws ParseError otherwise.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

long totient(long n);
std::vector<long> divisors(long n);
long checked_lcm(long a, long b);

// Upper bound on any conductor the library will materialize. Guards against
// runaway inputs such as w{100000}.
long max_conductor() noexcept;
void set_max_conductor(long limit) noexcept;

// Memoized integer cyclotomic polynomials Phi_k, coefficients in ascending
// degree. Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d.
//
// Lookups take a shared lock; a miss computes outside the lock and inserts
// under an exclusive one, so two threads may race to build the same Phi_k.
// Both results are identical and the first insertion wins.
class CycloPolyTable {
 public:
  static CycloPolyTable& global();

  const std::vector<long>& get(long k);
  std::size_t size() const;

 private:
  std::vector<long> compute(long k);

  mutable std::shared_mutex mutex_;
  std::map<long, std::vector<long>> cache_;
};

inline const std::vector<long>& cyclotomic_poly(long k) {
  return CycloPolyTable::global().get(k);
}

// An element of Q(zeta_m), zeta_m = exp(2 pi i / m), written as
// (num_0 + num_1 z + ... + num_{phi(m)-1} z^{phi(m)-1}) / den with z = zeta_m.
// The representation is canonical: den > 0 and gcd(num..., den) = 1, so two
// values with the same conductor are equal iff their fields compare equal.
// Conductor 1 holds plain rationals.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rat& value, long conductor = 1);
  // coeffs.size() must equal phi(conductor).
  CycloNum(long conductor, std::span<const Rat> coeffs);

  static CycloNum zero(long conductor = 1);
  static CycloNum one(long conductor = 1);
  // sum_e coeffs[e] * zeta_m^e for a dense exponent vector of any length.
  static CycloNum from_power_sum(long conductor, std::span<const Integer> coeffs,
                                 const Integer& den = 1);

  long conductor() const noexcept { return conductor_; }
  std::size_t dimension() const noexcept { return num_.size(); }
  Rat coeff(std::size_t i) const;
  std::vector<Rat> coeffs() const;
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  Rat to_rat() const;  // requires is_rational()

  // Same element in Q(zeta_m) for a multiple m of conductor().
  CycloNum promote(long m) const;
  // The automorphism zeta -> zeta^k, gcd(k, conductor) = 1.
  CycloNum galois(long k) const;
  CycloNum inverse() const;
  CycloNum pow(long e) const;
  CycloNum pow(const Integer& e) const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum lhs, const CycloNum& rhs) { return lhs += rhs; }
  friend CycloNum operator-(CycloNum lhs, const CycloNum& rhs) { return lhs -= rhs; }
  friend CycloNum operator*(const CycloNum& lhs, const CycloNum& rhs);
  friend CycloNum operator/(const CycloNum& lhs, const CycloNum& rhs) {
    return lhs * rhs.inverse();
  }
  // Equality of field elements; conductors are unified first.
  friend bool operator==(const CycloNum& lhs, const CycloNum& rhs);

 private:
  void normalize();
  static void reduce_mod_phi(std::vector<Integer>& poly, long m);

  long conductor_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

enum class CycloOp { add, sub, mul, div };

CycloNum root_of_unity(long r, long k);
CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op);
CycloNum cyclo_promote(const CycloNum& a, long m);
// Re-expresses a in the smallest Q(zeta_d) containing it (d never = 2 mod 4).
CycloNum minimal_conductor(const CycloNum& a);
long unify_conductor(long a, long b);

// Polynomial in `var` of the canonical residue, highest power first, e.g.
// "(1/2)*w^3 - 2". The conductor is not part of the text.
std::string to_text(const CycloNum& a, std::string_view var = "w");

}  // namespace cyclofix
