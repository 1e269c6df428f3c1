#pragma once

// Fixed points of phi_{s,t}: the psi basis, exact fixed-point tests and
// decomposition of a fixed rational function into basis coordinates.

#include <string>
#include <utility>
#include <vector>

#include "cyclofix/error.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

// Identifies a basis element by (r, canonical n). (1, 0) is 1/(1 - x) and
// (0, 0) the Laurent monomial element: 1 for t = 0, x^-1 for t = s - 1.
struct BasisKey {
  long r = 1;
  long n = 0;

  std::string str() const { return std::to_string(r) + ":" + std::to_string(n); }
  static BasisKey parse(const std::string& text);
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

struct PsiTerm {
  CycloNum scale;
  CycloNum pole;
};

// psi_{s,t,r,n} = sum_{j=1}^{Ord(s;r)} zeta_r^{n beta(j)} / (1 - zeta_r^{n s^j} x),
// kept both as its pole terms and as a reduced quotient.
struct PsiElement {
  long s = 2;
  long t = 0;
  long r = 1;
  long n = 0;
  std::vector<PsiTerm> terms;
  RationalFunction reduced;

  BasisKey key() const { return {r, n}; }
};

// Basis of the fixed points of phi_{s,t} up to modulus max_r. The elements are
// psi_{s,t_frame,r,n} with t = t_frame + u (s - 1) (see basis_frame); the fixed
// point each stands for is x^{-u} * element.reduced.
struct FixedBasis {
  long s = 2;
  long t = 0;
  long t_frame = 0;
  long u = 0;
  long max_r = 1;
  std::vector<PsiElement> elements;
};

struct Decomposition {
  long s = 2;
  long t = 0;
  long t_frame = 0;
  long u = 0;
  std::vector<std::pair<BasisKey, CycloNum>> combo;  // sorted by key
  bool residual_ok = false;
};

enum class FixedPointFailure {
  negative_support,
  non_cyclotomic_pole,
  repeated_pole,
  non_distinguished,
  coset_pattern_mismatch,
  illegal_polynomial_part,
};

const char* to_string(FixedPointFailure failure);

class NotAFixedPoint : public Error {
 public:
  NotAFixedPoint(FixedPointFailure failure, std::string detail)
      : Error("NotAFixedPoint", to_string(failure)), failure_(failure), detail_(std::move(detail)) {}

  FixedPointFailure failure() const noexcept { return failure_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  FixedPointFailure failure_;
  std::string detail_;
};

// Requires s >= 2 and t >= 0. r = 0 is accepted for t = 0 (the constant 1)
// and t = s - 1 (the monomial x^-1).
PsiElement psi(long s, long t, long r, long n);

// Series-window length sufficient to decide fixedness of R exactly.
long fixed_check_bound(const RationalFunction& R);

bool is_fixed(const RationalFunction& R, long s, long t);

// Any t; elements are built in the frame of basis_frame(s, t).
FixedBasis basis(long s, long t, long max_r);

// Any t; the combo refers to psi_{s,t_frame,r,n} with
// R = x^{-u} * sum coeff * psi.
Decomposition decompose(const RationalFunction& R, long s, long t);

// sum coeff * psi_{s,t_frame,r,n} for the given keys.
RationalFunction combine(long s, long t_frame,
                         const std::vector<std::pair<BasisKey, CycloNum>>& combo);
// x^{-u} * combine(...), the function a Decomposition describes.
RationalFunction recombine(const Decomposition& d);

// Unique (t', u) with t = t' + u (s - 1), 0 <= t' <= s - 2.
std::pair<long, long> shift_reduce(long s, long t);

// (t_frame, u) with t = t_frame + u (s - 1): (t, 0) when 0 <= t <= s - 1, where
// psi_{s,t,r,n} is itself fixed, and shift_reduce(s, t) otherwise.
std::pair<long, long> basis_frame(long s, long t);

// x^{-u} R.
RationalFunction transport(const RationalFunction& R, long u);

}  // namespace cyclofix
