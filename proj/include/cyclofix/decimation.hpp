#pragma once

// The decimation operator phi_{s,t}: sum a_n x^n -> sum a_{sn+t} x^n.

#include <optional>
#include <utility>

#include "cyclofix/ratfunc.hpp"

namespace cyclofix {

struct PhiOperator {
  long s = 2;
  long t = 1;
};

// Output coefficients n in [out_min, out_max] read input index s*n + t.
// Indices below the input's n_min read as zero; indices past its end throw
// InsufficientWindow. Without an explicit window: for s >= 1, out_min is the
// first n with s*n + t >= n_min and out_max the last n the input covers; for
// s <= 0 both bounds are required.
LaurentPrefix phi_series(const LaurentPrefix& a, long s, long t,
                         std::optional<long> out_min = std::nullopt,
                         std::optional<long> out_max = std::nullopt);

// (lambda^t, lambda^s): phi_{s,t}(alpha / (1 - lambda x)) = alpha lambda^t / (1 - lambda^s x).
std::pair<CycloNum, CycloNum> phi_pole_term(const CycloNum& lambda, long s, long t);

// (lambda^{beta_{s,t}(k)}, lambda^{s^k}) for the k-th iterate.
std::pair<CycloNum, CycloNum> phi_iterate_pole(const CycloNum& lambda, long s, long t, long k);

// Exact image of R as a rational function.
//   s >= 1: series decimation followed by minimal-recurrence reconstruction,
//           verified on extra coefficients (ReconstructionMismatch otherwise).
//   s == 0: the image is the two-sided constant series a_t; representable
//           only when a_t = 0 (UnrepresentableImage otherwise).
//   s < 0 : finite Laurent polynomial; representable only when R is itself a
//           Laurent polynomial.
RationalFunction phi_rational(const RationalFunction& R, long s, long t);

// phi_{s,t} applied k times.
RationalFunction phi_rational_iterate(const RationalFunction& R, long s, long t, long k);

// Minimal linear recurrence of a sequence over Q(zeta_m): returns C with
// C(0) = 1 and sum_i C_i a_{n-i} = 0 for all n >= L, plus L.
std::pair<Poly, long> berlekamp_massey(const std::vector<CycloNum>& seq);

}  // namespace cyclofix
