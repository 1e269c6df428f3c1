#include "cyclofix/decimation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclofix/cosets.hpp"
#include "cyclofix/error.hpp"

namespace cyclofix {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long pow_mod(long base, long e, long r) {
  long result = 1 % r;
  long b = ((base % r) + r) % r;
  while (e > 0) {
    if (e & 1) result = static_cast<long>(static_cast<__int128>(result) * b % r);
    b = static_cast<long>(static_cast<__int128>(b) * b % r);
    e >>= 1;
  }
  return result;
}

}  // namespace

LaurentPrefix phi_series(const LaurentPrefix& a, long s, long t, std::optional<long> out_min,
                         std::optional<long> out_max) {
  if (s <= 0 && (!out_min || !out_max)) {
    throw std::invalid_argument("phi_series with s <= 0 needs an explicit output window");
  }
  const long lo = out_min.value_or(s >= 1 ? ceil_div(a.n_min - t, s) : 0);
  const long hi = out_max.value_or(s >= 1 ? floor_div(a.n_max() - t, s) : 0);
  LaurentPrefix out;
  out.n_min = lo;
  for (long n = lo; n <= hi; ++n) out.coeffs.push_back(a.at(s * n + t));
  return out;
}

std::pair<CycloNum, CycloNum> phi_pole_term(const CycloNum& lambda, long s, long t) {
  if (lambda.is_zero()) throw DivisionByZero("pole term with lambda = 0");
  return {lambda.pow(t), lambda.pow(s)};
}

std::pair<CycloNum, CycloNum> phi_iterate_pole(const CycloNum& lambda, long s, long t, long k) {
  if (lambda.is_zero()) throw DivisionByZero("pole term with lambda = 0");
  if (k < 1) throw std::invalid_argument("iterate count must be positive");
  // Every root of unity in Q(zeta_m) has order dividing 2m.
  const long order_bound = 2 * lambda.conductor();
  if (lambda.pow(order_bound).is_one()) {
    return {lambda.pow(beta_mod(s, t, k, order_bound)), lambda.pow(pow_mod(s, k, order_bound))};
  }
  Integer s_k;
  mpz_pow_ui(s_k.get_mpz_t(), Integer(s).get_mpz_t(), static_cast<unsigned long>(k));
  return {lambda.pow(beta(s, t, k)), lambda.pow(s_k)};
}

std::pair<Poly, long> berlekamp_massey(const std::vector<CycloNum>& seq) {
  const long m = seq.empty() ? 1 : seq.front().conductor();
  std::vector<CycloNum> C{CycloNum::one(m)};
  std::vector<CycloNum> B{CycloNum::one(m)};
  long L = 0;
  long gap = 1;
  CycloNum b = CycloNum::one(m);
  for (std::size_t n = 0; n < seq.size(); ++n) {
    CycloNum d = seq[n];
    for (long i = 1; i <= L && i < static_cast<long>(C.size()); ++i) {
      if (!C[static_cast<std::size_t>(i)].is_zero()) d += C[static_cast<std::size_t>(i)] * seq[n - static_cast<std::size_t>(i)];
    }
    if (d.is_zero()) {
      ++gap;
      continue;
    }
    const CycloNum coef = d / b;
    std::vector<CycloNum> next = C;
    if (next.size() < B.size() + static_cast<std::size_t>(gap)) {
      next.resize(B.size() + static_cast<std::size_t>(gap), CycloNum::zero(m));
    }
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (!B[i].is_zero()) next[i + static_cast<std::size_t>(gap)] -= coef * B[i];
    }
    if (2 * L <= static_cast<long>(n)) {
      B = std::move(C);
      L = static_cast<long>(n) + 1 - L;
      b = d;
      gap = 1;
    } else {
      ++gap;
    }
    C = std::move(next);
  }
  return {Poly(std::move(C)), L};
}

RationalFunction phi_rational(const RationalFunction& R, long s, long t) {
  if (R.is_zero()) return R;
  const long k = R.x_shift();
  if (s == 0) {
    const CycloNum a_t = t < k ? CycloNum() : expand_series(R, t).at(t);
    if (a_t.is_zero()) return RationalFunction();
    throw UnrepresentableImage("phi_{0," + std::to_string(t) +
                               "} yields the two-sided constant series " + to_text(a_t));
  }
  if (s < 0) {
    if (!R.is_laurent_polynomial()) {
      throw UnrepresentableImage("phi with s < 0 of a non-polynomial has infinitely many "
                                 "negative-index coefficients");
    }
    const long lo = k;
    const long hi = k + R.num().degree();
    const long n_lo = ceil_div(hi - t, s);
    const long n_hi = floor_div(lo - t, s);
    std::vector<CycloNum> coeffs;
    for (long n = n_lo; n <= n_hi; ++n) {
      coeffs.push_back(R.num().coeff(static_cast<std::size_t>(s * n + t - k)));
    }
    return RationalFunction::coprime(Poly(std::move(coeffs)), Poly::one(), n_lo);
  }

  const long p = R.num().degree();
  const long d = R.den().degree();
  // Output index n reads input s*n + t; the first nonzero candidate is n0.
  const long n0 = ceil_div(k - t, s);
  // Input coefficients follow the pure exponential-polynomial law from m0 on,
  // so outputs do from n1 on. Before that at most e free initial terms.
  const long m0 = k + p - d + 1;
  const long n1 = ceil_div(m0 - t, s);
  const long e = std::max(0L, n1 - n0);
  const long complexity_bound = d + e;
  const long fit = 2 * complexity_bound;
  const long total = fit + 2 * d + 2;

  const LaurentPrefix a = expand_series(R, s * (n0 + total - 1) + t);
  std::vector<CycloNum> b;
  b.reserve(static_cast<std::size_t>(total));
  for (long i = 0; i < total; ++i) b.push_back(a.at(s * (n0 + i) + t));

  const std::vector<CycloNum> head(b.begin(), b.begin() + fit);
  auto [C, L] = berlekamp_massey(head);
  if (L > complexity_bound) {
    throw ReconstructionMismatch("recurrence length " + std::to_string(L) + " exceeds bound " +
                                 std::to_string(complexity_bound));
  }
  const auto& cc = C.coeffs();
  auto recurrence_at = [&](long i) {
    CycloNum acc = CycloNum::zero(b.front().conductor());
    for (long j = 0; j < static_cast<long>(cc.size()) && j <= i; ++j) {
      acc += cc[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i - j)];
    }
    return acc;
  };
  for (long i = fit; i < total; ++i) {
    if (!recurrence_at(i).is_zero()) {
      throw ReconstructionMismatch("reconstructed recurrence fails at decimated index " +
                                   std::to_string(i));
    }
  }
  std::vector<CycloNum> num;
  num.reserve(static_cast<std::size_t>(L));
  for (long i = 0; i < L; ++i) num.push_back(recurrence_at(i));
  return RationalFunction::coprime(Poly(std::move(num)), C, n0);
}

RationalFunction phi_rational_iterate(const RationalFunction& R, long s, long t, long k) {
  if (k < 0) throw std::invalid_argument("iterate count must be nonnegative");
  RationalFunction out = R;
  for (long i = 0; i < k; ++i) out = phi_rational(out, s, t);
  return out;
}

}  // namespace cyclofix
