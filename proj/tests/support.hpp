#pragma once

// Seeded generators and floating-point shadows shared by the tests and the
// acceptance runner.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cyclofix/cosets.hpp"
#include "cyclofix/exactnum.hpp"
#include "cyclofix/fixedpoints.hpp"
#include "cyclofix/ratfunc.hpp"

namespace cyclofix::testing {

using Complex = std::complex<double>;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(range(0, static_cast<long>(items.size()) - 1))];
  }

  Rat rat(long num_bound = 5, long den_bound = 4) {
    Rat q(range(-num_bound, num_bound), range(1, den_bound));
    q.canonicalize();
    return q;
  }

  // Random element of Q(zeta_m); about a third of the coordinates are zero.
  CycloNum cyclo(long m) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(totient(m)));
    for (Rat& c : coeffs) c = coin(0.35) ? Rat(0) : rat();
    return CycloNum(m, coeffs);
  }

  CycloNum nonzero_cyclo(long m) {
    for (;;) {
      CycloNum c = cyclo(m);
      if (!c.is_zero()) return c;
    }
  }

  long conductor() { return pick(std::vector<long>{1, 2, 3, 4, 5, 6, 8, 10, 12}); }

  Poly poly(long m, long max_degree) {
    std::vector<CycloNum> coeffs;
    const long degree = range(0, max_degree);
    for (long i = 0; i <= degree; ++i) coeffs.push_back(cyclo(m));
    return Poly(std::move(coeffs)).promote(m);
  }

  // Random rational function with den(0) = 1 and a possibly negative shift.
  RationalFunction rational_function(long m, long max_num = 4, long max_den = 3) {
    for (;;) {
      Poly num = poly(m, max_num);
      std::vector<CycloNum> den{CycloNum::one(m)};
      const long d = range(0, max_den);
      for (long i = 1; i <= d; ++i) den.push_back(cyclo(m));
      if (num.is_zero()) continue;
      return RationalFunction(num, Poly(std::move(den)), range(-2, 2));
    }
  }

  // Distinct poles zeta_r^c with r | m, gcd(c, r) = 1.
  std::vector<std::pair<long, long>> poles(long m, std::size_t count) {
    std::vector<std::pair<long, long>> all;
    for (long r : divisors(m)) {
      for (long c = (r == 1 ? 0 : 1); c < std::max(r, 1L); ++c) {
        if (r == 1 || std::gcd(c, r) == 1) all.emplace_back(r, c);
      }
    }
    std::shuffle(all.begin(), all.end(), rng_);
    if (all.size() > count) all.resize(count);
    return all;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Complex to_complex(const CycloNum& a) {
  const double m = static_cast<double>(a.conductor());
  Complex acc = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const double c = a.coeff(i).get_d();
    if (c == 0) continue;
    acc += c * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(i) / m);
  }
  return acc;
}

inline Complex eval_poly(const Poly& p, Complex x) {
  Complex acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + to_complex(p.coeffs()[i]);
  return acc;
}

inline Complex eval(const RationalFunction& R, Complex x) {
  if (R.is_zero()) return 0;
  return std::pow(x, static_cast<int>(R.x_shift())) * eval_poly(R.num(), x) / eval_poly(R.den(), x);
}

// Fixed point for (s, t) built from at most `terms` random basis elements
// with coefficients in Q(zeta_12). Elements are skipped when they would push
// the common conductor past max_conductor.
inline std::pair<RationalFunction, std::vector<std::pair<BasisKey, CycloNum>>> random_fixed(
    Gen& gen, const FixedBasis& b, std::size_t terms, long max_conductor = 420) {
  std::vector<std::size_t> order(b.elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), gen.engine());
  std::vector<std::size_t> idx;
  long conductor = 12;
  for (std::size_t i : order) {
    if (idx.size() == terms) break;
    const long joined = std::lcm(conductor, std::max(1L, b.elements[i].r));
    if (joined > max_conductor) continue;
    conductor = joined;
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  std::vector<std::pair<BasisKey, CycloNum>> combo;
  for (std::size_t i : idx) combo.emplace_back(b.elements[i].key(), gen.nonzero_cyclo(12));
  std::sort(combo.begin(), combo.end(),
            [](const auto& a, const auto& c) { return a.first < c.first; });
  return {transport(combine(b.s, b.t_frame, combo), b.u), combo};
}

}  // namespace cyclofix::testing
