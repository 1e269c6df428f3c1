#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "cyclofix/decimation.hpp"
#include "cyclofix/error.hpp"
#include "support.hpp"

using namespace cyclofix;
using cyclofix::testing::Complex;
using cyclofix::testing::Gen;

namespace {

std::vector<CycloNum> ints(std::initializer_list<long> values) {
  std::vector<CycloNum> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RationalFunction pole_term(const CycloNum& alpha, const CycloNum& lambda) {
  return RationalFunction(Poly::constant(alpha),
                          Poly({CycloNum::one(lambda.conductor()), -lambda}));
}

// Sum of random simple cyclotomic pole terms plus a small polynomial part.
RationalFunction random_cyclotomic(Gen& gen, std::size_t max_poles) {
  const long m = gen.pick(std::vector<long>{1, 2, 3, 4, 6, 8, 12});
  RationalFunction R(gen.poly(m, 2));
  for (const auto& [r, c] : gen.poles(m, static_cast<std::size_t>(gen.range(1, static_cast<long>(max_poles))))) {
    R = R + pole_term(gen.nonzero_cyclo(m), root_of_unity(r, c));
  }
  return R;
}

void expect_decimation_matches(const RationalFunction& R, long s, long t, long N) {
  const RationalFunction image = phi_rational(R, s, t);
  const LaurentPrefix direct = expand_series(R, s * N + t + 1);
  const LaurentPrefix via_image = expand_series(image, N);
  const long lo = std::min(direct.n_min, via_image.n_min) - 2;
  for (long n = lo; n <= N; ++n) {
    const long idx = s * n + t;
    EXPECT_EQ(via_image.at(n), direct.at(idx)) << "s=" << s << " t=" << t << " n=" << n;
  }
}

}  // namespace

TEST(PhiSeries, KnownValues) {
  LaurentPrefix ones{0, ints({1, 1, 1, 1, 1, 1, 1})};
  const LaurentPrefix a = phi_series(ones, 2, 1);
  EXPECT_EQ(a.n_min, 0);
  EXPECT_EQ(a.coeffs, ints({1, 1, 1}));

  const LaurentPrefix pow2 = expand_series(parse_expression("1/(1-2x)"), 9);
  EXPECT_EQ(phi_series(pow2, 2, 1).coeffs, ints({2, 8, 32, 128, 512}));

  const LaurentPrefix c = phi_series(pow2, 0, 3, -2, 2);
  EXPECT_EQ(c.coeffs, ints({8, 8, 8, 8, 8}));
}

TEST(PhiSeries, Windows) {
  LaurentPrefix ones{0, ints({1, 1, 1, 1, 1})};
  EXPECT_THROW(phi_series(ones, 2, 1, 0, 5), InsufficientWindow);
  EXPECT_THROW(phi_series(ones, -1, 0), std::invalid_argument);
  const LaurentPrefix below = phi_series(ones, 2, 1, -3, 0);
  EXPECT_EQ(below.coeffs, ints({0, 0, 0, 1}));
  const LaurentPrefix neg = phi_series(ones, -1, 2, -2, 2);
  EXPECT_EQ(neg.coeffs, ints({1, 1, 1, 1, 1}));
}

TEST(PhiPoleTerm, KnownValues) {
  for (long s = 1; s <= 4; ++s) {
    for (long t = -2; t <= 4; ++t) {
      const auto [scale, pole] = phi_pole_term(CycloNum(1), s, t);
      EXPECT_EQ(scale, CycloNum(1));
      EXPECT_EQ(pole, CycloNum(1));
    }
  }
  const auto [a, b] = phi_pole_term(root_of_unity(4, 1), 2, 1);
  EXPECT_EQ(a, root_of_unity(4, 1));
  EXPECT_EQ(b, CycloNum(-1));
  const auto [c, d] = phi_pole_term(root_of_unity(3, 1), 3, 1);
  EXPECT_EQ(c, root_of_unity(3, 1));
  EXPECT_EQ(d, CycloNum(1));
  EXPECT_THROW(phi_pole_term(CycloNum(0), 2, 1), DivisionByZero);
}

TEST(PhiIteratePole, KnownValues) {
  const auto [a, b] = phi_iterate_pole(root_of_unity(4, 1), 3, 1, 2);
  EXPECT_EQ(a, CycloNum(1));
  EXPECT_EQ(b, root_of_unity(4, 1));
  const auto [c, d] = phi_iterate_pole(root_of_unity(5, 2), 2, 1, 1);
  const auto [e, f] = phi_pole_term(root_of_unity(5, 2), 2, 1);
  EXPECT_EQ(c, e);
  EXPECT_EQ(d, f);
}

TEST(PhiIteratePole, ComposesSingleSteps) {
  Gen gen(21);
  for (int i = 0; i < 80; ++i) {
    CycloNum lambda;
    if (gen.coin(0.7)) {
      const long r = gen.range(1, 12);
      lambda = root_of_unity(r, gen.range(0, r - 1));
    } else {
      lambda = gen.nonzero_cyclo(gen.conductor());
    }
    const long s = gen.range(1, 5);
    const long t = gen.range(-2, 4);
    const long k = gen.range(1, 5);
    CycloNum scale(1);
    CycloNum pole = lambda;
    for (long j = 0; j < k; ++j) {
      const auto [sc, p] = phi_pole_term(pole, s, t);
      scale = scale * sc;
      pole = p;
    }
    const auto [a, b] = phi_iterate_pole(lambda, s, t, k);
    EXPECT_EQ(a, scale);
    EXPECT_EQ(b, pole);
  }
}

TEST(BerlekampMassey, Fibonacci) {
  const auto [C, L] = berlekamp_massey(ints({0, 1, 1, 2, 3, 5, 8, 13}));
  EXPECT_EQ(L, 2);
  EXPECT_EQ(C, Poly(ints({1, -1, -1})));
  const auto [Z, L0] = berlekamp_massey(ints({0, 0, 0}));
  EXPECT_EQ(L0, 0);
  EXPECT_EQ(Z, Poly::one());
}

TEST(PhiRational, KnownValues) {
  EXPECT_EQ(phi_rational(parse_expression("1/(1-2x)"), 2, 1), parse_expression("2/(1-4x)"));
  EXPECT_EQ(phi_rational(parse_expression("1/(1-x)"), 2, 1), parse_expression("1/(1-x)"));
  EXPECT_TRUE(phi_rational(parse_expression("(1+x)/(1-x^3)"), 0, 2).is_zero());
}

TEST(PhiRational, DegenerateSteps) {
  EXPECT_THROW(phi_rational(parse_expression("1/(1-x)"), 0, 2), UnrepresentableImage);
  EXPECT_TRUE(phi_rational(parse_expression("x^3/(1-x)"), 0, 2).is_zero());
  // s = 1 is a shift of the two-sided series.
  EXPECT_EQ(phi_rational(parse_expression("1/(1-2x)"), 1, 2), parse_expression("1/(x^2*(1-2x))"));
  EXPECT_EQ(phi_rational(parse_expression("1/(1-2x)"), 1, -2), parse_expression("x^2/(1-2x)"));
  // s < 0 reverses a Laurent polynomial.
  EXPECT_EQ(phi_rational(parse_expression("1 + 2x + 3x^2"), -1, 0),
            parse_expression("1 + 2/x + 3/x^2"));
  EXPECT_EQ(phi_rational(parse_expression("1 + 2x + 3x^2 + 4x^3"), -2, 3),
            parse_expression("4 + 2x"));
  EXPECT_THROW(phi_rational(parse_expression("1/(1-x)"), -1, 0), UnrepresentableImage);
}

TEST(PhiRational, MatchesSeriesDecimationOnCyclotomicInputs) {
  Gen gen(22);
  for (int i = 0; i < 40; ++i) {
    const RationalFunction R = random_cyclotomic(gen, 6);
    for (long s = 2; s <= 3; ++s) {
      for (long t = 0; t <= s - 2; ++t) expect_decimation_matches(R, s, t, 25);
    }
  }
}

TEST(PhiRational, MatchesSeriesDecimationOnGeneralInputs) {
  Gen gen(23);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction R = gen.rational_function(gen.conductor());
    expect_decimation_matches(R, gen.range(1, 4), gen.range(-3, 6), 20);
  }
}

TEST(PhiRational, IteratesMatchClosedFormOnPoleTerms) {
  Gen gen(24);
  for (int i = 0; i < 40; ++i) {
    const long r = gen.range(1, 12);
    const CycloNum lambda = root_of_unity(r, gen.range(0, r - 1));
    const CycloNum alpha = gen.nonzero_cyclo(gen.conductor());
    const long s = gen.range(2, 4);
    const long t = gen.range(0, s - 1);
    const long k = gen.range(1, 4);
    const auto [scale, pole] = phi_iterate_pole(lambda, s, t, k);
    EXPECT_EQ(phi_rational_iterate(pole_term(alpha, lambda), s, t, k), pole_term(alpha * scale, pole));
  }
}

TEST(PhiRational, Linearity) {
  Gen gen(25);
  for (int i = 0; i < 30; ++i) {
    const long m = gen.conductor();
    const RationalFunction A = gen.rational_function(m, 3, 2);
    const RationalFunction B = gen.rational_function(m, 3, 2);
    const CycloNum a = gen.cyclo(m);
    const CycloNum b = gen.cyclo(m);
    const long s = gen.range(1, 4);
    const long t = gen.range(-2, 5);
    EXPECT_EQ(phi_rational(A.scaled(a) + B.scaled(b), s, t),
              phi_rational(A, s, t).scaled(a) + phi_rational(B, s, t).scaled(b));
  }
}

TEST(PhiRational, PreservesPolynomials) {
  Gen gen(26);
  for (int i = 0; i < 40; ++i) {
    const RationalFunction R(gen.poly(gen.conductor(), 8));
    const long s = gen.range(1, 5);
    const long t = gen.range(0, 6);
    const RationalFunction image = phi_rational(R, s, t);
    EXPECT_TRUE(image.is_laurent_polynomial());
    // Two-sided: b_n = a_{sn+t} can be nonzero for n down to -(t / s).
    EXPECT_GE(image.x_shift(), -(t / s));
  }
}

TEST(PhiRational, FloatSubstitutionOracle) {
  Gen gen(27);
  for (int i = 0; i < 25; ++i) {
    const RationalFunction R = random_cyclotomic(gen, 4);
    const long s = gen.range(1, 4);
    const long t = gen.range(0, s + 2);
    const RationalFunction image = phi_rational(R, s, t);
    const Complex y = std::polar(0.35, 0.3 + 0.1 * i);
    Complex sum = 0;
    for (long j = 0; j < s; ++j) {
      const Complex w = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(s));
      sum += std::pow(w, static_cast<int>(-t)) * cyclofix::testing::eval(R, w * y);
    }
    const Complex expected = sum * std::pow(y, static_cast<int>(-t)) / static_cast<double>(s);
    const Complex got = cyclofix::testing::eval(image, std::pow(y, static_cast<int>(s)));
    EXPECT_LT(std::abs(got - expected), 1e-9 * (1 + std::abs(expected))) << "s=" << s << " t=" << t << " R=" << canonical_text(R) << " image=" << canonical_text(image);
  }
}
