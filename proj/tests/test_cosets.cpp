#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <vector>

#include "cyclofix/cosets.hpp"
#include "cyclofix/error.hpp"

using namespace cyclofix;

namespace {

long brute_ord(long s, long r) {
  long x = 1;
  for (long i = 1;; ++i) {
    x = (x * s) % r;
    if (x == 1 % r) return i;
  }
}

}  // namespace

TEST(Ord, KnownValues) {
  EXPECT_EQ(ord(3, 4), 2);
  EXPECT_EQ(ord(3, 5), 4);
  EXPECT_EQ(ord(7, 1), 1);
  EXPECT_THROW(ord(2, 6), NotCoprime);
}

TEST(Ord, MatchesBruteForce) {
  for (long s = 2; s <= 7; ++s) {
    for (long r = 1; r <= 150; ++r) {
      if (std::gcd(s, r) != 1) continue;
      EXPECT_EQ(ord(s, r), brute_ord(s, r)) << s << "," << r;
    }
  }
}

TEST(Beta, KnownValues) {
  EXPECT_EQ(beta(3, 1, 4), Integer(40));
  EXPECT_EQ(beta(5, 0, 9), Integer(0));
  EXPECT_EQ(beta(2, 1, 3), Integer(7));
  EXPECT_EQ(beta(1, 4, 6), Integer(24));
}

TEST(Beta, RecursionMatchesClosedForm) {
  for (long s = 2; s <= 6; ++s) {
    for (long t = 0; t <= s - 2; ++t) {
      for (long k = 0; k <= 40; ++k) {
        Integer sk;
        mpz_pow_ui(sk.get_mpz_t(), Integer(s).get_mpz_t(), static_cast<unsigned long>(k));
        const Integer closed = Integer(t) * (sk - 1) / (s - 1);
        EXPECT_EQ(beta(s, t, k), closed);
      }
    }
  }
}

TEST(Distinguished, KnownValues) {
  EXPECT_TRUE(is_distinguished(4, 3, 1));
  EXPECT_FALSE(is_distinguished(616, 3, 1));
  EXPECT_FALSE(is_distinguished(2, 3, 1));
  EXPECT_TRUE(is_distinguished(0, 3, 0));
  EXPECT_FALSE(is_distinguished(0, 3, 1));
  EXPECT_FALSE(is_distinguished(6, 2, 1));
}

TEST(Distinguished, ModularShortcutMatchesFullBeta) {
  for (long s = 2; s <= 5; ++s) {
    for (long t = -3; t <= 6; ++t) {
      for (long r = 1; r <= 200; ++r) {
        if (std::gcd(r, s) != 1) {
          EXPECT_FALSE(is_distinguished(r, s, t));
          continue;
        }
        const bool full = beta(s, t, ord(s, r)) % r == 0;
        EXPECT_EQ(is_distinguished(r, s, t), full) << s << "," << t << "," << r;
      }
    }
  }
}

TEST(Omega, KnownValues) {
  EXPECT_EQ(omega_enumerate(3, 1, 38).members,
            (std::vector<long>{1, 4, 5, 7, 10, 11, 13, 14, 17, 19, 20, 23, 25, 28, 29, 31, 34, 35,
                               37, 38}));
  EXPECT_EQ(omega_enumerate(2, 1, 15).members, (std::vector<long>{1, 3, 5, 7, 9, 11, 13, 15}));
  const OmegaTable zero = omega_enumerate(3, 0, 3);
  EXPECT_EQ(zero.members.front(), 0);
  EXPECT_EQ(zero.rows.size(), 4u);
}

TEST(Omega, CoprimeToStepTimesStepMinusOne) {
  for (long s = 2; s <= 5; ++s) {
    for (long r = 1; r <= 500; ++r) {
      if (std::gcd(r, s * (s - 1)) == 1) EXPECT_TRUE(is_distinguished(r, s, 1)) << s << "," << r;
    }
  }
}

TEST(Omega, Csv) {
  const std::string csv = omega_csv(omega_enumerate(3, 1, 4));
  EXPECT_EQ(csv,
            "r,ord,beta_mod_r,distinguished\n"
            "0,,,false\n"
            "1,1,0,true\n"
            "2,1,1,false\n"
            "3,,,false\n"
            "4,2,0,true\n");
}

TEST(Coset, KnownValues) {
  const CosetRecord a = coset(2, 7, 1);
  EXPECT_EQ(a.members, (std::vector<long>{1, 2, 4}));
  EXPECT_EQ(a.rep, 1);
  EXPECT_EQ(a.ord, 3);
  const CosetRecord b = coset(2, 7, 3);
  EXPECT_EQ(b.members, (std::vector<long>{3, 5, 6}));
  EXPECT_EQ(b.rep, 3);
  EXPECT_EQ(coset(5, 12, 0).members, (std::vector<long>{0}));
  EXPECT_EQ(coset(2, 7, -1).members, (std::vector<long>{3, 5, 6}));
  EXPECT_THROW(coset(2, 8, 1), NotCoprime);
}

TEST(CosetReps, KnownValues) {
  EXPECT_EQ(coset_reps(2, 7), (std::vector<long>{1, 3}));
  EXPECT_EQ(coset_reps(3, 4), (std::vector<long>{1}));
  EXPECT_TRUE(coset_reps(2, 1).empty());
  EXPECT_THROW(coset_reps(3, 9), NotCoprime);
}

TEST(CosetReps, PartitionUnitsAndStableMembership) {
  for (long s = 2; s <= 6; ++s) {
    for (long r = 2; r <= 120; ++r) {
      if (std::gcd(s, r) != 1) continue;
      long covered = 0;
      std::set<long> seen;
      for (long n : coset_reps(s, r)) {
        const CosetRecord rec = coset(s, r, n);
        EXPECT_EQ(rec.rep, n);
        EXPECT_EQ(rec.ord % static_cast<long>(rec.members.size()), 0);
        covered += static_cast<long>(rec.members.size());
        for (long m : rec.members) {
          EXPECT_TRUE(seen.insert(m).second);
          EXPECT_EQ(coset(s, r, m), rec);
        }
      }
      long units = 0;
      for (long n = 1; n < r; ++n) units += std::gcd(n, r) == 1;
      EXPECT_EQ(covered, units) << s << "," << r;
    }
  }
}
