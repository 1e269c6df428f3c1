#pragma once

// Integer machinery for the decimation operators: multiplicative order,
// beta_{s,t}, distinguished moduli and s-cyclotomic cosets.

#include <string>
#include <vector>

#include "cyclofix/exactnum.hpp"

namespace cyclofix {

struct PairST {
  long s = 2;
  long t = 0;
  friend bool operator==(const PairST&, const PairST&) = default;
};

// Orbit of n under multiplication by s modulo r.
struct CosetRecord {
  long s = 2;
  long r = 1;
  long rep = 0;               // min(members)
  std::vector<long> members;  // ascending
  long ord = 1;               // Ord(s; r)
  friend bool operator==(const CosetRecord&, const CosetRecord&) = default;
};

// One row of an Omega sweep. ord and beta_mod_r are meaningful only when
// coprime is set (r >= 1 and gcd(r, s) = 1).
struct OmegaRow {
  long r = 0;
  bool coprime = false;
  long ord = 0;
  long beta_mod_r = 0;
  bool distinguished = false;
  friend bool operator==(const OmegaRow&, const OmegaRow&) = default;
};

struct OmegaTable {
  long s = 2;
  long t = 0;
  long max_r = 0;
  std::vector<long> members;  // distinguished r in [0, max_r], ascending
  std::vector<OmegaRow> rows;  // every r in [0, max_r]
  friend bool operator==(const OmegaTable&, const OmegaTable&) = default;
};

// Smallest i >= 1 with s^i = 1 (mod r); 1 for r = 1. Throws NotCoprime.
long ord(long s, long r);

// beta_{s,t}(k) = t (s^k - 1) / (s - 1), via beta(j+1) = s beta(j) + t.
Integer beta(long s, long t, long k);
// beta_{s,t}(k) mod r in [0, r).
long beta_mod(long s, long t, long k, long r);

bool is_distinguished(long r, long s, long t);

OmegaTable omega_enumerate(long s, long t, long max_r);

CosetRecord coset(long s, long r, long n);

// Minimal representatives of the s-cyclotomic cosets of units mod r, ascending.
std::vector<long> coset_reps(long s, long r);

std::string omega_csv(const OmegaTable& table);

}  // namespace cyclofix
