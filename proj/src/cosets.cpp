#include "cyclofix/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclofix/error.hpp"

namespace cyclofix {

namespace {

long mod(long a, long r) {
  const long v = a % r;
  return v < 0 ? v + r : v;
}

long mul_mod(long a, long b, long r) {
  return static_cast<long>(static_cast<__int128>(a) * b % r);
}

void require_coprime(long s, long r) {
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  if (std::gcd(s, r) != 1) {
    throw NotCoprime("gcd(" + std::to_string(s) + ", " + std::to_string(r) + ") != 1");
  }
}

}  // namespace

long ord(long s, long r) {
  require_coprime(s, r);
  if (r == 1) return 1;
  const long base = mod(s, r);
  long x = base;
  long i = 1;
  while (x != 1) {
    x = mul_mod(x, base, r);
    ++i;
  }
  return i;
}

Integer beta(long s, long t, long k) {
  if (k < 0) throw std::invalid_argument("beta index must be nonnegative");
  Integer b = 0;
  for (long j = 0; j < k; ++j) b = s * b + t;
  return b;
}

long beta_mod(long s, long t, long k, long r) {
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  const long sm = mod(s, r);
  const long tm = mod(t, r);
  long b = 0;
  for (long j = 0; j < k; ++j) b = (mul_mod(sm, b, r) + tm) % r;
  return b;
}

bool is_distinguished(long r, long s, long t) {
  if (r < 0) return false;
  if (r == 0) return t == 0;
  if (std::gcd(r, s) != 1) return false;
  return beta_mod(s, t, ord(s, r), r) == 0;
}

OmegaTable omega_enumerate(long s, long t, long max_r) {
  if (max_r < 0) throw std::invalid_argument("max_r must be nonnegative");
  OmegaTable table{s, t, max_r, {}, {}};
  table.rows.reserve(static_cast<std::size_t>(max_r) + 1);
  table.rows.push_back({0, false, 0, 0, t == 0});
  for (long r = 1; r <= max_r; ++r) {
    OmegaRow row{r, std::gcd(r, s) == 1, 0, 0, false};
    if (row.coprime) {
      row.ord = ord(s, r);
      row.beta_mod_r = beta_mod(s, t, row.ord, r);
      row.distinguished = row.beta_mod_r == 0;
    }
    table.rows.push_back(row);
  }
  for (const OmegaRow& row : table.rows) {
    if (row.distinguished) table.members.push_back(row.r);
  }
  return table;
}

CosetRecord coset(long s, long r, long n) {
  require_coprime(s, r);
  CosetRecord rec;
  rec.s = s;
  rec.r = r;
  rec.ord = ord(s, r);
  const long start = mod(n, r);
  long x = start;
  do {
    rec.members.push_back(x);
    x = mul_mod(x, mod(s, r), r);
  } while (x != start);
  std::sort(rec.members.begin(), rec.members.end());
  rec.rep = rec.members.front();
  return rec;
}

std::vector<long> coset_reps(long s, long r) {
  require_coprime(s, r);
  std::vector<long> reps;
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  for (long n = 1; n < r; ++n) {
    if (seen[static_cast<std::size_t>(n)] || std::gcd(n, r) != 1) continue;
    reps.push_back(n);
    long x = n;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      x = mul_mod(x, mod(s, r), r);
    } while (x != n);
  }
  return reps;
}

std::string omega_csv(const OmegaTable& table) {
  std::ostringstream out;
  out << "r,ord,beta_mod_r,distinguished\n";
  for (const OmegaRow& row : table.rows) {
    out << row.r << ',';
    if (row.coprime) out << row.ord << ',' << row.beta_mod_r;
    else out << ',';
    out << ',' << (row.distinguished ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace cyclofix
