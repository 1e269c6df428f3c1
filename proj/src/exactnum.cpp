#include "cyclofix/exactnum.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclofix/error.hpp"

namespace cyclofix {

namespace {

std::atomic<long> g_max_conductor{10000};

using RatPoly = std::vector<Rat>;

// Distinct primes below 2^62, one per call.
class PrimeStream {
 public:
  std::uint64_t next() {
    mpz_nextprime(cursor_.get_mpz_t(), cursor_.get_mpz_t());
    const std::uint64_t p = cursor_.get_ui();
    cursor_ -= Integer(1) << 24;
    return p;
  }

 private:
  Integer cursor_ = (Integer(1) << 62) - (Integer(1) << 24);
};

std::uint64_t mod_u64(const Integer& x, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), Integer(p).get_mpz_t());
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// b = a^{-1} mod f over F_p; false when gcd(a, f) != 1 mod p.
bool inverse_mod_p(ModPoly a, ModPoly f, std::uint64_t p, ModPoly& b) {
  trim(a);
  trim(f);
  if (a.empty()) return false;
  ModPoly r0 = std::move(f);
  ModPoly r1 = std::move(a);
  ModPoly s0;
  ModPoly s1{1};
  while (r1.size() > 1) {
    const std::uint64_t lead_inv = pow_mod(r1.back(), p - 2, p);
    ModPoly quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      const std::uint64_t c = mul_mod(r0[i + r1.size() - 1], lead_inv, p);
      quot[i] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < r1.size(); ++j) {
        r0[i + j] = (r0[i + j] + p - mul_mod(c, r1[j], p)) % p;
      }
    }
    trim(r0);
    ModPoly s2(std::max(s0.size(), quot.size() + s1.size()), 0);
    std::copy(s0.begin(), s0.end(), s2.begin());
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) {
        s2[i + j] = (s2[i + j] + p - mul_mod(quot[i], s1[j], p)) % p;
      }
    }
    trim(s2);
    std::swap(r0, r1);  // r0 <- divisor, r1 <- remainder
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) return false;
  const std::uint64_t c_inv = pow_mod(r1[0], p - 2, p);
  b = std::move(s1);
  for (std::uint64_t& x : b) x = mul_mod(x, c_inv, p);
  return true;
}

void crt_combine(std::vector<Integer>& residues, Integer& modulus, const ModPoly& values,
                 std::uint64_t p) {
  const Integer P(p);
  if (modulus == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) residues[i] = Integer(values[i]);
    modulus = P;
    return;
  }
  const std::uint64_t m_inv = pow_mod(mod_u64(modulus, p), p - 2, p);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t old = mod_u64(residues[i], p);
    const std::uint64_t diff = (values[i] + p - old) % p;
    residues[i] += modulus * Integer(mul_mod(diff, m_inv, p));
  }
  modulus *= P;
}

// Numerators over a shared denominator for residues mod M; false if some
// coefficient has no small rational preimage yet.
bool reconstruct(const std::vector<Integer>& residues, const Integer& modulus,
                 std::vector<Integer>& nums, Integer& common) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), modulus.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  common = 1;
  std::vector<Integer> scaled(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i) {
    Integer u = residues[i] * common;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    if (u > modulus / 2) u -= modulus;
    if (abs(u) <= bound) {
      scaled[i] = u;
      continue;
    }
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    Integer r0 = modulus, r1 = u, t0 = 0, t1 = 1;
    while (r1 > bound) {
      const Integer q = r0 / r1;
      Integer r2 = r0 - q * r1;
      Integer t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return false;
    if (sgn(t1) < 0) {
      t1 = -t1;
      r1 = -r1;
    }
    for (std::size_t j = 0; j < i; ++j) scaled[j] *= t1;
    common *= t1;
    scaled[i] = r1;
  }
  nums = std::move(scaled);
  return true;
}

// Solves A y = b exactly; returns false when inconsistent.
bool solve_exact(std::vector<RatPoly> rows, std::size_t unknowns, RatPoly& solution) {
  const std::size_t n_rows = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < n_rows; ++col) {
    std::size_t pivot = row;
    while (pivot < n_rows && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[row], rows[pivot]);
    const Rat inv = 1 / rows[row][col];
    for (auto& v : rows[row]) v *= inv;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == row || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) rows[r][c] -= f * rows[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n_rows; ++r) {
    if (rows[r][unknowns] != 0) return false;
  }
  solution.assign(unknowns, Rat(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) solution[pivot_col[r]] = rows[r][unknowns];
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected digits in rational literal");
    out.assign(text.substr(start, pos - start));
  };
  skip_ws();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string num_digits;
  std::string den_digits = "1";
  digits(num_digits);
  skip_ws();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip_ws();
    digits(den_digits);
    skip_ws();
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters in rational literal");
  Integer den(den_digits);
  if (den == 0) throw ZeroDenominator("rational literal with zero denominator");
  Rat q(Integer(num_digits), den);
  q.canonicalize();
  return negative ? Rat(-q) : q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

long totient(long n) {
  if (n < 1) throw std::invalid_argument("totient of non-positive integer");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long checked_lcm(long a, long b) {
  const long g = std::gcd(a, b);
  long out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw ConductorLimit("conductor lcm overflows");
  }
  return out;
}

long max_conductor() noexcept { return g_max_conductor.load(std::memory_order_relaxed); }

void set_max_conductor(long limit) noexcept {
  g_max_conductor.store(limit, std::memory_order_relaxed);
}

CycloPolyTable& CycloPolyTable::global() {
  static CycloPolyTable table;
  return table;
}

std::size_t CycloPolyTable::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

const std::vector<long>& CycloPolyTable::get(long k) {
  if (k < 1) throw std::invalid_argument("cyclotomic index must be positive");
  if (k > max_conductor()) {
    throw ConductorLimit("conductor " + std::to_string(k) + " exceeds limit " +
                         std::to_string(max_conductor()));
  }
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  std::vector<long> poly = compute(k);
  std::unique_lock lock(mutex_);
  return cache_.emplace(k, std::move(poly)).first->second;
}

std::vector<long> CycloPolyTable::compute(long k) {
  // x^k - 1 divided exactly by every Phi_d with d | k, d < k.
  std::vector<Integer> rem(static_cast<std::size_t>(k) + 1, 0);
  rem[0] = -1;
  rem[static_cast<std::size_t>(k)] = 1;
  for (long d : divisors(k)) {
    if (d == k) continue;
    const std::vector<long>& div = get(d);
    const std::size_t nb = div.size();
    std::vector<Integer> quot(rem.size() - nb + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      quot[i] = rem[i + nb - 1];
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < nb; ++j) rem[i + j] -= quot[i] * div[j];
    }
    rem = std::move(quot);
  }
  std::vector<long> out;
  out.reserve(rem.size());
  for (const Integer& c : rem) {
    if (!c.fits_slong_p()) throw ConductorLimit("cyclotomic coefficient exceeds 64 bits");
    out.push_back(c.get_si());
  }
  return out;
}

CycloNum::CycloNum() : num_(1, 0) {}

CycloNum::CycloNum(long value) : num_(1, value) {}

CycloNum::CycloNum(const Rat& value, long conductor) : conductor_(conductor) {
  num_.assign(cyclotomic_poly(conductor).size() - 1, 0);
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycloNum::CycloNum(long conductor, std::span<const Rat> coeffs) : conductor_(conductor) {
  const std::size_t dim = cyclotomic_poly(conductor).size() - 1;
  if (coeffs.size() != dim) {
    throw std::invalid_argument("coefficient count does not match phi(conductor)");
  }
  den_ = 1;
  for (const Rat& c : coeffs) den_ = lcm(den_, Integer(c.get_den()));
  num_.reserve(dim);
  for (const Rat& c : coeffs) num_.push_back(c.get_num() * (den_ / c.get_den()));
  normalize();
}

CycloNum CycloNum::zero(long conductor) { return CycloNum(Rat(0), conductor); }

CycloNum CycloNum::one(long conductor) { return CycloNum(Rat(1), conductor); }

CycloNum CycloNum::from_power_sum(long conductor, std::span<const Integer> coeffs,
                                  const Integer& den) {
  const std::size_t m = static_cast<std::size_t>(conductor);
  std::vector<Integer> folded(std::min(coeffs.size(), m), 0);
  for (std::size_t e = 0; e < coeffs.size(); ++e) folded[e % m] += coeffs[e];
  reduce_mod_phi(folded, conductor);
  CycloNum out;
  out.conductor_ = conductor;
  out.num_ = std::move(folded);
  out.den_ = den;
  out.normalize();
  return out;
}

void CycloNum::reduce_mod_phi(std::vector<Integer>& poly, long m) {
  const std::vector<long>& phi = cyclotomic_poly(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    mpz_ptr c = poly[i].get_mpz_t();
    if (mpz_sgn(c) == 0) continue;
    const std::size_t base = i - deg;
    for (std::size_t j = 0; j < deg; ++j) {
      const long p = phi[j];
      if (p > 0) {
        mpz_submul_ui(poly[base + j].get_mpz_t(), c, static_cast<unsigned long>(p));
      } else if (p < 0) {
        mpz_addmul_ui(poly[base + j].get_mpz_t(), c, static_cast<unsigned long>(-p));
      }
    }
    mpz_set_ui(c, 0);
  }
  poly.resize(deg, 0);
}

void CycloNum::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (Integer& n : num_) n = -n;
  }
  if (den_ == 1) return;
  Integer g = den_;
  bool all_zero = true;
  for (const Integer& n : num_) {
    if (n == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (Integer& n : num_) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Rat CycloNum::coeff(std::size_t i) const {
  Rat q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::vector<Rat> CycloNum::coeffs() const {
  std::vector<Rat> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycloNum::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& n) { return n == 0; });
}

bool CycloNum::is_one() const noexcept { return is_rational() && num_[0] == den_; }

bool CycloNum::is_rational() const noexcept {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& n) { return n == 0; });
}

Rat CycloNum::to_rat() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
  return coeff(0);
}

CycloNum CycloNum::promote(long m) const {
  if (m == conductor_) return *this;
  if (m < 1 || m % conductor_ != 0) {
    throw ConductorMismatch("cannot promote conductor " + std::to_string(conductor_) + " to " +
                            std::to_string(m));
  }
  if (is_rational()) return CycloNum(coeff(0), m);
  const std::size_t step = static_cast<std::size_t>(m / conductor_);
  std::vector<Integer> dense((num_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) dense[i * step] = num_[i];
  return from_power_sum(m, dense, den_);
}

CycloNum CycloNum::galois(long k) const {
  const long m = conductor_;
  k %= m;
  if (k < 0) k += m;
  if (std::gcd(k, m) != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
  if (is_rational()) return *this;
  std::vector<Integer> dense(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    dense[static_cast<std::size_t>((static_cast<long>(i) * k) % m)] += num_[i];
  }
  return from_power_sum(m, dense, den_);
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (is_rational()) return CycloNum(1 / coeff(0), conductor_);
  // Solve A * B = 1 mod (Phi_m, p) for several primes, lift by CRT and
  // rational reconstruction, and stop once the lift checks out exactly.
  const std::vector<long>& phi = cyclotomic_poly(conductor_);
  const std::size_t n = num_.size();
  std::vector<Integer> residues(n, 0);
  Integer modulus = 1;
  std::size_t next_attempt = 1;
  std::size_t used = 0;
  PrimeStream primes;
  for (;;) {
    const std::uint64_t p = primes.next();
    std::vector<std::uint64_t> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = mod_u64(num_[i], p);
    std::vector<std::uint64_t> f(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
      f[i] = phi[i] >= 0 ? static_cast<std::uint64_t>(phi[i]) % p
                         : p - static_cast<std::uint64_t>(-phi[i]) % p;
    }
    std::vector<std::uint64_t> b;
    if (!inverse_mod_p(a, f, p, b)) continue;
    b.resize(n, 0);
    crt_combine(residues, modulus, b, p);
    if (++used < next_attempt) continue;
    next_attempt *= 2;
    std::vector<Integer> lifted;
    Integer common;
    if (!reconstruct(residues, modulus, lifted, common)) continue;
    // Check A * lifted = common (mod Phi_m).
    std::vector<Integer> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(num_[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(lifted[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), lifted[j].get_mpz_t());
      }
    }
    reduce_mod_phi(prod, conductor_);
    bool ok = prod[0] == common;
    for (std::size_t i = 1; ok && i < n; ++i) ok = sgn(prod[i]) == 0;
    if (!ok) continue;
    CycloNum out;
    out.conductor_ = conductor_;
    out.num_ = std::move(lifted);
    for (Integer& c : out.num_) c *= den_;
    out.den_ = common;
    out.normalize();
    return out;
  }
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result = one(conductor_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNum CycloNum::pow(const Integer& e) const {
  if (e.fits_slong_p()) return pow(e.get_si());
  if (sgn(e) < 0) return inverse().pow(Integer(-e));
  CycloNum result = one(conductor_);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (Integer& n : out.num_) n = -n;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (rhs.conductor_ != conductor_) {
    const long m = unify_conductor(conductor_, rhs.conductor_);
    *this = promote(m);
    return *this += rhs.promote(m);
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
  *this = *this * rhs;
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) {
  *this = *this / rhs;
  return *this;
}

CycloNum operator*(const CycloNum& lhs, const CycloNum& rhs) {
  if (lhs.conductor_ != rhs.conductor_) {
    const long m = unify_conductor(lhs.conductor_, rhs.conductor_);
    return lhs.promote(m) * rhs.promote(m);
  }
  CycloNum out;
  out.conductor_ = lhs.conductor_;
  out.den_ = lhs.den_ * rhs.den_;
  if (rhs.is_rational() || lhs.is_rational()) {
    const CycloNum& vec = rhs.is_rational() ? lhs : rhs;
    const Integer& scalar = rhs.is_rational() ? rhs.num_[0] : lhs.num_[0];
    out.num_.resize(vec.num_.size());
    for (std::size_t i = 0; i < vec.num_.size(); ++i) out.num_[i] = vec.num_[i] * scalar;
  } else {
    const std::size_t n = lhs.num_.size();
    std::vector<Integer> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_srcptr a = lhs.num_[i].get_mpz_t();
      if (mpz_sgn(a) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_srcptr b = rhs.num_[j].get_mpz_t();
        if (mpz_sgn(b) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a, b);
      }
    }
    CycloNum::reduce_mod_phi(prod, out.conductor_);
    out.num_ = std::move(prod);
  }
  out.normalize();
  return out;
}

bool operator==(const CycloNum& lhs, const CycloNum& rhs) {
  if (lhs.conductor_ == rhs.conductor_) return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
  if (lhs.is_rational() && rhs.is_rational()) return lhs.coeff(0) == rhs.coeff(0);
  const long m = unify_conductor(lhs.conductor_, rhs.conductor_);
  return lhs.promote(m) == rhs.promote(m);
}

CycloNum root_of_unity(long r, long k) {
  if (r < 1) throw std::invalid_argument("root of unity order must be positive");
  k %= r;
  if (k < 0) k += r;
  std::vector<Integer> dense(static_cast<std::size_t>(k) + 1, 0);
  dense.back() = 1;
  return CycloNum::from_power_sum(r, dense);
}

CycloNum cyclo_arith(const CycloNum& a, const CycloNum& b, CycloOp op) {
  switch (op) {
    case CycloOp::add:
      return a + b;
    case CycloOp::sub:
      return a - b;
    case CycloOp::mul:
      return a * b;
    case CycloOp::div:
      return a / b;
  }
  throw std::invalid_argument("unknown cyclotomic operation");
}

CycloNum cyclo_promote(const CycloNum& a, long m) { return a.promote(m); }

long unify_conductor(long a, long b) {
  const long m = checked_lcm(a, b);
  if (m > max_conductor()) {
    throw ConductorLimit("conductor " + std::to_string(m) + " exceeds limit " +
                         std::to_string(max_conductor()));
  }
  return m;
}

CycloNum minimal_conductor(const CycloNum& a) {
  if (a.is_rational()) return CycloNum(a.to_rat());
  const long m = a.conductor();
  const std::vector<Rat> target = a.coeffs();
  for (long d : divisors(m)) {
    if (d == m) break;
    if (d % 4 == 2 || d == 1) continue;
    const std::size_t unknowns = static_cast<std::size_t>(totient(d));
    std::vector<RatPoly> rows(target.size(), RatPoly(unknowns + 1, Rat(0)));
    for (std::size_t i = 0; i < unknowns; ++i) {
      const CycloNum basis = root_of_unity(d, static_cast<long>(i)).promote(m);
      for (std::size_t row = 0; row < target.size(); ++row) rows[row][i] = basis.coeff(row);
    }
    for (std::size_t row = 0; row < target.size(); ++row) rows[row][unknowns] = target[row];
    RatPoly solution;
    if (solve_exact(std::move(rows), unknowns, solution)) return CycloNum(d, solution);
  }
  return a;
}

std::string to_text(const CycloNum& a, std::string_view var) {
  std::string out;
  const std::vector<Rat> c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    const Rat mag = abs(c[i]);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
      out += "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cyclofix
