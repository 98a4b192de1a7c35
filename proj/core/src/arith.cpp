#include "phichain/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "phichain/errors.hpp"

namespace phichain::arith {

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

constexpr std::uint64_t kTrialBound = 1'000'000;

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialBound);
  return primes;
}

// y <- y^2 + c mod n
void rho_step(Int& y, unsigned long c, const Int& n) {
  y = (y * y + c) % n;
}

// Brent's cycle finding with batched gcd. Returns a nontrivial factor of n
// or n itself when the parameter c fails.
Int rho_brent(const Int& n, unsigned long c) {
  Int y(2), x, ys, q(1), g(1);
  unsigned long r = 1;
  const unsigned long batch = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) rho_step(y, c, n);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(batch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        rho_step(y, c, n);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    // Replay the last batch one step at a time.
    do {
      rho_step(ys, c, n);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

// Splits n (odd, composite, no factor <= kTrialBound) into primes.
void factor_hard(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Int d = n;
  for (unsigned long c = 1;; ++c) {
    Int g = rho_brent(d, c);
    if (g != d) {
      factor_hard(g, out);
      factor_hard(d / g, out);
      return;
    }
  }
}

}  // namespace

Int Factorization::value() const {
  Int v(1);
  for (const auto& [p, e] : entries) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Int Factorization::phi() const {
  Int v(1);
  for (const auto& [p, e] : entries) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    v *= pe * (p - 1);
  }
  return v;
}

Int Factorization::sigma() const {
  Int v(1);
  for (const auto& [p, e] : entries) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e + 1);
    v *= (pe - 1) / (p - 1);
  }
  return v;
}

Rat Factorization::phi_ratio() const {
  Rat r(1);
  for (const auto& [p, e] : entries) {
    (void)e;
    r *= make_rat(p - 1, p);
  }
  return r;
}

Rat Factorization::phi_sigma_ratio() const {
  Rat r(1);
  for (const auto& [p, e] : entries) {
    Int pe1;
    mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e + 1);
    r *= make_rat(pe1 - 1, pe1);
  }
  return r;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long b : bases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int nm1 = n - 1;
  for (unsigned long b : bases) {
    Int x, base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(const Int& n) {
  if (n < 1) throw DomainError("factorize requires n >= 1, got " + int_str(n));
  Factorization f;
  if (n == 1) return f;
  Int rem = n;
  for (std::uint64_t p : trial_primes()) {
    if (Int(p) * p > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
      f.entries.emplace_back(Int(p), e);
    }
  }
  if (rem > 1) {
    if (rem <= Int(kTrialBound) * kTrialBound || is_probable_prime(rem)) {
      // No factor <= min(sqrt(rem), 10^6) exists, so rem is prime.
      f.entries.emplace_back(rem, 1);
    } else {
      std::map<Int, unsigned> hard;
      factor_hard(rem, hard);
      for (const auto& [p, e] : hard) f.entries.emplace_back(p, e);
    }
  }
  std::sort(f.entries.begin(), f.entries.end());
  return f;
}

Int euler_phi(const Int& n) {
  if (n < 1) throw DomainError("euler_phi requires n >= 1, got " + int_str(n));
  return factorize(n).phi();
}

Int sigma(const Int& n) {
  if (n < 1) throw DomainError("sigma requires n >= 1, got " + int_str(n));
  return factorize(n).sigma();
}

Rat phi_over_n(const Int& n) {
  if (n < 1) throw DomainError("phi_over_n requires n >= 1, got " + int_str(n));
  return factorize(n).phi_ratio();
}

namespace {

void check_sieve_window(std::uint64_t L, std::uint64_t R, std::uint64_t budget) {
  if (L < 1 || L > R) throw DomainError("sieve window requires 1 <= L <= R");
  if (R >= (std::uint64_t{1} << 52))
    throw DomainError("sieve window upper bound exceeds 2^52; use the progression scanner");
  if (R - L > budget)
    throw ResourceError("sieve window of " + std::to_string(R - L) +
                            " values exceeds the memory budget; split into blocks of " +
                            std::to_string(budget),
                        budget);
}

}  // namespace

std::vector<std::uint64_t> totient_sieve(std::uint64_t L, std::uint64_t R, std::uint64_t budget) {
  check_sieve_window(L, R, budget);
  std::size_t len = R - L;
  std::vector<std::uint64_t> rem(len), phi(len, 1);
  for (std::size_t i = 0; i < len; ++i) rem[i] = L + i;
  if (len == 0) return phi;
  std::uint64_t root = isqrt_u64(R - 1);
  for (std::uint64_t p : primes_up_to(root)) {
    std::uint64_t start = ((L + p - 1) / p) * p;
    for (std::uint64_t v = start; v < R; v += p) {
      std::size_t i = v - L;
      std::uint64_t pe = 1;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        pe *= p;
      }
      phi[i] *= (pe / p) * (p - 1);
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    if (rem[i] > 1) phi[i] *= rem[i] - 1;
  return phi;
}

std::vector<std::uint64_t> sigma_sieve(std::uint64_t L, std::uint64_t R, std::uint64_t budget) {
  check_sieve_window(L, R, budget);
  std::size_t len = R - L;
  std::vector<std::uint64_t> rem(len), sig(len, 1);
  for (std::size_t i = 0; i < len; ++i) rem[i] = L + i;
  if (len == 0) return sig;
  std::uint64_t root = isqrt_u64(R - 1);
  for (std::uint64_t p : primes_up_to(root)) {
    std::uint64_t start = ((L + p - 1) / p) * p;
    for (std::uint64_t v = start; v < R; v += p) {
      std::size_t i = v - L;
      std::uint64_t geo = 1, pk = 1;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        pk *= p;
        geo += pk;
      }
      sig[i] *= geo;
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    if (rem[i] > 1) sig[i] *= rem[i] + 1;
  return sig;
}

CrtSolution crt(const std::vector<Congruence>& congruences) {
  for (const auto& c : congruences)
    if (c.modulus < 1) throw DomainError("crt modulus must be positive");
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      Int g = gcd(congruences[i].modulus, congruences[j].modulus);
      if (g > 1)
        throw DomainError("crt moduli " + int_str(congruences[i].modulus) + " and " +
                          int_str(congruences[j].modulus) + " at positions " + std::to_string(i + 1) +
                          " and " + std::to_string(j + 1) + " share factor " + int_str(g));
    }
  }
  Int r(0), M(1);
  for (const auto& c : congruences) {
    if (c.modulus == 1) continue;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), c.modulus.get_mpz_t()) == 0)
      throw DomainError("crt internal inversion failed");  // unreachable after pairwise check
    Int t = (c.residue - r) % c.modulus * inv % c.modulus;
    r += M * t;
    M *= c.modulus;
    r %= M;
    if (r < 0) r += M;
  }
  return {r, M};
}

PrimeStream::PrimeStream(std::vector<Int> forbidden) : excluded_(std::move(forbidden)) {
  std::sort(excluded_.begin(), excluded_.end());
}

void PrimeStream::exclude(const Int& p) {
  auto it = std::lower_bound(excluded_.begin(), excluded_.end(), p);
  if (it == excluded_.end() || *it != p) excluded_.insert(it, p);
}

void PrimeStream::refill() {
  const std::uint64_t span = 1 << 16;
  while (true) {
    std::uint64_t lo = block_lo_, hi = lo + span;
    std::vector<bool> composite(span, false);
    for (std::uint64_t p : primes_up_to(isqrt_u64(hi - 1))) {
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t v = start; v < hi; v += p) composite[v - lo] = true;
    }
    pending_.clear();
    cursor_ = 0;
    for (std::uint64_t v = std::max<std::uint64_t>(lo, 2); v < hi; ++v)
      if (!composite[v - lo]) pending_.push_back(v);
    block_lo_ = hi;
    if (!pending_.empty()) return;
  }
}

Int PrimeStream::next() {
  while (true) {
    if (cursor_ >= pending_.size()) refill();
    Int p(static_cast<unsigned long>(pending_[cursor_++]));
    if (!std::binary_search(excluded_.begin(), excluded_.end(), p)) return p;
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace phichain::arith
