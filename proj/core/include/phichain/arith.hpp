#ifndef PHICHAIN_ARITH_HPP
#define PHICHAIN_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "phichain/rational.hpp"

namespace phichain::arith {

/// Multiset of (prime, exponent) pairs, primes strictly increasing.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> entries;

  Int value() const;
  Int phi() const;
  Int sigma() const;
  /// phi(n)/n = prod (1 - 1/p) in lowest terms.
  Rat phi_ratio() const;
  /// phi(n)*sigma(n)/n^2 = prod (1 - 1/p^(a+1)) in lowest terms.
  Rat phi_sigma_ratio() const;

  bool operator==(const Factorization&) const = default;
};

/// Miller-Rabin with the 12 smallest prime bases: deterministic below
/// 3.317e24, strong probable-prime beyond.
bool is_probable_prime(const Int& n);

/// Deterministic: trial division to 10^6, then Brent-Pollard rho with a
/// fixed parameter schedule and primality certification of every factor.
Factorization factorize(const Int& n);

Int euler_phi(const Int& n);
Int sigma(const Int& n);
Rat phi_over_n(const Int& n);

inline constexpr std::uint64_t kDefaultSieveBlock = std::uint64_t{1} << 20;

/// phi(L), phi(L+1), ..., phi(R-1) by segmented sieving with primes <= sqrt(R).
/// Requires 1 <= L <= R, R - L <= budget, R < 2^52.
std::vector<std::uint64_t> totient_sieve(std::uint64_t L, std::uint64_t R,
                                         std::uint64_t budget = kDefaultSieveBlock);

/// Divisor-sum analogue of totient_sieve.
std::vector<std::uint64_t> sigma_sieve(std::uint64_t L, std::uint64_t R,
                                       std::uint64_t budget = kDefaultSieveBlock);

struct Congruence {
  Int residue;
  Int modulus;  // >= 1
};

struct CrtSolution {
  Int r;  // 0 <= r < modulus
  Int modulus;
};

/// Simultaneous solution of x = residue_i (mod modulus_i); moduli must be
/// pairwise coprime or DomainError names the offending pair.
CrtSolution crt(const std::vector<Congruence>& congruences);

/// Ordered stream of primes skipping an exclusion set that may grow
/// between calls.
class PrimeStream {
 public:
  PrimeStream() = default;
  explicit PrimeStream(std::vector<Int> forbidden);

  void exclude(const Int& p);
  /// Next prime in increasing order not excluded so far.
  Int next();

 private:
  void refill();

  std::vector<Int> excluded_;
  std::vector<std::uint64_t> pending_;  // sieved block, ascending
  std::uint64_t block_lo_ = 2;
  std::size_t cursor_ = 0;
};

/// All primes <= n, simple sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace phichain::arith

#endif  // PHICHAIN_ARITH_HPP
