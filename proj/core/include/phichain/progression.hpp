#ifndef PHICHAIN_PROGRESSION_HPP
#define PHICHAIN_PROGRESSION_HPP

#include <cstdint>
#include <vector>

#include "phichain/arith.hpp"

namespace phichain::arith {

// Bulk evaluation along w(m) = c*m + d. Small primes are sieved over the
// m-line by residue class (p | w(m) pins m to one class mod p when p does
// not divide c), so the per-value work is that of a segmented sieve even
// when c has hundreds of digits.

/// phi(w(m)) for m in [m_lo, m_hi); requires every w(m) in [1, 2^52).
std::vector<std::uint64_t> progression_phi_u64(std::uint64_t a, std::int64_t b,
                                               std::uint64_t m_lo, std::uint64_t m_hi);

/// sigma analogue of progression_phi_u64.
std::vector<std::uint64_t> progression_sigma_u64(std::uint64_t a, std::int64_t b,
                                                 std::uint64_t m_lo, std::uint64_t m_hi);

/// Full factorization of w(m) for m in [m_lo, m_hi), arbitrary-precision c, d.
/// Sieves primes <= 10^6 by residue class, then certifies or rho-splits the
/// cofactors. Requires c >= 1 and w(m_lo) >= 1.
std::vector<Factorization> factor_progression(const Int& c, const Int& d,
                                              std::uint64_t m_lo, std::uint64_t m_hi);

/// Factors n known to have no prime factor <= 10^6 (cofactors coming out of
/// the progression sieve). Deterministic.
Factorization factorize_rough(const Int& n);

}  // namespace phichain::arith

#endif  // PHICHAIN_PROGRESSION_HPP
