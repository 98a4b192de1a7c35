#ifndef PHICHAIN_ERRORS_HPP
#define PHICHAIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace phichain {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument value (n < 1, C <= 0, non-coprime pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (CLI specs, report files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// System rejected: proportional polynomial pairs, k < 2.
class ValidationError : public Error {
 public:
  struct ProportionalPair {
    std::size_t i = 0;  // 1-based indices
    std::size_t j = 0;
    mpz_class lhs;      // a_i * b_j
    mpz_class rhs;      // a_j * b_i
  };

  ValidationError(const std::string& what, std::vector<ProportionalPair> pairs)
      : Error(what), proportional_pairs(std::move(pairs)) {}

  std::vector<ProportionalPair> proportional_pairs;
};

/// Memory or range budget exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t suggested_block)
      : Error(what), suggested_block_size(suggested_block) {}

  std::size_t suggested_block_size;
};

/// An identity the construction guarantees failed; inputs are corrupted.
class LemmaViolationError : public Error {
 public:
  using Error::Error;
};

/// A proof-backed bound failed in rigorous mode; implementation bug.
class TheoremViolationError : public Error {
 public:
  using Error::Error;
};

/// A loaded plan fails its structural invariants (tamper/corruption signal).
class PlanInvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace phichain

#endif  // PHICHAIN_ERRORS_HPP
