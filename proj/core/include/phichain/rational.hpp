#ifndef PHICHAIN_RATIONAL_HPP
#define PHICHAIN_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace phichain {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals in lowest terms. Floating point appears only in the size
// estimator, which is documented as an estimate.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational num/den; throws DomainError if den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p", or "p/q" decimal forms.
Rat parse_rat(std::string_view text);

/// Parses a decimal integer, throws ParseError on junk.
Int parse_int(std::string_view text);

std::string int_str(const Int& v);

/// Rationals always render as "p/q", including "/1", so report fields
/// round-trip without type sniffing.
std::string rat_str(const Rat& v);

Rat rat_pow(const Rat& base, unsigned long exp);

/// Two-sided rational enclosure lower < x < upper.
struct RatBracket {
  Rat lower;
  Rat upper;
};

/// Encloses e^{-k} with upper - lower < 10^-12, from the truncated
/// exponential series. Ratio comparisons against the irrational threshold
/// use the conservative side: "above e^{-k}" means "> upper".
RatBracket exp_neg_bracket(unsigned k);

/// Rational bounds for 6/pi^2 = 0.6079271018...
const Rat& six_over_pi_sq_lower();  // 60792710185/10^11
const Rat& six_over_pi_sq_upper();  // 608/1000

/// e^{-gamma} = 0.56145948... for Mertens-product size estimates only.
double mertens_e_neg_gamma();

}  // namespace phichain

#endif  // PHICHAIN_RATIONAL_HPP
