#include "phichain/rational.hpp"

#include <cctype>

#include "phichain/errors.hpp"

namespace phichain {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer token");
  std::string s(text);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bare sign is not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad integer token: '" + s + "'");
  }
  return Int(s);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_int(text));
  }
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ParseError("rational denominator must be positive: '" + std::string(text) + "'");
  return make_rat(num, den);
}

std::string int_str(const Int& v) { return v.get_str(); }

std::string rat_str(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_pow(const Rat& base, unsigned long exp) {
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  return make_rat(num, den);
}

RatBracket exp_neg_bracket(unsigned k) {
  if (k == 0) return {Rat(1), Rat(1)};
  // e^k bracketed by its Taylor partial sum S and S + 2*tail_term, valid
  // once terms shrink by at least half each step (N + 2 > 2k).
  unsigned terms = 2 * k + 64;
  Rat sum(1);
  Rat term(1);
  for (unsigned i = 1; i <= terms; ++i) {
    term *= Rat(Int(k), Int(i));
    sum += term;
  }
  Rat tail = term * Rat(Int(k), Int(terms + 1)) * 2;
  Rat ek_lower = sum;
  Rat ek_upper = sum + tail;
  // e^{-k} = 1/e^k flips the bracket.
  Rat lower = 1 / ek_upper;
  Rat upper = 1 / ek_lower;
  return {lower, upper};
}

const Rat& six_over_pi_sq_lower() {
  static const Rat v = make_rat(Int("60792710185"), Int("100000000000"));
  return v;
}

const Rat& six_over_pi_sq_upper() {
  static const Rat v = make_rat(608, 1000);
  return v;
}

double mertens_e_neg_gamma() { return 0.5614594835668851; }

}  // namespace phichain
