#include "auctionlab/rational.hpp"

#include <stdexcept>

namespace auctionlab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// strict integer literal: optional sign, then digits only (GMP would accept
// embedded whitespace)
bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den_text = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text))
    throw std::invalid_argument("parse_rational: bad rational literal '" + text + "'");
  return make_rational(Integer(num_text), Integer(den_text));
}

std::string render_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_rat(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }

Integer ceil_rat(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace auctionlab
