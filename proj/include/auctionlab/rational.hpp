#pragma once

#include <gmpxx.h>

#include <string>

namespace auctionlab {

// All laboratory arithmetic is exact. Rational is canonical (lowest terms,
// positive denominator) after every gmpxx operation; only direct two-argument
// construction can leave a value non-canonical, so construction goes through
// make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q" or a bare integer "p"; whitespace is not tolerated.
Rational parse_rational(const std::string& text);

// Always renders "p/q", including "p/1", so round-trips are uniform.
std::string render_rational(const Rational& q);

Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

Integer floor_rat(const Rational& q);
Integer ceil_rat(const Rational& q);

// For reporting and curve fitting only; never feeds back into certified paths.
double to_double(const Rational& q);

}  // namespace auctionlab
