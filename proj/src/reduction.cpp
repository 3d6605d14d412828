#include "auctionlab/reduction.hpp"

#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

DisjInput make_disj_input(std::vector<int> x, std::vector<int> y) {
  if (x.size() != y.size()) throw LengthMismatchError("set inputs must have equal length");
  if (x.empty()) throw ShapeError("set inputs must be nonempty");
  for (const auto* v : {&x, &y})
    for (int b : *v)
      if (b != 0 && b != 1) throw ShapeError("set inputs must be 0/1");
  return DisjInput{std::move(x), std::move(y)};
}

namespace {

std::vector<int> parse_bits(const std::string& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw UsageError("bit string must contain only '0' and '1'");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

DisjInput disj_input_from_strings(const std::string& x, const std::string& y) {
  return make_disj_input(parse_bits(x), parse_bits(y));
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

bool intersects(const DisjInput& in) {
  for (int i = 0; i < in.n(); ++i)
    if (in.x[i] == 1 && in.y[i] == 1) return true;
  return false;
}

Integer reduction_b(int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), 6);
  return 10 * p;
}

Rational reduction_a(int n) {
  Integer n5;
  mpz_ui_pow_ui(n5.get_mpz_t(), static_cast<unsigned long>(n), 5);
  return make_rational(reduction_b(n) - n5, n + 1);
}

namespace {

Integer int_pow(int base, int exp) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return p;
}

// Runs the water-filling recurrence: after k levels the remaining mass
// (scaled to `total`) is spread over the n-k+2 remaining levels as
// z_{k+1} = (total - sum) / (n-k+2), each level takes `pick(k, z)`, and the
// last level absorbs the remainder exactly.
template <typename Pick>
FamilyTrace run_family(int n, const Integer& total, const Integer& first, Pick pick) {
  FamilyTrace tr;
  tr.scaled.reserve(n + 2);
  tr.z.reserve(n + 1);
  tr.scaled.push_back(first);
  Integer used = first;
  for (int k = 1; k <= n; ++k) {
    Rational z = make_rational(total - used, n - k + 2);
    tr.z.push_back(z);
    Integer next = pick(k, z);
    tr.scaled.push_back(next);
    used += next;
  }
  Integer last = total - used;
  tr.z.push_back(Rational(last));
  tr.scaled.push_back(last);
  return tr;
}

}  // namespace

// Every family spreads a scaled budget of exactly b across n + 2 levels; the
// probability denominators (2b for Bidder One, b for Bidder Two) are applied
// in build_instance, which is what makes the first two families mass 1/2.
FamilyTrace bidder1_day1(int n) {
  if (n < 1) throw ShapeError("reduction needs n >= 1");
  const Integer b = reduction_b(n);
  const Integer n3 = int_pow(n, 3);
  const Integer n5 = int_pow(n, 5);
  return run_family(n, b, n5, [&](int k, const Rational& z) {
    return floor_rat(z + make_rational(n3, n - k + 2));
  });
}

FamilyTrace bidder1_day2(int n, const std::vector<int>& x) {
  if (n < 1) throw ShapeError("reduction needs n >= 1");
  if (static_cast<int>(x.size()) != n) throw LengthMismatchError("x must have length n");
  const Integer b = reduction_b(n);
  const Integer n3 = int_pow(n, 3);
  const Integer n5 = int_pow(n, 5);
  return run_family(n, b, n5, [&](int k, const Rational& z) {
    if (x[k - 1] == 1) return ceil_rat(z);
    return floor_rat(z + make_rational(n3, n - k + 2));
  });
}

FamilyTrace bidder2(int n, const std::vector<int>& y) {
  if (n < 1) throw ShapeError("reduction needs n >= 1");
  if (static_cast<int>(y.size()) != n) throw LengthMismatchError("y must have length n");
  const Integer b = reduction_b(n);
  const Integer n2 = int_pow(n, 2);
  const Integer n5 = int_pow(n, 5);
  return run_family(n, b, n5 - 1, [&](int k, const Rational& z) {
    if (y[k - 1] == 1) return floor_rat(z + make_rational(n2, n - k + 2));
    return Integer(floor_rat(z) - 1);
  });
}

Instance build_instance(const DisjInput& in, ReductionTrace* trace) {
  const int n = in.n();
  const Integer b = reduction_b(n);
  const Integer two_b = 2 * b;
  const Integer n2 = int_pow(n, 2);

  FamilyTrace c = bidder1_day1(n);
  FamilyTrace d = bidder1_day2(n, in.x);
  FamilyTrace e = bidder2(n, in.y);

  BidderSpec b1, b2;
  b1.n = n + 2;
  b2.n = n + 2;
  for (int k = 1; k <= n + 2; ++k) {
    Rational v(n2 + k);
    b1.values.push_back(v);
    b2.values.push_back(v);
    b1.probs[0].push_back(make_rational(c.scaled[k - 1], two_b));
    b1.probs[1].push_back(make_rational(d.scaled[k - 1], two_b));
    b2.probs[0].push_back(make_rational(e.scaled[k - 1], b));
    b2.probs[1].push_back(Rational(0));
  }

  if (trace) {
    trace->n = n;
    trace->b = b;
    trace->a = reduction_a(n);
    trace->c = std::move(c);
    trace->d = std::move(d);
    trace->e = std::move(e);
  }
  return make_instance(std::move(b1), std::move(b2));
}

}  // namespace auctionlab
