#include "auctionlab/protocol.hpp"

#include <cstddef>

#include "auctionlab/errors.hpp"

namespace auctionlab {

long long Transcript::bits_from(int sender) const {
  long long bits = 0;
  for (const Message& m : messages)
    if (m.sender == sender) bits += 8LL * static_cast<long long>(m.bytes.size());
  return bits;
}

long long Transcript::total_bits() const { return bits_from(1) + bits_from(2); }

bool disj_oracle(const DisjInput& in) { return !intersects(in); }

namespace {

// Wire format: each field is a nonnegative integer, 16-bit big-endian byte
// length followed by big-endian magnitude; rationals are numerator then
// denominator.
void append_uint(std::vector<std::uint8_t>& out, const Integer& v) {
  if (v < 0) throw Error("wire fields are nonnegative");
  std::size_t count = 0;
  std::vector<std::uint8_t> buf((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
  if (v != 0) mpz_export(buf.data(), &count, 1, 1, 0, 0, v.get_mpz_t());
  if (count > 0xffff) throw Error("wire field too large");
  out.push_back(static_cast<std::uint8_t>(count >> 8));
  out.push_back(static_cast<std::uint8_t>(count & 0xff));
  out.insert(out.end(), buf.begin(), buf.begin() + count);
}

Integer read_uint(const std::vector<std::uint8_t>& bytes, std::size_t& pos) {
  if (pos + 2 > bytes.size()) throw Error("wire message truncated");
  std::size_t count = (static_cast<std::size_t>(bytes[pos]) << 8) | bytes[pos + 1];
  pos += 2;
  if (pos + count > bytes.size()) throw Error("wire message truncated");
  Integer v(0);
  if (count > 0) mpz_import(v.get_mpz_t(), count, 1, 1, 0, 0, bytes.data() + pos);
  pos += count;
  return v;
}

void append_rational(std::vector<std::uint8_t>& out, const Rational& q) {
  append_uint(out, q.get_num());
  append_uint(out, q.get_den());
}

Rational read_rational(const std::vector<std::uint8_t>& bytes, std::size_t& pos) {
  Integer num = read_uint(bytes, pos);
  Integer den = read_uint(bytes, pos);
  return make_rational(num, den);
}

int support_index(const SingleDimDistribution& d, const Rational& v) {
  for (int k = 1; k <= d.n(); ++k)
    if (d.values[k - 1] == v) return k;
  throw ValueNotInSupportError("report " + render_rational(v) + " not in support");
}

}  // namespace

SingleDimRun run_singledim_protocol(const SingleDimDistribution& d1, const Rational& report1,
                                    const SingleDimDistribution& d2, const Rational& report2) {
  SingleDimRun run;

  // Alice: one envelope segment describes phi_bar at her report exactly.
  IronedCode code = encode_ironed(d1, support_index(d1, report1));
  Message m1{1, {}};
  append_rational(m1.bytes, code.head);
  append_rational(m1.bytes, code.tail);
  append_rational(m1.bytes, code.mass);
  run.transcript.messages.push_back(std::move(m1));

  // Bob decodes and decides.
  std::size_t pos = 0;
  const auto& wire1 = run.transcript.messages[0].bytes;
  Rational head = read_rational(wire1, pos);
  Rational tail = read_rational(wire1, pos);
  Rational mass = read_rational(wire1, pos);
  Rational phi1 = decode_ironed(IronedCode{head, tail, mass});
  IronedTable t2 = iron(d2);
  Rational phi2 = t2.phi_bar[support_index(d2, report2) - 1];

  bool alice_wins = phi1 >= 0 && phi1 >= phi2;
  bool bob_wins = !alice_wins && phi2 >= 0;
  Message m2{2, {}};
  if (bob_wins) {
    // Bob beats the lower-index bidder strictly and pays his own threshold.
    append_uint(m2.bytes, Integer(2));
    for (int k = 1; k <= d2.n(); ++k)
      if (t2.phi_bar[k - 1] >= 0 && t2.phi_bar[k - 1] > phi1) {
        run.result = WinnerResult{2, d2.values[k - 1]};
        break;
      }
    append_rational(m2.bytes, *run.result.price);
    run.transcript.messages.push_back(std::move(m2));
    return run;
  }
  if (!alice_wins) {
    append_uint(m2.bytes, Integer(0));
    run.transcript.messages.push_back(std::move(m2));
    return run;
  }

  // Alice wins; Bob asks her for the cheapest report clearing his clamped bar.
  Rational theta = phi2 > 0 ? phi2 : Rational(0);
  append_uint(m2.bytes, Integer(1));
  append_rational(m2.bytes, theta);
  run.transcript.messages.push_back(std::move(m2));

  pos = 0;
  std::size_t skip_tag = 0;
  const auto& wire2 = run.transcript.messages[1].bytes;
  read_uint(wire2, skip_tag);
  pos = skip_tag;
  Rational theta_alice = read_rational(wire2, pos);
  IronedTable t1 = iron(d1);
  Message m3{1, {}};
  for (int k = 1; k <= d1.n(); ++k)
    if (t1.phi_bar[k - 1] >= theta_alice) {
      run.result = WinnerResult{1, d1.values[k - 1]};
      break;
    }
  append_rational(m3.bytes, *run.result.price);
  run.transcript.messages.push_back(std::move(m3));
  return run;
}

SingleDimRun run_singledim_full(const SingleDimDistribution& d1, const Rational& report1,
                                const SingleDimDistribution& d2, const Rational& report2) {
  SingleDimRun run;
  Message m1{1, {}};
  append_uint(m1.bytes, Integer(d1.n()));
  for (const Rational& v : d1.values) append_rational(m1.bytes, v);
  for (const Rational& p : d1.probs) append_rational(m1.bytes, p);
  append_rational(m1.bytes, report1);
  run.transcript.messages.push_back(std::move(m1));

  std::size_t pos = 0;
  const auto& wire = run.transcript.messages[0].bytes;
  int n = static_cast<int>(read_uint(wire, pos).get_si());
  std::vector<Rational> values, probs;
  for (int k = 0; k < n; ++k) values.push_back(read_rational(wire, pos));
  for (int k = 0; k < n; ++k) probs.push_back(read_rational(wire, pos));
  Rational r1 = read_rational(wire, pos);
  SingleDimDistribution alice = make_single_dim(std::move(values), std::move(probs));

  run.result = myerson_winner({alice, d2}, {r1, report2});
  Message m2{2, {}};
  append_uint(m2.bytes, Integer(run.result.winner ? *run.result.winner : 0));
  if (run.result.price) append_rational(m2.bytes, *run.result.price);
  run.transcript.messages.push_back(std::move(m2));
  return run;
}

AuctionRun run_auction_protocol(const DisjInput& in) {
  AuctionRun run;
  const int n = in.n();

  // Alice ships Bidder One's scaled probability tables.
  FamilyTrace c = bidder1_day1(n);
  FamilyTrace d = bidder1_day2(n, in.x);
  Message m1{1, {}};
  append_uint(m1.bytes, Integer(n));
  for (const Integer& s : c.scaled) append_uint(m1.bytes, s);
  for (const Integer& s : d.scaled) append_uint(m1.bytes, s);
  run.transcript.messages.push_back(std::move(m1));

  // Bob rebuilds the instance against his own side and certifies an optimal
  // auction.
  std::size_t pos = 0;
  const auto& wire = run.transcript.messages[0].bytes;
  int bn = static_cast<int>(read_uint(wire, pos).get_si());
  Integer two_b = 2 * reduction_b(bn);
  Integer n2;
  mpz_ui_pow_ui(n2.get_mpz_t(), static_cast<unsigned long>(bn), 2);
  BidderSpec one, two;
  one.n = bn + 2;
  two.n = bn + 2;
  std::vector<Integer> cs, ds;
  for (int k = 0; k < bn + 2; ++k) cs.push_back(read_uint(wire, pos));
  for (int k = 0; k < bn + 2; ++k) ds.push_back(read_uint(wire, pos));
  FamilyTrace e = bidder2(bn, in.y);
  Integer b = reduction_b(bn);
  for (int k = 1; k <= bn + 2; ++k) {
    Rational v(n2 + k);
    one.values.push_back(v);
    two.values.push_back(v);
    one.probs[0].push_back(make_rational(cs[k - 1], two_b));
    one.probs[1].push_back(make_rational(ds[k - 1], two_b));
    two.probs[0].push_back(make_rational(e.scaled[k - 1], b));
    two.probs[1].push_back(Rational(0));
  }
  Instance inst = make_instance(std::move(one), std::move(two));
  CertifiedAuction cert = certify_auction(inst);
  run.certified = cert.certified;
  run.outcome = outcome_at(cert.m, flat_index({1, 1}), flat_index({1, 1}));

  Message m2{2, {}};
  int support = (run.outcome.bidder1 ? 1 : 0) | (run.outcome.bidder2 ? 2 : 0) |
                (run.outcome.none ? 4 : 0);
  append_uint(m2.bytes, Integer(support));
  append_uint(m2.bytes, Integer(run.certified ? 1 : 0));
  run.transcript.messages.push_back(std::move(m2));
  return run;
}

bool disj_via_auction(const DisjInput& in) {
  AuctionRun run = run_auction_protocol(in);
  if (!run.certified)
    throw Error("auction pipeline failed to certify; input below the verified size range");
  return run.outcome == OutcomeSupport{true, false, false};
}

}  // namespace auctionlab
