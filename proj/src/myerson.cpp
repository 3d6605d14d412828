#include "auctionlab/myerson.hpp"

#include <string>

#include "auctionlab/errors.hpp"

namespace auctionlab {

SingleDimDistribution make_single_dim(std::vector<Rational> values, std::vector<Rational> probs) {
  if (values.empty()) throw ShapeError("distribution must have support");
  if (values.size() != probs.size()) throw LengthMismatchError("values/probs length mismatch");
  if (values[0] <= 0) throw ValueOrderError("values must be positive");
  for (size_t k = 1; k < values.size(); ++k)
    if (values[k] <= values[k - 1]) throw ValueOrderError("values must be strictly increasing");
  Rational total(0);
  for (const Rational& p : probs) {
    if (p < 0) throw NegativeProbabilityError("negative probability");
    total += p;
  }
  if (total != 1) throw ProbabilitySumError("probabilities must sum to 1 exactly");
  return SingleDimDistribution{std::move(values), std::move(probs)};
}

Rational tail_mass(const SingleDimDistribution& d, int k) {
  if (k < 1 || k > d.n() + 1) throw IndexError("tail_mass: level out of range");
  Rational sum(0);
  for (int kk = k; kk <= d.n(); ++kk) sum += d.probs[kk - 1];
  return sum;
}

namespace {

void require_positive_mass(const SingleDimDistribution& d) {
  for (const Rational& p : d.probs)
    if (p == 0) throw ZeroMassError("operation needs every support point to carry mass");
}

Rational value_ext(const SingleDimDistribution& d, int k) {
  // v^{n+1} = v^n, so the top virtual value equals the top value
  return d.values[k > d.n() ? d.n() - 1 : k - 1];
}

}  // namespace

std::vector<Rational> single_dim_virtuals(const SingleDimDistribution& d) {
  require_positive_mass(d);
  std::vector<Rational> phi(d.n());
  Rational tail(0);  // R(v^{k+1}) while scanning k downward
  for (int k = d.n(); k >= 1; --k) {
    Rational dv = value_ext(d, k + 1) - d.values[k - 1];
    phi[k - 1] = d.values[k - 1] - dv * tail / d.probs[k - 1];
    tail += d.probs[k - 1];
  }
  return phi;
}

IronedTable iron(const SingleDimDistribution& d) {
  require_positive_mass(d);
  const int n = d.n();

  // Points (q_k, y_k) = (R(v^k), v^k R(v^k)) for k = n+1 down to 1, listed in
  // increasing q. The upper concave envelope's segment over [q_{k+1}, q_k]
  // has slope phi_bar(v^k); its chords between consecutive points have slope
  // phi(v^k).
  std::vector<Rational> q(n + 2), y(n + 2);  // index by level k in [1, n+1]
  q[n + 1] = Rational(0);
  y[n + 1] = Rational(0);
  for (int k = n; k >= 1; --k) {
    q[k] = q[k + 1] + d.probs[k - 1];
    y[k] = d.values[k - 1] * q[k];
  }

  std::vector<int> hull;  // levels, q increasing (so k decreasing)
  for (int k = n + 1; k >= 1; --k) {
    while (hull.size() >= 2) {
      int b = hull[hull.size() - 1], a = hull[hull.size() - 2];
      // pop b unless (a -> b -> k) turns strictly right (concave vertex)
      Rational cross = (q[b] - q[a]) * (y[k] - y[b]) - (y[b] - y[a]) * (q[k] - q[b]);
      if (cross < 0) break;
      hull.pop_back();
    }
    hull.push_back(k);
  }

  IronedTable table;
  table.phi = single_dim_virtuals(d);
  table.phi_bar.assign(n, Rational(0));
  table.block_id.assign(n, -1);

  // Consecutive hull vertices v_s > v_{s+1} (as levels) bound the block
  // [v_{s+1}, v_s - 1]; emit blocks in ascending level order.
  for (size_t s = hull.size() - 1; s >= 1; --s) {
    int hi_level = hull[s - 1];  // larger level, smaller q
    int lo_level = hull[s];
    Rational slope = (y[lo_level] - y[hi_level]) / (q[lo_level] - q[hi_level]);
    int id = static_cast<int>(table.blocks.size());
    table.blocks.emplace_back(lo_level, hi_level - 1);
    for (int k = lo_level; k <= hi_level - 1; ++k) {
      table.phi_bar[k - 1] = slope;
      table.block_id[k - 1] = id;
    }
  }
  return table;
}

IronedCode encode_ironed(const SingleDimDistribution& d, int k) {
  if (k < 1 || k > d.n()) throw IndexError("encode_ironed: level out of range");
  IronedTable table = iron(d);
  auto [lo, hi] = table.blocks[table.block_id[k - 1]];
  Rational r_lo = tail_mass(d, lo);
  Rational r_past = tail_mass(d, hi + 1);
  return IronedCode{d.values[lo - 1] * r_lo, value_ext(d, hi + 1) * r_past, r_lo - r_past};
}

Rational decode_ironed(const IronedCode& code) {
  if (code.mass == 0) throw ZeroMassError("decode_ironed: empty block");
  return (code.head - code.tail) / code.mass;
}

namespace {

int find_support_index(const SingleDimDistribution& d, const Rational& v) {
  for (int k = 1; k <= d.n(); ++k)
    if (d.values[k - 1] == v) return k;
  throw ValueNotInSupportError("report " + render_rational(v) + " not in support");
}

// Winner under lowest-index-wins tie-breaking if bidder w reported phi_bar
// value `cand` against the others' entries.
bool wins_with(const std::vector<Rational>& bars, int w, const Rational& cand) {
  if (cand < 0) return false;
  for (int i = 0; i < static_cast<int>(bars.size()); ++i) {
    if (i == w) continue;
    if (i < w ? bars[i] >= cand : bars[i] > cand) return false;
  }
  return true;
}

}  // namespace

WinnerResult myerson_winner(const std::vector<SingleDimDistribution>& dists,
                            const std::vector<Rational>& reports) {
  if (dists.empty() || dists.size() != reports.size())
    throw LengthMismatchError("need one report per distribution");
  const int m = static_cast<int>(dists.size());
  std::vector<IronedTable> tables;
  tables.reserve(m);
  std::vector<Rational> bars;
  for (int i = 0; i < m; ++i) {
    tables.push_back(iron(dists[i]));
    bars.push_back(tables[i].phi_bar[find_support_index(dists[i], reports[i]) - 1]);
  }
  int winner = -1;
  for (int i = 0; i < m; ++i)
    if (wins_with(bars, i, bars[i])) {
      winner = i;
      break;
    }
  if (winner < 0) return {};
  // threshold payment: cheapest report that still wins against the others
  for (int k = 1; k <= dists[winner].n(); ++k)
    if (wins_with(bars, winner, tables[winner].phi_bar[k - 1]))
      return WinnerResult{winner + 1, dists[winner].values[k - 1]};
  throw Error("myerson_winner: winner has no winning support value");
}

Rational myerson_expected_revenue(const std::vector<SingleDimDistribution>& dists) {
  const int m = static_cast<int>(dists.size());
  std::vector<int> idx(m, 1);
  Rational total(0);
  while (true) {
    Rational weight(1);
    std::vector<Rational> reports;
    for (int i = 0; i < m; ++i) {
      weight *= dists[i].probs[idx[i] - 1];
      reports.push_back(dists[i].values[idx[i] - 1]);
    }
    if (weight != 0) {
      WinnerResult r = myerson_winner(dists, reports);
      if (r.price) total += weight * *r.price;
    }
    int i = 0;
    while (i < m && ++idx[i] > dists[i].n()) idx[i++] = 1;
    if (i == m) break;
  }
  return total;
}

}  // namespace auctionlab
