#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "auctionlab/instance.hpp"
#include "auctionlab/mechanism.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

enum class RowSense { LE, GE, EQ };

// Maximize objective . x subject to rows and per-variable bounds. All data
// exact rationals; upper bounds may be absent (unbounded above).
struct LinearProgram {
  struct Row {
    std::string name;
    std::vector<std::pair<int, Rational>> terms;  // (column, coefficient)
    RowSense sense = RowSense::LE;
    Rational rhs;
  };

  std::vector<std::string> col_names;
  std::vector<Rational> objective;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<Row> rows;

  int add_var(const std::string& name, Rational lo, std::optional<Rational> hi, Rational obj);
  int num_vars() const { return static_cast<int>(col_names.size()); }
  std::string dump() const;  // one constraint per line, rationals as p/q
};

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
  long long pivots = 0;
};

// Exact two-phase simplex with bounded variables. Entering variable by
// largest reduced-cost violation while pivots make strict progress, switching
// permanently to Bland's rule after a degenerate streak as long as the row
// count; terminates on every input. Deterministic.
LpSolution solve_exact(const LinearProgram& lp);

// The revenue LP over every nontrivial type (zero-mass ones included):
// variables X_i(t_1, t_2) in [0,1] and p_i(t), per-profile supply rows,
// payment nonnegativity, and all incentive rows with interim quantities
// weighted by the opponent's density.
LinearProgram assemble_lp(const Instance& inst);

struct RevenueLpResult {
  Rational value;
  Mechanism m;          // LP solution as an ex-post mechanism, payments broadcast
  long long pivots = 0;
  int solve_rows = 0;   // rows in the final reduced solve
};

// Solves the revenue LP by dropping zero-mass types, generating incentive
// rows lazily, and extending the solution back over dropped types by copying
// each one's best legal deviation target. The result is feasible and optimal
// for assemble_lp(inst).
RevenueLpResult solve_revenue_lp(const Instance& inst);

enum class OutcomeBackend { Flow, Lp };

// Outcome of a revenue-optimal auction at a flat report profile, computed
// either from the certified flow pipeline (throws BackendUnavailableError if
// it fails to certify) or from the LP oracle.
OutcomeSupport select_outcome(const Instance& inst, int flat1, int flat2, OutcomeBackend backend);

}  // namespace auctionlab
