#pragma once

#include <cstdint>
#include <vector>

namespace fvst {

// One >= constraint: terms . x >= rhs, terms sorted by column.
struct LpRow {
    struct Term {
        int col;
        double coef;
        bool operator==(const Term&) const = default;
    };
    std::vector<Term> terms;
    double rhs = 0;
    bool operator==(const LpRow&) const = default;
};

struct SolveOptions {
    enum class Mode { vertex, any };
    Mode mode = Mode::vertex;
    double eps_feas = 1e-7;
    double eps_obj = 1e-6;
    long max_iterations = 500000;
    int max_rounds = 1000;      // outer row-activation rounds
    int activation_batch = 256; // violated rows pulled in per round
    size_t max_rows = 5000000;  // model caps; exceeding raises Error(cap)
    size_t max_cols = 100000;
};

struct LpSolution {
    enum class Status { optimal, infeasible, unbounded, iteration_limit };
    Status status = Status::optimal;
    std::vector<double> values;
    double objective = 0;
    bool is_vertex = false;
    long iterations = 0;
    int rows_used = 0;  // rows active in the final working set
};

// Streams constraint rows to the solver. Models here are row-rich and
// column-thin, so the solver keeps a small working set of rows and asks the
// oracle for rows the current point violates; a point that is optimal for
// the working subset and feasible for every row is optimal for the full
// system, and a vertex of the subset polyhedron that lies in the full one
// is a vertex of the full one too.
class RowOracle {
public:
    virtual ~RowOracle() = default;

    virtual size_t row_count() const = 0;

    // Append up to `limit` rows violated at x by more than eps, most
    // violated first (ties by generation order).
    virtual void violated(const std::vector<double>& x, double eps, int limit,
                          std::vector<LpRow>& out) const = 0;

    // Materialize every row; used when row_count() is small.
    virtual void all_rows(std::vector<LpRow>& out) const = 0;
};

// min objective . x  s.t.  every oracle row, lower <= x <= upper.
// Bounded-variable primal revised simplex (Dantzig pricing, Bland fallback
// on stalls) on the working set; deterministic for fixed inputs.
LpSolution solve_rows(const std::vector<double>& objective, const std::vector<double>& lower,
                      const std::vector<double>& upper, const RowOracle& oracle,
                      const SolveOptions& opts = {});

}  // namespace fvst
