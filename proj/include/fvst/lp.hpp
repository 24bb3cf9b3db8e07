#pragma once

#include <iosfwd>
#include <vector>

#include "fvst/simplex.hpp"
#include "fvst/tournament.hpp"

namespace fvst {

// Sparse >=-constraint system over vertex variables (columns 0..n-1) and,
// at lift level 1, one variable per unordered vertex pair.
struct LpModel {
    int n = 0;
    bool has_pair_vars = false;
    std::vector<double> objective;
    std::vector<double> lower, upper;
    std::vector<LpRow> rows;

    int cols() const { return static_cast<int>(objective.size()); }

    // Column of the pair variable for {a,b}; pair columns follow the vertex
    // columns in lexicographic pair order.
    int pair_col(int a, int b) const;
    std::pair<int, int> col_pair(int col) const;
};

// P(T): x in [0,1]^V with x_a + x_b + x_c >= 1 per triangle.
LpModel build_basic(const WeightedTournament& wt);

// One Sherali-Adams round over P(T). Per triangle (all three rotations of
// its cycle) the lifted cover row; per (triangle, outside vertex d) the two
// lifted rows tying the pair variables of d to the triangle; per pair the
// rows x_a >= x_{ab} and x_b >= x_{ab}. Duplicate rows are hashed away.
LpModel build_sa1(const WeightedTournament& wt);

// Hard size guard for the full lift (override via Sa1Options::size_cap).
inline constexpr int kDefaultSa1Cap = 40;

struct Sa1Options {
    SolveOptions solve;
    bool lazy = false;   // stream rows from the tournament instead of materializing
    int size_cap = kDefaultSa1Cap;
};

LpSolution solve_model(const LpModel& m, const SolveOptions& opts = {});
LpSolution solve_sa1(const WeightedTournament& wt, const Sa1Options& opts = {});

// SA_0 (level 0, the basic relaxation) or SA_1 objective value.
double lp_value(const WeightedTournament& wt, int level, const Sa1Options& opts = {});

// Human-readable LP text dump (minimize section, rows, bounds).
void dump_lp(const LpModel& m, std::ostream& os);

}  // namespace fvst
