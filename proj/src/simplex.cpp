#include "fvst/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fvst/error.hpp"

namespace fvst {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kDualTol = 1e-9;
constexpr double kDegenerateStep = 1e-10;
constexpr int kStallLimit = 40;     // degenerate pivots before Bland's rule
constexpr int kRefactorEvery = 64;  // pivots between basis re-inversions

enum class VStat : uint8_t { basic, at_lower, at_upper };

// One working-set LP in computational form: structural columns with box
// bounds, one surplus column per row (A x - s = b, s >= 0) and one
// artificial column per row for the phase-1 start.
class Simplex {
public:
    Simplex(const std::vector<LpRow>& rows, const std::vector<double>& c,
            const std::vector<double>& lower, const std::vector<double>& upper)
        : rows_(rows), m_(static_cast<int>(rows.size())), ns_(static_cast<int>(c.size())) {
        ncols_ = ns_ + 2 * m_;
        lo_.assign(static_cast<size_t>(ncols_), 0.0);
        hi_.assign(static_cast<size_t>(ncols_), kInf);
        std::copy(lower.begin(), lower.end(), lo_.begin());
        std::copy(upper.begin(), upper.end(), hi_.begin());
        cost_.assign(static_cast<size_t>(ncols_), 0.0);
        std::copy(c.begin(), c.end(), cost_.begin());

        scol_.assign(static_cast<size_t>(ns_), {});
        for (int i = 0; i < m_; ++i)
            for (const auto& term : rows_[static_cast<size_t>(i)].terms)
                scol_[static_cast<size_t>(term.col)].push_back({i, term.coef});

        status_.assign(static_cast<size_t>(ncols_), VStat::at_lower);
        x_.assign(static_cast<size_t>(ncols_), 0.0);
        for (int j = 0; j < ns_; ++j) x_[static_cast<size_t>(j)] = lo_[static_cast<size_t>(j)];

        basis_.resize(static_cast<size_t>(m_));
        binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
        bool need_phase1 = false;
        for (int i = 0; i < m_; ++i) {
            double r = rows_[static_cast<size_t>(i)].rhs;
            for (const auto& term : rows_[static_cast<size_t>(i)].terms)
                r -= term.coef * x_[static_cast<size_t>(term.col)];
            if (r <= 0) {
                basis_[static_cast<size_t>(i)] = surplus(i);
                x_[static_cast<size_t>(surplus(i))] = -r;
                binv_[static_cast<size_t>(i) * m_ + i] = -1.0;  // surplus column is -e_i
                hi_[static_cast<size_t>(artificial(i))] = 0.0;  // this artificial is never needed
            } else {
                basis_[static_cast<size_t>(i)] = artificial(i);
                x_[static_cast<size_t>(artificial(i))] = r;
                binv_[static_cast<size_t>(i) * m_ + i] = 1.0;
                need_phase1 = true;
            }
            status_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = VStat::basic;
        }
        need_phase1_ = need_phase1;
    }

    // Returns the reached status; `budget` is decremented per pivot.
    LpSolution::Status run(long& budget) {
        if (need_phase1_) {
            std::vector<double> phase1(static_cast<size_t>(ncols_), 0.0);
            for (int i = 0; i < m_; ++i) phase1[static_cast<size_t>(artificial(i))] = 1.0;
            auto st = iterate(phase1, budget);
            if (st != LpSolution::Status::optimal) return st;
            double infeas = 0;
            for (int i = 0; i < m_; ++i) infeas += x_[static_cast<size_t>(artificial(i))];
            if (infeas > 1e-7 * (1 + rhs_scale())) return LpSolution::Status::infeasible;
            for (int i = 0; i < m_; ++i) hi_[static_cast<size_t>(artificial(i))] = 0.0;
        }
        return iterate(cost_, budget);
    }

    std::vector<double> structural_values() const {
        return {x_.begin(), x_.begin() + ns_};
    }

private:
    int surplus(int i) const { return ns_ + i; }
    int artificial(int i) const { return ns_ + m_ + i; }

    double rhs_scale() const {
        double s = 0;
        for (const auto& row : rows_) s = std::max(s, std::abs(row.rhs));
        return s;
    }

    // Sparse column j applied against a dense vector.
    double dot_col(const std::vector<double>& y, int j) const {
        if (j < ns_) {
            double acc = 0;
            for (auto [row, coef] : scol_[static_cast<size_t>(j)])
                acc += y[static_cast<size_t>(row)] * coef;
            return acc;
        }
        int i = j - ns_;
        return i < m_ ? -y[static_cast<size_t>(i)] : y[static_cast<size_t>(i - m_)];
    }

    // w = B^{-1} A_j.
    void ftran(int j, std::vector<double>& w) const {
        w.assign(static_cast<size_t>(m_), 0.0);
        auto add_col = [&](int row, double coef) {
            const double* col = binv_.data() + row;  // column `row` of binv, stride m_
            for (int i = 0; i < m_; ++i) w[static_cast<size_t>(i)] += coef * col[static_cast<size_t>(i) * m_];
        };
        if (j < ns_) {
            for (auto [row, coef] : scol_[static_cast<size_t>(j)]) add_col(row, coef);
        } else if (j - ns_ < m_) {
            add_col(j - ns_, -1.0);
        } else {
            add_col(j - ns_ - m_, 1.0);
        }
    }

    void refactor() {
        // Rebuild B column by column and invert by Gauss-Jordan with
        // partial pivoting, then recompute the basic values.
        std::vector<double> b(static_cast<size_t>(m_) * m_, 0.0);
        for (int k = 0; k < m_; ++k) {
            int j = basis_[static_cast<size_t>(k)];
            if (j < ns_) {
                for (auto [row, coef] : scol_[static_cast<size_t>(j)])
                    b[static_cast<size_t>(row) * m_ + k] = coef;
            } else if (j - ns_ < m_) {
                b[static_cast<size_t>(j - ns_) * m_ + k] = -1.0;
            } else {
                b[static_cast<size_t>(j - ns_ - m_) * m_ + k] = 1.0;
            }
        }
        std::vector<double>& inv = binv_;
        inv.assign(static_cast<size_t>(m_) * m_, 0.0);
        for (int i = 0; i < m_; ++i) inv[static_cast<size_t>(i) * m_ + i] = 1.0;
        for (int col = 0; col < m_; ++col) {
            int piv = col;
            for (int i = col + 1; i < m_; ++i)
                if (std::abs(b[static_cast<size_t>(i) * m_ + col]) >
                    std::abs(b[static_cast<size_t>(piv) * m_ + col]))
                    piv = i;
            if (std::abs(b[static_cast<size_t>(piv) * m_ + col]) < 1e-12)
                raise(ErrorKind::internal, "singular basis during refactorization");
            if (piv != col) {
                for (int k = 0; k < m_; ++k) {
                    std::swap(b[static_cast<size_t>(piv) * m_ + k], b[static_cast<size_t>(col) * m_ + k]);
                    std::swap(inv[static_cast<size_t>(piv) * m_ + k],
                              inv[static_cast<size_t>(col) * m_ + k]);
                }
            }
            double p = b[static_cast<size_t>(col) * m_ + col];
            for (int k = 0; k < m_; ++k) {
                b[static_cast<size_t>(col) * m_ + k] /= p;
                inv[static_cast<size_t>(col) * m_ + k] /= p;
            }
            for (int i = 0; i < m_; ++i) {
                if (i == col) continue;
                double f = b[static_cast<size_t>(i) * m_ + col];
                if (f == 0) continue;
                for (int k = 0; k < m_; ++k) {
                    b[static_cast<size_t>(i) * m_ + k] -= f * b[static_cast<size_t>(col) * m_ + k];
                    inv[static_cast<size_t>(i) * m_ + k] -= f * inv[static_cast<size_t>(col) * m_ + k];
                }
            }
        }
        recompute_basics();
    }

    void recompute_basics() {
        std::vector<double> rhs(static_cast<size_t>(m_));
        for (int i = 0; i < m_; ++i) rhs[static_cast<size_t>(i)] = rows_[static_cast<size_t>(i)].rhs;
        for (int j = 0; j < ncols_; ++j) {
            if (status_[static_cast<size_t>(j)] == VStat::basic) continue;
            double v = status_[static_cast<size_t>(j)] == VStat::at_upper ? hi_[static_cast<size_t>(j)]
                                                                          : lo_[static_cast<size_t>(j)];
            x_[static_cast<size_t>(j)] = v;
            if (v == 0) continue;
            if (j < ns_) {
                for (auto [row, coef] : scol_[static_cast<size_t>(j)])
                    rhs[static_cast<size_t>(row)] -= coef * v;
            } else if (j - ns_ < m_) {
                rhs[static_cast<size_t>(j - ns_)] += v;
            } else {
                rhs[static_cast<size_t>(j - ns_ - m_)] -= v;
            }
        }
        for (int i = 0; i < m_; ++i) {
            double acc = 0;
            for (int k = 0; k < m_; ++k)
                acc += binv_[static_cast<size_t>(i) * m_ + k] * rhs[static_cast<size_t>(k)];
            x_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] = acc;
        }
    }

    LpSolution::Status iterate(const std::vector<double>& cost, long& budget) {
        std::vector<double> y(static_cast<size_t>(m_));
        std::vector<double> w;
        std::vector<char> banned(static_cast<size_t>(ncols_), 0);
        bool bland = false;
        bool fresh_factor = false;
        int stall = 0;
        int since_refactor = 0;

        while (budget-- > 0) {
            // y = c_B' B^{-1}; most basics carry zero cost, skip them.
            std::fill(y.begin(), y.end(), 0.0);
            for (int k = 0; k < m_; ++k) {
                double ck = cost[static_cast<size_t>(basis_[static_cast<size_t>(k)])];
                if (ck == 0) continue;
                const double* row = binv_.data() + static_cast<size_t>(k) * m_;
                for (int i = 0; i < m_; ++i) y[static_cast<size_t>(i)] += ck * row[i];
            }

            int enter = -1;
            double best_score = kDualTol;
            bool enter_up = true;
            for (int j = 0; j < ncols_; ++j) {
                VStat st = status_[static_cast<size_t>(j)];
                if (st == VStat::basic || lo_[static_cast<size_t>(j)] == hi_[static_cast<size_t>(j)])
                    continue;
                double d = cost[static_cast<size_t>(j)] - dot_col(y, j);
                double score;
                bool up;
                if (st == VStat::at_lower && d < -kDualTol) {
                    score = -d;
                    up = true;
                } else if (st == VStat::at_upper && d > kDualTol) {
                    score = d;
                    up = false;
                } else {
                    continue;
                }
                if (bland) {
                    enter = j;
                    enter_up = up;
                    break;
                }
                if (score > best_score) {
                    best_score = score;
                    enter = j;
                    enter_up = up;
                }
            }
            if (enter == -1) return LpSolution::Status::optimal;

            ftran(enter, w);
            double dir = enter_up ? 1.0 : -1.0;

            // Ratio test: step t moves x_enter by dir*t and x_B by -dir*t*w.
            double own_range = hi_[static_cast<size_t>(enter)] - lo_[static_cast<size_t>(enter)];
            double t = own_range;
            int leave = -1;
            bool leave_at_upper = false;
            for (int i = 0; i < m_; ++i) {
                int bj = basis_[static_cast<size_t>(i)];
                double delta = dir * w[static_cast<size_t>(i)];
                double ti;
                bool to_upper;
                if (delta > kPivotTol) {
                    ti = (x_[static_cast<size_t>(bj)] - lo_[static_cast<size_t>(bj)]) / delta;
                    to_upper = false;
                } else if (delta < -kPivotTol && hi_[static_cast<size_t>(bj)] < kInf) {
                    ti = (hi_[static_cast<size_t>(bj)] - x_[static_cast<size_t>(bj)]) / -delta;
                    to_upper = true;
                } else {
                    continue;
                }
                if (ti < -1e-12) ti = 0;
                if (ti < t - 1e-12 ||
                    (leave >= 0 && ti < t + 1e-12 && bj < basis_[static_cast<size_t>(leave)])) {
                    t = ti;
                    leave = i;
                    leave_at_upper = to_upper;
                }
            }
            if (leave == -1 && !(own_range < kInf)) return LpSolution::Status::unbounded;
            if (t < 0) t = 0;

            if (t > kDegenerateStep) {
                stall = 0;
                bland = false;
            } else if (++stall >= kStallLimit) {
                bland = true;
            }

            if (leave == -1) {
                // The entering variable walks across its own range.
                for (int i = 0; i < m_; ++i)
                    x_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] -=
                        dir * own_range * w[static_cast<size_t>(i)];
                status_[static_cast<size_t>(enter)] = enter_up ? VStat::at_upper : VStat::at_lower;
                x_[static_cast<size_t>(enter)] = enter_up ? hi_[static_cast<size_t>(enter)]
                                                          : lo_[static_cast<size_t>(enter)];
                continue;
            }

            double piv = w[static_cast<size_t>(leave)];
            if (std::abs(piv) < kPivotTol) {
                refactor();
                since_refactor = 0;
                continue;  // recompute with a clean inverse
            }

            for (int i = 0; i < m_; ++i) {
                if (i == leave) continue;
                x_[static_cast<size_t>(basis_[static_cast<size_t>(i)])] -=
                    dir * t * w[static_cast<size_t>(i)];
            }
            int leaving_col = basis_[static_cast<size_t>(leave)];
            status_[static_cast<size_t>(leaving_col)] =
                leave_at_upper ? VStat::at_upper : VStat::at_lower;
            x_[static_cast<size_t>(leaving_col)] = leave_at_upper
                                                       ? hi_[static_cast<size_t>(leaving_col)]
                                                       : lo_[static_cast<size_t>(leaving_col)];
            x_[static_cast<size_t>(enter)] += dir * t;
            basis_[static_cast<size_t>(leave)] = enter;
            status_[static_cast<size_t>(enter)] = VStat::basic;
            std::swap(x_[static_cast<size_t>(enter)], x_[static_cast<size_t>(enter)]);  // keep value

            double* lrow = binv_.data() + static_cast<size_t>(leave) * m_;
            for (int k = 0; k < m_; ++k) lrow[k] /= piv;
            for (int i = 0; i < m_; ++i) {
                if (i == leave) continue;
                double f = w[static_cast<size_t>(i)];
                if (f == 0) continue;
                double* irow = binv_.data() + static_cast<size_t>(i) * m_;
                for (int k = 0; k < m_; ++k) irow[k] -= f * lrow[k];
            }

            if (++since_refactor >= kRefactorEvery) {
                refactor();
                since_refactor = 0;
            }
        }
        return LpSolution::Status::iteration_limit;
    }

    const std::vector<LpRow>& rows_;
    int m_, ns_, ncols_;
    std::vector<std::vector<std::pair<int, double>>> scol_;
    std::vector<double> lo_, hi_, cost_, x_;
    std::vector<VStat> status_;
    std::vector<int> basis_;
    std::vector<double> binv_;
    bool need_phase1_ = false;
};

double row_violation(const LpRow& row, const std::vector<double>& x) {
    double lhs = 0;
    for (const auto& term : row.terms) lhs += term.coef * x[static_cast<size_t>(term.col)];
    return row.rhs - lhs;
}

}  // namespace

LpSolution solve_rows(const std::vector<double>& objective, const std::vector<double>& lower,
                      const std::vector<double>& upper, const RowOracle& oracle,
                      const SolveOptions& opts) {
    size_t ns = objective.size();
    if (ns != lower.size() || ns != upper.size())
        raise(ErrorKind::validation, "objective/bounds size mismatch");
    if (ns > opts.max_cols)
        raise(ErrorKind::cap, "variable count " + std::to_string(ns) + " exceeds cap");
    if (oracle.row_count() > opts.max_rows)
        raise(ErrorKind::cap, "row count " + std::to_string(oracle.row_count()) + " exceeds cap");

    LpSolution sol;
    sol.values.assign(ns, 0.0);
    for (size_t j = 0; j < ns; ++j) sol.values[j] = lower[j];

    std::vector<LpRow> working;
    std::vector<int> added_round;
    long budget = opts.max_iterations;

    bool small = oracle.row_count() <= static_cast<size_t>(2 * opts.activation_batch);
    if (small) {
        oracle.all_rows(working);
        added_round.assign(working.size(), 0);
    }

    for (int round = 0; round < opts.max_rounds; ++round) {
        if (!working.empty() || round > 0 || small) {
            Simplex core(working, objective, lower, upper);
            auto st = core.run(budget);
            sol.iterations = opts.max_iterations - budget;
            if (st != LpSolution::Status::optimal) {
                sol.status = st;
                sol.values = core.structural_values();
                return sol;
            }
            sol.values = core.structural_values();
        }

        std::vector<LpRow> fresh;
        oracle.violated(sol.values, opts.eps_feas, opts.activation_batch, fresh);
        if (fresh.empty()) {
            sol.status = LpSolution::Status::optimal;
            sol.is_vertex = true;
            sol.objective = 0;
            for (size_t j = 0; j < ns; ++j) sol.objective += objective[j] * sol.values[j];
            sol.rows_used = static_cast<int>(working.size());
            sol.iterations = opts.max_iterations - budget;
            return sol;
        }

        // Keep the working set lean: drop rows that are comfortably slack,
        // except recent arrivals. Purging stops after round 50 so the set
        // grows monotonically and the loop must terminate.
        if (round <= 50 && working.size() > 512) {
            std::vector<LpRow> kept;
            std::vector<int> kept_round;
            for (size_t i = 0; i < working.size(); ++i) {
                if (added_round[i] >= round - 1 ||
                    row_violation(working[i], sol.values) > -opts.eps_feas * 10) {
                    kept.push_back(std::move(working[i]));
                    kept_round.push_back(added_round[i]);
                }
            }
            working = std::move(kept);
            added_round = std::move(kept_round);
        }
        for (auto& row : fresh) {
            working.push_back(std::move(row));
            added_round.push_back(round + 1);
        }
    }
    sol.status = LpSolution::Status::iteration_limit;
    return sol;
}

}  // namespace fvst
