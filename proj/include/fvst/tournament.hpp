#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fvst/rational.hpp"
#include "fvst/vset.hpp"

namespace fvst {

// Directed 3-cycle with arcs a->b, b->c, c->a, stored rotated so that
// a is the minimum id (hence a < b and a < c, while b vs c is free).
struct Triangle {
    int a, b, c;
    constexpr bool operator==(const Triangle&) const = default;
    constexpr auto operator<=>(const Triangle&) const = default;
};

// Complete orientation of K_n over vertex ids 0..n-1. One bit per ordered
// dominance: out_[v] holds the set of vertices v beats. The unordered-pair
// view (bit for {u,v}, u<v, meaning u->v) is what the text format and
// canonical form use. Capped at 64 vertices so every neighborhood operation
// is a word op.
class Tournament {
public:
    static constexpr int kMaxN = VSet::kMax;
    // canonical_form() searches vertex orderings; past this it is refused.
    static constexpr int kMaxCanonicalN = 12;

    Tournament() = default;

    // Validates that `arcs` covers each unordered pair exactly once with no
    // self-loops; error messages name the offending pair.
    static Tournament build(int n, std::span<const std::pair<int, int>> arcs);

    // `bits[k]` is the orientation of the k-th pair in lexicographic order
    // (0,1),(0,2),...,(n-2,n-1); true means low->high.
    static Tournament from_pair_bits(int n, const std::vector<bool>& bits);

    // Each pair {u,v}, in lexicographic order, is oriented u->v on one coin
    // of a SplitMix64 stream seeded with `seed`.
    static Tournament random(int n, uint64_t seed);

    int size() const { return n_; }
    bool beats(int u, int v) const { return out_[static_cast<size_t>(u)].contains(v); }

    VSet vertices() const { return VSet::all(n_); }
    VSet out_neighbors(int v) const { return out_[static_cast<size_t>(v)]; }
    VSet in_neighbors(int v) const { return vertices() - out_[static_cast<size_t>(v)] - VSet::single(v); }
    int out_degree(int v) const { return out_neighbors(v).count(); }
    int in_degree(int v) const { return in_neighbors(v).count(); }

    bool pair_bit(int u, int v) const { return beats(u, v); }  // requires u < v
    std::vector<bool> pair_bits() const;

    // All directed triangles, canonically rotated, sorted by (a,b,c).
    std::vector<Triangle> triangles() const;
    long long triangle_count() const;

    bool has_triangle_in(VSet s) const { return first_triangle_in(s).has_value(); }
    std::optional<Triangle> first_triangle_in(VSet s) const;
    VSet triangle_covered(VSet s) const;  // vertices of s lying in a triangle of t[s]

    // In-degree sort; a tournament is acyclic iff its in-degrees are
    // exactly 0,1,...,n-1, in which case ascending in-degree is a
    // topological order (every arc goes earlier -> later).
    std::optional<std::vector<int>> topological_order() const;
    bool is_acyclic() const { return triangle_count() == 0; }

    // Subtournament on `s` preserving orientations. `old_to_new` has one
    // entry per original vertex, -1 for vertices outside `s`.
    struct Induced {
        Tournament t;
        std::vector<int> old_to_new;
        std::vector<int> new_to_old;
    };
    Induced induced(VSet s) const;

    // Minimum over all vertex orderings of the row-major orientation bit
    // string, computed by ordered-partition refinement; equal byte strings
    // iff isomorphic. First byte is n, then packed bits (MSB first).
    std::string canonical_form() const;

    static Tournament from_canonical_form(const std::string& form);

    bool operator==(const Tournament&) const = default;

private:
    int n_ = 0;
    std::vector<VSet> out_;
};

class WeightedTournament {
public:
    WeightedTournament() = default;
    WeightedTournament(Tournament t, std::vector<Rational> w);

    static WeightedTournament unit(Tournament t);

    const Tournament& t() const { return t_; }
    int size() const { return t_.size(); }
    const std::vector<Rational>& weights() const { return w_; }
    const Rational& weight(int v) const { return w_[static_cast<size_t>(v)]; }
    Rational weight_of(VSet s) const;
    Rational total_weight() const { return weight_of(t_.vertices()); }

    struct Induced {
        WeightedTournament wt;
        std::vector<int> old_to_new;
        std::vector<int> new_to_old;
    };
    Induced induced(VSet s) const;

private:
    Tournament t_;
    std::vector<Rational> w_;
};

struct FvsSolution {
    VSet chosen;
    Rational weight;
    std::vector<int> certificate;  // topological order of the untouched part
    // (Sherali-Adams level, LP value) when an LP bound certifies the ratio.
    std::optional<std::pair<int, double>> bound_used;
};

struct VerifyResult {
    std::optional<FvsSolution> solution;
    std::optional<Triangle> violation;  // one surviving triangle
    bool ok() const { return solution.has_value(); }
};

// Checks whether removing `x` leaves the tournament acyclic; on success the
// solution carries the exact weight of `x` and a topological certificate.
VerifyResult verify_fvs(const WeightedTournament& wt, VSet x);

}  // namespace fvst
