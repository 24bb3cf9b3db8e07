#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvst/tournament.hpp"

namespace fvst {

// Pair {a,b} together with the witnessing pair {u,v} (u < v) such that both
// {u,v,a} and {u,v,b} induce triangles.
struct DiagonalReport {
    int a, b;
    std::pair<int, int> witnesses;
};

// First witness in lexicographic (u,v) order, or absent if the pair is not
// a diagonal.
std::optional<DiagonalReport> is_diagonal(const Tournament& t, int a, int b);

struct HeavyTriangle {
    Triangle tri;
    std::vector<std::pair<int, int>> diagonal_pairs;  // >= 2 of tri's pairs
};

// Triangles with at least two of their three vertex pairs diagonals.
std::vector<HeavyTriangle> heavy_triangles(const Tournament& t);

// A tournament is light iff it has no heavy triangle; lightness is closed
// under taking subtournaments.
bool is_light(const Tournament& t);

// { v in universe \ s : v beats some u in s }.
VSet in_neighborhood(const Tournament& t, VSet s, VSet universe);

// Layers of the in-BFS from z inside `universe`: first {z}, then repeatedly
// the in-neighborhood of everything seen so far; stops when a layer is
// empty. Vertex v lands in layer i iff its shortest directed path to z
// within `universe` has length i.
std::vector<VSet> bfs_layers(const Tournament& t, int z, VSet universe);

// A pair {z,z'} from `candidates` (possibly z = z') such that every target
// has an arc into {z,z'}. Picks the lexicographically first valid pair, then
// orders it so that w(N(z) ∩ targets) >= w(N(z') ∩ targets), ties keeping
// the smaller id first. Absent when no pair dominates.
std::optional<std::pair<int, int>> find_2_in_dominating_pair(const Tournament& t, VSet candidates,
                                                             VSet targets,
                                                             const std::vector<Rational>& w);

// First (lexicographic) 5-subset inducing a member of the T5 family, or
// absent when the tournament is T5-free.
std::optional<VSet> find_t5_violation(const Tournament& t);

inline bool is_t5_free(const Tournament& t) { return !find_t5_violation(t).has_value(); }

// Minimum number of vertices whose removal leaves an acyclic tournament.
// Branches three ways on an uncovered triangle; capped at n <= 16.
int min_fvs_size(const Tournament& t);

// The k-vertex tournaments (up to isomorphism) whose minimum FVS has the
// given size, each classified heavy or light.
struct FamilyCensus {
    struct Member {
        std::string canonical_form;
        bool heavy;
    };

    int order = 0;
    int fvs_size = 0;
    std::vector<Member> members;  // sorted by canonical form

    int heavy_count() const;
    int light_count() const;
};

// Serial reference implementation: labeled enumeration for order <= 5,
// one-vertex extension of the canonical forms of the previous order above.
FamilyCensus enumerate_family_serial(int order, int fvs_size);

// Same census with the candidate space sharded across OpenMP threads;
// jobs <= 0 uses the OpenMP default. Output is identical to the serial
// reference for any thread count.
FamilyCensus enumerate_family(int order, int fvs_size, int jobs = 0);

// Canonical forms of all tournaments on `order` vertices (order <= 7),
// sorted; grown by one-vertex extensions.
std::vector<std::string> all_tournament_forms(int order);

}  // namespace fvst
