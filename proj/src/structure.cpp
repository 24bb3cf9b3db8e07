#include "fvst/structure.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fvst/error.hpp"

namespace fvst {

namespace {

bool cyclic_triple(const Tournament& t, int x, int y, int z) {
    return t.beats(x, y) ? t.beats(y, z) && t.beats(z, x) : t.beats(z, y) && t.beats(x, z);
}

}  // namespace

std::optional<DiagonalReport> is_diagonal(const Tournament& t, int a, int b) {
    if (a == b) raise(ErrorKind::precondition, "diagonal asks for two distinct vertices");
    for (int u = 0; u < t.size(); ++u) {
        if (u == a || u == b) continue;
        for (int v = u + 1; v < t.size(); ++v) {
            if (v == a || v == b) continue;
            if (cyclic_triple(t, u, v, a) && cyclic_triple(t, u, v, b))
                return DiagonalReport{a, b, {u, v}};
        }
    }
    return std::nullopt;
}

std::vector<HeavyTriangle> heavy_triangles(const Tournament& t) {
    std::vector<HeavyTriangle> out;
    for (const Triangle& tri : t.triangles()) {
        std::vector<std::pair<int, int>> diags;
        for (auto [x, y] : {std::pair{tri.a, tri.b}, {tri.b, tri.c}, {tri.a, tri.c}}) {
            if (is_diagonal(t, std::min(x, y), std::max(x, y)))
                diags.emplace_back(std::min(x, y), std::max(x, y));
        }
        if (diags.size() >= 2) out.push_back({tri, std::move(diags)});
    }
    return out;
}

bool is_light(const Tournament& t) {
    for (const Triangle& tri : t.triangles()) {
        int diags = 0;
        for (auto [x, y] : {std::pair{tri.a, tri.b}, {tri.b, tri.c}, {tri.a, tri.c}})
            if (is_diagonal(t, std::min(x, y), std::max(x, y)) && ++diags == 2) break;
        if (diags >= 2) return false;
    }
    return true;
}

VSet in_neighborhood(const Tournament& t, VSet s, VSet universe) {
    VSet acc;
    for (int u : s) acc |= t.in_neighbors(u);
    return (acc & universe) - s;
}

std::vector<VSet> bfs_layers(const Tournament& t, int z, VSet universe) {
    if (!universe.contains(z))
        raise(ErrorKind::precondition, "bfs root " + std::to_string(z) + " not in universe");
    std::vector<VSet> layers{VSet::single(z)};
    VSet seen = VSet::single(z);
    for (;;) {
        VSet next = in_neighborhood(t, seen, universe);
        if (next.empty()) break;
        layers.push_back(next);
        seen |= next;
    }
    return layers;
}

std::optional<std::pair<int, int>> find_2_in_dominating_pair(const Tournament& t, VSet candidates,
                                                             VSet targets,
                                                             const std::vector<Rational>& w) {
    auto dominated = [&](int z, int zp) {
        return targets.subset_of(t.in_neighbors(z) | t.in_neighbors(zp));
    };
    for (int z : candidates) {
        for (int zp : candidates - VSet::all(z)) {  // zp >= z, includes zp == z
            if (!dominated(z, zp)) continue;
            Rational wz(0), wzp(0);
            for (int v : t.in_neighbors(z) & targets) wz += w[static_cast<size_t>(v)];
            for (int v : t.in_neighbors(zp) & targets) wzp += w[static_cast<size_t>(v)];
            if (wzp > wz) return std::pair{zp, z};
            return std::pair{z, zp};
        }
    }
    return std::nullopt;
}

int min_fvs_size(const Tournament& t) {
    if (t.size() > 16)
        raise(ErrorKind::cap, "min_fvs_size capped at n <= 16, got n = " + std::to_string(t.size()));

    // Greedy disjoint triangle packing: each packed triangle forces one
    // removal, giving an admissible bound for the branching below.
    auto packing_bound = [&](VSet rest) {
        int packed = 0;
        while (auto tri = t.first_triangle_in(rest)) {
            rest -= VSet::of({tri->a, tri->b, tri->c});
            ++packed;
        }
        return packed;
    };

    int best = t.size();
    auto search = [&](auto&& self, VSet rest, int removed) -> void {
        if (removed + packing_bound(rest) >= best) {
            if (!t.has_triangle_in(rest)) best = std::min(best, removed);
            return;
        }
        auto tri = t.first_triangle_in(rest);
        if (!tri) {
            best = std::min(best, removed);
            return;
        }
        for (int v : {tri->a, tri->b, tri->c}) self(self, rest - VSet::single(v), removed + 1);
    };
    search(search, t.vertices(), 0);
    return best;
}

// ---------------------------------------------------------------------------
// T5 / T7 family enumeration.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxFamilyOrder = 7;

// All one-vertex extensions of `base`: the new vertex's orientation against
// the existing ones runs through every bit pattern.
Tournament extend(const Tournament& base, uint32_t pattern) {
    int n = base.size();
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n + 1) * n / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) bits.push_back(base.beats(u, v));
        bits.push_back(pattern >> u & 1);  // pair (u, n): new vertex is n
    }
    return Tournament::from_pair_bits(n + 1, bits);
}

std::vector<bool> labeled_bits(int order, uint32_t code) {
    std::vector<bool> bits(static_cast<size_t>(order) * (order - 1) / 2);
    for (size_t k = 0; k < bits.size(); ++k) bits[k] = code >> k & 1;
    return bits;
}

FamilyCensus census_from_forms(int order, int fvs_size, std::set<std::string> forms) {
    FamilyCensus census;
    census.order = order;
    census.fvs_size = fvs_size;
    for (const std::string& form : forms) {
        Tournament member = Tournament::from_canonical_form(form);
        census.members.push_back({form, !is_light(member)});
    }
    return census;
}

}  // namespace

int FamilyCensus::heavy_count() const {
    return static_cast<int>(std::count_if(members.begin(), members.end(),
                                          [](const Member& m) { return m.heavy; }));
}

int FamilyCensus::light_count() const { return static_cast<int>(members.size()) - heavy_count(); }

std::vector<std::string> all_tournament_forms(int order) {
    if (order > kMaxFamilyOrder)
        raise(ErrorKind::cap, "tournament enumeration capped at order " +
                                  std::to_string(kMaxFamilyOrder));
    std::set<std::string> forms{Tournament::from_pair_bits(std::min(order, 1), {}).canonical_form()};
    for (int k = 2; k <= order; ++k) {
        std::set<std::string> next;
        for (const std::string& form : forms) {
            Tournament base = Tournament::from_canonical_form(form);
            for (uint32_t pattern = 0; pattern < (1u << (k - 1)); ++pattern)
                next.insert(extend(base, pattern).canonical_form());
        }
        forms = std::move(next);
    }
    return {forms.begin(), forms.end()};
}

FamilyCensus enumerate_family_serial(int order, int fvs_size) {
    if (order > kMaxFamilyOrder)
        raise(ErrorKind::cap,
              "family enumeration capped at order " + std::to_string(kMaxFamilyOrder));

    std::set<std::string> forms;
    if (order <= 5) {
        // Small enough to sweep every labeled tournament.
        uint32_t codes = 1u << (order * (order - 1) / 2);
        for (uint32_t code = 0; code < codes; ++code) {
            Tournament t = Tournament::from_pair_bits(order, labeled_bits(order, code));
            if (min_fvs_size(t) == fvs_size) forms.insert(t.canonical_form());
        }
    } else {
        for (const std::string& form : all_tournament_forms(order - 1)) {
            Tournament base = Tournament::from_canonical_form(form);
            for (uint32_t pattern = 0; pattern < (1u << (order - 1)); ++pattern) {
                Tournament t = extend(base, pattern);
                if (min_fvs_size(t) == fvs_size) forms.insert(t.canonical_form());
            }
        }
    }
    return census_from_forms(order, fvs_size, std::move(forms));
}

FamilyCensus enumerate_family(int order, int fvs_size, int jobs) {
    if (order > kMaxFamilyOrder)
        raise(ErrorKind::cap,
              "family enumeration capped at order " + std::to_string(kMaxFamilyOrder));

#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    int threads = 1;
    (void)jobs;
#endif

    std::set<std::string> forms;
    if (order <= 5) {
        int codes = 1 << (order * (order - 1) / 2);
#pragma omp parallel num_threads(threads)
        {
            std::set<std::string> local;
#pragma omp for schedule(dynamic, 64) nowait
            for (int code = 0; code < codes; ++code) {
                Tournament t =
                    Tournament::from_pair_bits(order, labeled_bits(order, static_cast<uint32_t>(code)));
                if (min_fvs_size(t) == fvs_size) local.insert(t.canonical_form());
            }
#pragma omp critical(census_merge)
            forms.merge(local);
        }
    } else {
        std::vector<std::string> bases = all_tournament_forms(order - 1);
        int patterns = 1 << (order - 1);
        int total = static_cast<int>(bases.size()) * patterns;
#pragma omp parallel num_threads(threads)
        {
            std::set<std::string> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (int idx = 0; idx < total; ++idx) {
                Tournament base = Tournament::from_canonical_form(bases[static_cast<size_t>(idx / patterns)]);
                Tournament t = extend(base, static_cast<uint32_t>(idx % patterns));
                if (min_fvs_size(t) == fvs_size) local.insert(t.canonical_form());
            }
#pragma omp critical(census_merge)
            forms.merge(local);
        }
    }
    return census_from_forms(order, fvs_size, std::move(forms));
}

// ---------------------------------------------------------------------------
// T5-freeness.
// ---------------------------------------------------------------------------

namespace {

const std::set<std::string>& t5_forms() {
    static const std::set<std::string> forms = [] {
        std::set<std::string> s;
        for (const auto& m : enumerate_family_serial(5, 2).members) s.insert(m.canonical_form);
        return s;
    }();
    return forms;
}

}  // namespace

std::optional<VSet> find_t5_violation(const Tournament& t) {
    int n = t.size();
    if (n < 5) return std::nullopt;
    const auto& forms = t5_forms();
    int c[5];
    for (c[0] = 0; c[0] < n - 4; ++c[0])
        for (c[1] = c[0] + 1; c[1] < n - 3; ++c[1])
            for (c[2] = c[1] + 1; c[2] < n - 2; ++c[2])
                for (c[3] = c[2] + 1; c[3] < n - 1; ++c[3])
                    for (c[4] = c[3] + 1; c[4] < n; ++c[4]) {
                        VSet s = VSet::of({c[0], c[1], c[2], c[3], c[4]});
                        // A tournament with min FVS 2 has at least two
                        // triangles; most subsets die on this check.
                        int tris = 0;
                        for (int i = 0; i < 5 && tris < 2; ++i)
                            for (int j = i + 1; j < 5 && tris < 2; ++j)
                                for (int k = j + 1; k < 5 && tris < 2; ++k)
                                    if (cyclic_triple(t, c[i], c[j], c[k])) ++tris;
                        if (tris < 2) continue;
                        if (forms.contains(t.induced(s).t.canonical_form())) return s;
                    }
    return std::nullopt;
}

}  // namespace fvst
