#include "fvst/tournament.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fvst/error.hpp"
#include "fvst/rng.hpp"

namespace fvst {

namespace {

void check_vertex_count(int n) {
    if (n < 0) raise(ErrorKind::validation, "negative vertex count");
    if (n > Tournament::kMaxN)
        raise(ErrorKind::cap, "vertex count " + std::to_string(n) + " exceeds the bitset cap of " +
                                  std::to_string(Tournament::kMaxN));
}

// Index of pair (u,v), u<v, in lexicographic order (0,1),(0,2),...,(n-2,n-1).
size_t pair_index(int n, int u, int v) {
    return static_cast<size_t>(u) * (2 * n - u - 1) / 2 + static_cast<size_t>(v - u - 1);
}

std::string pair_name(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Tournament Tournament::build(int n, std::span<const std::pair<int, int>> arcs) {
    check_vertex_count(n);
    Tournament t;
    t.n_ = n;
    t.out_.assign(static_cast<size_t>(n), VSet{});
    std::vector<bool> seen(static_cast<size_t>(n) * (n - 1) / 2, false);
    for (auto [from, to] : arcs) {
        if (from < 0 || from >= n || to < 0 || to >= n)
            raise(ErrorKind::validation, "arc " + pair_name(from, to) + " out of range");
        if (from == to)
            raise(ErrorKind::validation, "self-loop at vertex " + std::to_string(from));
        size_t k = pair_index(n, std::min(from, to), std::max(from, to));
        if (seen[k])
            raise(ErrorKind::validation,
                  "duplicate pair " + pair_name(std::min(from, to), std::max(from, to)));
        seen[k] = true;
        t.out_[static_cast<size_t>(from)].add(to);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen[pair_index(n, u, v)])
                raise(ErrorKind::validation, "missing pair " + pair_name(u, v));
    return t;
}

Tournament Tournament::from_pair_bits(int n, const std::vector<bool>& bits) {
    check_vertex_count(n);
    size_t want = static_cast<size_t>(n) * (n - 1) / 2;
    if (bits.size() != want)
        raise(ErrorKind::validation, "expected " + std::to_string(want) + " orientation bits, got " +
                                         std::to_string(bits.size()));
    Tournament t;
    t.n_ = n;
    t.out_.assign(static_cast<size_t>(n), VSet{});
    size_t k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            t.out_[static_cast<size_t>(bits[k] ? u : v)].add(bits[k] ? v : u);
    return t;
}

Tournament Tournament::random(int n, uint64_t seed) {
    check_vertex_count(n);
    SplitMix64 rng(seed);
    std::vector<bool> bits(static_cast<size_t>(n) * (n - 1) / 2);
    for (size_t k = 0; k < bits.size(); ++k) bits[k] = rng.coin();
    return from_pair_bits(n, bits);
}

std::vector<bool> Tournament::pair_bits() const {
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n_) * (n_ - 1) / 2);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) bits.push_back(beats(u, v));
    return bits;
}

std::vector<Triangle> Tournament::triangles() const {
    std::vector<Triangle> out;
    VSet beyond;  // vertices > v, maintained per pair loop
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            beyond = vertices() - VSet::all(v + 1);
            if (beats(u, v)) {
                // u->v: w closes the cycle iff v->w and w->u
                for (int w : out_neighbors(v) & in_neighbors(u) & beyond)
                    out.push_back({u, v, w});
            } else {
                // v->u: cycle is u->w->v->u
                for (int w : out_neighbors(u) & in_neighbors(v) & beyond)
                    out.push_back({u, w, v});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long Tournament::triangle_count() const {
    long long count = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            VSet beyond = vertices() - VSet::all(v + 1);
            VSet mids = beats(u, v) ? out_neighbors(v) & in_neighbors(u)
                                    : out_neighbors(u) & in_neighbors(v);
            count += (mids & beyond).count();
        }
    }
    return count;
}

std::optional<Triangle> Tournament::first_triangle_in(VSet s) const {
    for (int u : s) {
        for (int v : s - VSet::all(u + 1)) {
            VSet beyond = (s - VSet::all(v + 1));
            VSet mids = beats(u, v) ? out_neighbors(v) & in_neighbors(u)
                                    : out_neighbors(u) & in_neighbors(v);
            mids &= beyond;
            if (!mids.empty()) {
                int w = mids.first();
                return beats(u, v) ? Triangle{u, v, w} : Triangle{u, w, v};
            }
        }
    }
    return std::nullopt;
}

VSet Tournament::triangle_covered(VSet s) const {
    VSet covered;
    for (int u : s) {
        for (int v : s - VSet::all(u + 1)) {
            VSet mids = (beats(u, v) ? out_neighbors(v) & in_neighbors(u)
                                     : out_neighbors(u) & in_neighbors(v)) &
                        s;
            if (!mids.empty()) covered |= mids | VSet::single(u) | VSet::single(v);
        }
    }
    return covered;
}

std::optional<std::vector<int>> Tournament::topological_order() const {
    std::vector<int> order(static_cast<size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
        int d = in_degree(v);
        if (order[static_cast<size_t>(d)] != -1) return std::nullopt;  // repeated in-degree
        order[static_cast<size_t>(d)] = v;
    }
    return order;
}

Tournament::Induced Tournament::induced(VSet s) const {
    if (!s.subset_of(vertices()))
        raise(ErrorKind::validation, "induced set contains out-of-range vertex ids");
    Induced res;
    res.old_to_new.assign(static_cast<size_t>(n_), -1);
    res.new_to_old = s.to_vector();
    for (size_t i = 0; i < res.new_to_old.size(); ++i)
        res.old_to_new[static_cast<size_t>(res.new_to_old[i])] = static_cast<int>(i);
    res.t.n_ = static_cast<int>(res.new_to_old.size());
    res.t.out_.assign(res.new_to_old.size(), VSet{});
    for (size_t i = 0; i < res.new_to_old.size(); ++i)
        for (VSet hits = out_neighbors(res.new_to_old[i]) & s; int old_v : hits)
            res.t.out_[i].add(res.old_to_new[static_cast<size_t>(old_v)]);
    return res;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Vertices are placed one position at a time. The unplaced vertices live in an
// ordered list of cells; every vertex in a cell has the same orientation
// against every placed vertex, so the rows of all placed vertices are fully
// determined by the cell layout alone. Placing v splits each cell into
// (in-neighbors of v, out-neighbors of v), in-part first, which is the unique
// lexicographically minimal completion of v's row, and the branch is pruned
// as soon as its committed rows exceed the best string found so far.
// ---------------------------------------------------------------------------

namespace {

struct CanonSearch {
    const Tournament* t;
    int n;
    std::vector<uint8_t> cur;   // committed row-major bits along current path
    std::vector<uint8_t> best;  // best complete string so far
    bool have_best = false;

    // -1: cur < best on the committed prefix, 0: equal, +1: greater.
    int prefix_cmp() const {
        if (!have_best) return -1;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] != best[i]) return cur[i] < best[i] ? -1 : 1;
        }
        return 0;
    }

    void dfs(const std::vector<VSet>& cells) {
        if (cells.empty()) {
            if (!have_best || prefix_cmp() < 0) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v : cells.front()) {
            std::vector<VSet> next;
            next.reserve(cells.size() * 2);
            size_t row_start = cur.size();
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                VSet cell = ci == 0 ? cells[ci] - VSet::single(v) : cells[ci];
                VSet in_part = cell - t->out_neighbors(v);
                VSet out_part = cell & t->out_neighbors(v);
                if (!in_part.empty()) next.push_back(in_part);
                if (!out_part.empty()) next.push_back(out_part);
                for (int i = 0; i < in_part.count(); ++i) cur.push_back(0);
                for (int i = 0; i < out_part.count(); ++i) cur.push_back(1);
            }
            if (prefix_cmp() <= 0) dfs(next);
            cur.resize(row_start);
        }
    }
};

}  // namespace

std::string Tournament::canonical_form() const {
    if (n_ > kMaxCanonicalN)
        raise(ErrorKind::cap, "canonical form capped at n <= " + std::to_string(kMaxCanonicalN) +
                                  ", got n = " + std::to_string(n_));
    CanonSearch search{this, n_, {}, {}, false};
    if (n_ > 0) search.dfs({vertices()});

    std::string form(1, static_cast<char>(n_));
    uint8_t acc = 0;
    int filled = 0;
    for (uint8_t bit : search.best) {
        acc = static_cast<uint8_t>(acc << 1 | bit);
        if (++filled == 8) {
            form.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled > 0) form.push_back(static_cast<char>(acc << (8 - filled)));
    return form;
}

Tournament Tournament::from_canonical_form(const std::string& form) {
    if (form.empty()) raise(ErrorKind::validation, "empty canonical form");
    int n = static_cast<int>(static_cast<unsigned char>(form[0]));
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    if (form.size() != 1 + (nbits + 7) / 8)
        raise(ErrorKind::validation, "canonical form has wrong length");
    std::vector<bool> bits(nbits);
    for (size_t i = 0; i < nbits; ++i) {
        auto byte = static_cast<unsigned char>(form[1 + i / 8]);
        bits[i] = byte >> (7 - i % 8) & 1;
    }
    return from_pair_bits(n, bits);
}

// ---------------------------------------------------------------------------

WeightedTournament::WeightedTournament(Tournament t, std::vector<Rational> w)
    : t_(std::move(t)), w_(std::move(w)) {
    if (w_.size() != static_cast<size_t>(t_.size()))
        raise(ErrorKind::validation, "weight vector length " + std::to_string(w_.size()) +
                                         " does not match vertex count " +
                                         std::to_string(t_.size()));
    for (size_t v = 0; v < w_.size(); ++v)
        if (w_[v] < 0)
            raise(ErrorKind::validation, "negative weight at vertex " + std::to_string(v));
}

WeightedTournament WeightedTournament::unit(Tournament t) {
    std::vector<Rational> w(static_cast<size_t>(t.size()), Rational(1));
    return WeightedTournament(std::move(t), std::move(w));
}

Rational WeightedTournament::weight_of(VSet s) const {
    Rational sum(0);
    for (int v : s) sum += w_[static_cast<size_t>(v)];
    return sum;
}

WeightedTournament::Induced WeightedTournament::induced(VSet s) const {
    auto sub = t_.induced(s);
    std::vector<Rational> w;
    w.reserve(sub.new_to_old.size());
    for (int old_v : sub.new_to_old) w.push_back(w_[static_cast<size_t>(old_v)]);
    return {WeightedTournament(std::move(sub.t), std::move(w)), std::move(sub.old_to_new),
            std::move(sub.new_to_old)};
}

VerifyResult verify_fvs(const WeightedTournament& wt, VSet x) {
    if (!x.subset_of(wt.t().vertices()))
        raise(ErrorKind::validation, "candidate set contains out-of-range vertex ids");
    VSet rest = wt.t().vertices() - x;
    if (auto tri = wt.t().first_triangle_in(rest)) return {std::nullopt, tri};

    // Acyclic remainder: in-degrees within `rest` are 0..|rest|-1.
    std::vector<int> order(static_cast<size_t>(rest.count()));
    for (int v : rest) order[static_cast<size_t>((wt.t().in_neighbors(v) & rest).count())] = v;
    FvsSolution sol;
    sol.chosen = x;
    sol.weight = wt.weight_of(x);
    sol.certificate = std::move(order);
    return {std::move(sol), std::nullopt};
}

}  // namespace fvst
