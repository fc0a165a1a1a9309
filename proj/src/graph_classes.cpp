#include "argkit/graph_classes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace argkit {

std::string to_string(GraphClassId g) {
    switch (g) {
        case GraphClassId::ACY: return "acy";
        case GraphClassId::NOEVEN: return "noeven";
        case GraphClassId::BIP: return "bip";
        case GraphClassId::SYM: return "sym";
    }
    throw UsageError("bad graph class id");
}

GraphClassId graph_class_from_string(std::string_view s) {
    for (auto g : all_graph_classes())
        if (to_string(g) == s) return g;
    throw UsageError("unknown graph class: " + std::string(s));
}

const std::vector<GraphClassId>& all_graph_classes() {
    static const std::vector<GraphClassId> ids = {GraphClassId::ACY, GraphClassId::NOEVEN,
                                                  GraphClassId::BIP, GraphClassId::SYM};
    return ids;
}

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

struct Graph {
    int n;
    std::uint64_t selfloop = 0;
    std::vector<std::uint64_t> fwd, rev, und;

    explicit Graph(const Framework& f)
        : n(f.size()),
          fwd(static_cast<std::size_t>(n), 0),
          rev(static_cast<std::size_t>(n), 0),
          und(static_cast<std::size_t>(n), 0) {
        if (n > 64) throw CapacityError("graph class operations support at most 64 arguments");
        for (const auto& [a, b] : f.attacks()) {
            fwd[static_cast<std::size_t>(a)] |= bit(b);
            rev[static_cast<std::size_t>(b)] |= bit(a);
            und[static_cast<std::size_t>(a)] |= bit(b);
            und[static_cast<std::size_t>(b)] |= bit(a);
            if (a == b) selfloop |= bit(a);
        }
    }

    std::uint64_t all() const { return n == 64 ? ~std::uint64_t{0} : bit(n) - 1; }

    bool acyclic(std::uint64_t alive) const {
        std::uint64_t left = alive;
        bool progress = true;
        while (left && progress) {
            progress = false;
            std::uint64_t rest = left;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if ((fwd[static_cast<std::size_t>(v)] & left) == 0) {
                    left &= ~bit(v);
                    progress = true;
                }
            }
        }
        return left == 0;
    }

    bool bipartite(std::uint64_t alive) const {
        if (selfloop & alive) return false;
        std::uint64_t seen = 0, color = 0;
        std::uint64_t rest = alive;
        while (rest) {
            int root = std::countr_zero(rest);
            rest &= rest - 1;
            if (seen & bit(root)) continue;
            seen |= bit(root);
            std::vector<int> queue{root};
            while (!queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                bool cv = (color >> v) & 1u;
                std::uint64_t nb = und[static_cast<std::size_t>(v)] & alive;
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (!(seen & bit(w))) {
                        seen |= bit(w);
                        if (!cv) color |= bit(w);
                        queue.push_back(w);
                    } else if (((color >> w) & 1u) == cv) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool symmetric(std::uint64_t alive) const {
        std::uint64_t rest = alive;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (selfloop & bit(v)) return false;
            std::uint64_t out = fwd[static_cast<std::size_t>(v)] & alive;
            if (out != (rev[static_cast<std::size_t>(v)] & alive)) return false;
        }
        return true;
    }
};

// Johnson-style elementary circuit enumeration restricted to alive vertices.
// The callback gets each cycle as a vertex sequence rooted at its minimal
// vertex and returns false to abort. Self-loops are reported as [v] before
// the longer cycles rooted at v.
template <typename Fn>
struct CycleSearch {
    const Graph& g;
    long cap;
    Fn& emit;
    long count = 0;
    int root = 0;
    std::uint64_t sub = 0, blocked = 0;
    std::vector<std::uint64_t> blist;
    std::vector<int> path;
    bool aborted = false;

    CycleSearch(const Graph& g_, long cap_, Fn& emit_)
        : g(g_), cap(cap_), emit(emit_), blist(static_cast<std::size_t>(g_.n), 0) {}

    void deliver(const std::vector<int>& cycle) {
        if (++count > cap)
            throw CapacityError("cycle enumeration exceeded " + std::to_string(cap) +
                                " cycles");
        if (!emit(cycle)) aborted = true;
    }

    void unblock(int v) {
        blocked &= ~bit(v);
        std::uint64_t b = blist[static_cast<std::size_t>(v)];
        blist[static_cast<std::size_t>(v)] = 0;
        while (b) {
            int w = std::countr_zero(b);
            b &= b - 1;
            if (blocked & bit(w)) unblock(w);
        }
    }

    bool circuit(int v) {
        bool found = false;
        blocked |= bit(v);
        path.push_back(v);
        std::uint64_t nb = g.fwd[static_cast<std::size_t>(v)] & sub & ~bit(v);
        while (nb && !aborted) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == root) {
                deliver(path);
                found = true;
            } else if (!(blocked & bit(w))) {
                if (circuit(w)) found = true;
            }
        }
        path.pop_back();
        if (found) {
            unblock(v);
        } else {
            std::uint64_t nb2 = g.fwd[static_cast<std::size_t>(v)] & sub & ~bit(v);
            while (nb2) {
                int w = std::countr_zero(nb2);
                nb2 &= nb2 - 1;
                blist[static_cast<std::size_t>(w)] |= bit(v);
            }
        }
        return found;
    }

    void run(std::uint64_t alive) {
        for (root = 0; root < g.n && !aborted; ++root) {
            if (!(alive & bit(root))) continue;
            if (g.selfloop & bit(root)) deliver({root});
            if (aborted) break;
            // only vertices >= root, so every cycle is found at its minimum
            sub = alive & ~(bit(root) - 1);
            blocked = 0;
            std::fill(blist.begin(), blist.end(), 0);
            circuit(root);
        }
    }
};

template <typename Fn>
void for_each_cycle(const Graph& g, std::uint64_t alive, long cap, Fn emit) {
    CycleSearch<Fn> search(g, cap, emit);
    search.run(alive);
}

bool no_even_cycle(const Graph& g, std::uint64_t alive, const CycleEnumerationOptions& opts,
                   int min_even_len) {
    bool ok = true;
    for_each_cycle(g, alive, opts.max_cycles, [&](const std::vector<int>& c) {
        int len = static_cast<int>(c.size());
        if (len % 2 == 0 && len >= min_even_len) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool member(const Graph& g, GraphClassId cls, std::uint64_t alive,
            const CycleEnumerationOptions& opts) {
    switch (cls) {
        case GraphClassId::ACY: return g.acyclic(alive);
        case GraphClassId::NOEVEN: return no_even_cycle(g, alive, opts, 2);
        case GraphClassId::BIP: return g.bipartite(alive);
        case GraphClassId::SYM: return g.symmetric(alive);
    }
    throw UsageError("bad graph class id");
}

} // namespace

std::vector<std::vector<int>> simple_cycles(const Framework& f,
                                            const CycleEnumerationOptions& opts) {
    Graph g(f);
    std::vector<std::vector<int>> out;
    for_each_cycle(g, g.all(), opts.max_cycles, [&](const std::vector<int>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_member(const Framework& f, GraphClassId cls, const CycleEnumerationOptions& opts) {
    Graph g(f);
    return member(g, cls, g.all(), opts);
}

bool is_member_noeven_ignoring_2cycles(const Framework& f, const CycleEnumerationOptions& opts) {
    Graph g(f);
    return no_even_cycle(g, g.all(), opts, 4);
}

bool verify_deletion(const Framework& f, GraphClassId cls, const ArgSet& deleted,
                     const CycleEnumerationOptions& opts) {
    f.check_set(deleted);
    Graph g(f);
    std::uint64_t removed = 0;
    deleted.for_each([&](int i) { removed |= bit(i); });
    return member(g, cls, g.all() & ~removed, opts);
}

DistanceCertificate distance(const Framework& f, GraphClassId cls, const DistanceOptions& opts) {
    Graph g(f);
    long checks = 0;
    auto check = [&](std::uint64_t removed) {
        ++checks;
        return member(g, cls, g.all() & ~removed, opts.cycles);
    };

    // greedy bound: peel the highest-degree vertex until membership holds
    std::uint64_t greedy = 0;
    int ub = 0;
    while (!check(greedy)) {
        std::uint64_t alive = g.all() & ~greedy;
        int best = -1, best_deg = -1;
        std::uint64_t rest = alive;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(g.und[static_cast<std::size_t>(v)] & alive);
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        }
        greedy |= bit(best);
        ++ub;
    }

    for (int k = 0; k <= ub; ++k) {
        std::vector<int> combo(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (checks >= opts.max_subset_checks)
                throw CapacityError("distance search budget exceeded (best known bound " +
                                        std::to_string(ub) + ")",
                                    ub);
            std::uint64_t removed = 0;
            for (int v : combo) removed |= bit(v);
            if (check(removed)) {
                ArgSet s = f.empty_set();
                for (int v : combo) s.set(v);
                return {cls, k, s};
            }
            int i = k - 1;
            while (i >= 0 && combo[static_cast<std::size_t>(i)] == g.n - k + i) --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // greedy found a working set of size ub, so size ub cannot be empty
    throw CapacityError("distance search failed to rediscover its upper bound", ub);
}

} // namespace argkit
