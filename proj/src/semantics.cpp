#include "argkit/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace argkit {

std::string to_string(SemanticsId s) {
    switch (s) {
        case SemanticsId::CF: return "cf";
        case SemanticsId::NAIVE: return "naive";
        case SemanticsId::ADM: return "adm";
        case SemanticsId::STB: return "stb";
        case SemanticsId::COM: return "com";
        case SemanticsId::GRD: return "grd";
        case SemanticsId::PRF: return "prf";
        case SemanticsId::STG: return "stg";
        case SemanticsId::SEM: return "sem";
    }
    throw UsageError("bad semantics id");
}

SemanticsId semantics_from_string(std::string_view s) {
    for (auto id : all_semantics())
        if (to_string(id) == s) return id;
    throw UsageError("unknown semantics: " + std::string(s));
}

const std::vector<SemanticsId>& all_semantics() {
    static const std::vector<SemanticsId> ids = {
        SemanticsId::CF,  SemanticsId::NAIVE, SemanticsId::ADM,
        SemanticsId::STB, SemanticsId::COM,   SemanticsId::GRD,
        SemanticsId::PRF, SemanticsId::STG,   SemanticsId::SEM};
    return ids;
}

ExtensionSet::ExtensionSet(std::vector<ArgSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end(), ArgSet::mask_less);
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ExtensionSet::contains(const ArgSet& s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s, ArgSet::mask_less);
}

namespace {

// Single-word bitmask engine for frameworks of up to 64 arguments.
struct Kernel {
    int n;
    std::uint64_t full;
    std::uint64_t selfloop = 0;
    std::vector<std::uint64_t> fwd, rev, conflict;

    explicit Kernel(const Framework& f)
        : n(f.size()),
          full(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
          fwd(static_cast<std::size_t>(n), 0),
          rev(static_cast<std::size_t>(n), 0) {
        for (const auto& [a, b] : f.attacks()) {
            fwd[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            rev[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            if (a == b) selfloop |= std::uint64_t{1} << a;
        }
        conflict.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            conflict[static_cast<std::size_t>(i)] =
                fwd[static_cast<std::size_t>(i)] | rev[static_cast<std::size_t>(i)];
    }

    std::uint64_t attacked(std::uint64_t s) const {
        std::uint64_t out = 0;
        while (s) {
            out |= fwd[static_cast<std::size_t>(std::countr_zero(s))];
            s &= s - 1;
        }
        return out;
    }

    bool admissible(std::uint64_t s) const {
        std::uint64_t hit = attacked(s);
        std::uint64_t rest = s;
        while (rest) {
            int i = std::countr_zero(rest);
            if (rev[static_cast<std::size_t>(i)] & ~hit) return false;
            rest &= rest - 1;
        }
        return true;
    }

    // s admissible and no outside argument is defended by s.
    bool complete(std::uint64_t s) const {
        std::uint64_t hit = attacked(s);
        for (int i = 0; i < n; ++i) {
            bool defended = (rev[static_cast<std::size_t>(i)] & ~hit) == 0;
            bool in = (s >> i) & 1u;
            if (in && !defended) return false;
            if (!in && defended) return false;
        }
        return true;
    }

    template <typename Fn>
    void conflict_free_sets(Fn&& emit) const {
        rec_cf(0, 0, 0, emit);
    }

    // Maximal conflict-free sets. When an addable argument is skipped, some
    // still-eligible later argument must conflict with it, otherwise the
    // branch cannot reach a maximal set.
    template <typename Fn>
    void naive_sets(Fn&& emit) const {
        rec_naive(0, 0, 0, [&](std::uint64_t s, std::uint64_t forbidden) {
            if ((s | forbidden | selfloop) == full) emit(s);
        });
    }

private:
    template <typename Fn>
    void rec_cf(int i, std::uint64_t s, std::uint64_t forbidden, Fn&& emit) const {
        if (i == n) {
            emit(s);
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        rec_cf(i + 1, s, forbidden, emit);
        if (!(bit & (forbidden | selfloop)))
            rec_cf(i + 1, s | bit, forbidden | conflict[static_cast<std::size_t>(i)], emit);
    }

    template <typename Fn>
    void rec_naive(int i, std::uint64_t s, std::uint64_t forbidden, Fn&& emit) const {
        if (i == n) {
            emit(s, forbidden);
            return;
        }
        std::uint64_t bit = std::uint64_t{1} << i;
        std::uint64_t future = i + 1 >= 64 ? 0 : (~std::uint64_t{0} << (i + 1)) & full;
        bool addable = !(bit & (forbidden | selfloop));
        if (addable)
            rec_naive(i + 1, s | bit, forbidden | conflict[static_cast<std::size_t>(i)], emit);
        if (!addable ||
            (conflict[static_cast<std::size_t>(i)] & future & ~selfloop & ~forbidden))
            rec_naive(i + 1, s, forbidden, emit);
    }
};

ArgSet to_argset(const Framework& f, std::uint64_t mask) {
    ArgSet s = f.empty_set();
    while (mask) {
        s.set(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

std::vector<std::uint64_t> maximal_by_subset(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<std::uint64_t> out;
    for (auto s : sets) {
        bool dominated = false;
        for (auto t : out) {
            if (s != t && (s & t) == s) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    return out;
}

// Members of `sets` whose key is subset-maximal among all keys.
std::vector<std::uint64_t> range_maximal(const Kernel& k, const std::vector<std::uint64_t>& sets) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;
    keyed.reserve(sets.size());
    for (auto s : sets) keyed.emplace_back(s | k.attacked(s), s);
    std::vector<std::uint64_t> out;
    for (const auto& [r, s] : keyed) {
        bool dominated = false;
        for (const auto& [r2, s2] : keyed) {
            if (r != r2 && (r & r2) == r) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    return out;
}

std::uint64_t grounded_mask(const Kernel& k) {
    std::uint64_t s = 0;
    while (true) {
        std::uint64_t hit = k.attacked(s);
        std::uint64_t next = 0;
        for (int i = 0; i < k.n; ++i)
            if ((k.rev[static_cast<std::size_t>(i)] & ~hit) == 0) next |= std::uint64_t{1} << i;
        if (next == s) return s;
        s = next;
    }
}

std::vector<std::uint64_t> enumerate_masks(const Kernel& k, SemanticsId sigma) {
    std::vector<std::uint64_t> out;
    switch (sigma) {
        case SemanticsId::CF:
            k.conflict_free_sets([&](std::uint64_t s) { out.push_back(s); });
            break;
        case SemanticsId::NAIVE:
            k.naive_sets([&](std::uint64_t s) { out.push_back(s); });
            break;
        case SemanticsId::ADM:
            k.conflict_free_sets([&](std::uint64_t s) {
                if (k.admissible(s)) out.push_back(s);
            });
            break;
        case SemanticsId::STB:
            // Stable sets attack everything outside, so they are naive.
            k.naive_sets([&](std::uint64_t s) {
                if ((s | k.attacked(s)) == k.full) out.push_back(s);
            });
            break;
        case SemanticsId::COM:
            k.conflict_free_sets([&](std::uint64_t s) {
                if (k.complete(s)) out.push_back(s);
            });
            break;
        case SemanticsId::GRD:
            out.push_back(grounded_mask(k));
            break;
        case SemanticsId::PRF:
            out = enumerate_masks(k, SemanticsId::COM);
            out = maximal_by_subset(std::move(out));
            break;
        case SemanticsId::STG:
            // Range-maximal conflict-free sets are maximal conflict-free.
            out = range_maximal(k, enumerate_masks(k, SemanticsId::NAIVE));
            break;
        case SemanticsId::SEM:
            // Range-maximal complete sets are preferred.
            out = range_maximal(k, enumerate_masks(k, SemanticsId::PRF));
            break;
    }
    return out;
}

Kernel make_kernel(const Framework& f, SemanticsId sigma, const EnumerationOptions& opts) {
    if (f.size() > 64)
        throw CapacityError("mask kernel supports at most 64 arguments, framework has " +
                            std::to_string(f.size()));
    if (sigma != SemanticsId::GRD && f.size() > opts.max_args)
        throw CapacityError("framework has " + std::to_string(f.size()) +
                            " arguments, enumeration bound is " + std::to_string(opts.max_args));
    return Kernel(f);
}

} // namespace

ExtensionSet extensions(const Framework& f, SemanticsId sigma, const EnumerationOptions& opts) {
    Kernel k = make_kernel(f, sigma, opts);
    auto masks = enumerate_masks(k, sigma);
    std::vector<ArgSet> sets;
    sets.reserve(masks.size());
    for (auto m : masks) sets.push_back(to_argset(f, m));
    return ExtensionSet(std::move(sets));
}

ArgSet grounded(const Framework& f) {
    ArgSet s = f.empty_set();
    while (true) {
        ArgSet next = characteristic(f, s);
        if (next == s) return s;
        s = next;
    }
}

bool credulous(const Framework& f, SemanticsId sigma, std::string_view arg,
               const EnumerationOptions& opts) {
    int i = f.require_index(arg);
    for (const auto& e : extensions(f, sigma, opts))
        if (e.test(i)) return true;
    return false;
}

bool skeptical(const Framework& f, SemanticsId sigma, std::string_view arg,
               const EnumerationOptions& opts) {
    int i = f.require_index(arg);
    for (const auto& e : extensions(f, sigma, opts))
        if (!e.test(i)) return false;
    return true;
}

} // namespace argkit
