#include "argkit/framework.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace argkit {

namespace {
std::atomic<std::uint64_t> next_framework_id{1};
}

ArgSet::ArgSet(int n, std::uint64_t tag)
    : n_(n), tag_(tag), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

void ArgSet::set(int i, bool v) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
        w_[static_cast<std::size_t>(i) >> 6] |= bit;
    else
        w_[static_cast<std::size_t>(i) >> 6] &= ~bit;
}

int ArgSet::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool ArgSet::empty() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

void ArgSet::align(const ArgSet& o) const {
    if (n_ != o.n_ || tag_ != o.tag_)
        throw UsageError("argument sets belong to different frameworks");
}

ArgSet& ArgSet::operator|=(const ArgSet& o) {
    align(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

ArgSet& ArgSet::operator&=(const ArgSet& o) {
    align(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

ArgSet& ArgSet::subtract(const ArgSet& o) {
    align(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
}

bool ArgSet::is_subset_of(const ArgSet& o) const {
    align(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool ArgSet::intersects(const ArgSet& o) const {
    align(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool ArgSet::mask_less(const ArgSet& a, const ArgSet& b) {
    a.align(b);
    for (std::size_t i = a.w_.size(); i-- > 0;) {
        if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    }
    return false;
}

std::vector<int> ArgSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
}

Framework::Framework(std::vector<std::string> arguments,
                     std::vector<std::pair<std::string, std::string>> attacks)
    : names_(std::move(arguments)), id_(next_framework_id.fetch_add(1)) {
    for (int i = 0; i < size(); ++i) {
        if (names_[static_cast<std::size_t>(i)].empty())
            throw UsageError("empty argument name");
        if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second)
            throw UsageError("duplicate argument name: " + names_[static_cast<std::size_t>(i)]);
    }
    attacks_.reserve(attacks.size());
    for (const auto& [a, b] : attacks)
        attacks_.emplace_back(require_index(a), require_index(b));
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

    fwd_.assign(static_cast<std::size_t>(size()), empty_set());
    rev_.assign(static_cast<std::size_t>(size()), empty_set());
    for (const auto& [a, b] : attacks_) {
        fwd_[static_cast<std::size_t>(a)].set(b);
        rev_[static_cast<std::size_t>(b)].set(a);
    }
}

int Framework::index_of(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Framework::require_index(std::string_view name) const {
    int i = index_of(name);
    if (i < 0) throw UsageError("unknown argument: " + std::string(name));
    return i;
}

bool Framework::has_attack(int from, int to) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), std::pair(from, to));
}

ArgSet Framework::full_set() const {
    ArgSet s = empty_set();
    for (int i = 0; i < size(); ++i) s.set(i);
    return s;
}

ArgSet Framework::set_of(const std::vector<std::string>& names) const {
    ArgSet s = empty_set();
    for (const auto& n : names) s.set(require_index(n));
    return s;
}

void Framework::check_set(const ArgSet& s) const {
    if (s.size() != size() || s.tag() != id_)
        throw UsageError("argument set does not belong to this framework");
}

ArgSet range(const Framework& f, const ArgSet& s) {
    f.check_set(s);
    ArgSet r = s;
    s.for_each([&](int i) { r |= f.attacked_by(i); });
    return r;
}

bool is_conflict_free(const Framework& f, const ArgSet& s) {
    f.check_set(s);
    bool ok = true;
    s.for_each([&](int i) {
        if (f.attacked_by(i).intersects(s)) ok = false;
    });
    return ok;
}

bool defends(const Framework& f, const ArgSet& s, int arg) {
    f.check_set(s);
    ArgSet attacked = f.empty_set();
    s.for_each([&](int i) { attacked |= f.attacked_by(i); });
    return f.attackers_of(arg).is_subset_of(attacked);
}

bool defends(const Framework& f, const ArgSet& s, std::string_view arg) {
    return defends(f, s, f.require_index(arg));
}

ArgSet characteristic(const Framework& f, const ArgSet& s) {
    f.check_set(s);
    ArgSet attacked = f.empty_set();
    s.for_each([&](int i) { attacked |= f.attacked_by(i); });
    ArgSet out = f.empty_set();
    for (int i = 0; i < f.size(); ++i)
        if (f.attackers_of(i).is_subset_of(attacked)) out.set(i);
    return out;
}

Framework induced_subframework(const Framework& f, const ArgSet& removed) {
    f.check_set(removed);
    std::vector<std::string> names;
    std::vector<int> keep(static_cast<std::size_t>(f.size()), -1);
    for (int i = 0; i < f.size(); ++i) {
        if (!removed.test(i)) {
            keep[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
            names.push_back(f.name(i));
        }
    }
    std::vector<std::pair<std::string, std::string>> atts;
    for (const auto& [a, b] : f.attacks()) {
        if (keep[static_cast<std::size_t>(a)] >= 0 && keep[static_cast<std::size_t>(b)] >= 0)
            atts.emplace_back(f.name(a), f.name(b));
    }
    return Framework(std::move(names), std::move(atts));
}

} // namespace argkit
