#include "argkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <vector>

#include "json.hpp"

namespace argkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

// Calls fn(line, 1-based number) for every line.
template <typename Fn> void for_each_line(std::string_view text, Fn fn) {
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++no;
        if (!(nl == std::string_view::npos && line.empty())) fn(line, no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int parse_int(std::string_view tok, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(line, "bad integer token '" + std::string(tok) + "'");
    return v;
}

bool name_char(char c) {
    return c != '(' && c != ')' && c != ',' && c != '.' && c != '%' && c != ' ' && c != '\t' &&
           c != '\r';
}

struct ApxCursor {
    std::string_view s;
    std::size_t i = 0;
    int line;

    void ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        ws();
        return i >= s.size();
    }
    void expect(char c) {
        ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(line, std::string("expected '") + c + "'");
        ++i;
    }
    std::string_view name() {
        ws();
        std::size_t j = i;
        while (j < s.size() && name_char(s[j])) ++j;
        if (j == i) throw ParseError(line, "expected a name");
        std::string_view out = s.substr(i, j - i);
        i = j;
        return out;
    }
};

} // namespace

Framework parse_apx(std::string_view text) {
    std::vector<std::string> names;
    std::set<std::string, std::less<>> declared;
    struct Att {
        std::string a, b;
        int line;
    };
    std::vector<Att> atts;

    for_each_line(text, [&](std::string_view raw, int no) {
        std::string_view line = raw.substr(0, std::min(raw.size(), raw.find('%')));
        ApxCursor cur{line, 0, no};
        while (!cur.done()) {
            std::string_view kw = cur.name();
            cur.expect('(');
            if (kw == "arg") {
                std::string n(cur.name());
                if (!declared.insert(n).second)
                    throw ParseError(no, "duplicate argument '" + n + "'");
                names.push_back(std::move(n));
            } else if (kw == "att") {
                std::string a(cur.name());
                cur.expect(',');
                std::string b(cur.name());
                atts.push_back({std::move(a), std::move(b), no});
            } else {
                throw ParseError(no, "expected arg(...) or att(...), got '" + std::string(kw) +
                                         "'");
            }
            cur.expect(')');
            cur.expect('.');
        }
    });

    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& at : atts) {
        if (!declared.contains(at.a))
            throw ParseError(at.line, "undeclared argument '" + at.a + "'");
        if (!declared.contains(at.b))
            throw ParseError(at.line, "undeclared argument '" + at.b + "'");
        edges.emplace_back(std::move(at.a), std::move(at.b));
    }
    return Framework(std::move(names), edges);
}

std::string emit_apx(const Framework& f) {
    std::string out;
    for (const auto& n : f.names()) {
        out += "arg(";
        out += n;
        out += ").\n";
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [a, b] : f.attacks()) edges.emplace_back(f.name(a), f.name(b));
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        out += "att(";
        out += a;
        out += ",";
        out += b;
        out += ").\n";
    }
    return out;
}

Framework parse_tgf(std::string_view text) {
    std::vector<std::string> names;
    std::set<std::string, std::less<>> declared;
    std::vector<std::pair<std::string, std::string>> edges;
    bool in_edges = false;

    for_each_line(text, [&](std::string_view raw, int no) {
        std::string_view line = trim(raw);
        if (line.empty()) return;
        if (!in_edges && line == "#") {
            in_edges = true;
            return;
        }
        auto toks = tokens_of(line);
        if (!in_edges) {
            std::string n(toks[0]);
            if (!declared.insert(n).second)
                throw ParseError(no, "duplicate node id '" + n + "'");
            names.push_back(std::move(n));
        } else {
            if (toks.size() < 2) throw ParseError(no, "expected an edge as two node ids");
            for (int k = 0; k < 2; ++k)
                if (!declared.contains(toks[static_cast<std::size_t>(k)]))
                    throw ParseError(no, "unknown node id '" +
                                             std::string(toks[static_cast<std::size_t>(k)]) +
                                             "'");
            edges.emplace_back(std::string(toks[0]), std::string(toks[1]));
        }
    });
    return Framework(std::move(names), edges);
}

namespace {

struct DimacsBody {
    int nv = 0;
    std::vector<int> a_vars, e_vars;
    std::vector<std::vector<int>> clauses;
};

// Shared DIMACS scanner; quantifier lines are accepted only when `quantified`.
DimacsBody scan_dimacs(std::string_view text, bool quantified) {
    DimacsBody d;
    int nc = -1;
    bool in_clauses = false;
    bool seen_a = false, seen_e = false;

    auto quant_vars = [&](const std::vector<std::string_view>& toks, int no) {
        std::vector<int> vars;
        if (toks.back() != "0") throw ParseError(no, "quantifier line must end with 0");
        for (std::size_t k = 1; k + 1 < toks.size(); ++k) {
            int v = parse_int(toks[k], no);
            if (v <= 0 || v > d.nv)
                throw ParseError(no, "variable " + std::to_string(v) + " out of range");
            vars.push_back(v);
        }
        return vars;
    };

    for_each_line(text, [&](std::string_view raw, int no) {
        std::string_view line = trim(raw);
        if (line.empty()) return;
        auto toks = tokens_of(line);
        if (toks[0] == "c") return;
        if (toks[0] == "p") {
            if (nc >= 0) throw ParseError(no, "duplicate header");
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError(no, "expected 'p cnf <vars> <clauses>'");
            d.nv = parse_int(toks[2], no);
            nc = parse_int(toks[3], no);
            if (d.nv < 0 || nc < 0) throw ParseError(no, "negative header counts");
            return;
        }
        if (nc < 0) throw ParseError(no, "expected 'p cnf' header first");
        if (toks[0] == "a" || toks[0] == "e") {
            if (!quantified) throw ParseError(no, "quantifier line in a plain CNF file");
            if (in_clauses) throw ParseError(no, "quantifier line after clauses");
            if (toks[0] == "a") {
                if (seen_a || seen_e) throw ParseError(no, "misplaced 'a' line");
                seen_a = true;
                d.a_vars = quant_vars(toks, no);
            } else {
                if (seen_e) throw ParseError(no, "duplicate 'e' line");
                seen_e = true;
                d.e_vars = quant_vars(toks, no);
            }
            return;
        }
        in_clauses = true;
        std::vector<int> lits;
        bool terminated = false;
        for (auto tok : toks) {
            if (terminated) throw ParseError(no, "tokens after the clause terminator");
            int v = parse_int(tok, no);
            if (v == 0) {
                terminated = true;
                continue;
            }
            int var = v < 0 ? -v : v;
            if (var > d.nv)
                throw ParseError(no, "variable " + std::to_string(var) + " out of range");
            if (std::find(lits.begin(), lits.end(), -v) != lits.end())
                throw ParseError(no, "tautological clause");
            lits.push_back(v);
        }
        if (!terminated) throw ParseError(no, "clause line must end with 0");
        if (lits.empty()) throw ParseError(no, "empty clause");
        d.clauses.push_back(std::move(lits));
    });

    if (nc < 0) throw ParseError(0, "missing 'p cnf' header");
    if (static_cast<int>(d.clauses.size()) != nc)
        throw ParseError(0, "header announces " + std::to_string(nc) + " clauses, found " +
                                std::to_string(d.clauses.size()));
    return d;
}

std::vector<std::vector<Literal>> named_clauses(const DimacsBody& d) {
    std::vector<std::vector<Literal>> out;
    for (const auto& cl : d.clauses) {
        std::vector<Literal> named;
        for (int v : cl) named.push_back({std::to_string(v < 0 ? -v : v), v < 0});
        out.push_back(std::move(named));
    }
    return out;
}

} // namespace

Qbf2Formula parse_qdimacs(std::string_view text) {
    DimacsBody d = scan_dimacs(text, true);
    std::vector<int> count(static_cast<std::size_t>(d.nv) + 1, 0);
    for (int v : d.a_vars) ++count[static_cast<std::size_t>(v)];
    for (int v : d.e_vars) ++count[static_cast<std::size_t>(v)];
    for (int v = 1; v <= d.nv; ++v) {
        if (count[static_cast<std::size_t>(v)] == 0)
            throw ParseError(0, "variable " + std::to_string(v) + " is not quantified");
        if (count[static_cast<std::size_t>(v)] > 1)
            throw ParseError(0, "variable " + std::to_string(v) + " quantified twice");
    }
    std::vector<std::string> uni, exi, all;
    for (int v : d.a_vars) uni.push_back(std::to_string(v));
    for (int v : d.e_vars) exi.push_back(std::to_string(v));
    all = uni;
    all.insert(all.end(), exi.begin(), exi.end());
    return Qbf2Formula(uni, exi, CnfFormula(all, named_clauses(d)));
}

CnfFormula parse_dimacs(std::string_view text) {
    DimacsBody d = scan_dimacs(text, false);
    std::vector<std::string> vars;
    for (int v = 1; v <= d.nv; ++v) vars.push_back(std::to_string(v));
    return CnfFormula(vars, named_clauses(d));
}

namespace {

std::string dimacs_clauses(const CnfFormula& f) {
    std::string out;
    for (const auto& cl : f.clauses()) {
        for (const auto& l : cl) {
            if (l.negated) out += '-';
            out += std::to_string(l.var + 1);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

} // namespace

std::string to_qdimacs(const Qbf2Formula& f) {
    const CnfFormula& m = f.matrix();
    std::string out = "p cnf " + std::to_string(m.num_vars()) + " " +
                      std::to_string(m.num_clauses()) + "\n";
    // Matrix variable order is universal then existential, so quantifier
    // blocks are index ranges.
    int ny = static_cast<int>(f.universal().size());
    if (ny > 0) {
        out += "a";
        for (int v = 1; v <= ny; ++v) out += " " + std::to_string(v);
        out += " 0\n";
    }
    if (m.num_vars() > ny) {
        out += "e";
        for (int v = ny + 1; v <= m.num_vars(); ++v) out += " " + std::to_string(v);
        out += " 0\n";
    }
    return out + dimacs_clauses(m);
}

std::string to_dimacs(const CnfFormula& f) {
    return "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.num_clauses()) +
           "\n" + dimacs_clauses(f);
}

std::string format_extension(const Framework& f, const ArgSet& s) {
    f.check_set(s);
    std::string out = "[";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += f.name(i);
        first = false;
    });
    return out + "]";
}

std::string artifact_meta_json(const ReductionArtifact& art) {
    auto set_names = [&](const ArgSet& s) {
        std::vector<std::string> out;
        s.for_each([&](int i) { out.push_back(art.framework.name(i)); });
        return out;
    };
    nlohmann::json j;
    j["reduction_id"] = art.reduction_id;
    j["variant"] = to_string(art.variant);
    j["query_args"] = art.query_args;
    j["claimed_class"] = to_string(art.claim.cls);
    j["claimed_deletion_set"] = set_names(art.claim.deletion_set);
    j["claim_verified"] = art.claim.verified;
    if (art.extra_claim) {
        j["extra_claim"] = {{"class", to_string(art.extra_claim->cls)},
                            {"deletion_set", set_names(art.extra_claim->deletion_set)},
                            {"verified", art.extra_claim->verified}};
    }
    j["source_text"] = art.source_text;
    return j.dump(2) + "\n";
}

} // namespace argkit
