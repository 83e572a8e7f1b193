// Test helpers and reference implementations.
//
// The oracles below are written against the data structures only (assertion
// sets, role triples, concept trees) and share no code with the library's
// evaluator, reasoner, or similarity routines.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"
#include "dlsim/parser.hpp"

namespace testing {

inline std::string data_path(const std::string& file) { return std::string(DLSIM_DATA_DIR) + "/" + file; }

inline dlsim::KnowledgeBase family() { return dlsim::load_kb(data_path("family.dlkb")); }
inline dlsim::KnowledgeBase fathers() { return dlsim::load_kb(data_path("father.dlkb")); }

inline dlsim::Concept C(const std::string& text) { return dlsim::parse_concept(text); }

using Names = std::set<std::string>;

// Told names per individual, by iterating single propagation steps until nothing changes.
inline std::map<std::string, Names> naive_told(const dlsim::KnowledgeBase& kb) {
    std::map<std::string, Names> told;
    for (const auto& ind : kb.individuals()) told[ind];
    for (const auto& a : kb.abox.concept_assertions()) told[a.individual].insert(a.concept_name);

    std::function<void(const dlsim::Concept&, Names&)> heads = [&](const dlsim::Concept& c, Names& out) {
        if (c.is(dlsim::ConceptKind::Atom)) out.insert(c.name());
        if (c.is(dlsim::ConceptKind::And))
            for (const auto& x : c.args()) heads(x, out);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [ind, names] : told) {
            Names add;
            for (const auto& n : names)
                if (const auto* def = kb.tbox.find(n)) heads(def->body, add);
            for (const auto& n : add) changed |= names.insert(n).second;
        }
    }
    return told;
}

// Closed-world membership of one individual, decided by direct recursion.
class NaiveModel {
public:
    explicit NaiveModel(const dlsim::KnowledgeBase& kb) : kb_(kb), told_(naive_told(kb)) {
        for (const auto& r : kb.abox.role_assertions()) edges_.insert({r.role, r.subject, r.object});
    }

    bool holds(const std::string& x, const dlsim::Concept& c) const {
        using K = dlsim::ConceptKind;
        switch (c.kind()) {
            case K::Top: return true;
            case K::Bottom: return false;
            case K::Atom: {
                if (told_.at(x).count(c.name())) return true;
                const auto* def = kb_.tbox.find(c.name());
                return def && def->kind == dlsim::DefinitionKind::Equivalent && holds(x, def->body);
            }
            case K::Not: return !holds(x, c.args()[0]);
            case K::And:
                return std::all_of(c.args().begin(), c.args().end(), [&](const auto& y) { return holds(x, y); });
            case K::Or:
                return std::any_of(c.args().begin(), c.args().end(), [&](const auto& y) { return holds(x, y); });
            case K::Exists:
                for (const auto& [r, s, o] : edges_)
                    if (r == c.name() && s == x && holds(o, c.filler())) return true;
                return false;
            case K::Forall:
                for (const auto& [r, s, o] : edges_)
                    if (r == c.name() && s == x && !holds(o, c.filler())) return false;
                return true;
            case K::AtLeast: {
                unsigned n = 0;
                for (const auto& [r, s, o] : edges_)
                    if (r == c.name() && s == x) ++n;
                return n >= c.count();
            }
        }
        return false;
    }

    Names extension(const dlsim::Concept& c) const {
        Names out;
        for (const auto& ind : kb_.individuals())
            if (holds(ind, c)) out.insert(ind);
        return out;
    }

private:
    const dlsim::KnowledgeBase& kb_;
    std::map<std::string, Names> told_;
    std::set<std::tuple<std::string, std::string, std::string>> edges_;
};

// Longest simple path (edges) in the role graph, by trying every path.
inline std::size_t longest_simple_path(const dlsim::KnowledgeBase& kb) {
    std::map<std::string, Names> next;
    for (const auto& r : kb.abox.role_assertions()) next[r.subject].insert(r.object);
    std::size_t best = 0;
    std::vector<std::string> path;
    std::function<void(const std::string&)> walk = [&](const std::string& x) {
        best = std::max(best, path.size() - 1);
        for (const auto& y : next[x]) {
            if (std::find(path.begin(), path.end(), y) != path.end()) continue;
            path.push_back(y);
            walk(y);
            path.pop_back();
        }
    };
    for (const auto& ind : kb.individuals()) {
        path = {ind};
        walk(ind);
    }
    return best;
}

// i/(c+d-i) * max(i/c, i/d), left unreduced.
struct Fraction {
    std::uint64_t num;
    std::uint64_t den;
};

inline Fraction naive_similarity(std::size_t c, std::size_t d, std::size_t i) {
    if (i == 0) return {0, 1};
    Fraction left{i, c}, right{i, d};
    Fraction larger = left.num * right.den >= right.num * left.den ? left : right;
    return {i * larger.num, (c + d - i) * larger.den};
}

inline bool same_value(Fraction f, std::uint64_t num, std::uint64_t den) { return f.num * den == num * f.den; }

}  // namespace testing
