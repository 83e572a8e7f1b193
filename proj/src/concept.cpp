#include "dlsim/concept.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "dlsim/error.hpp"
#include "dlsim/parser.hpp"

namespace dlsim {

struct Concept::Node {
    ConceptKind kind;
    std::string name;
    unsigned count = 0;
    std::vector<Concept> args;
    std::size_t hash = 0;
    std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

const std::string kEmpty;

}  // namespace

namespace {

template <typename NodeT>
std::shared_ptr<const NodeT> finish(NodeT node) {
    std::size_t h = std::hash<int>{}(static_cast<int>(node.kind));
    h = mix(h, std::hash<std::string>{}(node.name));
    h = mix(h, node.count);
    for (const auto& a : node.args) {
        h = mix(h, a.hash());
        node.size += a.size();
    }
    node.hash = h;
    return std::make_shared<const NodeT>(std::move(node));
}

}  // namespace

Concept Concept::top() {
    static const Concept t{finish(Node{ConceptKind::Top, {}, 0, {}})};
    return t;
}

Concept Concept::bottom() {
    static const Concept b{finish(Node{ConceptKind::Bottom, {}, 0, {}})};
    return b;
}

Concept Concept::atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("atom name must not be empty");
    return Concept{finish(Node{ConceptKind::Atom, std::move(name), 0, {}})};
}

Concept Concept::negation(Concept arg) {
    return Concept{finish(Node{ConceptKind::Not, {}, 0, {std::move(arg)}})};
}

Concept Concept::conjunction(std::vector<Concept> args) {
    if (args.size() < 2) throw std::invalid_argument("conjunction needs at least two operands");
    return Concept{finish(Node{ConceptKind::And, {}, 0, std::move(args)})};
}

Concept Concept::disjunction(std::vector<Concept> args) {
    if (args.size() < 2) throw std::invalid_argument("disjunction needs at least two operands");
    return Concept{finish(Node{ConceptKind::Or, {}, 0, std::move(args)})};
}

Concept Concept::exists(std::string role, Concept filler) {
    if (role.empty()) throw std::invalid_argument("role name must not be empty");
    return Concept{finish(Node{ConceptKind::Exists, std::move(role), 0, {std::move(filler)}})};
}

Concept Concept::forall(std::string role, Concept filler) {
    if (role.empty()) throw std::invalid_argument("role name must not be empty");
    return Concept{finish(Node{ConceptKind::Forall, std::move(role), 0, {std::move(filler)}})};
}

Concept Concept::at_least(unsigned n, std::string role) {
    if (n == 0) throw std::invalid_argument("atleast requires n >= 1");
    if (role.empty()) throw std::invalid_argument("role name must not be empty");
    return Concept{finish(Node{ConceptKind::AtLeast, std::move(role), n, {}})};
}

ConceptKind Concept::kind() const noexcept { return node_->kind; }
const std::string& Concept::name() const noexcept { return node_ ? node_->name : kEmpty; }
unsigned Concept::count() const noexcept { return node_->count; }
std::span<const Concept> Concept::args() const noexcept { return node_->args; }
std::size_t Concept::hash() const noexcept { return node_->hash; }
std::size_t Concept::size() const noexcept { return node_->size; }

const Concept& Concept::filler() const {
    if (node_->args.size() != 1 || (kind() != ConceptKind::Not && kind() != ConceptKind::Exists &&
                                    kind() != ConceptKind::Forall)) {
        throw std::logic_error("concept has no filler");
    }
    return node_->args.front();
}

bool operator==(const Concept& a, const Concept& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
    return a.node_->kind == b.node_->kind && a.node_->count == b.node_->count &&
           a.node_->name == b.node_->name && a.node_->args == b.node_->args;
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
    if (auto c = a.node_->name <=> b.node_->name; c != 0) return c;
    if (auto c = a.node_->count <=> b.node_->count; c != 0) return c;
    return std::lexicographical_compare_three_way(a.node_->args.begin(), a.node_->args.end(),
                                                  b.node_->args.begin(), b.node_->args.end());
}

Concept conjoin(std::vector<Concept> args) {
    if (args.empty()) return Concept::top();
    if (args.size() == 1) return std::move(args.front());
    return Concept::conjunction(std::move(args));
}

Concept disjoin(std::vector<Concept> args) {
    if (args.empty()) return Concept::bottom();
    if (args.size() == 1) return std::move(args.front());
    return Concept::disjunction(std::move(args));
}

namespace {

Concept nnf_negated(const Concept& c);

Concept nnf_positive(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Atom:
        case ConceptKind::AtLeast:
            return c;
        case ConceptKind::Not:
            return nnf_negated(c.filler());
        case ConceptKind::And:
        case ConceptKind::Or: {
            std::vector<Concept> out;
            out.reserve(c.args().size());
            for (const auto& a : c.args()) out.push_back(nnf_positive(a));
            return c.is(ConceptKind::And) ? Concept::conjunction(std::move(out))
                                          : Concept::disjunction(std::move(out));
        }
        case ConceptKind::Exists:
            return Concept::exists(c.name(), nnf_positive(c.filler()));
        case ConceptKind::Forall:
            return Concept::forall(c.name(), nnf_positive(c.filler()));
    }
    throw std::logic_error("unreachable concept kind");
}

// nnf of not(c)
Concept nnf_negated(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top:
            return Concept::bottom();
        case ConceptKind::Bottom:
            return Concept::top();
        case ConceptKind::Atom:
            return Concept::negation(c);
        case ConceptKind::Not:
            return nnf_positive(c.filler());
        case ConceptKind::And:
        case ConceptKind::Or: {
            std::vector<Concept> out;
            out.reserve(c.args().size());
            for (const auto& a : c.args()) out.push_back(nnf_negated(a));
            return c.is(ConceptKind::And) ? Concept::disjunction(std::move(out))
                                          : Concept::conjunction(std::move(out));
        }
        case ConceptKind::Exists:
            return Concept::forall(c.name(), nnf_negated(c.filler()));
        case ConceptKind::Forall:
            return Concept::exists(c.name(), nnf_negated(c.filler()));
        case ConceptKind::AtLeast:
            if (c.count() == 1) return Concept::forall(c.name(), Concept::bottom());
            throw UnsupportedNegation("cannot negate 'atleast " + std::to_string(c.count()) + " " +
                                      c.name() + "': at-most restrictions are not supported");
    }
    throw std::logic_error("unreachable concept kind");
}

struct Keyed {
    std::string key;
    Concept value;
};

// Sorts by serialization and drops syntactic duplicates.
std::vector<Concept> canonical_order(std::vector<Concept> items) {
    std::vector<Keyed> keyed;
    keyed.reserve(items.size());
    for (auto& c : items) keyed.push_back({to_string(c), std::move(c)});
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    std::vector<Concept> out;
    out.reserve(keyed.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].key == keyed[i - 1].key && keyed[i].value == out.back()) continue;
        out.push_back(std::move(keyed[i].value));
    }
    return out;
}

Concept simplify(const Concept& c);

Concept simplify_and(std::span<const Concept> operands) {
    std::vector<Concept> flat;
    std::function<void(const Concept&)> absorb = [&](const Concept& x) {
        if (x.is(ConceptKind::And)) {
            for (const auto& y : x.args()) absorb(y);
        } else {
            flat.push_back(x);
        }
    };
    for (const auto& op : operands) absorb(simplify(op));

    std::vector<Concept> rest;
    // forall R.C1 and forall R.C2 == forall R.(C1 and C2)
    std::map<std::string, std::vector<Concept>> universal;
    for (auto& x : flat) {
        if (x.is(ConceptKind::Bottom)) return Concept::bottom();
        if (x.is(ConceptKind::Top)) continue;
        if (x.is(ConceptKind::Forall)) {
            universal[x.name()].push_back(x.filler());
            continue;
        }
        rest.push_back(std::move(x));
    }
    for (auto& [role, fillers] : universal) {
        if (fillers.size() == 1) {
            rest.push_back(Concept::forall(role, std::move(fillers.front())));
        } else {
            Concept merged = simplify(Concept::conjunction(std::move(fillers)));
            if (!merged.is(ConceptKind::Top)) rest.push_back(Concept::forall(role, merged));
        }
    }
    rest = canonical_order(std::move(rest));
    return conjoin(std::move(rest));
}

Concept simplify_or(std::span<const Concept> operands) {
    std::vector<Concept> flat;
    std::function<void(const Concept&)> absorb = [&](const Concept& x) {
        if (x.is(ConceptKind::Or)) {
            for (const auto& y : x.args()) absorb(y);
        } else {
            flat.push_back(x);
        }
    };
    for (const auto& op : operands) absorb(simplify(op));

    std::vector<Concept> rest;
    for (auto& x : flat) {
        if (x.is(ConceptKind::Top)) return Concept::top();
        if (x.is(ConceptKind::Bottom)) continue;
        rest.push_back(std::move(x));
    }
    rest = canonical_order(std::move(rest));
    return disjoin(std::move(rest));
}

// Expects NNF input.
Concept simplify(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Bottom:
        case ConceptKind::Atom:
        case ConceptKind::Not:
        case ConceptKind::AtLeast:
            return c;
        case ConceptKind::And:
            return simplify_and(c.args());
        case ConceptKind::Or:
            return simplify_or(c.args());
        case ConceptKind::Exists: {
            Concept f = simplify(c.filler());
            if (f.is(ConceptKind::Bottom)) return Concept::bottom();
            return Concept::exists(c.name(), std::move(f));
        }
        case ConceptKind::Forall: {
            Concept f = simplify(c.filler());
            if (f.is(ConceptKind::Top)) return Concept::top();
            return Concept::forall(c.name(), std::move(f));
        }
    }
    throw std::logic_error("unreachable concept kind");
}

void collect_names(const Concept& c, std::set<std::string>& concepts, std::set<std::string>& roles) {
    switch (c.kind()) {
        case ConceptKind::Atom:
            concepts.insert(c.name());
            break;
        case ConceptKind::Exists:
        case ConceptKind::Forall:
        case ConceptKind::AtLeast:
            roles.insert(c.name());
            break;
        default:
            break;
    }
    for (const auto& a : c.args()) collect_names(a, concepts, roles);
}

}  // namespace

Concept nnf(const Concept& c) { return nnf_positive(c); }

Concept normalize(const Concept& c) {
    Concept current = nnf(c);
    for (;;) {
        Concept next = simplify(current);
        if (next == current) return next;
        current = std::move(next);
    }
}

std::size_t concept_depth(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            return 1 + concept_depth(c.filler());
        case ConceptKind::AtLeast:
            return 1;
        default: {
            std::size_t d = 0;
            for (const auto& a : c.args()) d = std::max(d, concept_depth(a));
            return d;
        }
    }
}

bool mentions_concept(const Concept& c, const std::string& name) {
    if (c.is(ConceptKind::Atom)) return c.name() == name;
    return std::any_of(c.args().begin(), c.args().end(),
                       [&](const Concept& a) { return mentions_concept(a, name); });
}

std::vector<std::string> concept_names(const Concept& c) {
    std::set<std::string> concepts, roles;
    collect_names(c, concepts, roles);
    return {concepts.begin(), concepts.end()};
}

std::vector<std::string> role_names(const Concept& c) {
    std::set<std::string> concepts, roles;
    collect_names(c, concepts, roles);
    return {roles.begin(), roles.end()};
}

}  // namespace dlsim
