#include "dlsim/tableau.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlsim/error.hpp"

namespace dlsim {

namespace {

// Interned NNF concept.
struct PoolEntry {
    ConceptKind kind;
    int role = -1;
    unsigned count = 0;
    std::vector<int> kids;
    int complement = -1;  // Atom <-> Not(Atom)
};

class ConceptPool {
public:
    int intern(const Concept& c) {
        if (auto it = ids_.find(c); it != ids_.end()) return it->second;
        PoolEntry e;
        e.kind = c.kind();
        switch (c.kind()) {
            case ConceptKind::Exists:
            case ConceptKind::Forall:
            case ConceptKind::AtLeast:
                e.role = role_id(c.name());
                e.count = c.count();
                break;
            default:
                break;
        }
        for (const auto& a : c.args()) e.kids.push_back(intern(a));
        int id = static_cast<int>(entries_.size());
        if (c.is(ConceptKind::Not)) {
            // NNF: the argument is an atom.
            e.complement = e.kids.front();
            entries_[e.kids.front()].complement = id;
        } else if (c.is(ConceptKind::Atom)) {
            if (auto it = ids_.find(Concept::negation(c)); it != ids_.end()) e.complement = it->second;
        }
        entries_.push_back(std::move(e));
        ids_.emplace(c, id);
        return id;
    }

    const PoolEntry& operator[](int id) const { return entries_[id]; }
    std::size_t size() const { return entries_.size(); }

    int role_id(const std::string& name) {
        auto [it, inserted] = roles_.try_emplace(name, static_cast<int>(roles_.size()));
        return it->second;
    }

private:
    std::vector<PoolEntry> entries_;
    std::unordered_map<Concept, int, ConceptHash> ids_;
    std::map<std::string, int> roles_;
};

struct Edge {
    int role;
    int target;
};

struct Node {
    std::vector<char> has;
    std::vector<int> label;
    std::vector<Edge> edges;
};

struct Pending {
    int node;
    int cid;
};

struct State {
    std::vector<Node> nodes;
    std::deque<Pending> todo;
    std::vector<Pending> disjunctions;
    bool clash = false;
};

class Search {
public:
    Search(const ConceptPool& pool, ReasonerStats& stats) : pool_(pool), stats_(stats) {}

    int add_node(State& s) const {
        s.nodes.push_back(Node{std::vector<char>(pool_.size(), 0), {}, {}});
        return static_cast<int>(s.nodes.size()) - 1;
    }

    void add(State& s, int node, int cid) const {
        Node& n = s.nodes[node];
        if (n.has[cid]) return;
        n.has[cid] = 1;
        n.label.push_back(cid);
        const PoolEntry& e = pool_[cid];
        if (e.kind == ConceptKind::Bottom || (e.complement >= 0 && n.has[e.complement])) {
            s.clash = true;
            return;
        }
        s.todo.push_back({node, cid});
    }

    void link(State& s, int from, int role, int to) const {
        s.nodes[from].edges.push_back({role, to});
        // Propagate universal restrictions already present on `from`.
        std::vector<int> snapshot = s.nodes[from].label;
        for (int c : snapshot) {
            const PoolEntry& e = pool_[c];
            if (e.kind == ConceptKind::Forall && e.role == role) add(s, to, e.kids.front());
        }
    }

    /// Returns true iff a clash-free completion exists.
    bool run(State s) {
        saturate(s);
        if (s.clash) return false;

        for (const auto& [node, cid] : s.disjunctions) {
            const Node& n = s.nodes[node];
            const auto& kids = pool_[cid].kids;
            bool satisfied = std::any_of(kids.begin(), kids.end(), [&](int k) { return n.has[k] != 0; });
            if (satisfied) continue;
            for (int k : kids) {
                ++stats_.branches_explored;
                State alt = s;
                add(alt, node, k);
                if (run(std::move(alt))) return true;
            }
            return false;
        }
        return true;
    }

private:
    void saturate(State& s) const {
        while (!s.clash && !s.todo.empty()) {
            auto [node, cid] = s.todo.front();
            s.todo.pop_front();
            const PoolEntry& e = pool_[cid];
            switch (e.kind) {
                case ConceptKind::And:
                    for (int k : e.kids) add(s, node, k);
                    break;
                case ConceptKind::Or:
                    s.disjunctions.push_back({node, cid});
                    break;
                case ConceptKind::Exists: {
                    int filler = e.kids.front();
                    const auto& edges = s.nodes[node].edges;
                    bool witnessed = std::any_of(edges.begin(), edges.end(), [&](const Edge& ed) {
                        return ed.role == e.role && s.nodes[ed.target].has[filler];
                    });
                    if (witnessed) break;
                    int y = add_node(s);
                    link(s, node, e.role, y);
                    add(s, y, filler);
                    break;
                }
                case ConceptKind::Forall: {
                    std::vector<Edge> edges = s.nodes[node].edges;
                    for (const auto& ed : edges)
                        if (ed.role == e.role) add(s, ed.target, e.kids.front());
                    break;
                }
                case ConceptKind::AtLeast: {
                    const auto& edges = s.nodes[node].edges;
                    auto have = std::count_if(edges.begin(), edges.end(),
                                              [&](const Edge& ed) { return ed.role == e.role; });
                    if (static_cast<unsigned>(have) >= e.count) break;
                    for (unsigned i = 0; i < e.count; ++i) {
                        int y = add_node(s);
                        link(s, node, e.role, y);
                    }
                    break;
                }
                default:
                    break;
            }
        }
    }

    const ConceptPool& pool_;
    ReasonerStats& stats_;
};

}  // namespace

struct Reasoner::Impl {
    std::vector<std::string> individuals;
    std::map<std::string, int> index;
    // Unfolded NNF labels per individual, parallel to `individuals`.
    std::vector<std::vector<Concept>> labels;
    std::vector<std::pair<std::string, std::pair<int, int>>> roles;

    Concept prepare(const Concept& c, const TBox& t) const { return nnf(unfold(c, t)); }
};

Reasoner::Reasoner(const KnowledgeBase& kb) : kb_(kb), impl_(std::make_unique<Impl>()) {
    kb_.tbox.check_acyclic();
    auto& im = *impl_;
    for (const auto& name : kb_.individuals()) {
        im.index.emplace(name, static_cast<int>(im.individuals.size()));
        im.individuals.push_back(name);
    }
    im.labels.resize(im.individuals.size());
    std::map<std::string, Concept> unfolded;
    for (const auto& a : kb_.abox.concept_assertions()) {
        auto it = unfolded.find(a.concept_name);
        if (it == unfolded.end())
            it = unfolded.emplace(a.concept_name, im.prepare(Concept::atom(a.concept_name), kb_.tbox)).first;
        im.labels[im.index.at(a.individual)].push_back(it->second);
    }
    for (const auto& r : kb_.abox.role_assertions())
        im.roles.push_back({r.role, {im.index.at(r.subject), im.index.at(r.object)}});
}

Reasoner::~Reasoner() = default;
Reasoner::Reasoner(Reasoner&&) noexcept = default;

bool Reasoner::is_satisfiable(const Concept& c) {
    ++stats_.satisfiability_calls;
    Concept prepared = impl_->prepare(c, kb_.tbox);
    ConceptPool pool;
    int root = pool.intern(prepared);
    Search search(pool, stats_);
    State s;
    int x = search.add_node(s);
    search.add(s, x, root);
    return search.run(std::move(s));
}

bool Reasoner::subsumes(const Concept& d, const Concept& c) {
    return !is_satisfiable(Concept::conjunction({c, Concept::negation(d)}));
}

bool Reasoner::equivalent(const Concept& c, const Concept& d) {
    return subsumes(d, c) && subsumes(c, d);
}

namespace {

using RoleEdges = std::vector<std::pair<std::string, std::pair<int, int>>>;

// Completion graph seeded with one named node per individual.
// All label concepts must already be interned in `pool`.
bool run_abox(ConceptPool& pool, const std::vector<std::vector<int>>& labels,
              const RoleEdges& roles, ReasonerStats& stats) {
    std::vector<int> role_ids;
    for (const auto& r : roles) role_ids.push_back(pool.role_id(r.first));
    Search search(pool, stats);
    State s;
    for (std::size_t i = 0; i < labels.size(); ++i) search.add_node(s);
    for (std::size_t i = 0; i < roles.size(); ++i)
        search.link(s, roles[i].second.first, role_ids[i], roles[i].second.second);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (int c : labels[i]) search.add(s, static_cast<int>(i), c);
    return search.run(std::move(s));
}

}  // namespace

bool Reasoner::abox_consistent() {
    ++stats_.satisfiability_calls;
    const auto& im = *impl_;
    ConceptPool pool;
    std::vector<std::vector<int>> ids(im.individuals.size());
    for (std::size_t i = 0; i < im.labels.size(); ++i)
        for (const auto& c : im.labels[i]) ids[i].push_back(pool.intern(c));
    return run_abox(pool, ids, im.roles, stats_);
}

bool Reasoner::instance_check(const std::string& individual, const Concept& c) {
    auto it = impl_->index.find(individual);
    if (it == impl_->index.end()) throw UnknownIndividual(individual);
    ++stats_.instance_checks;
    ++stats_.satisfiability_calls;
    const auto& im = *impl_;
    Concept refuted = nnf(Concept::negation(unfold(c, kb_.tbox)));
    ConceptPool pool;
    std::vector<std::vector<int>> ids(im.individuals.size());
    for (std::size_t i = 0; i < im.labels.size(); ++i)
        for (const auto& l : im.labels[i]) ids[i].push_back(pool.intern(l));
    ids[it->second].push_back(pool.intern(refuted));
    return !run_abox(pool, ids, im.roles, stats_);
}

std::set<std::string> Reasoner::retrieve(const Concept& c) {
    std::set<std::string> out;
    for (const auto& a : impl_->individuals)
        if (instance_check(a, c)) out.insert(a);
    return out;
}

bool is_satisfiable(const Concept& c, const TBox& t) {
    KnowledgeBase kb{t, {}};
    return Reasoner(kb).is_satisfiable(c);
}

bool subsumes(const Concept& d, const Concept& c, const TBox& t) {
    KnowledgeBase kb{t, {}};
    return Reasoner(kb).subsumes(d, c);
}

bool equivalent(const Concept& c, const Concept& d, const TBox& t) {
    KnowledgeBase kb{t, {}};
    return Reasoner(kb).equivalent(c, d);
}

bool abox_consistent(const KnowledgeBase& kb) { return Reasoner(kb).abox_consistent(); }

bool instance_check(const KnowledgeBase& kb, const std::string& individual, const Concept& c) {
    return Reasoner(kb).instance_check(individual, c);
}

std::set<std::string> retrieve_entail(const KnowledgeBase& kb, const Concept& c) {
    return Reasoner(kb).retrieve(c);
}

}  // namespace dlsim
