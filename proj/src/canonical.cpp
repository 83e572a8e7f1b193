#include "dlsim/canonical.hpp"

#include <stdexcept>
#include <unordered_map>

namespace dlsim {

namespace {

const std::vector<int> kNoSuccessors;

// Names appearing as conjuncts of `body`, looking through nested conjunctions.
void top_level_names(const Concept& body, std::vector<std::string>& out) {
    if (body.is(ConceptKind::Atom)) {
        out.push_back(body.name());
    } else if (body.is(ConceptKind::And)) {
        for (const auto& a : body.args()) top_level_names(a, out);
    }
}

class Evaluator {
public:
    Evaluator(const CanonicalModel& m, const TBox& t) : model_(m), tbox_(t) {}

    std::vector<bool> eval(const Concept& c) {
        const std::size_t n = model_.domain().size();
        switch (c.kind()) {
            case ConceptKind::Top:
                return std::vector<bool>(n, true);
            case ConceptKind::Bottom:
                return std::vector<bool>(n, false);
            case ConceptKind::Atom:
                return atom(c.name());
            case ConceptKind::Not: {
                auto v = eval(c.filler());
                v.flip();
                return v;
            }
            case ConceptKind::And:
            case ConceptKind::Or: {
                bool conj = c.is(ConceptKind::And);
                std::vector<bool> acc(n, conj);
                for (const auto& a : c.args()) {
                    auto v = eval(a);
                    for (std::size_t i = 0; i < n; ++i) acc[i] = conj ? (acc[i] && v[i]) : (acc[i] || v[i]);
                }
                return acc;
            }
            case ConceptKind::Exists:
            case ConceptKind::Forall: {
                bool some = c.is(ConceptKind::Exists);
                auto filler = eval(c.filler());
                std::vector<bool> out(n, !some);
                for (std::size_t x = 0; x < n; ++x) {
                    for (int y : model_.successors(c.name(), static_cast<int>(x))) {
                        if (some && filler[y]) {
                            out[x] = true;
                            break;
                        }
                        if (!some && !filler[y]) {
                            out[x] = false;
                            break;
                        }
                    }
                }
                return out;
            }
            case ConceptKind::AtLeast: {
                std::vector<bool> out(n, false);
                for (std::size_t x = 0; x < n; ++x)
                    out[x] = model_.successors(c.name(), static_cast<int>(x)).size() >= c.count();
                return out;
            }
        }
        throw std::logic_error("unreachable concept kind");
    }

private:
    std::vector<bool> atom(const std::string& name) {
        if (auto it = memo_.find(name); it != memo_.end()) return it->second;
        const auto* told = model_.told_mask(name);
        std::vector<bool> v = told ? *told : std::vector<bool>(model_.domain().size(), false);
        const Definition* def = tbox_.find(name);
        if (def && def->kind == DefinitionKind::Equivalent) {
            auto body = eval(def->body);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] || body[i];
        }
        memo_.emplace(name, v);
        return v;
    }

    const CanonicalModel& model_;
    const TBox& tbox_;
    std::unordered_map<std::string, std::vector<bool>> memo_;
};

}  // namespace

int CanonicalModel::index_of(const std::string& individual) const {
    auto it = index_.find(individual);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& CanonicalModel::successors(const std::string& role, int x) const {
    auto it = adjacency_.find(role);
    if (it == adjacency_.end()) return kNoSuccessors;
    return it->second[x];
}

const std::vector<bool>* CanonicalModel::told_mask(const std::string& name) const {
    auto it = concept_mask_.find(name);
    return it == concept_mask_.end() ? nullptr : &it->second;
}

std::map<std::string, std::set<std::string>> told_closure(const KnowledgeBase& kb) {
    kb.tbox.check_acyclic();
    std::map<std::string, std::set<std::string>> out;
    for (const auto& ind : kb.individuals()) out[ind];
    for (const auto& a : kb.abox.concept_assertions()) {
        auto& names = out[a.individual];
        std::vector<std::string> work{a.concept_name};
        while (!work.empty()) {
            std::string name = std::move(work.back());
            work.pop_back();
            if (!names.insert(name).second) continue;
            if (const Definition* def = kb.tbox.find(name)) top_level_names(def->body, work);
        }
    }
    return out;
}

CanonicalModel build_canonical(const KnowledgeBase& kb) {
    CanonicalModel m;
    auto closure = told_closure(kb);
    for (const auto& ind : kb.individuals()) {
        m.index_.emplace(ind, static_cast<int>(m.domain_.size()));
        m.domain_.push_back(ind);
    }
    const std::size_t n = m.domain_.size();
    for (const auto& name : kb.signature().concepts) {
        m.concept_ext_[name];
        m.concept_mask_[name].assign(n, false);
    }
    for (const auto& [ind, names] : closure) {
        for (const auto& name : names) {
            m.concept_ext_[name].insert(ind);
            auto& mask = m.concept_mask_[name];
            mask.resize(n, false);
            mask[m.index_.at(ind)] = true;
        }
    }
    for (const auto& r : kb.abox.role_assertions()) {
        m.role_ext_[r.role].insert({r.subject, r.object});
        auto& adj = m.adjacency_[r.role];
        adj.resize(n);
        adj[m.index_.at(r.subject)].push_back(m.index_.at(r.object));
    }
    for (const auto& role : kb.signature().roles) {
        m.role_ext_[role];
        m.adjacency_[role].resize(n);
    }
    return m;
}

std::vector<bool> eval_mask(const CanonicalModel& m, const TBox& t, const Concept& c) {
    return Evaluator(m, t).eval(c);
}

IndividualSet eval_concept(const CanonicalModel& m, const TBox& t, const Concept& c) {
    auto mask = eval_mask(m, t, c);
    IndividualSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.insert(m.domain()[i]);
    return out;
}

IndividualSet retrieve_canonical(const KnowledgeBase& kb, const Concept& c) {
    return eval_concept(build_canonical(kb), kb.tbox, c);
}

}  // namespace dlsim
