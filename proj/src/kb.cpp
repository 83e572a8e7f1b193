#include "dlsim/kb.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dlsim/error.hpp"

namespace dlsim {

void TBox::define(const std::string& name, DefinitionKind kind, Concept body) {
    auto [it, inserted] = defs_.try_emplace(name, Definition{kind, std::move(body)});
    if (!inserted) throw std::invalid_argument("duplicate definition of '" + name + "'");
}

const Definition* TBox::find(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

void TBox::check_acyclic() const {
    enum class Mark { Open, Done };
    std::unordered_map<std::string, Mark> marks;

    auto visit = [&](auto&& self, const std::string& name) -> void {
        auto it = marks.find(name);
        if (it != marks.end()) {
            if (it->second == Mark::Open) throw CyclicTBox(name);
            return;
        }
        const Definition* def = find(name);
        if (!def) return;
        marks[name] = Mark::Open;
        for (const auto& used : concept_names(def->body)) self(self, used);
        marks[name] = Mark::Done;
    };
    for (const auto& [name, def] : defs_) visit(visit, name);
}

void ABox::assert_concept(const std::string& concept_name, const std::string& individual) {
    concepts_.insert({concept_name, individual});
    individuals_.insert(individual);
}

void ABox::assert_role(const std::string& role, const std::string& subject,
                       const std::string& object) {
    roles_.insert({role, subject, object});
    individuals_.insert(subject);
    individuals_.insert(object);
}

Signature KnowledgeBase::signature() const {
    Signature sig;
    for (const auto& [name, def] : tbox.definitions()) {
        sig.concepts.insert(name);
        for (auto& c : concept_names(def.body)) sig.concepts.insert(std::move(c));
        for (auto& r : role_names(def.body)) sig.roles.insert(std::move(r));
    }
    for (const auto& a : abox.concept_assertions()) sig.concepts.insert(a.concept_name);
    for (const auto& a : abox.role_assertions()) sig.roles.insert(a.role);
    sig.individuals = abox.individuals();
    return sig;
}

std::string marker_name(const std::string& name) { return name + "*"; }

namespace {

class Unfolder {
public:
    explicit Unfolder(const TBox& t) : tbox_(t) {}

    Concept run(const Concept& c) {
        switch (c.kind()) {
            case ConceptKind::Top:
            case ConceptKind::Bottom:
            case ConceptKind::AtLeast:
                return c;
            case ConceptKind::Atom:
                return expand(c);
            case ConceptKind::Not:
                return Concept::negation(run(c.filler()));
            case ConceptKind::And:
            case ConceptKind::Or: {
                std::vector<Concept> out;
                out.reserve(c.args().size());
                for (const auto& a : c.args()) out.push_back(run(a));
                return c.is(ConceptKind::And) ? Concept::conjunction(std::move(out))
                                              : Concept::disjunction(std::move(out));
            }
            case ConceptKind::Exists:
                return Concept::exists(c.name(), run(c.filler()));
            case ConceptKind::Forall:
                return Concept::forall(c.name(), run(c.filler()));
        }
        throw std::logic_error("unreachable concept kind");
    }

private:
    Concept expand(const Concept& atom) {
        const std::string& name = atom.name();
        const Definition* def = tbox_.find(name);
        if (!def) return atom;
        if (auto it = done_.find(name); it != done_.end()) return it->second;
        if (!path_.insert(name).second) throw CyclicTBox(name);

        Concept body = run(def->body);
        Concept result = def->kind == DefinitionKind::Equivalent
                             ? body
                             : Concept::conjunction({Concept::atom(marker_name(name)), body});
        path_.erase(name);
        done_.emplace(name, result);
        return result;
    }

    const TBox& tbox_;
    std::set<std::string> path_;
    std::unordered_map<std::string, Concept> done_;
};

}  // namespace

Concept unfold(const Concept& c, const TBox& t) { return Unfolder(t).run(c); }

}  // namespace dlsim
