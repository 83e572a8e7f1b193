#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlsim/concept.hpp"

namespace dlsim {

enum class DefinitionKind {
    Equivalent,  ///< N := D
    Subsumed,    ///< N <= D
};

struct Definition {
    DefinitionKind kind;
    Concept body;

    friend bool operator==(const Definition&, const Definition&) = default;
};

/// Acyclic terminology of named (full or partial) definitions.
class TBox {
public:
    /// Throws std::invalid_argument when `name` is already defined.
    void define(const std::string& name, DefinitionKind kind, Concept body);

    const Definition* find(const std::string& name) const;
    bool defines(const std::string& name) const { return find(name) != nullptr; }
    const std::map<std::string, Definition>& definitions() const noexcept { return defs_; }
    std::size_t size() const noexcept { return defs_.size(); }
    bool empty() const noexcept { return defs_.empty(); }

    /// Throws CyclicTBox naming the first name found on a cycle.
    void check_acyclic() const;

    friend bool operator==(const TBox&, const TBox&) = default;

private:
    std::map<std::string, Definition> defs_;
};

struct ConceptAssertion {
    std::string concept_name;
    std::string individual;

    friend auto operator<=>(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
    std::string role;
    std::string subject;
    std::string object;

    friend auto operator<=>(const RoleAssertion&, const RoleAssertion&) = default;
};

class ABox {
public:
    void assert_concept(const std::string& concept_name, const std::string& individual);
    void assert_role(const std::string& role, const std::string& subject, const std::string& object);

    const std::set<ConceptAssertion>& concept_assertions() const noexcept { return concepts_; }
    const std::set<RoleAssertion>& role_assertions() const noexcept { return roles_; }
    const std::set<std::string>& individuals() const noexcept { return individuals_; }
    bool has_individual(const std::string& name) const { return individuals_.contains(name); }
    std::size_t size() const noexcept { return concepts_.size() + roles_.size(); }

    friend bool operator==(const ABox&, const ABox&) = default;

private:
    std::set<ConceptAssertion> concepts_;
    std::set<RoleAssertion> roles_;
    std::set<std::string> individuals_;
};

struct Signature {
    std::set<std::string> concepts;
    std::set<std::string> roles;
    std::set<std::string> individuals;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct KnowledgeBase {
    TBox tbox;
    ABox abox;

    /// Names occurring in the TBox or ABox.
    Signature signature() const;
    const std::set<std::string>& individuals() const noexcept { return abox.individuals(); }

    friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Name of the fresh primitive standing for what distinguishes a partially defined `name`.
std::string marker_name(const std::string& name);

/// Expands defined names recursively. `N <= D` expands to `N* and D`.
/// Throws CyclicTBox if expansion revisits a name on the current path.
Concept unfold(const Concept& c, const TBox& t);

}  // namespace dlsim
