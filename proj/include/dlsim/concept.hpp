#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dlsim {

enum class ConceptKind { Top, Bottom, Atom, Not, And, Or, Exists, Forall, AtLeast };

/// Immutable concept description. Copies share the underlying tree, equality is structural.
///
/// Constructors enforce the shape invariants: And/Or carry at least two
/// operands and `atleast` needs a positive count. Use `conjoin`/`disjoin` when the
/// operand list may be shorter.
class Concept {
public:
    static Concept top();
    static Concept bottom();
    static Concept atom(std::string name);
    static Concept negation(Concept arg);
    static Concept conjunction(std::vector<Concept> args);
    static Concept disjunction(std::vector<Concept> args);
    static Concept exists(std::string role, Concept filler);
    static Concept forall(std::string role, Concept filler);
    static Concept at_least(unsigned n, std::string role);

    ConceptKind kind() const noexcept;
    /// Concept name for Atom, role name for Exists/Forall/AtLeast, empty otherwise.
    const std::string& name() const noexcept;
    /// The `n` of AtLeast, 0 otherwise.
    unsigned count() const noexcept;
    /// Operands of And/Or; the single argument of Not; the filler of Exists/Forall.
    std::span<const Concept> args() const noexcept;
    const Concept& filler() const;

    bool is(ConceptKind k) const noexcept { return kind() == k; }
    std::size_t hash() const noexcept;
    /// Number of AST nodes.
    std::size_t size() const noexcept;

    friend bool operator==(const Concept& a, const Concept& b) noexcept;
    friend std::strong_ordering operator<=>(const Concept& a, const Concept& b) noexcept;

private:
    struct Node;
    explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// And of `args`: Top when empty, the element itself when singular.
Concept conjoin(std::vector<Concept> args);
/// Or of `args`: Bottom when empty, the element itself when singular.
Concept disjoin(std::vector<Concept> args);

/// Negation normal form. Throws UnsupportedNegation for `not atleast n R` with n >= 2.
Concept nnf(const Concept& c);

/// Equivalence-preserving simplification to a canonical form (see README for the rule set).
Concept normalize(const Concept& c);

/// Maximal nesting depth of role restrictions.
std::size_t concept_depth(const Concept& c);

/// Whether `c` mentions the concept name `name` anywhere.
bool mentions_concept(const Concept& c, const std::string& name);

/// Concept names (atoms) occurring in `c`, sorted and unique.
std::vector<std::string> concept_names(const Concept& c);
/// Role names occurring in `c`, sorted and unique.
std::vector<std::string> role_names(const Concept& c);

struct ConceptHash {
    std::size_t operator()(const Concept& c) const noexcept { return c.hash(); }
};

}  // namespace dlsim
