#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"

namespace dlsim {

using IndividualSet = std::set<std::string>;

/// Closed-world interpretation of an ABox under the unique names assumption:
/// the domain is the set of named individuals, each standing for itself, roles
/// hold exactly where asserted, and concept names hold where told.
class CanonicalModel {
public:
    const std::vector<std::string>& domain() const noexcept { return domain_; }
    /// Told members of every concept name in the KB signature (possibly empty).
    const std::map<std::string, IndividualSet>& primitive_ext() const noexcept { return concept_ext_; }
    const std::map<std::string, std::set<std::pair<std::string, std::string>>>& role_ext() const noexcept {
        return role_ext_;
    }

    /// Domain position of `individual`, or -1.
    int index_of(const std::string& individual) const;
    /// Asserted successors (domain positions) of position `x` under `role`.
    const std::vector<int>& successors(const std::string& role, int x) const;
    /// Told members of `name` as a membership mask over the domain; null outside the signature.
    const std::vector<bool>* told_mask(const std::string& name) const;

private:
    friend CanonicalModel build_canonical(const KnowledgeBase& kb);

    std::vector<std::string> domain_;
    std::map<std::string, int> index_;
    std::map<std::string, IndividualSet> concept_ext_;
    std::map<std::string, std::vector<bool>> concept_mask_;
    std::map<std::string, std::set<std::pair<std::string, std::string>>> role_ext_;
    std::map<std::string, std::vector<std::vector<int>>> adjacency_;
};

/// Least fixpoint of asserted concept names per individual under top-level
/// conjunct propagation through definitions. Throws CyclicTBox.
std::map<std::string, std::set<std::string>> told_closure(const KnowledgeBase& kb);

/// Throws CyclicTBox.
CanonicalModel build_canonical(const KnowledgeBase& kb);

/// Closed-world extension of `c`. A name with a full definition denotes its told
/// members together with the extension of its definition.
IndividualSet eval_concept(const CanonicalModel& m, const TBox& t, const Concept& c);
/// Same as eval_concept, as a membership mask over `m.domain()`.
std::vector<bool> eval_mask(const CanonicalModel& m, const TBox& t, const Concept& c);

IndividualSet retrieve_canonical(const KnowledgeBase& kb, const Concept& c);

}  // namespace dlsim
