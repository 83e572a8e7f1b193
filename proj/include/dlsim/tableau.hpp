#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"

namespace dlsim {

struct ReasonerStats {
    std::uint64_t instance_checks = 0;
    std::uint64_t satisfiability_calls = 0;
    std::uint64_t branches_explored = 0;
};

/// Open-world tableau reasoning over an acyclic TBox (no blocking, no GCIs).
///
/// Every query is unfolded against the TBox and put in negation normal form, then
/// tested by a completion-graph search: deterministic rules (and, exists, forall,
/// atleast) run to saturation before the first unexpanded disjunction is split,
/// depth first with chronological backtracking. Named individuals are distinct
/// nodes and are never merged.
///
/// A Reasoner is a session: it keeps a reference to `kb` (which must outlive it)
/// and accumulates statistics. Sessions share nothing and may run in parallel.
class Reasoner {
public:
    /// Throws CyclicTBox when the terminology is cyclic.
    explicit Reasoner(const KnowledgeBase& kb);
    ~Reasoner();
    Reasoner(Reasoner&&) noexcept;
    Reasoner& operator=(Reasoner&&) = delete;

    bool is_satisfiable(const Concept& c);
    /// Whether `c` is subsumed by `d`.
    bool subsumes(const Concept& d, const Concept& c);
    bool equivalent(const Concept& c, const Concept& d);

    bool abox_consistent();
    /// Whether the KB entails c(a). Throws UnknownIndividual.
    bool instance_check(const std::string& individual, const Concept& c);
    /// Individuals entailed to be instances of `c`, sorted.
    std::set<std::string> retrieve(const Concept& c);

    const ReasonerStats& stats() const noexcept { return stats_; }
    const KnowledgeBase& kb() const noexcept { return kb_; }

private:
    struct Impl;
    const KnowledgeBase& kb_;
    ReasonerStats stats_;
    std::unique_ptr<Impl> impl_;
};

bool is_satisfiable(const Concept& c, const TBox& t);
bool subsumes(const Concept& d, const Concept& c, const TBox& t);
bool equivalent(const Concept& c, const Concept& d, const TBox& t);
bool abox_consistent(const KnowledgeBase& kb);
bool instance_check(const KnowledgeBase& kb, const std::string& individual, const Concept& c);
std::set<std::string> retrieve_entail(const KnowledgeBase& kb, const Concept& c);

}  // namespace dlsim
