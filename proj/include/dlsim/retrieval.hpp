#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "dlsim/canonical.hpp"
#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"
#include "dlsim/tableau.hpp"

namespace dlsim {

enum class Backend {
    Entail,     ///< open-world entailment via the tableau
    Canonical,  ///< closed-world evaluation in the canonical model
};

const char* to_string(Backend b) noexcept;
std::optional<Backend> parse_backend(std::string_view text);

struct RetrievalCounters {
    std::uint64_t extension_computations = 0;
    std::uint64_t msc_computations = 0;
};

/// Extension computation against one KB with one backend.
///
/// Every call to `extension` that is not served from the cache counts as one
/// extension computation. The cache is off unless requested. Realization
/// (which concept names an individual belongs to) is memoized and not counted.
class Retriever {
public:
    Retriever(const KnowledgeBase& kb, Backend backend, bool cache = false);

    IndividualSet extension(const Concept& c);
    /// Concept names of the signature whose extension contains `individual`.
    const std::set<std::string>& realize(const std::string& individual);

    Backend backend() const noexcept { return backend_; }
    bool caching() const noexcept { return cache_enabled_; }
    const KnowledgeBase& kb() const noexcept { return kb_; }
    const CanonicalModel& model();
    Reasoner& reasoner();

    RetrievalCounters& counters() noexcept { return counters_; }
    const RetrievalCounters& counters() const noexcept { return counters_; }

private:
    IndividualSet compute(const Concept& c);

    const KnowledgeBase& kb_;
    Backend backend_;
    bool cache_enabled_;
    RetrievalCounters counters_;
    std::optional<CanonicalModel> model_;
    std::optional<Reasoner> reasoner_;
    std::unordered_map<Concept, IndividualSet, ConceptHash> cache_;
    std::optional<std::map<std::string, std::set<std::string>>> realization_;
};

}  // namespace dlsim
