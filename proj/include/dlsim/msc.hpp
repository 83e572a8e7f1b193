#pragma once

#include <cstddef>
#include <string>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"
#include "dlsim/retrieval.hpp"

namespace dlsim {

struct MscResult {
    std::string individual;
    std::size_t depth = 0;
    Concept description = Concept::top();
    Backend backend = Backend::Canonical;
};

/// Edge count of the longest simple path in the role-assertion graph.
std::size_t abox_depth(const KnowledgeBase& kb);

/// Depth-bounded most specific concept of `individual`, rolled up from the ABox.
///
/// Each individual reached contributes the concept names it belongs to (under the
/// retriever's backend) and, while depth remains, one existential restriction per
/// outgoing role assertion. A successor already on the current path is cut to
/// `exists R.Top`. The result is normalized. Throws UnknownIndividual.
/// Counts one MSC computation on the retriever.
MscResult msc_approx(Retriever& r, const std::string& individual, std::size_t depth);

MscResult msc_approx(const KnowledgeBase& kb, const std::string& individual, std::size_t depth,
                     Backend backend);

}  // namespace dlsim
