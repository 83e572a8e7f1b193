#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"

namespace dlsim {

/// Constructors a random concept may use.
enum class ConceptFragment {
    Full,         ///< every constructor
    Existential,  ///< Top, atoms, and, exists
};

struct ConceptVocabulary {
    std::vector<std::string> concepts;
    std::vector<std::string> roles;
};

struct KbShape {
    std::size_t max_individuals = 8;
    std::size_t max_concepts = 6;
    std::size_t roles = 2;
    std::size_t max_depth = 3;
    /// Assert a fully defined name only where its definition already holds in the
    /// closed-world model, and give partial definitions plain conjunctions of
    /// primitives. The canonical interpretation of such a KB is then a model of it.
    bool canonical_is_model = false;
};

/// Seeded generator of random KBs and concepts. Output depends only on the seed.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    KnowledgeBase kb(const KbShape& shape = {});
    Concept random_concept(const ConceptVocabulary& vocab, std::size_t max_depth,
                    ConceptFragment fragment = ConceptFragment::Full);
    ConceptVocabulary vocabulary(const KnowledgeBase& kb) const;

    /// Uniform integer in [lo, hi].
    std::size_t uniform(std::size_t lo, std::size_t hi);
    bool chance(unsigned percent) { return uniform(0, 99) < percent; }

private:
    template <typename T>
    const T& pick(const std::vector<T>& v) { return v[uniform(0, v.size() - 1)]; }

    std::mt19937_64 rng_;
};

}  // namespace dlsim
