#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dlsim/concept.hpp"
#include "dlsim/kb.hpp"
#include "dlsim/retrieval.hpp"

namespace dlsim {

/// Non-negative fraction kept in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational of(std::uint64_t num, std::uint64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) noexcept;
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
};

/// |I| / (|C| + |D| - |I|) * max(|I|/|C|, |I|/|D|), and 0 whenever |I| = 0.
/// Throws CardinalityViolation if |I| exceeds |C| or |D|.
Rational sim_formula(std::size_t n_c, std::size_t n_d, std::size_t n_i);

struct SimilarityReport {
    double value = 0.0;
    Rational exact;
    std::size_t ext_c = 0;
    std::size_t ext_d = 0;
    std::size_t ext_i = 0;
    Backend backend = Backend::Canonical;
    std::uint64_t extension_computations = 0;
    std::uint64_t msc_computations = 0;
    std::optional<std::size_t> msc_depth;

    friend bool operator==(const SimilarityReport&, const SimilarityReport&) = default;
};

/// Similarity of two concepts from the extensions of c, d and c and d.
SimilarityReport sim_concepts(Retriever& r, const Concept& c, const Concept& d);
/// Similarity of an individual's MSC* to a concept. `depth` defaults to abox_depth.
SimilarityReport sim_individual_concept(Retriever& r, const std::string& a, const Concept& c,
                                        std::optional<std::size_t> depth = std::nullopt);
/// Similarity of two individuals' MSC* approximations.
SimilarityReport sim_individuals(Retriever& r, const std::string& a, const std::string& b,
                                 std::optional<std::size_t> depth = std::nullopt);

SimilarityReport sim_concepts(const KnowledgeBase& kb, const Concept& c, const Concept& d,
                              Backend backend = Backend::Canonical);
SimilarityReport sim_individual_concept(const KnowledgeBase& kb, const std::string& a, const Concept& c,
                                        std::optional<std::size_t> depth = std::nullopt,
                                        Backend backend = Backend::Canonical);
SimilarityReport sim_individuals(const KnowledgeBase& kb, const std::string& a, const std::string& b,
                                 std::optional<std::size_t> depth = std::nullopt,
                                 Backend backend = Backend::Canonical);

struct IndividualRef {
    std::string name;
    friend bool operator==(const IndividualRef&, const IndividualRef&) = default;
};

/// Matrix entry: either a concept description or a named individual.
struct SimItem {
    std::string label;
    std::variant<Concept, IndividualRef> value;
};

struct SimMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> values;
    std::uint64_t extension_computations = 0;
    std::uint64_t msc_computations = 0;
};

/// Pairwise similarities. Each individual's MSC* is computed once and reused
/// for all of its pairs. Throws std::invalid_argument on an empty item list.
SimMatrix sim_matrix(Retriever& r, const std::vector<SimItem>& items,
                     std::optional<std::size_t> depth = std::nullopt);

}  // namespace dlsim
