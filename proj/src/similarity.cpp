#include "dlsim/similarity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dlsim/error.hpp"
#include "dlsim/msc.hpp"

namespace dlsim {

Rational Rational::of(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    std::uint64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

bool operator<(const Rational& a, const Rational& b) noexcept {
    // Operands are bounded by cardinalities squared, so the cross products fit.
    return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
}

Rational sim_formula(std::size_t n_c, std::size_t n_d, std::size_t n_i) {
    if (n_i > n_c || n_i > n_d)
        throw CardinalityViolation("intersection cardinality " + std::to_string(n_i) +
                                   " exceeds an operand cardinality (" + std::to_string(n_c) + ", " +
                                   std::to_string(n_d) + ")");
    if (n_i == 0) return {0, 1};
    // i/(c+d-i) * max(i/c, i/d) = i^2 / ((c+d-i) * min(c,d))
    std::uint64_t i = n_i;
    return Rational::of(i * i, (static_cast<std::uint64_t>(n_c) + n_d - i) * std::min(n_c, n_d));
}

namespace {

SimilarityReport compare(Retriever& r, const Concept& c, const Concept& d) {
    SimilarityReport rep;
    rep.backend = r.backend();
    auto before = r.counters().extension_computations;
    auto ext_c = r.extension(c);
    auto ext_d = r.extension(d);
    auto ext_i = r.extension(Concept::conjunction({c, d}));
    rep.extension_computations = r.counters().extension_computations - before;
    rep.ext_c = ext_c.size();
    rep.ext_d = ext_d.size();
    rep.ext_i = ext_i.size();
    rep.exact = sim_formula(rep.ext_c, rep.ext_d, rep.ext_i);
    rep.value = rep.exact.value();
    return rep;
}

std::size_t resolve_depth(Retriever& r, std::optional<std::size_t> depth) {
    return depth ? *depth : abox_depth(r.kb());
}

}  // namespace

SimilarityReport sim_concepts(Retriever& r, const Concept& c, const Concept& d) {
    return compare(r, c, d);
}

SimilarityReport sim_individual_concept(Retriever& r, const std::string& a, const Concept& c,
                                        std::optional<std::size_t> depth) {
    std::size_t k = resolve_depth(r, depth);
    auto before = r.counters().msc_computations;
    MscResult msc = msc_approx(r, a, k);
    auto msc_count = r.counters().msc_computations - before;
    SimilarityReport rep = compare(r, msc.description, c);
    rep.msc_computations = msc_count;
    rep.msc_depth = k;
    return rep;
}

SimilarityReport sim_individuals(Retriever& r, const std::string& a, const std::string& b,
                                 std::optional<std::size_t> depth) {
    std::size_t k = resolve_depth(r, depth);
    auto before = r.counters().msc_computations;
    MscResult ma = msc_approx(r, a, k);
    MscResult mb = msc_approx(r, b, k);
    auto msc_count = r.counters().msc_computations - before;
    SimilarityReport rep = compare(r, ma.description, mb.description);
    rep.msc_computations = msc_count;
    rep.msc_depth = k;
    return rep;
}

SimilarityReport sim_concepts(const KnowledgeBase& kb, const Concept& c, const Concept& d,
                              Backend backend) {
    Retriever r(kb, backend);
    return sim_concepts(r, c, d);
}

SimilarityReport sim_individual_concept(const KnowledgeBase& kb, const std::string& a, const Concept& c,
                                        std::optional<std::size_t> depth, Backend backend) {
    Retriever r(kb, backend);
    return sim_individual_concept(r, a, c, depth);
}

SimilarityReport sim_individuals(const KnowledgeBase& kb, const std::string& a, const std::string& b,
                                 std::optional<std::size_t> depth, Backend backend) {
    Retriever r(kb, backend);
    return sim_individuals(r, a, b, depth);
}

SimMatrix sim_matrix(Retriever& r, const std::vector<SimItem>& items, std::optional<std::size_t> depth) {
    if (items.empty()) throw std::invalid_argument("similarity matrix needs at least one item");
    auto start = r.counters();

    std::optional<std::size_t> k;
    std::vector<Concept> resolved;
    resolved.reserve(items.size());
    for (const auto& item : items) {
        if (const auto* c = std::get_if<Concept>(&item.value)) {
            resolved.push_back(*c);
        } else {
            if (!k) k = resolve_depth(r, depth);
            resolved.push_back(msc_approx(r, std::get<IndividualRef>(item.value).name, *k).description);
        }
    }

    SimMatrix m;
    const std::size_t n = items.size();
    m.values.assign(n, std::vector<Rational>(n));
    for (const auto& item : items) m.labels.push_back(item.label);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rational v = compare(r, resolved[i], resolved[j]).exact;
            m.values[i][j] = v;
            m.values[j][i] = v;
        }
    }
    m.extension_computations = r.counters().extension_computations - start.extension_computations;
    m.msc_computations = r.counters().msc_computations - start.msc_computations;
    return m;
}

}  // namespace dlsim
