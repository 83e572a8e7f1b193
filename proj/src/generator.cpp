#include "dlsim/generator.hpp"

#include <algorithm>

#include "dlsim/canonical.hpp"

namespace dlsim {

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
    // Modulo reduction keeps the sequence identical across standard libraries.
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
}

Concept Generator::random_concept(const ConceptVocabulary& vocab, std::size_t max_depth,
                           ConceptFragment fragment) {
    auto atom = [&] { return Concept::atom(pick(vocab.concepts)); };
    const bool full = fragment == ConceptFragment::Full;

    auto leaf = [&]() -> Concept {
        std::size_t roll = uniform(0, 99);
        if (roll < 8) return Concept::top();
        if (full && roll < 12) return Concept::bottom();
        if (full && roll < 30) return Concept::negation(atom());
        if (full && roll < 36 && !vocab.roles.empty()) return Concept::at_least(1, pick(vocab.roles));
        return atom();
    };

    // Every constructor consumes one level, so role nesting never exceeds max_depth.
    if (max_depth == 0 || chance(25)) return leaf();

    std::size_t choices = full ? 6 : 2;
    switch (uniform(0, choices - 1)) {
        case 0: {
            std::vector<Concept> args;
            std::size_t n = uniform(2, 3);
            for (std::size_t i = 0; i < n; ++i) args.push_back(random_concept(vocab, max_depth - 1, fragment));
            return Concept::conjunction(std::move(args));
        }
        case 1:
            if (vocab.roles.empty()) return leaf();
            return Concept::exists(pick(vocab.roles), random_concept(vocab, max_depth - 1, fragment));
        case 2: {
            std::vector<Concept> args;
            std::size_t n = uniform(2, 3);
            for (std::size_t i = 0; i < n; ++i) args.push_back(random_concept(vocab, max_depth - 1, fragment));
            return Concept::disjunction(std::move(args));
        }
        case 3:
            if (vocab.roles.empty()) return leaf();
            return Concept::forall(pick(vocab.roles), random_concept(vocab, max_depth - 1, fragment));
        case 4:
            return Concept::negation(random_concept(vocab, max_depth - 1, fragment));
        default:
            return leaf();
    }
}

ConceptVocabulary Generator::vocabulary(const KnowledgeBase& kb) const {
    Signature sig = kb.signature();
    ConceptVocabulary v{{sig.concepts.begin(), sig.concepts.end()}, {sig.roles.begin(), sig.roles.end()}};
    if (v.concepts.empty()) v.concepts.push_back("A0");
    if (v.roles.empty()) v.roles.push_back("r0");
    return v;
}

KnowledgeBase Generator::kb(const KbShape& shape) {
    KnowledgeBase kb;
    const std::size_t n_ind = uniform(1, std::max<std::size_t>(1, shape.max_individuals));
    const std::size_t n_con = uniform(2, std::max<std::size_t>(2, shape.max_concepts));
    const std::size_t n_prim = uniform(1, n_con - 1);

    std::vector<std::string> individuals, concepts, primitives, roles;
    for (std::size_t i = 0; i < n_ind; ++i) individuals.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < n_con; ++i) concepts.push_back("A" + std::to_string(i));
    for (std::size_t i = 0; i < std::max<std::size_t>(1, shape.roles); ++i) roles.push_back("r" + std::to_string(i));
    primitives.assign(concepts.begin(), concepts.begin() + static_cast<std::ptrdiff_t>(n_prim));

    std::vector<std::string> partial, full;
    for (std::size_t i = n_prim; i < n_con; ++i) {
        const std::string& name = concepts[i];
        ConceptVocabulary earlier{{concepts.begin(), concepts.begin() + static_cast<std::ptrdiff_t>(i)}, roles};
        if (chance(25)) {
            Concept body = Concept::top();
            if (shape.canonical_is_model) {
                std::vector<Concept> parts;
                std::size_t k = uniform(1, 2);
                for (std::size_t j = 0; j < k; ++j) parts.push_back(Concept::atom(pick(primitives)));
                body = conjoin(std::move(parts));
            } else {
                body = random_concept(earlier, uniform(0, shape.max_depth));
            }
            kb.tbox.define(name, DefinitionKind::Subsumed, body);
            partial.push_back(name);
        } else {
            kb.tbox.define(name, DefinitionKind::Equivalent, random_concept(earlier, uniform(0, shape.max_depth)));
            full.push_back(name);
        }
    }

    const std::size_t n_roles = uniform(0, 2 * n_ind);
    for (std::size_t i = 0; i < n_roles; ++i)
        kb.abox.assert_role(pick(roles), pick(individuals), pick(individuals));

    std::vector<std::string> assertable = shape.canonical_is_model ? primitives : concepts;
    if (shape.canonical_is_model) assertable.insert(assertable.end(), partial.begin(), partial.end());
    for (const auto& ind : individuals)
        for (const auto& name : assertable)
            if (chance(25)) kb.abox.assert_concept(name, ind);

    for (const auto& ind : individuals)
        if (!kb.abox.has_individual(ind)) kb.abox.assert_concept(pick(primitives), ind);

    if (shape.canonical_is_model) {
        // Assertions of fully defined names leave every extension unchanged here.
        CanonicalModel m = build_canonical(kb);
        std::vector<std::pair<std::string, std::string>> extra;
        for (const auto& name : full)
            for (const auto& ind : eval_concept(m, kb.tbox, Concept::atom(name)))
                if (chance(50)) extra.emplace_back(name, ind);
        for (const auto& [name, ind] : extra) kb.abox.assert_concept(name, ind);
    }

    return kb;
}

}  // namespace dlsim
