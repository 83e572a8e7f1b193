#include "doctest.h"

#include <algorithm>

#include "dlsim/error.hpp"
#include "dlsim/generator.hpp"
#include "dlsim/msc.hpp"
#include "dlsim/parser.hpp"
#include "dlsim/similarity.hpp"
#include "dlsim/tableau.hpp"
#include "support.hpp"

using namespace dlsim;
using testing::C;

TEST_CASE("formula") {
    CHECK(sim_formula(2, 3, 2) == Rational{2, 3});
    CHECK(sim_formula(2, 1, 1) == Rational{1, 2});
    CHECK(sim_formula(2, 1, 1).value() == 0.5);
    for (std::size_t n = 1; n < 20; ++n) CHECK(sim_formula(n, n, n) == Rational{1, 1});
    CHECK(sim_formula(5, 7, 0) == Rational{0, 1});
    CHECK(sim_formula(0, 0, 0) == Rational{0, 1});
    CHECK(sim_formula(0, 4, 0) == Rational{0, 1});
    CHECK_THROWS_AS(sim_formula(1, 3, 2), CardinalityViolation);
    CHECK_THROWS_AS(sim_formula(3, 1, 2), CardinalityViolation);
}

TEST_CASE("formula against the literal expression") {
    for (std::size_t c = 0; c <= 12; ++c)
        for (std::size_t d = 0; d <= 12; ++d)
            for (std::size_t i = 0; i <= std::min(c, d); ++i) {
                Rational r = sim_formula(c, d, i);
                CHECK(testing::same_value(testing::naive_similarity(c, d, i), r.num, r.den));
                CHECK(r.num <= r.den);
                CHECK((r.num == 0) == (i == 0));
                CHECK((r == Rational{1, 1}) == (i > 0 && i == c && i == d));
                if (i > 0 && (i < c || i < d)) CHECK((Rational{0, 1} < r && r < Rational{1, 1}));
            }
}

TEST_CASE("rationals") {
    CHECK(Rational::of(4, 6) == Rational{2, 3});
    CHECK(Rational::of(0, 5) == Rational{0, 1});
    CHECK_THROWS_AS(Rational::of(1, 0), std::invalid_argument);
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK(Rational{2, 4} <= Rational{1, 2});
    CHECK_FALSE(Rational{2, 3} < Rational{2, 3});
}

TEST_CASE("concept similarity on the family fixture") {
    auto kb = testing::family();
    auto rep = sim_concepts(kb, C("Grandparent"), C("Father"));
    CHECK(rep.ext_c == 2);
    CHECK(rep.ext_d == 3);
    CHECK(rep.ext_i == 2);
    CHECK(rep.exact == Rational{2, 3});
    CHECK(rep.extension_computations == 3);
    CHECK(rep.msc_computations == 0);
    CHECK_FALSE(rep.msc_depth.has_value());

    auto entail = sim_concepts(kb, C("Grandparent"), C("Father"), Backend::Entail);
    CHECK(entail.exact == Rational{2, 3});
    CHECK(entail.backend == Backend::Entail);

    CHECK(sim_concepts(kb, C("Woman"), C("Woman")).exact == Rational{1, 1});
    CHECK(sim_concepts(kb, C("Woman"), C("not Woman")).exact == Rational{0, 1});
    CHECK(sim_concepts(kb, C("Woman"), Concept::bottom()).exact == Rational{0, 1});
    // Subsumption form: Grandparent is subsumed by Parent.
    auto sub = sim_concepts(kb, C("Grandparent"), C("Parent"));
    CHECK(sub.exact == Rational::of(sub.ext_c, sub.ext_d));
}

TEST_CASE("individual similarity on the family fixture") {
    auto kb = testing::family();
    testing::NaiveModel naive(kb);

    auto rep = sim_individuals(kb, "Claudia", "Tiziana");
    CHECK(rep.ext_c == 2);
    CHECK(rep.ext_d == 1);
    CHECK(rep.ext_i == 1);
    CHECK(rep.exact == Rational{1, 2});
    CHECK(rep.msc_computations == 2);
    CHECK(rep.extension_computations == 3);
    CHECK(rep.msc_depth == 9);

    auto woman = sim_individual_concept(kb, "Claudia", C("Woman"));
    Concept msc = msc_approx(kb, "Claudia", 9, Backend::Canonical).description;
    auto ext_msc = naive.extension(msc);
    auto ext_woman = naive.extension(C("Woman"));
    CHECK(ext_woman.size() == 4);
    std::size_t both = std::count_if(ext_msc.begin(), ext_msc.end(), [&](const auto& x) { return ext_woman.count(x); });
    CHECK(woman.ext_c == ext_msc.size());
    CHECK(woman.ext_d == 4);
    CHECK(woman.ext_i == both);
    CHECK(testing::same_value(testing::naive_similarity(ext_msc.size(), 4, both), woman.exact.num, woman.exact.den));
    CHECK(woman.msc_computations == 1);

    CHECK(sim_individuals(kb, "Claudia", "Claudia", 2).exact == Rational{1, 1});
    CHECK(sim_individual_concept(kb, "Vito", Concept::bottom()).exact == Rational{0, 1});
    CHECK_THROWS_AS(sim_individuals(kb, "Claudia", "Nobody"), UnknownIndividual);
}

TEST_CASE("individual edge cases") {
    auto kb = parse_kb("A(a)\nB(b)\nr(a, c)\ns(b, d)\nX(e)\n");
    CHECK(sim_individuals(kb, "a", "b").exact == Rational{0, 1});
    // d has no assertions of its own and rolls up to Top.
    CHECK(sim_individual_concept(kb, "d", Concept::top(), 0).exact == Rational{1, 1});
}

TEST_CASE("cost accounting") {
    auto kb = testing::family();
    Retriever r(kb, Backend::Canonical);
    for (int i = 0; i < 3; ++i) {
        auto a = sim_concepts(r, C("Woman"), C("Parent"));
        CHECK(a.extension_computations == 3);
        CHECK(a.msc_computations == 0);
        auto b = sim_individual_concept(r, "Maria", C("Parent"), 2);
        CHECK(b.extension_computations == 3);
        CHECK(b.msc_computations == 1);
        auto c = sim_individuals(r, "Maria", "Giovanna", 2);
        CHECK(c.extension_computations == 3);
        CHECK(c.msc_computations == 2);
    }
    CHECK(r.counters().extension_computations == 27);
    CHECK(r.counters().msc_computations == 9);

    Retriever cached(kb, Backend::Canonical, true);
    sim_concepts(cached, C("Woman"), C("Parent"));
    auto again = sim_concepts(cached, C("Woman"), C("Parent"));
    CHECK(again.extension_computations == 0);
}

TEST_CASE("measure properties on random KBs") {
    Generator gen(77);
    for (int i = 0; i < 100; ++i) {
        KnowledgeBase kb = gen.kb();
        auto vocab = gen.vocabulary(kb);
        Retriever r(kb, Backend::Canonical);
        Concept c = gen.random_concept(vocab, 3), d = gen.random_concept(vocab, 3);
        auto cd = sim_concepts(r, c, d), dc = sim_concepts(r, d, c), cc = sim_concepts(r, c, c);
        CHECK(cd.exact <= Rational{1, 1});
        CHECK(cd.exact == dc.exact);
        CHECK(cd.ext_i <= std::min(cd.ext_c, cd.ext_d));
        if (cc.ext_c > 0) {
            CHECK(cc.exact == Rational{1, 1});
            CHECK(cd.exact <= cc.exact);
        }
    }
}

TEST_CASE("matrix") {
    auto kb = testing::family();
    Retriever r(kb, Backend::Canonical);
    auto m = sim_matrix(r, {{"Grandparent", C("Grandparent")}, {"Father", C("Father")}});
    CHECK(m.labels == std::vector<std::string>{"Grandparent", "Father"});
    CHECK(m.values[0][0] == Rational{1, 1});
    CHECK(m.values[1][1] == Rational{1, 1});
    CHECK(m.values[0][1] == Rational{2, 3});
    CHECK(m.values[1][0] == Rational{2, 3});
    CHECK(m.extension_computations == 9);

    auto one = sim_matrix(r, {{"Woman", C("Woman")}});
    CHECK(one.values == std::vector<std::vector<Rational>>{{Rational{1, 1}}});
    CHECK_THROWS_AS(sim_matrix(r, {}), std::invalid_argument);

    auto mixed = sim_matrix(r, {{"Claudia", IndividualRef{"Claudia"}},
                                {"Tiziana", IndividualRef{"Tiziana"}},
                                {"Woman", C("Woman")}});
    CHECK(mixed.msc_computations == 2);
    CHECK(mixed.values[0][1] == Rational{1, 2});
    CHECK(mixed.values[0][1] == mixed.values[1][0]);
    CHECK(mixed.values[2][0] == sim_individual_concept(kb, "Claudia", C("Woman")).exact);
}

TEST_CASE("matrix symmetry on random inputs") {
    Generator gen(5150);
    for (int i = 0; i < 30; ++i) {
        KnowledgeBase kb = gen.kb();
        auto vocab = gen.vocabulary(kb);
        Retriever r(kb, Backend::Canonical);
        std::vector<SimItem> items;
        for (int j = 0; j < 4; ++j) items.push_back({"c" + std::to_string(j), gen.random_concept(vocab, 2)});
        items.push_back({"a0", IndividualRef{"a0"}});
        auto m = sim_matrix(r, items, 2);
        for (std::size_t x = 0; x < items.size(); ++x)
            for (std::size_t y = 0; y < items.size(); ++y) CHECK(m.values[x][y] == m.values[y][x]);
    }
}
