#include <functional>

#include "doctest.h"
#include "otrid/error.hpp"
#include "otrid/prng.hpp"
#include "otrid/typed_words.hpp"

using namespace otrid;

namespace {

WordComb one(const TypedWord& w) { return WordComb::single(w); }

std::vector<std::array<WordComb, 3>> word_triples(int max_total, int dim, int omega) {
    std::vector<std::array<WordComb, 3>> out;
    for (int la = 1; la + 2 <= max_total; ++la)
        for (int lb = 1; la + lb + 1 <= max_total; ++lb)
            for (int lc = 1; la + lb + lc <= max_total; ++lc)
                for (const auto& a : enumerate_words(la, dim, omega))
                    for (const auto& b : enumerate_words(lb, dim, omega))
                        for (const auto& c : enumerate_words(lc, dim, omega))
                            out.push_back({one(a), one(b), one(c)});
    return out;
}

}  // namespace

TEST_CASE("matching checker") {
    // one-dimensional scalar products
    CHECK(check_matching(MatchingAlgebra::scalar(3)).passed);
    // pointwise idempotents, any number of products
    CHECK(check_matching(MatchingAlgebra::pointwise(2, 2)).passed);
    CHECK(MatchingAlgebra::pointwise(2, 2).symmetric());

    // e0 * e0 = e1, everything else e0: fails with witness (0,0,1)
    using Vec = MatchingAlgebra::Vec;
    std::vector<Vec> t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.push_back(Vec::single(i == 0 && j == 0 ? 1 : 0));
    MatchingAlgebra bad(2, 1, std::move(t));
    MatchingReport rep = check_matching(bad);
    CHECK(!rep.passed);
    CHECK(rep.violations.front().i == 0);
    CHECK(rep.violations.front().j == 0);
    CHECK(rep.violations.front().k == 1);
}

TEST_CASE("word text format round trips") {
    TypedWord w = parse_word("0 :1 1 :0 1", 2, 2);
    CHECK(w.length() == 3);
    CHECK(w.str() == "0 :1 1 :0 1");
    CHECK(parse_word("1", 2, 1).str() == "1");
    CHECK_THROWS_AS(parse_word("0 :1", 2, 2), Error);
    CHECK_THROWS_AS(parse_word("0 1", 2, 2), Error);
    CHECK_THROWS_AS(parse_word("0 :5 1", 2, 2), Error);
    CHECK_THROWS_AS(parse_word("7 :0 1", 2, 2), Error);
}

TEST_CASE("length-one base products") {
    OmegaTable t = builtin_table("matching", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    TypedWord a{{0}, {}}, b{{1}, {}};

    CHECK(show_word_comb(wa.basis_product(Prod::Prec, 1, a, b)) == "1*0 :1 1");
    CHECK(show_word_comb(wa.basis_product(Prod::Succ, 1, a, b)) == "1*1 :1 0");
    // circ on length-1 words multiplies through the algebra: e0 * e1 = 0 pointwise
    CHECK(wa.basis_product(Prod::Circ, 1, a, b).is_zero());
    CHECK(show_word_comb(wa.basis_product(Prod::Circ, 1, a, a)) == "1*0");
}

TEST_CASE("hand-expanded products of a 2-word with a 1-word, free letters") {
    // a = a1 x a2, b = b1 over distinct free letters and one type:
    // prec -> a1 b1 a2 + a1 a2 b1 + a1 (a2*b1); succ -> b1 a1 a2;
    // circ -> (a1*b1) a2
    OmegaTable t = builtin_table("trivial", 1);
    MatchingAlgebra alg = MatchingAlgebra::free_truncation(3, 1);
    WordAlgebra wa(t, alg);
    auto comp = [&](int i, int j) { return 3 + i * 3 + j; };
    TypedWord a{{0, 1}, {0}}, b{{2}, {}};

    WordComb prec = wa.basis_product(Prod::Prec, 0, a, b);
    WordComb expect;
    expect.add_term(TypedWord{{0, 2, 1}, {0, 0}}, Rational(1));
    expect.add_term(TypedWord{{0, 1, 2}, {0, 0}}, Rational(1));
    expect.add_term(TypedWord{{0, comp(1, 2)}, {0}}, Rational(1));
    CHECK(prec == expect);

    WordComb succ = wa.basis_product(Prod::Succ, 0, a, b);
    CHECK(show_word_comb(succ) == "1*2 :0 0 :0 1");

    WordComb circ = wa.basis_product(Prod::Circ, 0, a, b);
    WordComb circ_expect;
    circ_expect.add_term(TypedWord{{comp(0, 2), 1}, {0}}, Rational(1));
    CHECK(circ == circ_expect);

    CHECK(prec.size() + succ.size() + circ.size() == 5);  // Delannoy D(2,1)
}

TEST_CASE("unit conventions") {
    OmegaTable t = builtin_table("matching", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    WordComb a = one(TypedWord{{0, 1}, {1}});

    CHECK(wa.product_with_unit(Prod::Prec, 0, a, std::nullopt) == a);
    CHECK(wa.product_with_unit(Prod::Succ, 0, std::nullopt, a) == a);
    CHECK(wa.product_with_unit(Prod::Prec, 0, std::nullopt, a).is_zero());
    CHECK(wa.product_with_unit(Prod::Succ, 0, a, std::nullopt).is_zero());
    CHECK(wa.product_with_unit(Prod::Circ, 0, std::nullopt, a).is_zero());
    CHECK(wa.product_with_unit(Prod::Circ, 0, a, std::nullopt).is_zero());
}

TEST_CASE("Delannoy recursion oracle") {
    CHECK(quasi_shuffle_term_count(1, 1).str() == "3");
    CHECK(quasi_shuffle_term_count(2, 1).str() == "5");
    CHECK(quasi_shuffle_term_count(2, 2).str() == "13");
    CHECK(quasi_shuffle_term_count(3, 3).str() == "63");
    CHECK(quasi_shuffle_term_count(0, 5).str() == "1");
    CHECK(quasi_shuffle_term_count(4, 0).str() == "1");
}

TEST_CASE("term counts over free letters match the Delannoy numbers") {
    OmegaTable t = builtin_table("trivial", 1);
    MatchingAlgebra alg = MatchingAlgebra::free_truncation(6, 1);
    WordAlgebra wa(t, alg);
    // words with all-distinct letters: the three products together produce
    // exactly D(m, n) terms, every coefficient 1
    auto count_terms = [&](const TypedWord& a, const TypedWord& b) {
        size_t total = 0;
        for (Prod op : {Prod::Prec, Prod::Circ, Prod::Succ}) {
            WordComb c = wa.basis_product(op, 0, a, b);
            for (const auto& [k, coeff] : c.terms()) CHECK(coeff.is_one());
            total += c.size();
        }
        return total;
    };
    TypedWord u1{{0}, {}}, u2{{0, 1}, {0}}, u3{{0, 1, 2}, {0, 0}};
    TypedWord v1{{3}, {}}, v2{{3, 4}, {0}}, v3{{3, 4, 5}, {0, 0}};
    CHECK(count_terms(u1, v1) == 3);
    CHECK(count_terms(u2, v1) == 5);
    CHECK(count_terms(u2, v2) == 13);
    CHECK(count_terms(u3, v2) == 25);
    CHECK(count_terms(u3, v3) == 63);
}

TEST_CASE("head letter and length window properties") {
    OmegaTable t = builtin_table("matching", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    for (const auto& a : enumerate_words(2, 2, 2))
        for (const auto& b : enumerate_words(2, 2, 2)) {
            WordComb prec = wa.basis_product(Prod::Prec, 0, a, b);
            for (const auto& [w, c] : prec.terms()) {
                CHECK(w.letters[0] == a.letters[0]);
                CHECK(w.length() >= 2);
                CHECK(w.length() <= 4);
            }
            WordComb succ = wa.basis_product(Prod::Succ, 0, a, b);
            for (const auto& [w, c] : succ.terms()) CHECK(w.letters[0] == b.letters[0]);
        }
}

TEST_CASE("the word algebra satisfies the seven axioms over an ETS") {
    OmegaTable t = builtin_table("matching", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    auto triples = word_triples(5, 2, 2);
    TridendReport rep = check_tridend_axioms(wa, std::span(triples));
    CHECK(rep.passed);
    CHECK(rep.instances_checked > 0);
}

TEST_CASE("commutativity holds over a commutative table with symmetric star") {
    OmegaTable t = builtin_table("trivial", 2);
    REQUIRE(t.is_commutative());
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    REQUIRE(alg.symmetric());
    WordAlgebra wa(t, alg);

    std::vector<std::array<WordComb, 2>> pairs;
    for (int la = 1; la <= 2; ++la)
        for (int lb = 1; lb + la <= 4; ++lb)
            for (const auto& a : enumerate_words(la, 2, 2))
                for (const auto& b : enumerate_words(lb, 2, 2)) pairs.push_back({one(a), one(b)});
    CHECK(check_commutative(wa, std::span(pairs)).passed);

    // words over a non-commutative table are not commutative
    OmegaTable m = builtin_table("matching", 2);
    WordAlgebra wm(m, alg);
    CHECK(!check_commutative(wm, std::span(pairs)).passed);
}

TEST_CASE("universal morphism: identity with phi = inclusion") {
    OmegaTable t = builtin_table("trivial", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    std::vector<WordComb> phi = {one(TypedWord{{0}, {}}), one(TypedWord{{1}, {}})};

    for (int len = 1; len <= 3; ++len)
        for (const auto& w : enumerate_words(len, 2, 2)) {
            WordComb img = universal_morphism(one(w), wa, alg, phi);
            CHECK(img == one(w));
        }
}

TEST_CASE("universal morphism is a homomorphism on short words") {
    OmegaTable t = builtin_table("trivial", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    std::vector<WordComb> phi = {one(TypedWord{{0}, {}}), one(TypedWord{{1}, {}})};

    for (int la = 1; la <= 2; ++la)
        for (int lb = 1; lb <= 2; ++lb)
            for (const auto& a : enumerate_words(la, 2, 2))
                for (const auto& b : enumerate_words(lb, 2, 2))
                    for (Prod op : {Prod::Prec, Prod::Circ, Prod::Succ})
                        for (int w = 0; w < 2; ++w) {
                            WordComb lhs =
                                universal_morphism(wa.basis_product(op, w, a, b), wa, alg, phi);
                            WordComb rhs = wa.product(op, w, universal_morphism(one(a), wa, alg, phi),
                                                      universal_morphism(one(b), wa, alg, phi));
                            CHECK(lhs == rhs);
                        }
}

TEST_CASE("universal morphism rejects a non-morphism phi") {
    OmegaTable t = builtin_table("trivial", 2);
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    WordAlgebra wa(t, alg);
    // doubling is not compatible with circ: phi(a * b) != phi(a) circ phi(b)
    std::vector<WordComb> phi = {one(TypedWord{{0}, {}}).scaled(Rational(2)),
                                 one(TypedWord{{1}, {}}).scaled(Rational(2))};
    CHECK_THROWS_AS(universal_morphism(one(TypedWord{{0}, {}}), wa, alg, phi), Error);
}

TEST_CASE("algebra json round trip") {
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    std::string j = alg.to_json();
    MatchingAlgebra back = MatchingAlgebra::from_json(j);
    CHECK(back.dim() == 2);
    CHECK(back.omega_size() == 2);
    CHECK(back.to_json() == j);
    for (int w = 0; w < 2; ++w)
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) CHECK(back.star_basis(w, i, k) == alg.star_basis(w, i, k));
    CHECK_THROWS_AS(MatchingAlgebra::from_json("{\"dim\": 2}"), Error);
    CHECK_THROWS_AS(MatchingAlgebra::from_json("nonsense"), Error);
    // rational coefficients survive the trip
    MatchingAlgebra::Vec half;
    half.add_term(0, *Rational::parse("1/2"));
    MatchingAlgebra frac(1, 1, {half});
    CHECK(MatchingAlgebra::from_json(frac.to_json()).star_basis(0, 0, 0).coeff(0).str() == "1/2");
}

TEST_CASE("word products require verified inputs unless waived") {
    std::vector<int> pl = {0, 0, 1, 1};
    OmegaTable bad(2, {pl, pl, pl, pl, pl, pl});
    MatchingAlgebra alg = MatchingAlgebra::pointwise(2, 2);
    CHECK_THROWS_AS(WordAlgebra(bad, alg, true), Error);
    CHECK_NOTHROW(WordAlgebra(bad, alg, false));
}
