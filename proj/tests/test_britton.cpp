#include <doctest.h>

#include <random>

#include <bs23/britton.hpp>

using namespace bs23;

TEST_CASE("find_pinch locates the leftmost pinch") {
    auto p = find_pinch(Word::parse("b a^2 b^-1"));
    REQUIRE(p.has_value());
    CHECK(p->kind == Pinch::Kind::Up);
    CHECK(p->k == 1);

    auto q = find_pinch(Word::parse("b^-1 a^6 b"));
    REQUIRE(q.has_value());
    CHECK(q->kind == Pinch::Kind::Down);
    CHECK(q->k == 2);

    CHECK_FALSE(find_pinch(Word::parse("b a b^-1")).has_value());
    CHECK_FALSE(find_pinch(Word::parse("b^-1 a b")).has_value());
    CHECK_FALSE(find_pinch(Word::parse("b a^2 b")).has_value());
}

TEST_CASE("britton_reduce: relator and friends") {
    CHECK(britton_reduce(Word::parse("b a^2 b^-1 a^-3")).trivial());
    CHECK(britton_reduce(Word::parse("b a^2 b^-1")).reduced.str() == "a^3");
    CHECK(britton_reduce(Word::parse("b^-1 a^3 b")).reduced.str() == "a^2");
    CHECK_FALSE(britton_reduce(Word::parse("[b a b^-1, a]")).trivial());
    CHECK(britton_reduce(Word::parse("b a^4 b^-1 a^-6")).trivial());
    CHECK(britton_reduce(Word()).trivial());
}

TEST_CASE("britton trace replays") {
    auto w = britton_reduce(Word::parse("b a^4 b^-1 a^-6 b a^2 b^-1 a^-3"));
    CHECK(w.trivial());
    CHECK(w.trace.size() >= 2);
    for (const auto &p : w.trace) {
        CHECK((p.kind == Pinch::Kind::Up || p.kind == Pinch::Kind::Down));
    }
}

TEST_CASE("normal_form examples") {
    auto nf = normal_form(Word::parse("a^5 b"));
    REQUIRE(nf.letters.size() == 1);
    CHECK(nf.letters[0] == NfLetter{2, true});
    CHECK(nf.tail == 2);
    CHECK(nf.str() == "a^2 b a^2");

    auto nf2 = normal_form(Word::parse("b^-1 a^4 b"));
    REQUIRE(nf2.letters.size() == 2);
    CHECK(nf2.letters[0] == NfLetter{0, false});
    CHECK(nf2.letters[1] == NfLetter{1, true});
    CHECK(nf2.tail == 2);

    auto nf3 = normal_form(Word::parse("a^-1"));
    CHECK(nf3.letters.empty());
    CHECK(nf3.tail == -1);

    CHECK(normal_form(Word::parse("b a^2 b^-1 a^-3")).is_identity());
}

TEST_CASE("normal_form decides equality") {
    CHECK(words_equal(Word::parse("b a^2"), Word::parse("a^3 b")));
    CHECK(words_equal(Word::parse("b a^2 b^-1"), Word::parse("a^3")));
    CHECK_FALSE(words_equal(Word::parse("a"), Word::parse("b")));
    CHECK_FALSE(words_equal(Word::parse("a b"), Word::parse("b a")));
    CHECK(is_trivial(Word::parse("[b a^2 b^-1, a]")));
    CHECK_FALSE(is_trivial(Word::parse("[b a b^-1, a]")));
}

TEST_CASE("bezout_merge oracles") {
    // lambda = least-absolute inverse of 2 mod 9 is -4, so the canonical
    // output of (1,1,2) is a^-12 b^3 a^4; it must agree in the group with
    // both b a b^2 and the alternative a^15 b^3 a^-4.
    const Word m112 = bezout_merge(1, 1, 2);
    CHECK(m112.str() == "a^-12 b^3 a^4");
    CHECK(words_equal(m112, Word::parse("b a b^2")));
    CHECK(words_equal(m112, Word::parse("a^15 b^3 a^-4")));

    CHECK(bezout_merge(1, 2, 1).str() == "a^-6 b^2 a^4");
    CHECK(words_equal(bezout_merge(1, 2, 1), Word::parse("b a^2 b")));
    CHECK(bezout_merge(1, 0, 2).str() == "b^3");

    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        const long beta = 1 + static_cast<long>(rng() % 3);
        const long betaPrime = 1 + static_cast<long>(rng() % 3);
        const Int alpha = static_cast<long>(rng() % 9) - 4;
        const Word merged = bezout_merge(beta, alpha, betaPrime);
        const Word direct =
            Word::b(beta) * Word::a(alpha) * Word::b(betaPrime);
        CHECK(words_equal(merged, direct));
        if (!merged.empty()) {
            CHECK(rho_a(merged) == beta + betaPrime);
        }
    }
}

TEST_CASE("minimize_alternating") {
    CHECK(minimize_alternating(Word::parse("b a^2 b^-1")).str() == "a^3");
    CHECK(minimize_alternating(Word::parse("b^-1 a^3 b")).str() == "a^2");
    CHECK(minimize_alternating(Word::parse("b a b^2")).str() ==
          "a^-12 b^3 a^4");
    CHECK(minimize_alternating(Word::parse("b a b^-1")).str() == "b a b^-1");

    std::mt19937_64 rng(404);
    for (int i = 0; i < 500; ++i) {
        const Word u = random_word(rng, 10, 5);
        const Word m = minimize_alternating(u);
        CHECK(words_equal(m, u));
        CHECK(rho_a(m) <= rho_a(u));
        // surviving b-runs alternate in sign
        const auto &s = m.syllables();
        long prevSign = 0;
        for (const auto &syl : s) {
            if (syl.base != Base::B)
                continue;
            const long sg = syl.exp > 0 ? 1 : -1;
            CHECK(sg != prevSign);
            prevSign = sg;
        }
        CHECK_FALSE(find_pinch(m).has_value());
    }
}

TEST_CASE("random cross-validation of britton vs normal form") {
    std::mt19937_64 rng(2026);
    for (int i = 0; i < 2000; ++i) {
        const Word u = random_word(rng, 16, 6);
        const auto w = britton_reduce(u);
        const auto nf = normal_form(u);
        CHECK(w.trivial() == nf.is_identity());
        CHECK(words_equal(w.reduced, u));
        CHECK(words_equal(nf.to_word(), u));
        CHECK(normal_form(nf.to_word()) == nf);
        CHECK(is_trivial(u * u.inverse()));
        const Word v = random_word(rng, 16, 6);
        CHECK(normal_form(u * v) == normal_form(nf.to_word() * v));
    }
}
