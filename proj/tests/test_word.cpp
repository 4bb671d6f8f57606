#include <doctest.h>

#include <random>

#include <bs23/word.hpp>

using namespace bs23;

TEST_CASE("parse basic tokens") {
    CHECK(Word::parse("1").empty());
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("a").str() == "a");
    CHECK(Word::parse("A").str() == "a^-1");
    CHECK(Word::parse("b^3").str() == "b^3");
    CHECK(Word::parse("a^-2").str() == "a^-2");
    CHECK(Word::parse("b a^2 b^-1 a^-3").str() == "b a^2 b^-1 a^-3");
    CHECK(Word::parse("ba^2B A^3").str() == "b a^2 b^-1 a^-3");
}

TEST_CASE("parse sugar") {
    CHECK(Word::parse("(ab)^2").str() == "a b a b");
    CHECK(Word::parse("(ab)^-1").str() == "b^-1 a^-1");
    CHECK(Word::parse("[b,a]").str() == "b a b^-1 a^-1");
    CHECK(Word::parse("[b a b^-1, a]").str() == "b a b^-1 a b a^-1 b^-1 a^-1");
    CHECK(Word::parse("(a)^0").empty());
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(Word::parse("c"), ParseError);
    CHECK_THROWS_AS(Word::parse("a^"), ParseError);
    CHECK_THROWS_AS(Word::parse("(ab"), ParseError);
    CHECK_THROWS_AS(Word::parse("[a b]"), ParseError);
    try {
        Word::parse("a c");
    } catch (const ParseError &e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("free reduction on concatenation") {
    const Word u = Word::parse("a b");
    const Word v = Word::parse("b^-1 a");
    CHECK((u * v).str() == "a^2");
    CHECK((u * u.inverse()).empty());
    CHECK(Word::parse("a a^-1 b").str() == "b");
    CHECK(Word::parse("a^2 a^-2").empty());
}

TEST_CASE("inverse reverses and negates") {
    const Word u = Word::parse("b a^2 b^-1 a^-3");
    CHECK(u.inverse().str() == "a^3 b a^-2 b^-1");
    CHECK((u * u.inverse()).empty());
    CHECK(u.inverse().inverse() == u);
}

TEST_CASE("rho and height") {
    const Word u = Word::parse("b a^2 b^-1 a^-3");
    CHECK(rho(u) == 0);
    CHECK(rho_a(u) == 2);
    CHECK(height(u) == 0);
    CHECK(rho(Word::parse("b^3 a b^-1")) == 2);
    CHECK(rho_a(Word::parse("b^3 a b^-1")) == 4);
    CHECK(rho_a(Word()) == 0);
}

TEST_CASE("cyclic_reduce") {
    const Word u = Word::parse("a b a b^-1 a^-1");
    auto [core, conj] = cyclic_reduce(u);
    CHECK(core.str() == "a");
    CHECK(conj.str() == "a b");
    CHECK(conj * core * conj.inverse() == u);

    auto [core2, conj2] = cyclic_reduce(Word::parse("b a b^-1"));
    CHECK(core2.str() == "a");
    CHECK(conj2.str() == "b");

    auto [core3, conj3] = cyclic_reduce(Word::parse("a^-2 b a^3"));
    CHECK(core3.str() == "b a");
    CHECK(conj3 * core3 * conj3.inverse() == Word::parse("a^-2 b a^3"));
}

TEST_CASE("word ordering is deterministic") {
    CHECK(Word::parse("a") < Word::parse("b"));
    CHECK(Word() < Word::parse("a"));
}

TEST_CASE("random words: parse/print round trip and group laws") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        const Word u = random_word(rng, 12, 7);
        const Word v = random_word(rng, 12, 7);
        const Word w = random_word(rng, 12, 7);
        CHECK(Word::parse(u.str()) == u);
        CHECK((u * u.inverse()).empty());
        CHECK(((u * v) * w) == (u * (v * w)));
        CHECK(rho(u * v) == rho(u) + rho(v));
        CHECK(rho_a(u) >= 0);
        auto [core, conj] = cyclic_reduce(u);
        CHECK(conj * core * conj.inverse() == u);
        if (core.size() > 1) {
            const auto &front = core.syllables().front();
            const auto &back = core.syllables().back();
            CHECK_FALSE((front.base == back.base && front.exp == -back.exp));
        }
    }
}
