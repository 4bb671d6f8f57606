#include <doctest.h>

#include <bs23/endo.hpp>

using namespace bs23;

TEST_CASE("apply_endo scales a-exponents") {
    CHECK(apply_endo(Word::parse("a"), EndoSpec::phi()).str() == "a^2");
    CHECK(apply_endo(Word::parse("a"), EndoSpec::phi(2)).str() == "a^4");
    CHECK(apply_endo(Word::parse("a"), EndoSpec::phi_prime()).str() == "a^3");
    CHECK(apply_endo(Word::parse("b"), EndoSpec::phi()).str() == "b");
    CHECK(apply_endo(Word::parse("b a^-2 b"), EndoSpec::phi()).str() ==
          "b a^-4 b");
    CHECK(EndoSpec::phi(3).scale() == 8);
    CHECK(EndoSpec::phi_prime(2).scale() == 9);
}

TEST_CASE("phi is a homomorphism into BS(2,3)") {
    // relator maps to a relation and images multiply correctly
    const Word rel = Word::parse("b a^2 b^-1 a^-3");
    CHECK(is_trivial(apply_endo(rel, EndoSpec::phi())));
    CHECK(is_trivial(apply_endo(rel, EndoSpec::phi_prime())));
    const Word u = Word::parse("a b a^-1");
    const Word v = Word::parse("b^-1 a^2");
    CHECK(words_equal(apply_endo(u * v, EndoSpec::phi()),
                      apply_endo(u, EndoSpec::phi()) *
                          apply_endo(v, EndoSpec::phi())));
}

TEST_CASE("phi([b,a]) equals a") {
    CHECK(words_equal(apply_endo(Word::parse("[b,a]"), EndoSpec::phi()),
                      Word::parse("a")));
    // hence phi is onto: both generators are hit
    CHECK(words_equal(apply_endo(Word::parse("b"), EndoSpec::phi()),
                      Word::parse("b")));
}

TEST_CASE("kernel membership oracles") {
    CHECK(in_kernel(Word::parse("[b a b^-1, a]"), EndoSpec::phi()));
    CHECK(in_kernel(Word::parse("[b a b^-1, a]"), EndoSpec::phi_prime()));
    CHECK_FALSE(in_kernel(Word::parse("a"), EndoSpec::phi()));
    CHECK_FALSE(in_kernel(Word::parse("[b,a]"), EndoSpec::phi()));
    // [b^2 a b^-2, a] separates Ker(phi) from Ker(phi^2)
    const Word w = Word::parse("[b^2 a b^-2, a]");
    CHECK_FALSE(in_kernel(w, EndoSpec::phi()));
    CHECK(in_kernel(w, EndoSpec::phi(2)));
}

TEST_CASE("kernel_normal_generators and the strict chain") {
    for (long n = 1; n <= 3; ++n) {
        const auto gens = kernel_normal_generators(n);
        REQUIRE(gens.size() == static_cast<std::size_t>(n));
        for (const auto &g : gens) {
            CHECK(in_kernel(g, EndoSpec::phi(n)));
            CHECK_FALSE(is_trivial(g));
        }
        if (n >= 2) {
            // the deepest generator witnesses Ker(phi^{n-1}) < Ker(phi^n)
            CHECK_FALSE(in_kernel(gens.back(), EndoSpec::phi(n - 1)));
        }
    }
}

TEST_CASE("phi fixes the a-line stabilizer pattern") {
    for (long k = -20; k <= 20; ++k) {
        const Word ak = Word::a(k);
        CHECK(words_equal(apply_endo(ak, EndoSpec::phi()), Word::a(2 * k)));
        if (k != 0)
            CHECK_FALSE(in_kernel(ak, EndoSpec::phi()));
    }
}

TEST_CASE("corollary identities") {
    const auto report = check_corollary_identities();
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 3);
    CHECK(report.to_json().contains("checks"));
}

TEST_CASE("tietze_relator_check") {
    CHECK(tietze_relator_check(Word::parse("a^2"), Word::parse("b")));
    CHECK(tietze_relator_check(Word::parse("a^3"), Word::parse("b")));
    CHECK_FALSE(tietze_relator_check(Word::parse("a"), Word::parse("b")));
}

TEST_CASE("limit_commutator_order golden values") {
    CHECK(limit_commutator_order(1, 2, 8) == 1);
    CHECK(limit_commutator_order(1, 3, 8) == 2);
    CHECK(limit_commutator_order(2, 3, 8) == 1);
}

TEST_CASE("limit_commutator_order") {
    for (long m = 1; m <= 2; ++m) {
        for (long k = m + 1; k <= 3; ++k) {
            auto n = limit_commutator_order(m, k, 8);
            REQUIRE(n.has_value());
            CHECK(*n >= 1);
            CHECK(*n <= 6);
            const Word w = commutator(conjugate(Word::b(m), Word::a()),
                                      conjugate(Word::b(k), Word::a()));
            CHECK(in_kernel(w, EndoSpec::phi(*n)));
            if (*n > 1)
                CHECK_FALSE(in_kernel(w, EndoSpec::phi(*n - 1)));
        }
    }
}

TEST_CASE("same_kernel_probe finds no disagreement") {
    const auto report = same_kernel_probe(100, 20, 99);
    CHECK(report.all_pass());
    CHECK_FALSE(report.checks.empty());
}
