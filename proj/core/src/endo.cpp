#include "bs23/endo.hpp"

#include <random>

namespace bs23 {

Int EndoSpec::scale() const {
    Int s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(aImageExponent),
                  static_cast<unsigned long>(power));
    return s;
}

Word apply_endo(const Word &u, const EndoSpec &e) {
    const Int s = e.scale();
    std::vector<Syllable> syls;
    syls.reserve(u.size());
    for (const auto &syl : u.syllables())
        syls.push_back(Syllable{
            syl.base, syl.base == Base::A ? Int(syl.exp * s) : syl.exp});
    return Word::from_syllables(std::move(syls));
}

bool in_kernel(const Word &u, const EndoSpec &e, GroupParams params) {
    return is_trivial(apply_endo(u, e), params);
}

std::vector<Word> kernel_normal_generators(long n) {
    std::vector<Word> gens;
    const Word a = Word::a();
    for (long m = 1; m <= n; ++m)
        gens.push_back(commutator(conjugate(Word::b(m), a), a));
    return gens;
}

bool Report::all_pass() const {
    for (const auto &c : checks)
        if (!c.pass)
            return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : checks) {
        nlohmann::json j = {{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty())
            j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return {{"checks", std::move(arr)}};
}

Report check_corollary_identities(GroupParams params) {
    const Word a = Word::a();
    const Word ab = conjugate(Word::b(), a); // a^b = b a b^-1
    const Word g = commutator(ab, a);        // [a^b, a]
    Report r;
    auto add = [&](const std::string &name, const Word &lhs, const Word &rhs) {
        r.checks.push_back(Check{name, words_equal(lhs, rhs, params),
                                 lhs.str() + " = " + rhs.str()});
    };
    add("[a^b,a^-1] = a^-1 [a^b,a]^-1 a", commutator(ab, a.inverse()),
        conjugate(a.inverse(), g.inverse()));
    add("[a^b,a^2] = [a^b,a] a [a^b,a] a^-1", commutator(ab, Word::a(2)),
        g * conjugate(a, g));
    add("[a^b,a^-2] = a^-1 [a^b,a]^-1 a^-1 [a^b,a]^-1 a^2",
        commutator(ab, Word::a(-2)),
        Word::a(-1) * g.inverse() * Word::a(-1) * g.inverse() * Word::a(2));
    return r;
}

std::optional<long> limit_commutator_order(long m, long k, long cap,
                                           GroupParams params) {
    const Word a = Word::a();
    const Word w =
        commutator(conjugate(Word::b(m), a), conjugate(Word::b(k), a));
    for (long N = 1; N <= cap; ++N)
        if (in_kernel(w, EndoSpec::phi(N), params))
            return N;
    return std::nullopt;
}

bool tietze_relator_check(const Word &lambda, const Word &mu,
                          GroupParams params) {
    const Word lhs = lambda * lambda;
    const Word rhs = mu * lambda * mu.inverse() * lambda.inverse() * mu *
                     lambda * mu.inverse();
    return words_equal(lhs, rhs, params);
}

Report same_kernel_probe(int sampleCount, int maxLen, unsigned long seed,
                         GroupParams params) {
    std::mt19937_64 rng(seed);
    const EndoSpec phi = EndoSpec::phi();
    const EndoSpec phiPrime = EndoSpec::phi_prime();
    const Word g = commutator(conjugate(Word::b(), Word::a()), Word::a());

    Report r;
    int disagreements = 0;
    auto probe = [&](const Word &w) {
        if (in_kernel(w, phi, params) != in_kernel(w, phiPrime, params)) {
            ++disagreements;
            r.checks.push_back(Check{"counterexample", false, w.str()});
        }
    };
    for (int i = 0; i < sampleCount; ++i)
        probe(random_word(rng, maxLen, 5));
    // constructed kernel elements: products of conjugates of [a^b,a]
    for (int i = 0; i < sampleCount / 5 + 1; ++i) {
        Word w;
        const int factors = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < factors; ++f) {
            const Word conj = random_word(rng, 4, 3);
            const Word gen = (rng() % 2 == 0) ? g : g.inverse();
            w *= conjugate(conj, gen);
        }
        probe(w);
    }
    r.checks.push_back(
        Check{"kernels agree on all samples", disagreements == 0,
              std::to_string(sampleCount + sampleCount / 5 + 1) +
                  " samples, " + std::to_string(disagreements) +
                  " disagreements"});
    return r;
}

} // namespace bs23
