#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bs23 {

using Int = mpz_class;

/// Presentation parameters of BS(n,m) = <a,b | b a^n = a^m b>.
struct GroupParams {
    long n = 2;
    long m = 3;
    friend bool operator==(const GroupParams &, const GroupParams &) = default;
};

enum class Base : std::uint8_t { A, B };

/// One maximal run a^e or b^e, e != 0.
struct Syllable {
    Base base;
    Int exp;
    friend bool operator==(const Syllable &, const Syllable &) = default;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string msg, std::size_t pos)
        : std::runtime_error(std::move(msg)), position(pos) {}
};

/// A freely reduced word over {a,b}. Adjacent syllables always have distinct
/// bases and no syllable carries exponent zero; the empty word is the
/// identity. Immutable value type.
class Word {
  public:
    Word() = default;

    static Word a(Int e = 1) { return syllable(Base::A, std::move(e)); }
    static Word b(Int e = 1) { return syllable(Base::B, std::move(e)); }
    static Word syllable(Base base, Int e);
    static Word from_syllables(std::vector<Syllable> syls);

    /// Parses the word grammar: tokens a,b (A,B for inverses), optional
    /// ^k exponents, (w)^k power sugar, [u,v] commutator sugar, "1" for
    /// the identity. Throws ParseError with offending position.
    static Word parse(std::string_view text);

    const std::vector<Syllable> &syllables() const { return syls_; }
    bool empty() const { return syls_.empty(); }
    std::size_t size() const { return syls_.size(); }

    Word inverse() const;

    /// Canonical printer: lowercase bases, ^k only for |k| != 1, "1" for
    /// the identity, e.g. "b a^2 b^-1 a^-3".
    std::string str() const;

    friend Word operator*(const Word &u, const Word &v);
    Word &operator*=(const Word &v) { return *this = *this * v; }

    /// Literal (syllable-level) equality, not group equality.
    friend bool operator==(const Word &, const Word &) = default;
    std::strong_ordering operator<=>(const Word &other) const;

  private:
    std::vector<Syllable> syls_;

    void push_back(Base base, Int e);
};

inline Word commutator(const Word &x, const Word &y) {
    return x * y * x.inverse() * y.inverse();
}

inline Word conjugate(const Word &g, const Word &x) {
    return g * x * g.inverse();
}

/// Uniform random freely reduced word with at most maxSyllables syllables
/// and exponents in [-maxExp, maxExp] \ {0}.
template <class Rng> Word random_word(Rng &rng, int maxSyllables, long maxExp) {
    std::vector<Syllable> syls;
    const int len = static_cast<int>(rng() % (maxSyllables + 1));
    for (int i = 0; i < len; ++i) {
        const Base base = (rng() % 2 == 0) ? Base::A : Base::B;
        long e = static_cast<long>(rng() % (2 * maxExp)) - maxExp;
        if (e >= 0)
            ++e;
        syls.push_back(Syllable{base, e});
    }
    return Word::from_syllables(std::move(syls));
}

/// Sum of b-exponents; a homomorphism onto Z.
Int rho(const Word &u);
/// Sum of absolute b-exponents (number of stable letters).
Int rho_a(const Word &u);
/// Height map a |-> 0, b |-> 1; equals rho.
Int height(const Word &u);

/// Returns (core, conjugator) with u = conjugator * core * conjugator^-1
/// and the core's first and last syllables not inverse-mergeable.
std::pair<Word, Word> cyclic_reduce(const Word &u);

} // namespace bs23
