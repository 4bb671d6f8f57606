#include "bs23/word.hpp"

#include <algorithm>
#include <cctype>

namespace bs23 {

void Word::push_back(Base base, Int e) {
    if (e == 0)
        return;
    if (!syls_.empty() && syls_.back().base == base) {
        syls_.back().exp += e;
        if (syls_.back().exp == 0)
            syls_.pop_back();
        return;
    }
    syls_.push_back(Syllable{base, std::move(e)});
}

Word Word::syllable(Base base, Int e) {
    Word w;
    w.push_back(base, std::move(e));
    return w;
}

Word Word::from_syllables(std::vector<Syllable> syls) {
    Word w;
    for (auto &s : syls)
        w.push_back(s.base, std::move(s.exp));
    return w;
}

Word Word::inverse() const {
    Word w;
    w.syls_.reserve(syls_.size());
    for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
        w.syls_.push_back(Syllable{it->base, -it->exp});
    return w;
}

Word operator*(const Word &u, const Word &v) {
    Word w = u;
    for (const auto &s : v.syls_)
        w.push_back(s.base, s.exp);
    return w;
}

std::strong_ordering Word::operator<=>(const Word &other) const {
    const std::size_t k = std::min(syls_.size(), other.syls_.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (syls_[i].base != other.syls_[i].base)
            return syls_[i].base <=> other.syls_[i].base;
        const int c = cmp(syls_[i].exp, other.syls_[i].exp);
        if (c != 0)
            return c <=> 0;
    }
    return syls_.size() <=> other.syls_.size();
}

std::string Word::str() const {
    if (syls_.empty())
        return "1";
    std::string out;
    for (const auto &s : syls_) {
        if (!out.empty())
            out += ' ';
        out += (s.base == Base::A) ? 'a' : 'b';
        if (s.exp != 1)
            out += "^" + s.exp.get_str();
    }
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    Word parse_all() {
        Word w = parse_sequence();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character");
        return w;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() { return text_[pos_]; }

    // Stops at ',' and ']' and ')' so bracketed forms can recurse.
    Word parse_sequence() {
        Word w;
        while (!at_end()) {
            const char c = peek();
            if (c == ',' || c == ']' || c == ')')
                break;
            w *= parse_item();
        }
        return w;
    }

    Word parse_item() {
        skip_ws();
        const char c = peek();
        if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
            ++pos_;
            const Base base = (c == 'a' || c == 'A') ? Base::A : Base::B;
            Int e = parse_optional_exponent();
            if (c == 'A' || c == 'B')
                e = -e;
            return Word::syllable(base, std::move(e));
        }
        if (c == '1') {
            ++pos_;
            return Word{};
        }
        if (c == '(') {
            ++pos_;
            Word inner = parse_sequence();
            expect(')');
            return power(inner, parse_optional_exponent());
        }
        if (c == '[') {
            ++pos_;
            Word x = parse_sequence();
            expect(',');
            Word y = parse_sequence();
            expect(']');
            return power(commutator(x, y), parse_optional_exponent());
        }
        fail("expected a, b, A, B, 1, '(' or '['");
    }

    void expect(char c) {
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Int parse_optional_exponent() {
        skip_ws();
        if (pos_ == text_.size() || text_[pos_] != '^')
            return 1;
        ++pos_;
        skip_ws();
        std::string digits;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            if (text_[pos_] == '-')
                digits += '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (pos_ == start)
            fail("expected integer after '^'");
        return Int(digits);
    }

    static Word power(const Word &u, const Int &k) {
        Word r;
        const Word base = (k < 0) ? u.inverse() : u;
        for (Int i = 0; i < abs(k); ++i)
            r *= base;
        return r;
    }
};

} // namespace

Word Word::parse(std::string_view text) { return Parser(text).parse_all(); }

Int rho(const Word &u) {
    Int s = 0;
    for (const auto &syl : u.syllables())
        if (syl.base == Base::B)
            s += syl.exp;
    return s;
}

Int rho_a(const Word &u) {
    Int s = 0;
    for (const auto &syl : u.syllables())
        if (syl.base == Base::B)
            s += abs(syl.exp);
    return s;
}

Int height(const Word &u) { return rho(u); }

std::pair<Word, Word> cyclic_reduce(const Word &u) {
    std::vector<Syllable> core(u.syllables());
    std::vector<Syllable> conj;
    while (core.size() >= 2 && core.front().base == core.back().base &&
           sgn(core.front().exp) == -sgn(core.back().exp)) {
        Syllable &f = core.front();
        Syllable &l = core.back();
        // transfer the shorter of the two opposing ends into the conjugator
        Int t = (abs(f.exp) <= abs(l.exp)) ? f.exp : -l.exp;
        conj.push_back(Syllable{f.base, t});
        f.exp -= t;
        l.exp += t;
        if (l.exp == 0)
            core.pop_back();
        if (f.exp == 0)
            core.erase(core.begin());
    }
    return {Word::from_syllables(std::move(core)),
            Word::from_syllables(std::move(conj))};
}

} // namespace bs23
