#include "bs23/britton.hpp"

#include <cassert>
#include <stdexcept>

namespace bs23 {

namespace {

nlohmann::json int_json(const Int &v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

// floor division: value = q*mod + r, 0 <= r < mod
void fdiv(const Int &value, long mod, Int &q, long &r) {
    Int rem;
    Int modz(mod);
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(),
                modz.get_mpz_t());
    r = rem.get_si();
}

} // namespace

nlohmann::json Pinch::to_json() const {
    return {{"position", position},
            {"kind", kind == Kind::Up ? "up" : "down"},
            {"k", int_json(k)}};
}

nlohmann::json BrittonWitness::trace_to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &p : trace)
        arr.push_back(p.to_json());
    return arr;
}

std::optional<Pinch> find_pinch(const Word &u, GroupParams params) {
    const auto &s = u.syllables();
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i].base != Base::B)
            continue;
        // s[i+1] is an a-run, s[i+2] the next b-run
        const Int &alpha = s[i + 1].exp;
        if (s[i].exp > 0 && s[i + 2].exp < 0 && alpha % params.n == 0)
            return Pinch{i, Pinch::Kind::Up, alpha / params.n};
        if (s[i].exp < 0 && s[i + 2].exp > 0 && alpha % params.m == 0)
            return Pinch{i, Pinch::Kind::Down, alpha / params.m};
    }
    return std::nullopt;
}

namespace {

Word apply_pinch(const Word &u, const Pinch &p, GroupParams params) {
    std::vector<Syllable> s(u.syllables());
    const std::size_t i = p.position;
    if (p.kind == Pinch::Kind::Up) {
        s[i].exp -= 1;
        s[i + 1].exp = p.k * params.m;
        s[i + 2].exp += 1;
    } else {
        s[i].exp += 1;
        s[i + 1].exp = p.k * params.n;
        s[i + 2].exp -= 1;
    }
    return Word::from_syllables(std::move(s));
}

} // namespace

BrittonWitness britton_reduce(const Word &u, GroupParams params) {
    BrittonWitness w;
    w.reduced = u;
    while (auto p = find_pinch(w.reduced, params)) {
        w.reduced = apply_pinch(w.reduced, *p, params);
        w.trace.push_back(std::move(*p));
    }
    return w;
}

Word NormalForm::to_word() const {
    Word w;
    for (const auto &l : letters) {
        w *= Word::a(l.residue);
        w *= Word::b(l.up ? 1 : -1);
    }
    w *= Word::a(tail);
    return w;
}

nlohmann::json NormalForm::to_json() const {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto &l : letters)
        ls.push_back({{"s", l.residue}, {"dir", l.up ? "up" : "down"}});
    return {{"letters", std::move(ls)}, {"tail", int_json(tail)}};
}

NormalForm normal_form(const Word &u, GroupParams params) {
    NormalForm nf;
    auto push_b = [&](bool up) {
        // a^{tail} b  = a^r b a^{nq}   (tail = mq + r), and mirrored for b^-1
        Int q;
        long r = 0;
        if (up) {
            fdiv(nf.tail, params.m, q, r);
            if (r == 0 && !nf.letters.empty() && !nf.letters.back().up) {
                // b^-1 a^0 b cancels
                nf.tail = nf.letters.back().residue + params.n * q;
                nf.letters.pop_back();
            } else {
                nf.letters.push_back(NfLetter{r, true});
                nf.tail = params.n * q;
            }
        } else {
            fdiv(nf.tail, params.n, q, r);
            if (r == 0 && !nf.letters.empty() && nf.letters.back().up) {
                // b a^0 b^-1 cancels
                nf.tail = nf.letters.back().residue + params.m * q;
                nf.letters.pop_back();
            } else {
                nf.letters.push_back(NfLetter{r, false});
                nf.tail = params.m * q;
            }
        }
    };
    for (const auto &s : u.syllables()) {
        if (s.base == Base::A) {
            nf.tail += s.exp;
        } else {
            const bool up = s.exp > 0;
            for (Int i = 0; i < abs(s.exp); ++i)
                push_b(up);
        }
    }
    return nf;
}

bool is_trivial(const Word &u, GroupParams params) {
    return britton_reduce(u, params).trivial();
}

bool words_equal(const Word &u, const Word &v, GroupParams params) {
    return is_trivial(u * v.inverse(), params);
}

namespace {

void require_coprime(GroupParams params) {
    Int g;
    Int n(params.n), m(params.m);
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument(
            "bezout merge requires coprime group parameters");
}

} // namespace

Word bezout_merge(long beta, const Int &alpha, long betaPrime,
                  GroupParams params) {
    if (beta < 1 || betaPrime < 1)
        throw std::invalid_argument("bezout_merge requires beta, beta' >= 1");
    require_coprime(params);
    Int npow, mpow;
    mpz_ui_pow_ui(npow.get_mpz_t(), params.n, beta);
    mpz_ui_pow_ui(mpow.get_mpz_t(), params.m, betaPrime);
    // lambda = n^-beta mod m^beta', least absolute residue, tie -> positive
    Int lambda;
    if (mpz_invert(lambda.get_mpz_t(), npow.get_mpz_t(), mpow.get_mpz_t()) ==
        0)
        throw std::invalid_argument("no modular inverse (params not coprime)");
    if (2 * lambda > mpow) // least absolute residue; ties stay positive
        lambda -= mpow;
    Int mu = (1 - lambda * npow) / mpow;
    assert(lambda * npow + mu * mpow == 1);

    Int mpowBeta, npowBetaPrime;
    mpz_ui_pow_ui(mpowBeta.get_mpz_t(), params.m, beta);
    mpz_ui_pow_ui(npowBetaPrime.get_mpz_t(), params.n, betaPrime);
    return Word::a(alpha * lambda * mpowBeta) * Word::b(beta + betaPrime) *
           Word::a(alpha * mu * npowBetaPrime);
}

Word minimize_alternating(const Word &u, GroupParams params) {
    require_coprime(params);
    Word w = u;
    for (;;) {
        if (auto p = find_pinch(w, params)) {
            w = apply_pinch(w, *p, params);
            continue;
        }
        // merge a same-sign b-run pair, if any
        const auto &s = w.syllables();
        bool merged = false;
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            if (s[i].base != Base::B || sgn(s[i].exp) != sgn(s[i + 2].exp))
                continue;
            Word prefix = Word::from_syllables(
                {s.begin(), s.begin() + static_cast<long>(i)});
            Word suffix = Word::from_syllables(
                {s.begin() + static_cast<long>(i) + 3, s.end()});
            Word mid;
            if (s[i].exp > 0) {
                mid = bezout_merge(s[i].exp.get_si(), s[i + 1].exp,
                                   s[i + 2].exp.get_si(), params);
            } else {
                mid = bezout_merge(-s[i + 2].exp.get_si(), -s[i + 1].exp,
                                   -s[i].exp.get_si(), params)
                          .inverse();
            }
            w = prefix * mid * suffix;
            merged = true;
            break;
        }
        if (!merged)
            return w;
    }
}

} // namespace bs23
