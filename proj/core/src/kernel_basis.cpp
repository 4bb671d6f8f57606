#include "bs23/kernel_basis.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace bs23 {

namespace {

const Word &gen_c() {
    static const Word c = Word::b() * Word::a() * Word::b(-1);
    return c;
}

const Word &gen_v() {
    static const Word v = commutator(gen_c(), Word::a());
    return v;
}

Word v_power(int j) { return j > 0 ? gen_v() : gen_v().inverse(); }

Word fiber_word(int offset, int sign) {
    return Word::a(offset) * v_power(sign) * Word::a(-offset);
}

void certify(bool ok, const char *what) {
    if (!ok)
        throw std::logic_error(std::string("certification failed: ") + what);
}

Word product_of(const std::vector<BasisElement> &fs) {
    Word w;
    for (const auto &f : fs)
        w *= f.word();
    return w;
}

} // namespace

Word BasisElement::word() const {
    return conjugator * fiber_word(offset, sign) * conjugator.inverse();
}

nlohmann::json BasisElement::to_json() const {
    return {{"conjugator", conjugator.str()}, {"i", offset}, {"j", sign}};
}

Word Decomposition::product() const { return product_of(factors); }

nlohmann::json Decomposition::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &f : factors)
        arr.push_back(f.to_json());
    return {{"factors", std::move(arr)}, {"certified", certified}};
}

std::vector<BasisElement> fiber_generators() {
    return {BasisElement{{}, 0, 1}, BasisElement{{}, 1, 1},
            BasisElement{{}, 0, -1}, BasisElement{{}, 1, -1}};
}

std::vector<std::pair<int, int>> fiber_reduce(const Int &k, int j,
                                              GroupParams params) {
    Int q, rem;
    Int three(3);
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t(),
                three.get_mpz_t());
    const long r = rem.get_si();
    // a^k [c,a] a^-k = u_k u_{k+1}^-1 with u_t = a^t (bab^-1) a^-t of
    // period 3, so only k mod 3 matters
    std::vector<std::pair<int, int>> seq;
    if (r == 0)
        seq = {{0, 1}};
    else if (r == 1)
        seq = {{1, 1}};
    else
        seq = {{1, -1}, {0, -1}};
    if (j < 0) {
        std::reverse(seq.begin(), seq.end());
        for (auto &p : seq)
            p.second = -p.second;
    }
    Word prod;
    for (const auto &[i, s] : seq)
        prod *= fiber_word(i, s);
    certify(words_equal(prod,
                        Word::a(k) * v_power(j) * Word::a(-k), params),
            "fiber_reduce");
    return seq;
}

namespace {

// --- conjugate factorization (Lemma-2 extraction) ---

std::size_t b_run_count(const Word &w) {
    std::size_t n = 0;
    for (const auto &s : w.syllables())
        if (s.base == Base::B)
            ++n;
    return n;
}

using Metric = std::tuple<Int, std::size_t, std::size_t>;

Metric metric(const Word &w) {
    return {rho_a(w), b_run_count(w), w.size()};
}

Word rotate_at(const std::vector<Syllable> &s, std::size_t idx) {
    std::vector<Syllable> rot(s.begin() + static_cast<long>(idx), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(idx));
    return Word::from_syllables(std::move(rot));
}

// Conjugates w into its cyclically minimal alternating form:
// input = conj * w * conj^-1, w cyclically pinch-free with cyclically
// sign-alternating b-runs.
struct MinState {
    Word conj;
    Word w;
};

MinState cyclic_minimize(const Word &start, GroupParams params) {
    MinState st;
    st.w = start;
    for (int iter = 0; iter < 10000; ++iter) {
        auto [core, c1] = cyclic_reduce(st.w);
        st.conj *= c1;
        st.w = core;
        Word w2 = minimize_alternating(st.w, params);
        if (!(w2 == st.w)) {
            st.w = std::move(w2);
            continue;
        }
        // look for a rotation that unlocks a cyclic merge or pinch
        const auto &s = st.w.syllables();
        bool improved = false;
        for (std::size_t i = 0; i < s.size() && !improved; ++i) {
            if (s[i].base != Base::B)
                continue;
            Word prefix = Word::from_syllables(
                {s.begin(), s.begin() + static_cast<long>(i)});
            auto [cr, cc] = cyclic_reduce(rotate_at(s, i));
            Word wm = minimize_alternating(cr, params);
            if (metric(wm) < metric(st.w)) {
                st.conj *= prefix * cc;
                st.w = std::move(wm);
                improved = true;
            }
        }
        if (!improved)
            return st;
    }
    throw std::logic_error("cyclic_minimize did not stabilize");
}

std::vector<BasisElement> factorize_rec(const Word &input, bool allowInvert,
                                        int depth, GroupParams params) {
    if (depth > 10000)
        throw std::logic_error("factorization did not terminate");
    if (britton_reduce(input, params).trivial())
        return {};
    MinState st = cyclic_minimize(input, params);
    const Word &w = st.w;
    if (w.empty())
        return {};

    const auto &s = w.syllables();
    std::vector<std::size_t> bruns;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].base == Base::B)
            bruns.push_back(i);
    if (bruns.empty())
        throw std::logic_error("nontrivial kernel element without b-runs");

    std::size_t target = s.size();
    bool hasPlusOne = false;
    for (std::size_t k = 0; k < bruns.size(); ++k) {
        const Int &e = s[bruns[k]].exp;
        if (e == 1)
            hasPlusOne = true;
        if (e != -1)
            continue;
        const std::size_t prev = bruns[(k + bruns.size() - 1) % bruns.size()];
        const std::size_t next = bruns[(k + 1) % bruns.size()];
        if (s[prev].exp > 0 && s[next].exp > 0) {
            target = prev;
            break;
        }
    }

    if (target == s.size()) {
        if (!hasPlusOne || !allowInvert)
            throw std::logic_error("no unit b-run in minimal form");
        auto inv =
            factorize_rec(input.inverse(), false, depth + 1, params);
        std::reverse(inv.begin(), inv.end());
        for (auto &f : inv)
            f.sign = -f.sign;
        return inv;
    }

    const Word prefix = Word::from_syllables(
        {s.begin(), s.begin() + static_cast<long>(target)});
    const Word wrot = rotate_at(s, target);
    const auto &rs = wrot.syllables();
    if (rs.size() < 5 || rs[0].base != Base::B || rs[0].exp < 1 ||
        rs[2].exp != -1 || rs[4].exp < 1)
        throw std::logic_error("unexpected shape after rotation");
    const Int beta1 = rs[0].exp;
    const Int alpha2 = rs[1].exp;
    const Int alpha3 = rs[3].exp;
    const Int beta3 = rs[4].exp;
    if (alpha2 % 2 == 0)
        throw std::logic_error("even exponent inside minimal tip");
    Int q, rem;
    Int three(3);
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), alpha3.get_mpz_t(),
                three.get_mpz_t());
    const long t = rem.get_si();
    if (t == 0)
        throw std::logic_error("pinch survived minimization");
    const Int d = 3 * ((alpha2 - 1) / 2) + alpha3 - t;

    const Word gLoc = Word::b(beta1 - 1) * Word::a(d);
    const Word outer = st.conj * prefix;
    std::vector<BasisElement> emitted;
    emitted.push_back(BasisElement{outer * gLoc, 0, 1});
    if (t == 2)
        emitted.push_back(BasisElement{outer * gLoc, 1, 1});

    Word remWord = Word::b(beta1 - 1) * Word::a(d + t) * Word::b() *
                   Word::a() * Word::b(beta3 - 1);
    remWord *= Word::from_syllables({rs.begin() + 5, rs.end()});

    Word local = gLoc * fiber_word(0, 1);
    if (t == 2)
        local *= fiber_word(1, 1);
    local *= gLoc.inverse();
    certify(words_equal(wrot, local * remWord, params),
            "conjugate extraction");

    const Word nextInput = outer * remWord * outer.inverse();
    auto rest = factorize_rec(nextInput, true, depth + 1, params);
    emitted.insert(emitted.end(), rest.begin(), rest.end());
    return emitted;
}

} // namespace

std::vector<BasisElement> conjugate_factorize(const Word &u,
                                              GroupParams params) {
    const Word image =
        britton_reduce(apply_endo(u, EndoSpec::phi()), params).reduced;
    if (!image.empty())
        throw NonKernel(image);
    auto factors = factorize_rec(u, true, 0, params);
    certify(words_equal(product_of(factors), u, params),
            "conjugate_factorize round trip");
    return factors;
}

namespace {

// Requires the canonical good-representative spelling of the conjugator
// and returns its geodesic.
std::vector<TreeStep> require_canonical(const Word &w, GroupParams params) {
    const TreePath p = project_to_tree(w, params);
    if (!p.is_geodesic() || p.tail != 0 ||
        !(good_representative(p.geodesic) == w))
        throw std::invalid_argument(
            "expected a canonical good representative conjugator");
    return p.geodesic;
}

std::vector<BasisElement> wrap(const std::vector<BasisElement> &ks,
                               BasisElement inner) {
    std::vector<BasisElement> out = ks;
    out.push_back(std::move(inner));
    for (auto it = ks.rbegin(); it != ks.rend(); ++it)
        out.push_back(it->inverse());
    return out;
}

} // namespace

std::vector<BasisElement> swiss_reduce(const BasisElement &f,
                                       GroupParams params) {
    const Word &w = f.conjugator;
    const auto steps = require_canonical(w, params);
    std::size_t at = steps.size();
    for (std::size_t i = 0; i + 2 < steps.size(); ++i) {
        if (steps[i].up != steps[i + 1].up &&
            steps[i + 1].up != steps[i + 2].up) {
            at = i;
            break;
        }
    }
    if (at == steps.size())
        throw std::invalid_argument("conjugator path is not swiss");

    std::vector<BasisElement> ks;
    Word remainder;
    if (steps[at].up) {
        // w = w1 (b a b^-1) a^y b w2'  with y in {1,2}:
        // b a b^-1 a^y b = [c,a^y] a^y b a
        const FeatureSplit sp = split_feature(w, at, true, params);
        const auto &ws = sp.w2.syllables();
        if (ws.size() < 2 || ws[0].base != Base::A || ws[1].exp < 1)
            throw std::logic_error("malformed swiss suffix");
        const Int y = ws[0].exp;
        ks.push_back(BasisElement{sp.w1, 0, 1});
        if (y == 2)
            ks.push_back(BasisElement{sp.w1, 1, 1});
        Word tailPart = Word::b(ws[1].exp - 1) *
                        Word::from_syllables({ws.begin() + 2, ws.end()});
        remainder = sp.w1 * Word::a(y) * Word::b() * Word::a() * tailPart;
    } else {
        // w = w1 (b^-1 a^x b) a b^-1 w2'  with x in {1,2}
        const FeatureSplit sp = split_feature(w, at, false, params);
        const auto &ws = sp.w2.syllables();
        if (ws.size() < 2 || ws[0].base != Base::A || ws[0].exp != 1 ||
            ws[1].exp > -1)
            throw std::logic_error("malformed swiss suffix");
        const Int x = sp.feature.syllables()[1].exp;
        Word tailPart = Word::b(ws[1].exp + 1) *
                        Word::from_syllables({ws.begin() + 2, ws.end()});
        if (x == 1) {
            // w1 b^-1 a b a b^-1 w2 =
            //   (w1 a^-1 b^-1)[c,a](b a w1^-1) w1 a^-1 b^-1 a^4 w2
            ks.push_back(
                BasisElement{sp.w1 * Word::a(-1) * Word::b(-1), 0, 1});
            remainder =
                sp.w1 * Word::a(-1) * Word::b(-1) * Word::a(4) * tailPart;
        } else {
            // w1 b^-1 a^2 b a b^-1 w2 =
            //   (w1 b^-1 a^-1)[c,a](a b w1^-1) w1 a b^-1 a^2 w2
            ks.push_back(
                BasisElement{sp.w1 * Word::b(-1) * Word::a(-1), 0, 1});
            remainder =
                sp.w1 * Word::a(1) * Word::b(-1) * Word::a(2) * tailPart;
        }
    }
    auto out = wrap(ks, BasisElement{remainder, f.offset, f.sign});
    certify(words_equal(product_of(out), f.word(), params), "swiss_reduce");
    return out;
}

namespace {

// Solves b a b^-1 a^i [c,a]^j a^-i b a^-1 b^-1 as a reduced product of at
// most four fiber generators by exhaustive search, memoized.
const std::vector<std::pair<int, int>> &tip_strip_table(int offset, int sign,
                                                        GroupParams params) {
    static const std::map<std::pair<int, int>,
                          std::vector<std::pair<int, int>>>
        table = [] {
            GroupParams p{};
            std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>
                out;
            const std::array<std::pair<int, int>, 4> gens = {
                {{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
            for (int i = 0; i <= 1; ++i) {
                for (int j : {1, -1}) {
                    const Word target =
                        gen_c() * fiber_word(i, j) * gen_c().inverse();
                    std::vector<std::pair<int, int>> stack;
                    bool found = false;
                    auto dfs = [&](auto &&self, const Word &acc) -> void {
                        if (found)
                            return;
                        if (!stack.empty() &&
                            words_equal(acc, target, p)) {
                            out[{i, j}] = stack;
                            found = true;
                            return;
                        }
                        if (stack.size() == 4)
                            return;
                        for (const auto &g : gens) {
                            if (!stack.empty() &&
                                stack.back().first == g.first &&
                                stack.back().second == -g.second)
                                continue;
                            stack.push_back(g);
                            self(self, acc * fiber_word(g.first, g.second));
                            stack.pop_back();
                            if (found)
                                return;
                        }
                    };
                    dfs(dfs, Word{});
                    if (!found)
                        throw std::logic_error(
                            "tip strip not expressible in <= 4 generators");
                }
            }
            return out;
        }();
    if (params.n != 2 || params.m != 3)
        throw std::invalid_argument(
            "end_reduce is only implemented for BS(2,3)");
    return table.at({offset, sign});
}

} // namespace

std::vector<BasisElement> end_reduce(const BasisElement &f,
                                     GroupParams params) {
    const Word &w = f.conjugator;
    const auto steps = require_canonical(w, params);
    if (classify_steps(steps).endEssential)
        throw std::invalid_argument("conjugator path is end-essential");
    const FeatureSplit sp = split_feature(w, steps.size() - 2, true, params);
    if (!sp.w2.empty())
        throw std::logic_error("trailing tip split left a suffix");
    std::vector<BasisElement> out;
    for (const auto &[i, j] : tip_strip_table(f.offset, f.sign, params))
        out.push_back(BasisElement{sp.w1, i, j});
    certify(words_equal(product_of(out), f.word(), params), "end_reduce");
    return out;
}

namespace {

struct SiblingMove {
    Word moved;
    std::size_t stepIndex;
    bool tip;
};

std::vector<SiblingMove> sibling_moves(const Word &w, GroupParams params) {
    std::vector<SiblingMove> out;
    const PathClass pc = classify_steps(project_to_tree(w, params).geodesic);
    for (std::size_t t : pc.tipPositions) {
        auto [first, second] = triplet_moves(w, t, params);
        out.push_back(SiblingMove{std::move(first), t, true});
        out.push_back(SiblingMove{std::move(second), t, true});
    }
    for (std::size_t v : pc.valleyPositions) {
        out.push_back(SiblingMove{twin_move(w, v, params), v, false});
        out.push_back(SiblingMove{twin_move_reverse(w, v, params), v, false});
    }
    return out;
}

std::string member_key(const Word &w, GroupParams params) {
    return good_representative(project_to_tree(w, params).geodesic).str();
}

bool admissible_member(const Word &w, GroupParams params) {
    const TreePath p = project_to_tree(w, params);
    if (!p.is_geodesic())
        return false;
    const PathClass pc = classify_steps(p.geodesic);
    return pc.nepalese() && pc.endEssential;
}

// Finds K = (w1 t) [c,a]^j (w1 t)^-1 with w = K * moved; returns the
// conjugator w1 t and j.
std::pair<Word, int> correction_search(const Word &w, const Word &moved,
                                       const Word &w1, GroupParams params) {
    const Word m = w * moved.inverse();
    auto try_one = [&](const Word &t, int j) -> bool {
        const Word h = w1 * t;
        return words_equal(m, h * v_power(j) * h.inverse(), params);
    };
    // closed forms from the triplet and twin identities first
    const std::vector<std::pair<Word, int>> seeds = {
        {Word{}, 1},
        {Word::a(-1), -1},
        {Word::a(-1) * Word::b(-1), 1},
        {Word::a(-1) * Word::b(-1) * Word::a(-1), -1},
        {Word::a(1) * Word::b(-1), -1},
        {Word::b(-1) * Word::a(-1), 1},
    };
    for (const auto &[t, j] : seeds)
        if (try_one(t, j))
            return {w1 * t, j};
    for (long p1 = -3; p1 <= 3; ++p1) {
        for (int delta = -1; delta <= 1; ++delta) {
            for (long q = -3; q <= 3; ++q) {
                if (delta == 0 && q != 0)
                    continue;
                const Word t =
                    Word::a(p1) * Word::b(delta) * Word::a(q);
                for (int j : {1, -1})
                    if (try_one(t, j))
                        return {w1 * t, j};
            }
        }
    }
    throw std::logic_error("no sibling correction found");
}

} // namespace

std::vector<BasisElement> sibling_reduce(const BasisElement &f,
                                         std::size_t siblingCap,
                                         GroupParams params) {
    const Word &w = f.conjugator;
    require_canonical(w, params);
    if (!admissible_member(w, params))
        throw std::invalid_argument(
            "conjugator path is not end-essential nepalese");
    const SiblingComponent comp = sibling_component(w, siblingCap, params);
    if (comp.truncated)
        throw SiblingCapExceeded("sibling component exceeded cap");
    if (comp.canonical == w)
        throw std::invalid_argument("conjugator is already canonical");

    // breadth-first distances from the canonical representative
    std::map<std::string, std::size_t> dist;
    std::deque<Word> queue;
    dist[member_key(comp.canonical, params)] = 0;
    queue.push_back(comp.canonical);
    while (!queue.empty()) {
        const Word cur = queue.front();
        queue.pop_front();
        const std::size_t d = dist.at(member_key(cur, params));
        for (const auto &mv : sibling_moves(cur, params)) {
            if (!admissible_member(mv.moved, params))
                continue;
            std::string key = member_key(mv.moved, params);
            if (dist.contains(key))
                continue;
            dist.emplace(std::move(key), d + 1);
            queue.push_back(
                good_representative(project_to_tree(mv.moved, params)
                                        .geodesic));
        }
    }

    const std::size_t here = dist.at(member_key(w, params));
    const SiblingMove *best = nullptr;
    const auto moves = sibling_moves(w, params);
    std::size_t bestDist = here;
    for (const auto &mv : moves) {
        if (!admissible_member(mv.moved, params))
            continue;
        const auto it = dist.find(member_key(mv.moved, params));
        if (it != dist.end() && it->second < bestDist) {
            bestDist = it->second;
            best = &mv;
        }
    }
    if (best == nullptr)
        throw std::logic_error("no sibling move decreases the distance");

    const Word w1 = split_feature(w, best->stepIndex, best->tip, params).w1;
    auto [h, j] = correction_search(w, best->moved, w1, params);
    auto out = wrap({BasisElement{h, 0, j}},
                    BasisElement{best->moved, f.offset, f.sign});
    certify(words_equal(product_of(out), f.word(), params), "sibling_reduce");
    return out;
}

Decomposition decompose(const Word &u, std::size_t siblingCap,
                        GroupParams params) {
    std::deque<BasisElement> work;
    for (auto &f : conjugate_factorize(u, params))
        work.push_back(std::move(f));

    std::vector<BasisElement> done;
    long budget = 200000;
    while (!work.empty()) {
        if (--budget < 0)
            throw SiblingCapExceeded("decomposition budget exhausted");
        BasisElement f = std::move(work.front());
        work.pop_front();

        const NormalForm nf = normal_form(f.conjugator, params);
        const Word ell = TreeVertex{nf.letters}.representative();
        if (!(ell == f.conjugator) || nf.tail != 0) {
            // pull the a-tail through the fiber
            auto seq = fiber_reduce(nf.tail + f.offset, f.sign, params);
            for (auto it = seq.rbegin(); it != seq.rend(); ++it)
                work.push_front(BasisElement{ell, it->first, it->second});
            continue;
        }

        // A conjugator ending in a residue-1 down step is the residue-0
        // partner times c = bab^-1, and c normalizes the fiber:
        // c[a^b,a]c^-1 = [a^b,a]^-1 and ca[a^b,a]a^-1c^-1 =
        // [a^b,a] (a[a^b,a]a^-1)^-1 [a^b,a]^-1. Rewrite to the partner.
        if (!nf.letters.empty() && nf.letters.back() == NfLetter{1, false}) {
            const Word partner =
                ell * Word::b() * Word::a(-1) * Word::b(-1);
            std::vector<BasisElement> repl;
            if (f.offset == 0) {
                repl.push_back(BasisElement{partner, 0, -f.sign});
            } else {
                repl.push_back(BasisElement{partner, 0, 1});
                repl.push_back(BasisElement{partner, 1, -f.sign});
                repl.push_back(BasisElement{partner, 0, -1});
            }
            certify(words_equal(product_of(repl), f.word(), params),
                    "duplicate-pair rewrite");
            for (auto it = repl.rbegin(); it != repl.rend(); ++it)
                work.push_front(std::move(*it));
            continue;
        }

        const PathClass pc =
            classify_steps(project_to_tree(ell, params).geodesic);
        std::vector<BasisElement> expansion;
        if (pc.swiss) {
            expansion = swiss_reduce(f, params);
        } else if (!pc.endEssential) {
            expansion = end_reduce(f, params);
        } else {
            const SiblingComponent comp =
                sibling_component(ell, siblingCap, params);
            if (comp.truncated)
                throw SiblingCapExceeded("sibling component exceeded cap");
            if (comp.canonical == ell) {
                done.push_back(std::move(f));
                continue;
            }
            expansion = sibling_reduce(f, siblingCap, params);
        }
        for (auto it = expansion.rbegin(); it != expansion.rend(); ++it)
            work.push_front(std::move(*it));
    }

    Decomposition dec;
    for (auto &f : done) {
        if (!dec.factors.empty() &&
            dec.factors.back().conjugator == f.conjugator &&
            dec.factors.back().offset == f.offset &&
            dec.factors.back().sign == -f.sign) {
            dec.factors.pop_back();
        } else {
            dec.factors.push_back(std::move(f));
        }
    }
    dec.certified = words_equal(dec.product(), u, params);
    return dec;
}

std::vector<BasisElement> basis_up_to(int depth, std::size_t siblingCap,
                                      GroupParams params) {
    std::vector<BasisElement> out;
    std::set<std::string> seen; // duplicate-pair conjugators denote
                                // previously listed elements
    std::vector<NfLetter> addr;
    auto visit = [&] {
        std::vector<TreeStep> steps;
        for (const auto &l : addr)
            steps.push_back(TreeStep{l.up, l.residue});
        const PathClass pc = classify_steps(steps);
        if (!pc.nepalese() || !pc.endEssential)
            return;
        // residue-1 down endings reduce to their residue-0 partner
        if (!addr.empty() && addr.back() == NfLetter{1, false})
            return;
        const Word w = good_representative(steps);
        const SiblingComponent comp = sibling_component(w, siblingCap, params);
        if (comp.truncated || !(comp.canonical == w))
            return;
        for (const auto &g : fiber_generators()) {
            BasisElement e{w, g.offset, g.sign};
            if (seen.insert(normal_form(e.word(), params).str()).second)
                out.push_back(std::move(e));
        }
    };
    auto rec = [&](auto &&self) -> void {
        visit();
        if (static_cast<int>(addr.size()) == depth)
            return;
        auto extend = [&](long residue, bool up) {
            if (!addr.empty() && addr.back().up != up && residue == 0)
                return; // would pinch
            addr.push_back(NfLetter{residue, up});
            self(self);
            addr.pop_back();
        };
        for (long r = 0; r < params.m; ++r)
            extend(r, true);
        for (long r = 0; r < params.n; ++r)
            extend(r, false);
    };
    rec(rec);
    return out;
}

Report freeness_probe(int trials, int maxFactors, int conjBound,
                      unsigned long seed, int fiberLen, GroupParams params) {
    Report r;

    long fiberChecked = 0;
    long fiberViolations = 0;
    {
        const auto gens = fiber_generators();
        auto dfs = [&](auto &&self, const Word &acc, int depth,
                       int prev) -> void {
            if (depth > 0) {
                ++fiberChecked;
                if (is_trivial(acc, params)) {
                    ++fiberViolations;
                    r.checks.push_back(
                        Check{"trivial fiber word", false, acc.str()});
                }
            }
            if (depth == fiberLen)
                return;
            for (int g = 0; g < 4; ++g) {
                // adjacent inverse pairs: (0,1)<->(0,-1), (1,1)<->(1,-1)
                if (prev >= 0 && gens[g].offset == gens[prev].offset &&
                    gens[g].sign == -gens[prev].sign)
                    continue;
                self(self, acc * gens[g].word(), depth + 1, g);
            }
        };
        dfs(dfs, Word{}, 0, -1);
    }
    r.checks.push_back(Check{"fiber words nontrivial",
                             fiberViolations == 0,
                             std::to_string(fiberChecked) + " words"});

    const auto pool = basis_up_to(conjBound, 10000, params);
    std::mt19937_64 rng(seed);
    long violations = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int count =
            1 + static_cast<int>(rng() % static_cast<unsigned>(maxFactors));
        Word prod;
        std::size_t prev = pool.size();
        for (int k = 0; k < count; ++k) {
            std::size_t pick;
            do {
                pick = rng() % pool.size();
            } while (prev < pool.size() &&
                     pool[pick].conjugator == pool[prev].conjugator &&
                     pool[pick].offset == pool[prev].offset &&
                     pool[pick].sign == -pool[prev].sign);
            prod *= pool[pick].word();
            prev = pick;
        }
        if (is_trivial(prod, params)) {
            ++violations;
            r.checks.push_back(
                Check{"trivial S-expression", false, prod.str()});
        }
    }
    r.checks.push_back(Check{"random S-expressions nontrivial",
                             violations == 0,
                             std::to_string(trials) + " samples over " +
                                 std::to_string(pool.size()) +
                                 " basis elements"});
    return r;
}

} // namespace bs23
