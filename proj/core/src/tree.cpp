#include "bs23/tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace bs23 {

TreeVertex TreeVertex::of(const Word &u, GroupParams params) {
    return TreeVertex{normal_form(u, params).letters};
}

long TreeVertex::height() const {
    long h = 0;
    for (const auto &l : address)
        h += l.up ? 1 : -1;
    return h;
}

Word TreeVertex::representative() const {
    Word w;
    for (const auto &l : address) {
        w *= Word::a(l.residue);
        w *= Word::b(l.up ? 1 : -1);
    }
    return w;
}

std::string TreeVertex::str() const {
    std::string out;
    for (const auto &l : address) {
        if (!out.empty())
            out += ' ';
        out += l.up ? 'u' : 'd';
        out += std::to_string(l.residue);
    }
    return out;
}

TreeVertex TreePath::endpoint() const {
    std::vector<NfLetter> addr;
    for (const auto &s : geodesic)
        addr.push_back(NfLetter{s.branch, s.up});
    return TreeVertex{std::move(addr)};
}

nlohmann::json TreePath::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &s : steps)
        arr.push_back({{"dir", s.up ? "up" : "down"}, {"branch", s.branch}});
    nlohmann::json j = {{"steps", std::move(arr)},
                        {"backtracking", backtracking}};
    j["tail"] = tail.fits_slong_p() ? nlohmann::json(tail.get_si())
                                    : nlohmann::json(tail.get_str());
    return j;
}

TreePath project_to_tree(const Word &u, GroupParams params) {
    TreePath p;
    const NormalForm nf = normal_form(u, params);
    // replay the right-pushing fold to record the raw walk
    NormalForm state;
    auto push_b = [&](bool up) {
        Int q, tail = state.tail;
        Int mod(up ? params.m : params.n);
        Int rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), tail.get_mpz_t(),
                    mod.get_mpz_t());
        const long r = rem.get_si();
        const bool cancels = r == 0 && !state.letters.empty() &&
                             state.letters.back().up != up;
        if (cancels) {
            // retraverse the previous edge in the opposite direction
            p.steps.push_back(TreeStep{up, state.letters.back().residue});
            p.backtracking = true;
            state.tail = state.letters.back().residue +
                         (up ? params.n : params.m) * q;
            state.letters.pop_back();
        } else {
            p.steps.push_back(TreeStep{up, r});
            state.letters.push_back(NfLetter{r, up});
            state.tail = (up ? params.n : params.m) * q;
        }
    };
    for (const auto &s : u.syllables()) {
        if (s.base == Base::A) {
            state.tail += s.exp;
        } else {
            const bool up = s.exp > 0;
            for (Int i = 0; i < abs(s.exp); ++i)
                push_b(up);
        }
    }
    p.tail = state.tail;
    for (const auto &l : state.letters)
        p.geodesic.push_back(TreeStep{l.up, l.residue});
    (void)nf;
    return p;
}

Word good_representative(const std::vector<TreeStep> &steps) {
    Word w;
    for (const auto &s : steps) {
        w *= Word::a(s.branch);
        w *= Word::b(s.up ? 1 : -1);
    }
    return w;
}

Word good_representative(const TreePath &p) {
    if (!p.is_geodesic())
        throw std::invalid_argument(
            "good_representative requires a geodesic path");
    return good_representative(p.geodesic);
}

PathClass classify_steps(const std::vector<TreeStep> &steps) {
    PathClass pc;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (steps[i].up && !steps[i + 1].up)
            pc.tipPositions.push_back(i);
        else if (!steps[i].up && steps[i + 1].up)
            pc.valleyPositions.push_back(i);
    }
    for (std::size_t i = 0; i + 2 < steps.size(); ++i) {
        if (steps[i].up != steps[i + 1].up && steps[i + 1].up != steps[i + 2].up) {
            pc.swiss = true;
            break;
        }
    }
    pc.endEssential = steps.size() < 2 || !steps[steps.size() - 2].up ||
                      steps.back().up;
    return pc;
}

PathClass classify_path(const TreePath &p) {
    if (!p.is_geodesic())
        throw std::invalid_argument("classify_path requires a geodesic path");
    return classify_steps(p.geodesic);
}

nlohmann::json PathClass::to_json() const {
    return {{"tips", tipPositions},     {"valleys", valleyPositions},
            {"c", c()},                 {"swiss", swiss},
            {"endEssential", endEssential}};
}

FeatureSplit split_feature(const Word &w, std::size_t stepIndex, bool tip,
                           GroupParams params) {
    const TreePath p = project_to_tree(w, params);
    if (!p.is_geodesic())
        throw std::invalid_argument("expected a good representative");
    const auto &steps = p.steps;
    if (stepIndex + 1 >= steps.size() || steps[stepIndex].up != tip ||
        steps[stepIndex + 1].up == tip)
        throw std::invalid_argument(tip ? "no tip at this index"
                                        : "no valley at this index");
    // locate the b-letter of stepIndex inside the syllable sequence
    const auto &syls = w.syllables();
    std::size_t seen = 0;
    std::size_t j = syls.size();
    for (std::size_t k = 0; k < syls.size(); ++k) {
        if (syls[k].base != Base::B)
            continue;
        const std::size_t count = Int(abs(syls[k].exp)).get_ui();
        if (stepIndex < seen + count) {
            j = k;
            break;
        }
        seen += count;
    }
    // the feature's first b is the last letter of run j; the second b is
    // the first letter of run j+2, with a single a-run in between
    if (j + 2 >= syls.size() || syls[j + 1].base != Base::A)
        throw std::logic_error("malformed feature split");
    FeatureSplit out;
    std::vector<Syllable> w1(syls.begin(), syls.begin() + j + 1);
    w1.back().exp += tip ? -1 : 1;
    out.w1 = Word::from_syllables(std::move(w1));
    out.feature = Word::b(tip ? 1 : -1) * Word::a(syls[j + 1].exp) *
                  Word::b(tip ? -1 : 1);
    std::vector<Syllable> w2(syls.begin() + j + 2, syls.end());
    w2.front().exp += tip ? 1 : -1;
    out.w2 = Word::from_syllables(std::move(w2));
    return out;
}

namespace {

std::vector<TreeStep> direction_only(const std::vector<TreeStep> &steps) {
    std::vector<TreeStep> d;
    for (auto s : steps)
        d.push_back(TreeStep{s.up, 0});
    return d;
}

// Verifies a sibling move kept the word a good representative with the
// same direction sequence.
void check_move(const Word &original, const Word &moved, GroupParams params) {
    const TreePath a = project_to_tree(original, params);
    const TreePath b = project_to_tree(moved, params);
    if (!b.is_geodesic() ||
        direction_only(a.geodesic) != direction_only(b.geodesic))
        throw std::logic_error("sibling move changed the path shape");
}

} // namespace

std::pair<Word, Word> triplet_moves(const Word &w, std::size_t tipIndex,
                                    GroupParams params) {
    const FeatureSplit s = split_feature(w, tipIndex, true, params);
    Word first = s.w1 * Word::a(1) * s.feature * Word::a(-1) * s.w2;
    Word second = s.w1 * Word::a(-1) * s.feature * Word::a(1) * s.w2;
    check_move(w, first, params);
    check_move(w, second, params);
    return {std::move(first), std::move(second)};
}

Word twin_move(const Word &w, std::size_t valleyIndex, GroupParams params) {
    const FeatureSplit s = split_feature(w, valleyIndex, false, params);
    Word twin = s.w1 * Word::a(-1) * s.feature * Word::a(1) * s.w2;
    check_move(w, twin, params);
    return twin;
}

Word twin_move_reverse(const Word &w, std::size_t valleyIndex,
                       GroupParams params) {
    const FeatureSplit s = split_feature(w, valleyIndex, false, params);
    Word twin = s.w1 * Word::a(1) * s.feature * Word::a(-1) * s.w2;
    check_move(w, twin, params);
    return twin;
}

namespace {

std::string path_key(const std::vector<TreeStep> &steps) {
    std::string k;
    for (const auto &s : steps) {
        k += s.up ? 'u' : 'd';
        k += std::to_string(s.branch);
    }
    return k;
}

bool word_less(const Word &x, const Word &y) {
    const std::string a = x.str(), b = y.str();
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

} // namespace

SiblingComponent sibling_component(const Word &w, std::size_t cap,
                                   GroupParams params) {
    const TreePath start = project_to_tree(w, params);
    if (!start.is_geodesic())
        throw std::invalid_argument("sibling_component expects a good "
                                    "representative");
    {
        const PathClass pc = classify_steps(start.geodesic);
        if (pc.swiss || !pc.endEssential)
            throw std::invalid_argument("sibling_component expects an "
                                        "end-essential nepalese path");
    }

    SiblingComponent out;
    std::map<std::string, Word> seen;
    std::deque<Word> queue;
    const Word canon0 = good_representative(start.geodesic);
    seen.emplace(path_key(start.geodesic), canon0);
    queue.push_back(canon0);

    auto offer = [&](const Word &candidate) {
        const TreePath p = project_to_tree(candidate, params);
        if (!p.is_geodesic())
            return;
        const PathClass pc = classify_steps(p.geodesic);
        if (pc.swiss || !pc.endEssential)
            return;
        std::string key = path_key(p.geodesic);
        if (seen.contains(key))
            return;
        const Word canon = good_representative(p.geodesic);
        seen.emplace(std::move(key), canon);
        queue.push_back(canon);
    };

    while (!queue.empty()) {
        if (seen.size() > cap) {
            out.truncated = true;
            break;
        }
        const Word cur = queue.front();
        queue.pop_front();
        const TreePath p = project_to_tree(cur, params);
        const PathClass pc = classify_steps(p.geodesic);
        for (std::size_t t : pc.tipPositions) {
            auto [first, second] = triplet_moves(cur, t, params);
            offer(first);
            offer(second);
        }
        for (std::size_t v : pc.valleyPositions) {
            offer(twin_move(cur, v, params));
            offer(twin_move_reverse(cur, v, params));
        }
    }

    for (const auto &[key, word] : seen)
        out.members.push_back(word);
    std::sort(out.members.begin(), out.members.end(), word_less);
    out.canonical = out.members.front();
    return out;
}

std::vector<TreeVertex> same_height_neighbors(const TreeVertex &v,
                                              GroupParams params) {
    const Word l = v.representative();
    const Word hop = Word::b() * Word::a() * Word::b(-1); // a^b
    std::vector<TreeVertex> out;
    for (long k = 0; k < 3; ++k)
        out.push_back(TreeVertex::of(l * Word::a(k) * hop, params));
    return out;
}

std::vector<TreeVertex> up_neighbors(const TreeVertex &v, GroupParams params) {
    std::vector<TreeVertex> out;
    const bool parentIsUp = !v.address.empty() && !v.address.back().up;
    if (parentIsUp) {
        TreeVertex parent = v;
        parent.address.pop_back();
        out.push_back(std::move(parent));
    }
    for (long r = 0; r < params.m; ++r) {
        if (parentIsUp && r == 0)
            continue; // would pinch: that edge is the parent
        TreeVertex child = v;
        child.address.push_back(NfLetter{r, true});
        out.push_back(std::move(child));
    }
    return out;
}

std::vector<TreeVertex> down_neighbors(const TreeVertex &v,
                                       GroupParams params) {
    std::vector<TreeVertex> out;
    const bool parentIsDown = !v.address.empty() && v.address.back().up;
    if (parentIsDown) {
        TreeVertex parent = v;
        parent.address.pop_back();
        out.push_back(std::move(parent));
    }
    for (long r = 0; r < params.n; ++r) {
        if (parentIsDown && r == 0)
            continue;
        TreeVertex child = v;
        child.address.push_back(NfLetter{r, false});
        out.push_back(std::move(child));
    }
    return out;
}

ForestBall height_forest_component(const TreeVertex &v, int radius,
                                   GroupParams params) {
    ForestBall ball;
    std::map<TreeVertex, std::size_t> index;
    std::map<TreeVertex, int> depth;
    std::deque<TreeVertex> queue;
    index.emplace(v, 0);
    depth.emplace(v, 0);
    ball.vertices.push_back(v);
    ball.colourPlus.push_back(true);
    queue.push_back(v);
    std::set<std::pair<std::size_t, std::size_t>> edgeSet;
    while (!queue.empty()) {
        const TreeVertex cur = queue.front();
        queue.pop_front();
        const int d = depth.at(cur);
        if (d == radius)
            continue;
        const std::size_t ci = index.at(cur);
        auto nbrs = same_height_neighbors(cur, params);
        if (nbrs.size() != 3 ||
            std::set<TreeVertex>(nbrs.begin(), nbrs.end()).size() != 3)
            ball.threeRegularInterior = false;
        for (const auto &nb : nbrs) {
            auto [it, fresh] = index.emplace(nb, ball.vertices.size());
            if (fresh) {
                ball.vertices.push_back(nb);
                ball.colourPlus.push_back(!ball.colourPlus[ci]);
                depth.emplace(nb, d + 1);
                queue.push_back(nb);
            }
            edgeSet.insert({std::min(ci, it->second),
                            std::max(ci, it->second)});
        }
    }
    ball.edges.assign(edgeSet.begin(), edgeSet.end());
    ball.acyclic = ball.edges.size() + 1 == ball.vertices.size();
    return ball;
}

} // namespace bs23
