#include <doctest.h>

#include <random>
#include <set>

#include <bs23/tree.hpp>

using namespace bs23;

TEST_CASE("project_to_tree on a kernel generator") {
    const auto p = project_to_tree(Word::parse("[b a b^-1, a]"));
    REQUIRE(p.geodesic.size() == 4);
    CHECK(p.geodesic[0] == TreeStep{true, 0});
    CHECK(p.geodesic[1] == TreeStep{false, 1});
    CHECK(p.geodesic[2] == TreeStep{true, 1});
    CHECK(p.geodesic[3] == TreeStep{false, 1});
    CHECK(p.tail == -4);
    CHECK(p.is_geodesic());
    CHECK(p.endpoint().height() == 0);
}

TEST_CASE("backtracking detection") {
    const auto p = project_to_tree(Word::parse("b a^2 b^-1"));
    CHECK(p.backtracking);
    CHECK_FALSE(p.is_geodesic());
    CHECK(p.geodesic.empty());
    CHECK(p.tail == 3);
    CHECK(p.endpoint().address.empty());

    const auto q = project_to_tree(Word::parse("b a b^-1"));
    CHECK(q.is_geodesic());
    CHECK(q.geodesic.size() == 2);
}

TEST_CASE("endpoint matches normal form address") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 500; ++i) {
        const Word u = random_word(rng, 10, 5);
        const auto p = project_to_tree(u);
        const auto nf = normal_form(u);
        REQUIRE(p.endpoint().address == nf.letters);
        CHECK(p.tail == nf.tail);
        CHECK(height(u) == p.endpoint().height());
        CHECK(p.geodesic.size() <= p.steps.size());
    }
}

TEST_CASE("TreeVertex representative and str") {
    const auto v = TreeVertex::of(Word::parse("[b a b^-1, a]"));
    CHECK(v.str() == "u0 d1 u1 d1");
    CHECK(v.representative().str() == "b a b^-1 a b a b^-1");
    CHECK(v.height() == 0);
    CHECK(TreeVertex::of(Word::parse("a^5")).address.empty());
    CHECK(TreeVertex::of(Word()).str().empty());
}

TEST_CASE("good_representative") {
    const auto p = project_to_tree(Word::parse("[b a b^-1, a]"));
    CHECK(good_representative(p).str() == "b a b^-1 a b a b^-1");
    CHECK(good_representative(project_to_tree(Word::parse("b^3"))).str() ==
          "b^3");
    CHECK_THROWS_AS(
        good_representative(project_to_tree(Word::parse("b a^2 b^-1"))),
        std::invalid_argument);
    // good representative projects back to the same geodesic with zero tail
    const Word g = good_representative(p);
    const auto q = project_to_tree(g);
    CHECK(q.is_geodesic());
    CHECK(q.geodesic == p.geodesic);
    CHECK(q.tail == 0);
}

TEST_CASE("classify_path") {
    const auto kc = classify_path(project_to_tree(Word::parse("[b a b^-1, a]")));
    CHECK(kc.tips() == 2);
    CHECK(kc.valleys() == 1);
    CHECK(kc.c() == 3);
    CHECK(kc.swiss);
    CHECK_FALSE(kc.nepalese());
    CHECK_FALSE(kc.endEssential); // ends with a tip

    const auto up = classify_path(project_to_tree(Word::parse("b^3")));
    CHECK(up.c() == 0);
    CHECK(up.nepalese());
    CHECK(up.endEssential);

    const auto tip = classify_path(project_to_tree(Word::parse("b a b^-1")));
    CHECK(tip.tips() == 1);
    CHECK(tip.swiss == false);
    CHECK_FALSE(tip.endEssential);

    const auto mm = classify_path(project_to_tree(Word::parse("b^2 a b^-2")));
    CHECK(mm.tips() == 1);
    CHECK(mm.valleys() == 0);
    CHECK_FALSE(mm.swiss);
    CHECK(mm.endEssential);
}

TEST_CASE("split_feature") {
    const Word w = Word::parse("b^2 a b^-2");
    const auto fs = split_feature(w, 1, true);
    CHECK(fs.w1.str() == "b");
    CHECK(fs.feature.str() == "b a b^-1");
    CHECK(fs.w2.str() == "b^-1");
    CHECK(fs.w1 * fs.feature * fs.w2 == w);
}

TEST_CASE("triplet_moves") {
    const auto [t1, t2] = triplet_moves(Word::parse("b^2 a b^-2"), 1);
    CHECK(t1.str() == "b a b a b^-1 a^-1 b^-1");
    CHECK(t2.str() == "b a^-1 b a b^-1 a b^-1");
    for (const Word &t : {t1, t2}) {
        const auto p = project_to_tree(t);
        CHECK(p.is_geodesic());
        CHECK(p.geodesic.size() == 4);
    }

    const auto [s1, s2] = triplet_moves(Word::parse("b a b^-1"), 0);
    CHECK(s1.str() == "a b a b^-1 a^-1");
    CHECK(s2.str() == "a^-1 b a b^-1 a");
}

TEST_CASE("twin moves") {
    CHECK(twin_move(Word::parse("b^-1 a b"), 0).str() == "a^-1 b^-1 a b a");
    CHECK(twin_move(Word::parse("b^-1 a^-1 b"), 0).str() ==
          "a^-1 b^-1 a^-1 b a");
    CHECK(twin_move_reverse(Word::parse("a^-1 b^-1 a b a"), 0).str() ==
          "b^-1 a b");
    const Word w = Word::parse("b^-1 a^2 b");
    const Word tw = twin_move(w, 0);
    const auto p = project_to_tree(tw);
    CHECK(p.is_geodesic());
    CHECK(p.geodesic.size() == 2);
}

TEST_CASE("sibling_component basics") {
    const auto solo = sibling_component(Word::parse("b^3"), 1000);
    CHECK(solo.members.size() == 1);
    CHECK(solo.canonical.str() == "b^3");
    CHECK_FALSE(solo.truncated);

    const auto comp = sibling_component(Word::parse("b^2 a b^-2"), 5000);
    CHECK(comp.canonical.str() == "b^2 a b^-2");
    CHECK(comp.members.size() >= 3);
    for (const auto &m : comp.members) {
        const auto p = project_to_tree(m);
        CHECK(p.is_geodesic());
        const auto cls = classify_path(p);
        CHECK(cls.nepalese());
        CHECK(cls.endEssential);
        CHECK(p.geodesic.size() == 4);
    }
}

TEST_CASE("same_height_neighbors of the base vertex") {
    const TreeVertex base;
    const auto nb = same_height_neighbors(base);
    REQUIRE(nb.size() == 3);
    std::set<std::string> got;
    for (const auto &v : nb)
        got.insert(v.str());
    CHECK(got == std::set<std::string>{"u0 d1", "u1 d1", "u2 d1"});
    for (const auto &v : nb)
        CHECK(v.height() == 0);
}

TEST_CASE("up and down neighbors") {
    const TreeVertex base;
    const auto up = up_neighbors(base);
    const auto down = down_neighbors(base);
    CHECK(up.size() == 3);
    CHECK(down.size() == 2);
    std::set<std::string> all;
    for (const auto &v : up) {
        CHECK(v.height() == 1);
        all.insert(v.str());
    }
    for (const auto &v : down) {
        CHECK(v.height() == -1);
        all.insert(v.str());
    }
    CHECK(all.size() == 5);

    // neighbor relation is symmetric
    for (const auto &v : up) {
        const auto back = down_neighbors(v);
        bool found = false;
        for (const auto &w : back)
            found = found || (w == base);
        CHECK(found);
    }
    for (const auto &v : down) {
        const auto back = up_neighbors(v);
        bool found = false;
        for (const auto &w : back)
            found = found || (w == base);
        CHECK(found);
    }
}

TEST_CASE("height_forest_component") {
    const auto ball1 = height_forest_component(TreeVertex{}, 1);
    CHECK(ball1.vertices.size() == 4);
    CHECK(ball1.edges.size() == 3);
    CHECK(ball1.acyclic);

    const auto ball2 = height_forest_component(TreeVertex{}, 2);
    CHECK(ball2.vertices.size() == 10);
    CHECK(ball2.edges.size() == 9);
    CHECK(ball2.acyclic);
    CHECK(ball2.threeRegularInterior);
    // proper 2-colouring
    for (const auto &[i, j] : ball2.edges)
        CHECK(ball2.colourPlus[i] != ball2.colourPlus[j]);
}
