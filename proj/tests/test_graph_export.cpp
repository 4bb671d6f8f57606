#include <doctest.h>

#include <map>
#include <set>

#include <bs23/graph_export.hpp>
#include <bs23/britton.hpp>
#include <bs23/endo.hpp>

using namespace bs23;

namespace {

std::map<std::string, std::size_t> index_of(const GraphDoc &doc) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < doc.vertices.size(); ++i)
        idx[doc.vertices[i].id] = i;
    return idx;
}

} // namespace

TEST_CASE("cayley_ball radius 1") {
    const auto doc = cayley_ball(1);
    CHECK(doc.vertices.size() == 5);
    CHECK(doc.edges.size() == 4);
    const auto idx = index_of(doc);
    CHECK(idx.count("1") == 1);
    CHECK(idx.count("a") == 1);
    CHECK(idx.count("a^-1") == 1);
    CHECK(idx.count("b") == 1);
    CHECK(idx.count("b^-1") == 1);
}

TEST_CASE("cayley_ball relator cycles close") {
    const auto doc = cayley_ball(4);
    const auto idx = index_of(doc);
    // walk the relator b a^2 b^-1 a^-3 from the identity via edges
    std::map<std::pair<std::string, std::string>, std::string> step;
    for (const auto &e : doc.edges) {
        step[{e.from, e.label}] = e.to;
        step[{e.to, e.label + "^-1"}] = e.from;
    }
    std::string at = "1";
    const char *walk[] = {"b", "a", "a", "b^-1", "a^-1", "a^-1", "a^-1"};
    bool ok = true;
    for (const char *s : walk) {
        auto it = step.find({at, s});
        if (it == step.end()) {
            ok = false;
            break;
        }
        at = it->second;
    }
    CHECK(ok);
    CHECK(at == "1");
    // every vertex id is a canonical normal form (distinct group elements)
    std::set<std::string> ids;
    for (const auto &v : doc.vertices) {
        CHECK(ids.insert(v.id).second);
        const Word w = v.id == "1" ? Word() : Word::parse(v.id);
        CHECK(normal_form(w).str() == v.id);
    }
}

TEST_CASE("tree_ball sizes") {
    CHECK(tree_ball(0).vertices.size() == 1);
    const auto t1 = tree_ball(1);
    CHECK(t1.vertices.size() == 6);
    CHECK(t1.edges.size() == 5);
    const auto t2 = tree_ball(2);
    CHECK(t2.vertices.size() == 26);
    CHECK(t2.edges.size() == 25);
    for (const auto &e : t2.edges)
        CHECK(e.label == "b");
}

TEST_CASE("height_forest_doc") {
    const auto doc = height_forest_doc(1);
    CHECK(doc.vertices.size() == 4);
    CHECK(doc.edges.size() == 3);
    const auto idx = index_of(doc);
    for (const auto &e : doc.edges) {
        CHECK(e.label == "aTilde");
        const auto &u = doc.vertices[idx.at(e.from)];
        const auto &v = doc.vertices[idx.at(e.to)];
        REQUIRE(u.colourPlus.has_value());
        REQUIRE(v.colourPlus.has_value());
        CHECK(*u.colourPlus != *v.colourPlus);
        CHECK(u.height == v.height);
    }
}

TEST_CASE("quotient_ball") {
    const auto doc = quotient_ball(4);
    const auto idx = index_of(doc);
    // class(a^k) is the class of a^{2k}
    CHECK(idx.count(normal_form(Word::parse("a^2")).str()) == 1);
    // aTilde from the identity class reaches class(a): odd powers appear
    bool foundTilde = false;
    for (const auto &e : doc.edges) {
        if (e.label == "aTilde" && e.from == "1") {
            foundTilde = true;
            CHECK(e.to == "a");
        }
    }
    CHECK(foundTilde);
    // class ids are phi-image normal forms, pairwise distinct
    std::set<std::string> ids;
    for (const auto &v : doc.vertices)
        CHECK(ids.insert(v.id).second);
    CHECK(ids.count("1") == 1);
    CHECK(ids.count("a") == 1);
}

TEST_CASE("emitters are deterministic and well formed") {
    const auto doc = cayley_ball(2);
    CHECK(emit_dot(doc) == emit_dot(doc));
    CHECK(emit_json(doc) == emit_json(doc));
    CHECK(emit_csv(doc) == emit_csv(doc));
    const std::string dot = emit_dot(doc);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("}") != std::string::npos);
    const auto parsed = nlohmann::json::parse(emit_json(doc));
    CHECK(parsed.contains("vertices"));
    CHECK(parsed.contains("edges"));
    CHECK(parsed["vertices"].size() == doc.vertices.size());
    const std::string csv = emit_csv(doc);
    CHECK(csv.rfind("height,", 0) == 0);
    const auto again = cayley_ball(2);
    CHECK(emit_json(again) == emit_json(doc));
}

TEST_CASE("radius caps") {
    CHECK_THROWS_AS(cayley_ball(7), std::invalid_argument);
    CHECK_THROWS_AS(tree_ball(9), std::invalid_argument);
    CHECK_THROWS_AS(quotient_ball(7), std::invalid_argument);
    CHECK_THROWS_AS(height_forest_doc(9), std::invalid_argument);
}
