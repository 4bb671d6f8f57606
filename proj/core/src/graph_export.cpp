#include "bs23/graph_export.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bs23/britton.hpp"
#include "bs23/endo.hpp"

namespace bs23 {

namespace {

void check_radius(int radius, int cap) {
    if (radius < 0)
        throw std::invalid_argument("radius must be nonnegative");
    if (radius > cap)
        throw std::invalid_argument("radius exceeds cap of " +
                                    std::to_string(cap));
}

void sort_doc(GraphDoc &doc) {
    std::sort(doc.vertices.begin(), doc.vertices.end(),
              [](const GraphVertex &x, const GraphVertex &y) {
                  return x.id < y.id;
              });
    std::sort(doc.edges.begin(), doc.edges.end(),
              [](const GraphEdge &x, const GraphEdge &y) {
                  return std::tie(x.from, x.label, x.to) <
                         std::tie(y.from, y.label, y.to);
              });
    doc.edges.erase(std::unique(doc.edges.begin(), doc.edges.end(),
                                [](const GraphEdge &x, const GraphEdge &y) {
                                    return x.from == y.from && x.to == y.to &&
                                           x.label == y.label;
                                }),
                    doc.edges.end());
}

std::string vertex_id(const TreeVertex &v) {
    const std::string s = v.str();
    return s.empty() ? "e" : s;
}

// BFS over group elements identified by normal form.
std::map<std::string, Word> element_ball(int radius, GroupParams params) {
    std::map<std::string, Word> ball;
    std::deque<std::pair<Word, int>> queue;
    ball.emplace(normal_form(Word{}, params).str(), Word{});
    queue.push_back({Word{}, 0});
    const std::vector<Word> gens = {Word::a(), Word::a(-1), Word::b(),
                                    Word::b(-1)};
    while (!queue.empty()) {
        auto [g, d] = queue.front();
        queue.pop_front();
        if (d == radius)
            continue;
        for (const auto &x : gens) {
            const Word h = g * x;
            const NormalForm nf = normal_form(h, params);
            if (ball.emplace(nf.str(), nf.to_word()).second)
                queue.push_back({nf.to_word(), d + 1});
        }
    }
    return ball;
}

} // namespace

GraphDoc cayley_ball(int radius, GroupParams params) {
    check_radius(radius, 6);
    const auto ball = element_ball(radius, params);
    GraphDoc doc;
    for (const auto &[id, g] : ball)
        doc.vertices.push_back(
            GraphVertex{id, "group-element", rho(g).get_si(), {}});
    for (const auto &[id, g] : ball) {
        for (const char *label : {"a", "b"}) {
            const Word x = label[0] == 'a' ? Word::a() : Word::b();
            const std::string to = normal_form(g * x, params).str();
            if (ball.contains(to))
                doc.edges.push_back(GraphEdge{id, to, label});
        }
    }
    sort_doc(doc);
    return doc;
}

GraphDoc tree_ball(int radius, GroupParams params) {
    check_radius(radius, 8);
    GraphDoc doc;
    std::map<std::string, TreeVertex> seen;
    std::deque<std::pair<TreeVertex, int>> queue;
    const TreeVertex base{};
    seen.emplace(vertex_id(base), base);
    queue.push_back({base, 0});
    while (!queue.empty()) {
        auto [v, d] = queue.front();
        queue.pop_front();
        if (d == radius)
            continue;
        auto visit = [&](const TreeVertex &u, bool up) {
            const std::string from = vertex_id(up ? v : u);
            const std::string to = vertex_id(up ? u : v);
            doc.edges.push_back(GraphEdge{from, to, "b"});
            if (seen.emplace(vertex_id(u), u).second)
                queue.push_back({u, d + 1});
        };
        for (const auto &u : up_neighbors(v, params))
            visit(u, true);
        for (const auto &u : down_neighbors(v, params))
            visit(u, false);
    }
    for (const auto &[id, v] : seen)
        doc.vertices.push_back(GraphVertex{id, "coset", v.height(), {}});
    sort_doc(doc);
    return doc;
}

GraphDoc height_forest_doc(int radius, GroupParams params) {
    check_radius(radius, 8);
    const ForestBall ball = height_forest_component(TreeVertex{}, radius,
                                                    params);
    GraphDoc doc;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        doc.vertices.push_back(GraphVertex{vertex_id(ball.vertices[i]),
                                           "coset",
                                           ball.vertices[i].height(),
                                           ball.colourPlus[i]});
    for (const auto &[i, j] : ball.edges)
        doc.edges.push_back(GraphEdge{vertex_id(ball.vertices[i]),
                                      vertex_id(ball.vertices[j]), "aTilde"});
    sort_doc(doc);
    return doc;
}

GraphDoc quotient_ball(int radius, GroupParams params) {
    check_radius(radius, 6);
    const auto ball = element_ball(radius, params);
    const EndoSpec phi = EndoSpec::phi();
    auto class_of = [&](const Word &g) {
        return normal_form(apply_endo(g, phi), params).str();
    };
    std::map<std::string, Word> classes;
    for (const auto &[id, g] : ball)
        classes.emplace(class_of(g), g);

    GraphDoc doc;
    for (const auto &[id, g] : classes)
        doc.vertices.push_back(
            GraphVertex{id, "quotient-class", rho(g).get_si(), {}});
    const Word aTilde = commutator(Word::b(), Word::a());
    for (const auto &[id, g] : ball) {
        auto add = [&](const Word &x, const char *label) {
            const std::string from = class_of(g);
            const std::string to = class_of(g * x);
            if (classes.contains(to))
                doc.edges.push_back(GraphEdge{from, to, label});
        };
        add(Word::a(), "a");
        add(Word::b(), "b");
        add(aTilde, "aTilde");
    }
    sort_doc(doc);
    return doc;
}

nlohmann::json GraphDoc::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto &v : vertices) {
        nlohmann::json jv = {{"id", v.id},
                             {"kind", v.kind},
                             {"height", v.height}};
        if (v.colourPlus)
            jv["colour"] = *v.colourPlus ? "plus" : "minus";
        vs.push_back(std::move(jv));
    }
    nlohmann::json es = nlohmann::json::array();
    for (const auto &e : edges)
        es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
    return {{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

std::string emit_json(const GraphDoc &doc) { return doc.to_json().dump(2); }

std::string emit_dot(const GraphDoc &doc) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto &v : doc.vertices) {
        out << "  \"" << v.id << "\" [height_level=" << v.height;
        if (v.colourPlus)
            out << ", colour=\"" << (*v.colourPlus ? "plus" : "minus")
                << "\"";
        out << "];\n";
    }
    for (const auto &e : doc.edges) {
        const char *color = e.label == "a"   ? "red"
                            : e.label == "b" ? "blue"
                                             : "green";
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\""
            << e.label << "\", color=" << color << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_csv(const GraphDoc &doc) {
    std::map<long, std::pair<long, long>> byHeight;
    std::map<std::string, long> heightOf;
    for (const auto &v : doc.vertices) {
        byHeight[v.height].first += 1;
        heightOf[v.id] = v.height;
    }
    for (const auto &e : doc.edges)
        byHeight[heightOf.at(e.from)].second += 1;
    std::ostringstream out;
    out << "height,vertices,edges\n";
    for (const auto &[h, counts] : byHeight)
        out << h << "," << counts.first << "," << counts.second << "\n";
    return out.str();
}

} // namespace bs23
