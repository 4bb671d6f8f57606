#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bs23/tree.hpp"
#include "bs23/word.hpp"

#include <json.hpp>

namespace bs23 {

struct GraphVertex {
    std::string id;
    std::string kind; // group-element | coset | quotient-class
    long height = 0;
    std::optional<bool> colourPlus;
};

struct GraphEdge {
    std::string from;
    std::string to;
    std::string label; // a | b | aTilde
};

struct GraphDoc {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;
    nlohmann::json to_json() const;
};

/// Ball of the Cayley graph (generators a, b) around the identity,
/// vertices named by normal forms. Radius capped at 6.
GraphDoc cayley_ball(int radius, GroupParams params = {});

/// Ball of the Bass-Serre tree around <a>, vertices named by coset
/// addresses. Radius capped at 8.
GraphDoc tree_ball(int radius, GroupParams params = {});

/// Ball of the same-height-neighbour forest around <a> with its
/// 2-colouring. Radius capped at 8.
GraphDoc height_forest_doc(int radius, GroupParams params = {});

/// phi-quotient of the Cayley ball: classes named by phi-image normal
/// forms, with aBar, bBar and aTilde (class of [b,a]) edges. Radius
/// capped at 6.
GraphDoc quotient_ball(int radius, GroupParams params = {});

std::string emit_dot(const GraphDoc &doc);
std::string emit_json(const GraphDoc &doc);
/// Per-height vertex and edge counts.
std::string emit_csv(const GraphDoc &doc);

} // namespace bs23
