#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bs23/britton.hpp"
#include "bs23/word.hpp"

#include <json.hpp>

namespace bs23 {

/// A vertex of the Bass-Serre tree: the left coset of <a> named by its
/// normal-form letter address (tail dropped). Empty address = base vertex.
struct TreeVertex {
    std::vector<NfLetter> address;

    static TreeVertex of(const Word &u, GroupParams params = {});
    long height() const;
    /// Canonical coset representative a^{s_1} b^{e_1} ... a^{s_k} b^{e_k}.
    Word representative() const;
    /// Serialized as direction+residue letters, e.g. "u0 d1 u2".
    std::string str() const;

    friend bool operator==(const TreeVertex &, const TreeVertex &) = default;
    friend auto operator<=>(const TreeVertex &, const TreeVertex &) = default;
};

struct TreeStep {
    bool up;
    long branch;
    friend bool operator==(const TreeStep &, const TreeStep &) = default;
    friend auto operator<=>(const TreeStep &, const TreeStep &) = default;
};

/// The projection of a word to an edge-walk from the base vertex. The raw
/// walk may backtrack (a pinch immediately undoes the previous step); the
/// folded geodesic and the endpoint address are precomputed.
struct TreePath {
    std::vector<TreeStep> steps;    // as walked
    std::vector<TreeStep> geodesic; // folded
    Int tail = 0;                   // position on the final coset line
    bool backtracking = false;

    bool is_geodesic() const { return !backtracking; }
    TreeVertex endpoint() const;
    nlohmann::json to_json() const;
};

TreePath project_to_tree(const Word &u, GroupParams params = {});

/// Canonical good representative of a geodesic path (residue branch
/// exponents, zero tail); rho_a equals the number of steps.
/// Throws std::invalid_argument on non-geodesic input.
Word good_representative(const TreePath &p);
Word good_representative(const std::vector<TreeStep> &steps);

/// Tips (up-then-down), valleys (down-then-up), c = tips + valleys,
/// swissness (a tip and valley sharing an edge) and end-essentiality
/// (not ending in a tip) of a geodesic path.
struct PathClass {
    std::vector<std::size_t> tipPositions;
    std::vector<std::size_t> valleyPositions;
    std::size_t tips() const { return tipPositions.size(); }
    std::size_t valleys() const { return valleyPositions.size(); }
    std::size_t c() const { return tips() + valleys(); }
    bool swiss = false;
    bool endEssential = true;
    bool nepalese() const { return !swiss; }
    nlohmann::json to_json() const;
};

PathClass classify_path(const TreePath &p);
PathClass classify_steps(const std::vector<TreeStep> &directions);

/// Split of a good representative w = w1 * (b^e a^s b^-e) * w2 at the tip
/// (e = 1) or valley (e = -1) whose first step is stepIndex.
struct FeatureSplit {
    Word w1, feature, w2;
};

FeatureSplit split_feature(const Word &w, std::size_t stepIndex, bool tip,
                           GroupParams params = {});

/// The two triplet siblings at the tip starting at step tipIndex:
/// w = w1 B w2 with B = b a^alpha b^-1 yields (w1 a B a^-1 w2,
/// w1 a^-1 B a w2). Both preserve the direction sequence.
std::pair<Word, Word> triplet_moves(const Word &w, std::size_t tipIndex,
                                    GroupParams params = {});

/// The twin at the valley starting at step valleyIndex:
/// w = w1 V w2 with V = b^-1 a^alpha b yields w1 a^-1 V a w2.
Word twin_move(const Word &w, std::size_t valleyIndex,
               GroupParams params = {});

/// Reverse-direction twin w1 a V a^-1 w2 (the symmetric closure of the
/// twin relation needs both directions).
Word twin_move_reverse(const Word &w, std::size_t valleyIndex,
                       GroupParams params = {});

/// Connected component of the sibling relation (triplet and twin moves on
/// end-essential nepalese paths), explored breadth-first up to cap paths.
struct SiblingComponent {
    std::vector<Word> members; // canonical good representatives, sorted
    Word canonical;            // shortest printed form, ties lexicographic
    bool truncated = false;
};

struct SiblingCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SiblingComponent sibling_component(const Word &w, std::size_t cap,
                                   GroupParams params = {});

/// The three same-height neighbours l a^k (b a b^-1) <a> for k = 0,1,2.
std::vector<TreeVertex> same_height_neighbors(const TreeVertex &v,
                                              GroupParams params = {});

/// Tree neighbours of a vertex (3 up, 2 down), as address manipulation.
std::vector<TreeVertex> up_neighbors(const TreeVertex &v,
                                     GroupParams params = {});
std::vector<TreeVertex> down_neighbors(const TreeVertex &v,
                                       GroupParams params = {});

/// BFS ball of the same-height-neighbour forest with its 2-colouring.
struct ForestBall {
    std::vector<TreeVertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<bool> colourPlus; // parallel to vertices
    bool threeRegularInterior = true;
    bool acyclic = true;
};

ForestBall height_forest_component(const TreeVertex &v, int radius,
                                   GroupParams params = {});

} // namespace bs23
