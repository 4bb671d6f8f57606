#pragma once

#include <optional>
#include <vector>

#include "bs23/word.hpp"

#include <json.hpp>

namespace bs23 {

/// A single-letter pinch b a^{kn} b^-1 (Up) or b^-1 a^{km} b (Down),
/// located at the syllable index of its left stable letter.
struct Pinch {
    enum class Kind { Up, Down };
    std::size_t position;
    Kind kind;
    Int k;
    nlohmann::json to_json() const;
};

/// Outcome of Britton reduction: a replayable pinch trace, and the
/// pinch-free residue (empty iff the input is trivial in the group).
struct BrittonWitness {
    std::vector<Pinch> trace;
    Word reduced;
    bool trivial() const { return reduced.empty(); }
    nlohmann::json trace_to_json() const;
};

/// Leftmost pinch of a freely reduced word, if any.
std::optional<Pinch> find_pinch(const Word &u, GroupParams params = {});

/// Repeatedly removes pinches (b a^{kn} b^-1 -> a^{km} and
/// b^-1 a^{km} b -> a^{kn}) until none remains. Each application strictly
/// decreases rho_a, so this terminates; the residue represents the same
/// group element as the input.
BrittonWitness britton_reduce(const Word &u, GroupParams params = {});

/// Unique right-pushed HNN normal form
/// (a^{s_1} b^{e_1}) ... (a^{s_k} b^{e_k}) a^{tail}: residues s_i are least
/// nonnegative (mod m before b, mod n before b^-1), no pinch survives, and
/// two words are equal in the group iff their normal forms are identical.
struct NfLetter {
    long residue;
    bool up;
    friend bool operator==(const NfLetter &, const NfLetter &) = default;
    friend auto operator<=>(const NfLetter &, const NfLetter &) = default;
};

struct NormalForm {
    std::vector<NfLetter> letters;
    Int tail = 0;

    bool is_identity() const { return letters.empty() && tail == 0; }
    Word to_word() const;
    std::string str() const { return to_word().str(); }
    nlohmann::json to_json() const;
    friend bool operator==(const NormalForm &, const NormalForm &) = default;
};

NormalForm normal_form(const Word &u, GroupParams params = {});

/// Word-problem decision: u = v in BS(n,m).
bool words_equal(const Word &u, const Word &v, GroupParams params = {});
bool is_trivial(const Word &u, GroupParams params = {});

/// Bachet-Bezout merge of a same-sign b-run pair:
/// b^beta a^alpha b^betaPrime = a^{alpha*lambda*m^beta} b^{beta+betaPrime}
/// a^{alpha*mu*n^betaPrime}, where lambda n^beta + mu m^betaPrime = 1.
/// lambda is the least-absolute-residue inverse of n^beta mod m^betaPrime,
/// ties broken toward positive. Requires gcd(n,m) = 1.
Word bezout_merge(long beta, const Int &alpha, long betaPrime,
                  GroupParams params = {});

/// Rewrites a cyclically reduced word into the alternating minimal form:
/// same-sign b-runs are merged via bezout_merge and single-letter pinches
/// removed until the surviving b-runs alternate in sign and no pinch
/// remains. rho_a never increases. Requires gcd(n,m) = 1.
Word minimize_alternating(const Word &u, GroupParams params = {});

} // namespace bs23
