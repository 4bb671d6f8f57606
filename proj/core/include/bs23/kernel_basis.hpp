#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bs23/endo.hpp"
#include "bs23/tree.hpp"
#include "bs23/word.hpp"

#include <json.hpp>

namespace bs23 {

/// One element of the free basis S of Ker(phi): w a^i [a^b,a]^j a^-i w^-1
/// with i in {0,1}, j in {-1,+1}. In final decompositions the conjugator
/// is the canonical good representative of an end-essential nepalese
/// sibling component; intermediate pipeline stages carry arbitrary words.
struct BasisElement {
    Word conjugator;
    int offset = 0;
    int sign = 1;

    Word word() const;
    BasisElement inverse() const {
        return BasisElement{conjugator, offset, -sign};
    }
    nlohmann::json to_json() const;
    friend bool operator==(const BasisElement &, const BasisElement &) =
        default;
};

struct Decomposition {
    std::vector<BasisElement> factors;
    bool certified = false;

    Word product() const;
    nlohmann::json to_json() const;
};

struct NonKernel : std::runtime_error {
    Word image; // the nontrivial phi-image witness
    explicit NonKernel(Word w)
        : std::runtime_error("not in Ker(phi); image " + w.str()),
          image(std::move(w)) {}
};

/// The four generators of the fiber F2: (i,j) in {0,1} x {-1,+1},
/// identity conjugator.
std::vector<BasisElement> fiber_generators();

/// Expresses a^k [a^b,a]^j a^-k as a reduced product of fiber generators,
/// using the period-3 relation (bab^-1)^2 = a^3. Certified internally.
std::vector<std::pair<int, int>> fiber_reduce(const Int &k, int j,
                                              GroupParams params = {});

/// Lemma-2 extraction: factorizes a kernel element into conjugates of
/// [a^b,a]^{+-1} with offsets already forced into {0,1}. Each extraction
/// lowers rho_a of the remainder by exactly 2. Throws NonKernel.
std::vector<BasisElement> conjugate_factorize(const Word &u,
                                              GroupParams params = {});

/// One swiss-elimination step on a factor whose conjugator path is swiss:
/// returns factors whose conjugators have strictly smaller rho_a.
/// Throws std::invalid_argument on non-swiss input.
std::vector<BasisElement> swiss_reduce(const BasisElement &f,
                                       GroupParams params = {});

/// Strips the trailing tip of a non-end-essential nepalese conjugator,
/// rewriting through the fiber F2 (bounded search, at most 4 generators).
/// Throws std::invalid_argument on end-essential input.
std::vector<BasisElement> end_reduce(const BasisElement &f,
                                     GroupParams params = {});

/// Moves the conjugator one sibling step toward its component's canonical
/// representative, emitting correction factors with strictly smaller c.
/// Throws std::invalid_argument if the conjugator is already canonical.
std::vector<BasisElement> sibling_reduce(const BasisElement &f,
                                         std::size_t siblingCap = 10000,
                                         GroupParams params = {});

/// Full pipeline: conjugate_factorize, then per-factor swiss / end /
/// sibling / fiber reduction until every conjugator is a canonical
/// O-representative; adjacent inverse factors cancelled; certificate
/// checked by words_equal. Throws NonKernel and SiblingCapExceeded.
Decomposition decompose(const Word &u, std::size_t siblingCap = 10000,
                        GroupParams params = {});

/// All basis elements whose conjugator path length is at most depth.
std::vector<BasisElement> basis_up_to(int depth, std::size_t siblingCap =
                                                     10000,
                                      GroupParams params = {});

/// Samples reduced S-expressions and asserts every product is nontrivial;
/// also exhausts fiber words of length <= fiberLen.
Report freeness_probe(int trials, int maxFactors, int conjBound,
                      unsigned long seed, int fiberLen = 8,
                      GroupParams params = {});

} // namespace bs23
