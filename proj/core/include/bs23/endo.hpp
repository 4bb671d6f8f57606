#pragma once

#include <optional>
#include <vector>

#include "bs23/britton.hpp"
#include "bs23/word.hpp"

#include <json.hpp>

namespace bs23 {

/// The epimorphism a |-> a^k, b |-> b, iterated `power` times. phi() has
/// k = 2, phi_prime() k = 3.
struct EndoSpec {
    long aImageExponent = 2;
    long power = 1;

    static EndoSpec phi(long power = 1) { return {2, power}; }
    static EndoSpec phi_prime(long power = 1) { return {3, power}; }

    /// a-exponent multiplier k^power.
    Int scale() const;
};

Word apply_endo(const Word &u, const EndoSpec &e);
bool in_kernel(const Word &u, const EndoSpec &e, GroupParams params = {});

/// { [b^m a b^-m, a] : 0 < m <= n }, the normal generators of Ker(phi^n).
std::vector<Word> kernel_normal_generators(long n);

/// Outcome of a named verification; aggregated into JSON reports.
struct Check {
    std::string name;
    bool pass;
    std::string witness;
};

struct Report {
    std::vector<Check> checks;
    bool all_pass() const;
    nlohmann::json to_json() const;
};

/// Verifies the three commutator identities that reduce the four normal
/// generators of Ker(phi) to conjugates of [a^b,a].
Report check_corollary_identities(GroupParams params = {});

/// Least N <= cap with [b^m a b^-m, b^k a b^-k] in Ker(phi^N), if any.
std::optional<long> limit_commutator_order(long m, long k, long cap,
                                           GroupParams params = {});

/// True iff lambda^2 and mu lambda mu^-1 lambda^-1 mu lambda mu^-1 agree in
/// BS(2,3) under the substitution.
bool tietze_relator_check(const Word &lambda, const Word &mu,
                          GroupParams params = {});

/// Samples random words plus constructed kernel elements and asserts
/// membership in Ker(phi) and Ker(phi') agree on every sample.
Report same_kernel_probe(int sampleCount, int maxLen, unsigned long seed,
                         GroupParams params = {});

} // namespace bs23
