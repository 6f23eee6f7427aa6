#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geodetic/numeric.hpp"

namespace geodetic {

struct FactorLimits {
    // Cofactors larger than this that are not (probable) primes raise
    // ResourceLimitError instead of being attacked further.
    Int cofactor_bound = default_cofactor_bound();

    // Process-wide default, 2^64 unless reconfigured (CLI --factor-limit).
    static Int& default_cofactor_bound();
};

// Primality: deterministic Miller-Rabin below 2^64, strong probable-prime
// testing (GMP) above.
bool is_prime(const Int& n);

// Prime factorization n = prod p^e, pairs sorted by p.
// Trial division to 10^6, then Pollard rho on sub-bound cofactors.
std::vector<std::pair<Int, int>> factorize(const Int& n, const FactorLimits& limits = {});

// n = s^2 * d with d square-free; returns (s, d).
std::pair<Int, Int> squarefree_part(const Int& n, const FactorLimits& limits = {});

bool is_squarefree(const Int& n, const FactorLimits& limits = {});

// Square root of c mod an odd prime p (Tonelli-Shanks).
// Returns the root u with 0 <= u <= (p-1)/2, or nullopt for non-residues.
std::optional<Int> sqrt_mod(const Int& c, const Int& p);

// All square roots of c mod m (m >= 1, factored internally), each in [0, m).
std::vector<Int> sqrt_mod_all(const Int& c, const Int& m, const FactorLimits& limits = {});

// Solves a^2 + d*b^2 = 4m with a, b > 0 and coordinates admissible in O_d
// (both even unless d = 3 mod 4). Among all solutions returns the one with
// the smallest b (then smallest a); nullopt if none exists.
std::optional<std::pair<Int, Int>> cornacchia(const Int& m, const Int& d,
                                              const FactorLimits& limits = {});

// Exhaustive-search reference for cornacchia; only valid for 4m/d <= 10^6.
std::optional<std::pair<Int, Int>> cornacchia_brute(const Int& m, const Int& d);

const std::vector<long>& small_primes();  // primes below 10^6

}  // namespace geodetic
