#pragma once

#include "platt/glattice.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace platt {

/// Deterministic description of a generated lattice instance.
struct InstanceSpec {
    std::uint64_t seed = 1;
    long p = 2;
    int n = 1;
    std::string kind = "trivial"; // trivial | regular | augmentation |
                                  // permutation+conjugate | kernel-of-random-perm-map
    std::vector<long> multiplicities; // orbit counts per level, may be empty
};

/// Product of seeded elementary matrices with off-diagonal entries
/// bounded by p^2 in absolute value.
Matrix random_unimodular(long p, std::size_t r, std::mt19937_64& rng);

std::vector<long> random_multiplicities(long p, int n, long max_rank, std::mt19937_64& rng);

/// Builds the instance described by spec; identical specs give identical
/// lattices. Throws Error("BadSpec") for unknown kinds.
GLattice generate_lattice(const InstanceSpec& spec);

/// Mixed-kind random lattice of rank between 1 and max_rank.
GLattice random_lattice(long p, int n, long max_rank, std::mt19937_64& rng);

} // namespace platt
