#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pal/poset.hpp"

namespace pal::corpus {

/// One representative per isomorphism class of posets with exactly n
/// elements (n <= 7). Elements are named a, b, c, ...; order is deterministic.
std::vector<PosetPtr> nonisomorphic(std::size_t n);

/// All classes with 1..max_n elements, smallest first.
std::vector<PosetPtr> up_to(std::size_t max_n);

/// Seeded random posets with exactly n elements; density drawn per poset.
std::vector<PosetPtr> random(std::size_t count, std::size_t n, std::uint64_t seed);

/// Minimum over relabelings of the order matrix packed row-major (n <= 8).
std::uint64_t canonical_code(const Poset& p);

}  // namespace pal::corpus
