#ifndef FREEFUSION_EXACT_RANK_HPP
#define FREEFUSION_EXACT_RANK_HPP

#include <cstddef>
#include <vector>

#include "freefusion/bigint.hpp"

namespace freefusion {

/// Rank of an integer matrix (rows of equal length) over Q, by Bareiss
/// fraction-free elimination. Every division is exact.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace freefusion

#endif  // FREEFUSION_EXACT_RANK_HPP
