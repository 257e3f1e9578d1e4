#ifndef FREEFUSION_PARTITIONS_HPP
#define FREEFUSION_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace freefusion {

/// Raised when a computation would exceed its configured size cap.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PartitionLimits {
    /// Upper bound on k + l for enumeration.
    std::size_t max_points = 12;
    /// Upper bound on n^(k+l), the number of entries of a T_P matrix.
    std::size_t max_entries = 1'000'000;
};

/// A point of a two-row diagram: upper row i (1-based) or lower row j.
struct Point {
    enum class Row : std::uint8_t { kUpper, kLower };
    Row row;
    std::size_t index;  // 1-based

    friend bool operator==(const Point&, const Point&) = default;
};

/// Set partition of k upper and l lower points.
///
/// Internally a restricted growth string over the points in the order
/// upper 1..k, lower 1..l: block ids appear in order of first occurrence.
class Partition {
public:
    /// Throws std::invalid_argument unless the blocks are disjoint, non-empty
    /// and cover every point exactly once.
    Partition(std::size_t upper, std::size_t lower, const std::vector<std::vector<Point>>& blocks);

    /// From per-point block labels (any integers); normalized on construction.
    static Partition from_labels(std::size_t upper, std::size_t lower,
                                 const std::vector<std::size_t>& labels);

    std::size_t upper() const { return upper_; }
    std::size_t lower() const { return lower_; }
    std::size_t points() const { return upper_ + lower_; }
    std::size_t block_count() const { return block_count_; }
    /// Block id of point p (0-based point index: upper first, then lower).
    std::size_t block_of(std::size_t point) const { return labels_[point]; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }
    std::vector<std::vector<Point>> blocks() const;

    /// True if every block has exactly two points.
    bool is_pairing() const;

    /// Block notation, e.g. `{1u,2u|1d}`; `{}` for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition() = default;

    std::size_t upper_ = 0;
    std::size_t lower_ = 0;
    std::size_t block_count_ = 0;
    std::vector<std::uint8_t> labels_;
};

/// All partitions of k + l points in restricted-growth-string order,
/// optionally only the non-crossing ones.
std::vector<Partition> enumerate_partitions(std::size_t upper, std::size_t lower,
                                            bool noncrossing_only,
                                            const PartitionLimits& limits = {});

/// Non-crossing in the cyclic boundary order upper 1..k, then lower l..1: no
/// two blocks interleave.
bool is_noncrossing(const Partition& p);

/// P(i, j): 1 iff every block is constant on the values assigned to its
/// points. Values are 1..n. Throws std::invalid_argument on length mismatch.
int indicator(const Partition& p, std::span<const std::size_t> upper_values,
              std::span<const std::size_t> lower_values);

/// T_P as a dense n^l x n^k 0/1 matrix. Multi-indices are ordered
/// lexicographically with the leftmost tensor factor most significant;
/// column i holds P(i, j) over all rows j.
class PartitionMap {
public:
    PartitionMap(Partition source, std::size_t n, const PartitionLimits& limits = {});

    const Partition& source() const { return source_; }
    std::size_t n() const { return n_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    /// Row-major entries.
    const std::vector<std::uint8_t>& entries() const { return entries_; }

    /// Header line naming (k,l,n) and the ordering, then one TSV row per row.
    std::string to_tsv() const;

private:
    Partition source_;
    std::size_t n_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> entries_;
};

PartitionMap partition_map(const Partition& p, std::size_t n, const PartitionLimits& limits = {});

/// Rank over Q of the span of the flattened T_P, by fraction-free elimination.
/// All partitions must share (k, l). Throws std::invalid_argument otherwise.
std::size_t span_rank(const std::vector<Partition>& partitions, std::size_t n,
                      const PartitionLimits& limits = {});

}  // namespace freefusion

#endif  // FREEFUSION_PARTITIONS_HPP
