#include <gtest/gtest.h>

#include <cstdint>

#include "freefusion/acceptance.hpp"
#include "freefusion/exact_rank.hpp"
#include "freefusion/partitions.hpp"

using namespace freefusion;

namespace {

// Position of each point in the cyclic order: upper 1..k then lower l..1.
std::vector<std::size_t> cyclic_positions(const Partition& p) {
    std::vector<std::size_t> pos(p.points());
    for (std::size_t i = 0; i < p.upper(); ++i) {
        pos[i] = i;
    }
    for (std::size_t j = 0; j < p.lower(); ++j) {
        pos[p.upper() + j] = p.upper() + (p.lower() - 1 - j);
    }
    return pos;
}

// Two blocks cross iff a < b < c < d with a, c in one and b, d in the other.
bool brute_force_noncrossing(const Partition& p) {
    const auto pos = cyclic_positions(p);
    std::vector<std::size_t> at(p.points());
    for (std::size_t i = 0; i < p.points(); ++i) {
        at[pos[i]] = i;
    }
    const std::size_t n = p.points();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                for (std::size_t d = c + 1; d < n; ++d) {
                    const auto ba = p.block_of(at[a]);
                    const auto bb = p.block_of(at[b]);
                    if (ba != bb && ba == p.block_of(at[c]) && bb == p.block_of(at[d])) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows) {
    constexpr std::int64_t kP = 1'000'000'007;
    auto inverse = [](std::int64_t a) {
        std::int64_t result = 1;
        for (std::int64_t e = kP - 2; e > 0; e >>= 1, a = a * a % kP) {
            if (e & 1) {
                result = result * a % kP;
            }
        }
        return result;
    };
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const std::int64_t inv = inverse(rows[rank][c]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::int64_t f = rows[r][c] * inv % kP;
            for (std::size_t j = c; j < cols; ++j) {
                rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % kP + kP) % kP;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::int64_t> flatten(const Partition& p, std::size_t n) {
    const PartitionMap m = partition_map(p, n);
    return {m.entries().begin(), m.entries().end()};
}

}  // namespace

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(enumerate_partitions(0, 4, true).size(), 14u);
    EXPECT_EQ(enumerate_partitions(0, 3, false).size(), 5u);
    const auto empty = enumerate_partitions(0, 0, false);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty.front().to_string(), "{}");
    EXPECT_EQ(enumerate_partitions(2, 2, false).size(), 15u);
}

TEST(Enumerate, CatalanAndBell) {
    for (unsigned k = 0; k <= 9; ++k) {
        EXPECT_EQ(BigInt(enumerate_partitions(0, k, true).size()), acceptance::catalan(k));
    }
    for (unsigned k = 0; k <= 7; ++k) {
        EXPECT_EQ(BigInt(enumerate_partitions(0, k, false).size()), acceptance::bell(k));
    }
    EXPECT_EQ(acceptance::catalan(10), 16796);
    EXPECT_EQ(acceptance::bell(8), 4140);
}

TEST(Enumerate, OutputIsCanonicalAndDistinct) {
    const auto parts = enumerate_partitions(2, 3, false);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        EXPECT_NE(parts[i - 1], parts[i]);
    }
    EXPECT_EQ(parts.front().to_string(), "{1u,2u,1d,2d,3d}");
}

TEST(Enumerate, RespectsCaps) {
    EXPECT_THROW(enumerate_partitions(7, 7, false), LimitExceeded);
    PartitionLimits tight;
    tight.max_points = 3;
    EXPECT_THROW(enumerate_partitions(2, 2, true, tight), LimitExceeded);
}

TEST(Noncrossing, Examples) {
    const Partition crossing = Partition::from_labels(0, 4, std::vector<std::size_t>{0, 1, 0, 1});
    const Partition nested = Partition::from_labels(0, 4, std::vector<std::size_t>{0, 1, 1, 0});
    EXPECT_FALSE(is_noncrossing(crossing));
    EXPECT_TRUE(is_noncrossing(nested));
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::size_t> labels;
        for (std::size_t i = 0; i < 2 * k; ++i) {
            labels.push_back(i % k);
        }
        EXPECT_TRUE(is_noncrossing(Partition::from_labels(k, k, labels))) << k;
    }
}

TEST(Noncrossing, AgreesWithBruteForce) {
    for (std::size_t total = 0; total <= 6; ++total) {
        for (std::size_t k = 0; k <= total; ++k) {
            for (const auto& p : enumerate_partitions(k, total - k, false)) {
                EXPECT_EQ(is_noncrossing(p), brute_force_noncrossing(p)) << p.to_string();
            }
        }
    }
}

TEST(Indicator, Examples) {
    const Partition block = Partition::from_labels(2, 0, std::vector<std::size_t>{0, 0});
    const std::size_t same[] = {2, 2};
    const std::size_t diff[] = {1, 2};
    EXPECT_EQ(indicator(block, same, {}), 1);
    EXPECT_EQ(indicator(block, diff, {}), 0);
    const Partition singletons = Partition::from_labels(0, 2, std::vector<std::size_t>{0, 1});
    EXPECT_EQ(indicator(singletons, {}, diff), 1);
}

TEST(PartitionMaps, Examples) {
    const PartitionMap id = partition_map(Partition::from_labels(1, 1, std::vector<std::size_t>{0, 0}), 3);
    ASSERT_EQ(id.rows(), 3u);
    ASSERT_EQ(id.cols(), 3u);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            EXPECT_EQ(id.at(r, c), r == c ? 1 : 0);
        }
    }
    const PartitionMap pair = partition_map(Partition::from_labels(2, 0, std::vector<std::size_t>{0, 0}), 2);
    ASSERT_EQ(pair.rows(), 1u);
    EXPECT_EQ(pair.entries(), (std::vector<std::uint8_t>{1, 0, 0, 1}));
    const PartitionMap ones = partition_map(Partition::from_labels(0, 2, std::vector<std::size_t>{0, 1}), 2);
    EXPECT_EQ(ones.rows(), 4u);
    EXPECT_EQ(ones.cols(), 1u);
    EXPECT_EQ(ones.entries(), (std::vector<std::uint8_t>{1, 1, 1, 1}));
    EXPECT_EQ(pair.to_tsv().rfind("# T_P", 0), 0u);
}

TEST(PartitionMaps, RespectCaps) {
    PartitionLimits tight;
    tight.max_entries = 100;
    EXPECT_THROW(partition_map(Partition::from_labels(0, 4, std::vector<std::size_t>{0, 1, 2, 3}), 4, tight),
                 LimitExceeded);
}

TEST(Rank, Examples) {
    EXPECT_EQ(span_rank(enumerate_partitions(0, 2, true), 2), 2u);
    for (const auto& p : enumerate_partitions(1, 2, false)) {
        EXPECT_EQ(span_rank({p}, 1), 1u);
        EXPECT_EQ(span_rank({p}, 3), 1u);
    }
    EXPECT_EQ(span_rank(enumerate_partitions(0, 4, true), 4), 14u);
    // At n = 2 only kernels with at most two blocks survive: 1 + 7.
    EXPECT_EQ(span_rank(enumerate_partitions(0, 4, false), 2), 8u);
    EXPECT_EQ(span_rank({}, 3), 0u);
}

TEST(Rank, AgreesWithModularElimination) {
    for (std::size_t k = 0; k <= 2; ++k) {
        for (std::size_t l = 0; l <= 3; ++l) {
            for (std::size_t n = 1; n <= 3; ++n) {
                for (bool nc : {true, false}) {
                    const auto parts = enumerate_partitions(k, l, nc);
                    std::vector<std::vector<std::int64_t>> rows;
                    for (const auto& p : parts) {
                        rows.push_back(flatten(p, n));
                    }
                    EXPECT_EQ(span_rank(parts, n), rank_mod_p(rows))
                        << k << ' ' << l << ' ' << n << ' ' << nc;
                }
            }
        }
    }
}

TEST(Rank, MonotoneAndBounded) {
    const auto parts = enumerate_partitions(1, 3, false);
    for (std::size_t n : {1, 2, 3}) {
        std::size_t previous = 0;
        std::size_t dim = 1;
        for (int i = 0; i < 4; ++i) {
            dim *= n;
        }
        for (std::size_t len = 0; len <= parts.size(); ++len) {
            const std::vector<Partition> prefix(parts.begin(), parts.begin() + len);
            const std::size_t r = span_rank(prefix, n);
            EXPECT_GE(r, previous);
            EXPECT_LE(r, std::min(len, dim));
            previous = r;
        }
    }
}

TEST(ExactRank, HandlesLargeEntries) {
    const BigInt big = BigInt(1) << 200;
    EXPECT_EQ(exact_rank({{big, 1}, {big * 2, 2}}), 1u);
    EXPECT_EQ(exact_rank({{big, 1}, {1, big}}), 2u);
    EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(exact_rank({}), 0u);
}
