#include "freefusion/partitions.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "freefusion/exact_rank.hpp"

namespace freefusion {

namespace {

constexpr std::size_t kMaxRepresentablePoints = 255;

// n^e, or nullopt once it passes `bound`.
std::optional<std::size_t> bounded_power(std::size_t n, std::size_t e, std::size_t bound) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (n != 0 && acc > bound / n) {
            return std::nullopt;
        }
        acc *= n;
    }
    return acc <= bound ? std::optional(acc) : std::nullopt;
}

// Digits of a multi-index, leftmost most significant, values 1..n.
void decode(std::size_t index, std::size_t n, std::vector<std::size_t>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = index % n + 1;
        index /= n;
    }
}

std::string render_multi_index(const std::vector<std::size_t>& digits) {
    if (digits.empty()) {
        return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(digits[i]);
    }
    return out;
}

}  // namespace

Partition::Partition(std::size_t upper, std::size_t lower,
                     const std::vector<std::vector<Point>>& blocks) {
    const std::size_t total = upper + lower;
    if (total > kMaxRepresentablePoints) {
        throw std::invalid_argument("too many points");
    }
    std::vector<std::size_t> labels(total, static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw std::invalid_argument("empty block");
        }
        for (const Point& p : blocks[b]) {
            const std::size_t limit = p.row == Point::Row::kUpper ? upper : lower;
            if (p.index < 1 || p.index > limit) {
                throw std::invalid_argument("point index out of range");
            }
            const std::size_t slot = p.row == Point::Row::kUpper ? p.index - 1 : upper + p.index - 1;
            if (labels[slot] != static_cast<std::size_t>(-1)) {
                throw std::invalid_argument("blocks overlap");
            }
            labels[slot] = b;
        }
    }
    if (std::find(labels.begin(), labels.end(), static_cast<std::size_t>(-1)) != labels.end()) {
        throw std::invalid_argument("blocks do not cover every point");
    }
    *this = from_labels(upper, lower, labels);
}

Partition Partition::from_labels(std::size_t upper, std::size_t lower,
                                 const std::vector<std::size_t>& labels) {
    if (labels.size() != upper + lower) {
        throw std::invalid_argument("one label per point required");
    }
    if (labels.size() > kMaxRepresentablePoints) {
        throw std::invalid_argument("too many points");
    }
    Partition p;
    p.upper_ = upper;
    p.lower_ = lower;
    std::vector<std::pair<std::size_t, std::uint8_t>> renumber;
    for (std::size_t label : labels) {
        auto it = std::find_if(renumber.begin(), renumber.end(),
                               [&](const auto& entry) { return entry.first == label; });
        if (it == renumber.end()) {
            renumber.emplace_back(label, static_cast<std::uint8_t>(renumber.size()));
            it = renumber.end() - 1;
        }
        p.labels_.push_back(it->second);
    }
    p.block_count_ = renumber.size();
    return p;
}

std::vector<std::vector<Point>> Partition::blocks() const {
    std::vector<std::vector<Point>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i < upper_) {
            out[labels_[i]].push_back({Point::Row::kUpper, i + 1});
        } else {
            out[labels_[i]].push_back({Point::Row::kLower, i - upper_ + 1});
        }
    }
    return out;
}

bool Partition::is_pairing() const {
    std::vector<std::size_t> sizes(block_count_, 0);
    for (auto b : labels_) {
        ++sizes[b];
    }
    return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

std::string Partition::to_string() const {
    std::string out = "{";
    const auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (b > 0) {
            out += '|';
        }
        for (std::size_t i = 0; i < bs[b].size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(bs[b][i].index);
            out += bs[b][i].row == Point::Row::kUpper ? 'u' : 'd';
        }
    }
    return out + "}";
}

std::vector<Partition> enumerate_partitions(std::size_t upper, std::size_t lower,
                                            bool noncrossing_only, const PartitionLimits& limits) {
    const std::size_t total = upper + lower;
    if (total > limits.max_points || total > kMaxRepresentablePoints) {
        throw LimitExceeded("partition enumeration on " + std::to_string(total) +
                            " points exceeds the cap of " + std::to_string(limits.max_points));
    }
    std::vector<Partition> out;
    std::vector<std::size_t> rgs(total, 0);
    // prefix_max[i] = max(rgs[0..i]) so that rgs[i+1] may range up to prefix_max[i] + 1.
    std::vector<std::size_t> prefix_max(total, 0);
    while (true) {
        Partition p = Partition::from_labels(upper, lower, rgs);
        if (!noncrossing_only || is_noncrossing(p)) {
            out.push_back(std::move(p));
        }
        // Rightmost position that can still grow.
        std::size_t i = total;
        while (i > 0 && --i > 0 && rgs[i] > prefix_max[i - 1]) {
        }
        if (i == 0) {
            return out;
        }
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < total; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

bool is_noncrossing(const Partition& p) {
    std::vector<std::size_t> cyclic;
    cyclic.reserve(p.points());
    for (std::size_t a = 0; a < p.upper(); ++a) {
        cyclic.push_back(p.block_of(a));
    }
    for (std::size_t b = p.lower(); b-- > 0;) {
        cyclic.push_back(p.block_of(p.upper() + b));
    }
    // Two blocks cross iff the subsequence restricted to them alternates at
    // least four times (ABAB); a linear run count of 3 or less is nested or
    // disjoint even cyclically.
    for (std::size_t a = 0; a < p.block_count(); ++a) {
        for (std::size_t b = a + 1; b < p.block_count(); ++b) {
            std::size_t runs = 0;
            std::size_t last = static_cast<std::size_t>(-1);
            for (std::size_t x : cyclic) {
                if ((x == a || x == b) && x != last) {
                    ++runs;
                    last = x;
                }
            }
            if (runs >= 4) {
                return false;
            }
        }
    }
    return true;
}

int indicator(const Partition& p, std::span<const std::size_t> upper_values,
              std::span<const std::size_t> lower_values) {
    if (upper_values.size() != p.upper() || lower_values.size() != p.lower()) {
        throw std::invalid_argument("multi-index lengths must match the partition");
    }
    std::vector<std::size_t> value(p.block_count(), 0);
    for (std::size_t i = 0; i < p.points(); ++i) {
        const std::size_t v = i < p.upper() ? upper_values[i] : lower_values[i - p.upper()];
        std::size_t& slot = value[p.block_of(i)];
        if (slot == 0) {
            slot = v;
        } else if (slot != v) {
            return 0;
        }
    }
    return 1;
}

PartitionMap::PartitionMap(Partition source, std::size_t n, const PartitionLimits& limits)
    : source_(std::move(source)), n_(n) {
    if (n == 0) {
        throw std::invalid_argument("dimension n must be at least 1");
    }
    const auto total = bounded_power(n, source_.points(), limits.max_entries);
    if (!total) {
        throw LimitExceeded("n^(k+l) exceeds the cap of " + std::to_string(limits.max_entries) +
                            " matrix entries");
    }
    rows_ = *bounded_power(n, source_.lower(), limits.max_entries);
    cols_ = *bounded_power(n, source_.upper(), limits.max_entries);
    entries_.resize(rows_ * cols_);
    std::vector<std::size_t> i_digits(source_.upper());
    std::vector<std::size_t> j_digits(source_.lower());
    for (std::size_t col = 0; col < cols_; ++col) {
        decode(col, n, i_digits);
        for (std::size_t row = 0; row < rows_; ++row) {
            decode(row, n, j_digits);
            entries_[row * cols_ + col] = static_cast<std::uint8_t>(indicator(source_, i_digits, j_digits));
        }
    }
}

std::string PartitionMap::to_tsv() const {
    std::ostringstream out;
    out << "# T_P " << source_.to_string() << " k=" << source_.upper() << " l=" << source_.lower()
        << " n=" << n_ << " rows=lower multi-index j cols=upper multi-index i"
        << " order=lexicographic, leftmost factor most significant\n";
    std::vector<std::size_t> i_digits(source_.upper());
    std::vector<std::size_t> j_digits(source_.lower());
    out << "j\\i";
    for (std::size_t col = 0; col < cols_; ++col) {
        decode(col, n_, i_digits);
        out << '\t' << render_multi_index(i_digits);
    }
    out << '\n';
    for (std::size_t row = 0; row < rows_; ++row) {
        decode(row, n_, j_digits);
        out << render_multi_index(j_digits);
        for (std::size_t col = 0; col < cols_; ++col) {
            out << '\t' << static_cast<int>(at(row, col));
        }
        out << '\n';
    }
    return out.str();
}

PartitionMap partition_map(const Partition& p, std::size_t n, const PartitionLimits& limits) {
    return PartitionMap(p, n, limits);
}

std::size_t span_rank(const std::vector<Partition>& partitions, std::size_t n,
                      const PartitionLimits& limits) {
    if (partitions.empty()) {
        return 0;
    }
    const std::size_t k = partitions.front().upper();
    const std::size_t l = partitions.front().lower();
    std::vector<PartitionMap> maps;
    maps.reserve(partitions.size());
    for (const auto& p : partitions) {
        if (p.upper() != k || p.lower() != l) {
            throw std::invalid_argument("span_rank needs partitions of a common shape (k,l)");
        }
        maps.emplace_back(p, n, limits);
    }
    // Duplicate and zero columns do not change the rank; keep one of each.
    const std::size_t entries = maps.front().entries().size();
    std::set<std::vector<std::uint8_t>> distinct;
    std::vector<std::uint8_t> column(maps.size());
    for (std::size_t e = 0; e < entries; ++e) {
        bool nonzero = false;
        for (std::size_t r = 0; r < maps.size(); ++r) {
            column[r] = maps[r].entries()[e];
            nonzero = nonzero || column[r] != 0;
        }
        if (nonzero) {
            distinct.insert(column);
        }
    }
    std::vector<std::vector<BigInt>> rows(maps.size());
    for (const auto& col : distinct) {
        for (std::size_t r = 0; r < maps.size(); ++r) {
            rows[r].emplace_back(col[r]);
        }
    }
    return exact_rank(std::move(rows));
}

}  // namespace freefusion
