#include "freefusion/exact_rank.hpp"

#include <stdexcept>
#include <utility>

namespace freefusion {

std::size_t exact_rank(std::vector<std::vector<BigInt>> rows) {
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("ragged matrix");
        }
    }

    std::size_t rank = 0;
    BigInt previous_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const BigInt& p = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const BigInt factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                BigInt numerator = p * rows[r][c] - factor * rows[rank][c];
                BigInt quotient;
                BigInt remainder;
                boost::multiprecision::divide_qr(numerator, previous_pivot, quotient, remainder);
                if (remainder != 0) {
                    throw std::logic_error("inexact division in fraction-free elimination");
                }
                rows[r][c] = std::move(quotient);
            }
        }
        previous_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace freefusion
