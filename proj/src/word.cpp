#include "freefusion/word.hpp"

#include <algorithm>

namespace freefusion {

Word Word::subword(std::size_t pos, std::size_t count) const {
    pos = std::min(pos, letters_.size());
    count = std::min(count, letters_.size() - pos);
    return Word(std::vector<LetterId>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + count)));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<LetterId> joined;
    joined.reserve(a.size() + b.size());
    joined.insert(joined.end(), a.letters_.begin(), a.letters_.end());
    joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(joined));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

}  // namespace freefusion
