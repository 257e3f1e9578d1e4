#ifndef FREEFUSION_WORD_HPP
#define FREEFUSION_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace freefusion {

/// Index of a letter in its fusion set; the declared order of letters.
using LetterId = std::uint32_t;

/// Element of the free monoid over a fusion set's letters. The empty word is
/// the monoid unit.
///
/// Words order length-first, then lexicographically by letter id, which is
/// the declared letter order of the owning set.
class Word {
public:
    using const_iterator = std::vector<LetterId>::const_iterator;

    Word() = default;
    explicit Word(std::vector<LetterId> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<LetterId> letters) : letters_(letters) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    LetterId operator[](std::size_t i) const { return letters_[i]; }
    LetterId front() const { return letters_.front(); }
    LetterId back() const { return letters_.back(); }
    const_iterator begin() const { return letters_.begin(); }
    const_iterator end() const { return letters_.end(); }
    const std::vector<LetterId>& letters() const { return letters_; }

    /// Letters [pos, pos + count), clamped to the word.
    Word subword(std::size_t pos, std::size_t count = static_cast<std::size_t>(-1)) const;

    void push_back(LetterId letter) { letters_.push_back(letter); }

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<LetterId> letters_;
};

}  // namespace freefusion

#endif  // FREEFUSION_WORD_HPP
