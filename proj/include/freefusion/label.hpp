#ifndef FREEFUSION_LABEL_HPP
#define FREEFUSION_LABEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "freefusion/bigint.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

/// Class of an irreducible corepresentation inside some RepRing. The ring
/// decides which kind it uses:
///
///   word      free fusion rings (a word over the fusion set)
///   integer   circle ring (z^k) and Z/2 ring (g^k)
///   pair      direct products
///   sequence  free products: alternating parts, each tagged with its factor
///
/// Labels are values with a total order; within a kind the order is
/// length-first, then lexicographic.
class Label {
public:
    enum class Kind : std::uint8_t { kWord, kInteger, kPair, kSequence };

    Label() = default;  // the empty word

    static Label word(Word w);
    static Label integer(std::int64_t value);
    static Label pair(Label first, Label second);
    /// `sides[i]` is the factor (0 or 1) that `parts[i]` belongs to.
    static Label sequence(std::vector<Label> parts, std::vector<std::uint8_t> sides);

    Kind kind() const { return kind_; }
    const Word& as_word() const;
    std::int64_t as_integer() const;
    const Label& first() const;
    const Label& second() const;
    const std::vector<Label>& parts() const { return parts_; }
    const std::vector<std::uint8_t>& sides() const { return sides_; }

    friend bool operator==(const Label& a, const Label& b);
    friend std::strong_ordering operator<=>(const Label& a, const Label& b);

private:
    Kind kind_ = Kind::kWord;
    Word word_;
    std::int64_t value_ = 0;
    std::vector<Label> parts_;
    std::vector<std::uint8_t> sides_;
};

/// Irreducible classes with multiplicities; zero multiplicities are never
/// stored.
using LabelMultiset = std::map<Label, BigInt>;

void add_to(LabelMultiset& target, const Label& label, const BigInt& multiplicity);
void add_to(LabelMultiset& target, const LabelMultiset& source, const BigInt& scale = 1);

}  // namespace freefusion

#endif  // FREEFUSION_LABEL_HPP
