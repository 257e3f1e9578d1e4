#ifndef FREEFUSION_COMPLEXIFICATION_HPP
#define FREEFUSION_COMPLEXIFICATION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "freefusion/fusion_set.hpp"

namespace freefusion {

/// The four copies of S making up the free complexification. Each block reads
/// as a z-decoration of a base letter s:
///
///   even1  s           exponents (0, 0)
///   even2  z* s z      exponents (-1, +1)
///   odd1   s z         exponents (0, +1)
///   odd2   z* s        exponents (-1, 0)
enum class Block : std::uint8_t { kEven1, kEven2, kOdd1, kOdd2 };

inline constexpr Block kAllBlocks[] = {Block::kEven1, Block::kEven2, Block::kOdd1, Block::kOdd2};

/// Exponents of the z-prefix and z-suffix around the base letter.
struct ZExponents {
    int prefix;
    int suffix;

    friend bool operator==(const ZExponents&, const ZExponents&) = default;
};

ZExponents exponents(Block block);
/// nullopt when the pair is not one of the four admissible decorations.
std::optional<Block> block_from_exponents(ZExponents e);
Parity block_parity(Block block);
std::string_view block_name(Block block);

/// Adjacent letters connect iff the suffix exponent of the left one cancels
/// the prefix exponent of the right one.
inline bool blocks_connect(Block left, Block right) {
    return exponents(left).suffix + exponents(right).prefix == 0;
}

struct AnnotatedLetter {
    LetterId base;
    Block block;

    friend bool operator==(const AnnotatedLetter&, const AnnotatedLetter&) = default;
};

/// A complexified fusion set together with its source and the annotation of
/// every letter. Letters are ordered block by block (even1, even2, odd1,
/// odd2), source order within a block, and named `<base>_<block>`.
class ComplexifiedSet {
public:
    ComplexifiedSet(FusionSet source, FusionSet set, std::vector<AnnotatedLetter> annotations);

    const FusionSet& source() const { return source_; }
    const FusionSet& set() const { return set_; }
    const AnnotatedLetter& annotation(LetterId letter) const { return annotations_.at(letter); }
    std::optional<LetterId> find(LetterId base, Block block) const;

    /// The base word: every letter replaced by its source letter.
    Word base_word(const Word& word) const;

private:
    FusionSet source_;
    FusionSet set_;
    std::vector<AnnotatedLetter> annotations_;
};

/// Checks that the parity is a grading: conj preserves it and every defined
/// fusion adds parities mod 2. Throws std::invalid_argument if the set has no
/// parity map.
ValidationReport validate_parity(const FusionSet& set);

/// Builds the free complexification. Throws ValidationError if the source
/// fails validate_fusion_set or validate_parity.
///
/// The fusion of (s, b1) and (t, b2) is defined iff the inner exponents cancel
/// and s.t is defined in the source; the result is (s.t, b) where b carries
/// the outer exponents (prefix of b1, suffix of b2).
ComplexifiedSet complexify(const FusionSet& source);

}  // namespace freefusion

#endif  // FREEFUSION_COMPLEXIFICATION_HPP
