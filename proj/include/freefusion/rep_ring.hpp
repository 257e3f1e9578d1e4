#ifndef FREEFUSION_REP_RING_HPP
#define FREEFUSION_REP_RING_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freefusion/fusion_ring.hpp"
#include "freefusion/fusion_set.hpp"
#include "freefusion/label.hpp"
#include "freefusion/polynomial.hpp"

namespace freefusion {

/// Fusion data of a compact quantum group at the level of its representation
/// ring: the dual of each irreducible class and the decomposition of tensor
/// products of two irreducibles.
///
/// Label universes are lazy; nothing is materialized, so the circle ring and
/// free products can be infinite. All operations are const and re-entrant.
class RepRing {
public:
    virtual ~RepRing() = default;

    virtual Label trivial() const = 0;
    virtual Label dual(const Label& label) const = 0;
    virtual LabelMultiset decompose_pair(const Label& left, const Label& right) const = 0;
    /// nullopt when the ring carries no dimensions.
    virtual std::optional<Polynomial> dim(const Label& label) const = 0;
    /// True if `label` is a well-formed irreducible of this ring.
    virtual bool contains(const Label& label) const = 0;

    /// Label text without the outer brackets; used when nesting labels.
    virtual std::string render_bare(const Label& label) const = 0;
    /// `[s.s]`, `[z^1 | u.u | z^-1]`, `[]` for the trivial class of word and
    /// sequence rings.
    std::string render(const Label& label) const { return "[" + render_bare(label) + "]"; }
};

using RepRingPtr = std::shared_ptr<const RepRing>;

/// x (+) y for multisets: the bilinear extension of decompose_pair.
LabelMultiset tensor(const RepRing& ring, const LabelMultiset& left, const LabelMultiset& right);

/// Total dimension sum of mult * dim(label). Throws std::logic_error if the
/// ring has no dimensions.
Polynomial total_dimension(const RepRing& ring, const LabelMultiset& labels);

/// Free fusion ring of a validated set: labels are words, dual is word_conj,
/// and decompose_pair reads off ring_product(a_v, a_w). When `dims` is given,
/// dim(w) is dimension(a_w).
class FusionRepRing : public RepRing {
public:
    FusionRepRing(FusionSet set, std::optional<DimensionAssignment> dims);

    const FusionSet& set() const { return set_; }

    Label trivial() const override { return Label::word(Word{}); }
    Label dual(const Label& label) const override;
    LabelMultiset decompose_pair(const Label& left, const Label& right) const override;
    std::optional<Polynomial> dim(const Label& label) const override;
    bool contains(const Label& label) const override;
    std::string render_bare(const Label& label) const override;

private:
    FusionSet set_;
    std::optional<DimensionAssignment> dims_;
};

/// Throws ValidationError if the set is not a fusion set.
std::shared_ptr<const FusionRepRing> ring_from_fusion_set(
    FusionSet set, std::optional<DimensionAssignment> dims = std::nullopt);

/// Representations of the circle: integers k (for z^k) under addition,
/// dual = negation, all one-dimensional.
RepRingPtr circle_ring();
/// Representations of Z/2: {0, 1} under addition mod 2, all one-dimensional.
RepRingPtr cyclic2_ring();

/// Free product of two rings. Irreducibles are reduced alternating sequences
/// of non-trivial factor labels; the empty sequence is trivial.
///
/// Tensor products follow the boundary recursion: parts from different factors
/// concatenate; parts from the same factor are decomposed there, every
/// non-trivial summand is spliced in, and a trivial summand recurses on the
/// shortened sequences.
class FreeProductRing : public RepRing {
public:
    FreeProductRing(RepRingPtr left, RepRingPtr right);

    const RepRing& factor(std::uint8_t side) const { return side == 0 ? *left_ : *right_; }

    /// Canonical reduced label from arbitrary factor parts: trivial parts are
    /// dropped and neighbours from the same factor are merged. Merging requires
    /// their product to be a single irreducible of multiplicity one (always
    /// the case for group-like factors such as the circle); otherwise
    /// std::invalid_argument is thrown.
    Label make_label(const std::vector<std::pair<std::uint8_t, Label>>& parts) const;
    /// Length-one label for a factor irreducible (trivial maps to trivial).
    Label embed(std::uint8_t side, const Label& factor_label) const;

    Label trivial() const override { return Label::sequence({}, {}); }
    Label dual(const Label& label) const override;
    LabelMultiset decompose_pair(const Label& left, const Label& right) const override;
    std::optional<Polynomial> dim(const Label& label) const override;
    bool contains(const Label& label) const override;
    std::string render_bare(const Label& label) const override;

private:
    RepRingPtr left_;
    RepRingPtr right_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<Label, Label>, LabelMultiset> cache_;
};

std::shared_ptr<const FreeProductRing> free_product(RepRingPtr left, RepRingPtr right);

/// Representation ring of a direct sum of quantum groups: pairs of labels,
/// everything componentwise.
RepRingPtr direct_product(RepRingPtr left, RepRingPtr right);

}  // namespace freefusion

#endif  // FREEFUSION_REP_RING_HPP
