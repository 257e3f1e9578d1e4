#ifndef FREEFUSION_EMBEDDING_HPP
#define FREEFUSION_EMBEDDING_HPP

#include <memory>

#include "freefusion/complexification.hpp"
#include "freefusion/rep_ring.hpp"

namespace freefusion {

/// Words over a complexified set viewed inside Rep(A * C(S^1)), where A is the
/// free fusion ring of the source set (factor 0) and the circle is factor 1.
class ComplexifiedEmbedding {
public:
    explicit ComplexifiedEmbedding(ComplexifiedSet cs);

    const ComplexifiedSet& complexified() const { return cs_; }
    /// Free fusion ring over the complexified set.
    const FusionRepRing& complexified_ring() const { return *tilde_ring_; }
    /// A * circle.
    const FreeProductRing& product_ring() const { return *product_ring_; }

    /// Splits the word into maximal connected subwords x_i, writes each as
    /// z^{i0} x_i-base z^{i1}, and reduces: zero exponents vanish and
    /// exponents meeting across a subword boundary merge.
    Label embed_word(const Word& word) const;

    /// Image of a multiset of complexified words.
    LabelMultiset embed_all(const LabelMultiset& words) const;

private:
    ComplexifiedSet cs_;
    std::shared_ptr<const FusionRepRing> tilde_ring_;
    std::shared_ptr<const FreeProductRing> product_ring_;
};

struct CrosscheckReport {
    /// Decomposition from the complexified free fusion formula, embedded.
    LabelMultiset via_fusion_formula;
    /// Decomposition from the free-product recursion on the embedded words.
    LabelMultiset via_free_product;

    bool agree() const { return via_fusion_formula == via_free_product; }
};

/// Computes the decomposition of the tensor product of the classes of x and y
/// both ways.
CrosscheckReport crosscheck_complexified_product(const ComplexifiedEmbedding& embedding,
                                                 const Word& x, const Word& y);

/// Convenience overload; builds the rings on every call.
CrosscheckReport crosscheck_complexified_product(const ComplexifiedSet& cs, const Word& x,
                                                 const Word& y);

}  // namespace freefusion

#endif  // FREEFUSION_EMBEDDING_HPP
