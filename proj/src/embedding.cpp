#include "freefusion/embedding.hpp"

namespace freefusion {

namespace {
constexpr std::uint8_t kBaseSide = 0;
constexpr std::uint8_t kCircleSide = 1;
}  // namespace

ComplexifiedEmbedding::ComplexifiedEmbedding(ComplexifiedSet cs)
    : cs_(std::move(cs)),
      tilde_ring_(ring_from_fusion_set(cs_.set())),
      product_ring_(free_product(ring_from_fusion_set(cs_.source()), circle_ring())) {}

Label ComplexifiedEmbedding::embed_word(const Word& word) const {
    std::vector<std::pair<std::uint8_t, Label>> parts;
    std::size_t start = 0;
    while (start < word.size()) {
        std::size_t end = start + 1;
        while (end < word.size() && blocks_connect(cs_.annotation(word[end - 1]).block,
                                                   cs_.annotation(word[end]).block)) {
            ++end;
        }
        const Word piece = word.subword(start, end - start);
        const int prefix = exponents(cs_.annotation(piece.front()).block).prefix;
        const int suffix = exponents(cs_.annotation(piece.back()).block).suffix;
        parts.emplace_back(kCircleSide, Label::integer(prefix));
        parts.emplace_back(kBaseSide, Label::word(cs_.base_word(piece)));
        parts.emplace_back(kCircleSide, Label::integer(suffix));
        start = end;
    }
    return product_ring_->make_label(parts);
}

LabelMultiset ComplexifiedEmbedding::embed_all(const LabelMultiset& words) const {
    LabelMultiset out;
    for (const auto& [label, m] : words) {
        add_to(out, embed_word(label.as_word()), m);
    }
    return out;
}

CrosscheckReport crosscheck_complexified_product(const ComplexifiedEmbedding& embedding,
                                                 const Word& x, const Word& y) {
    CrosscheckReport report;
    const auto& tilde = embedding.complexified_ring();
    report.via_fusion_formula =
        embedding.embed_all(tilde.decompose_pair(Label::word(x), Label::word(y)));
    report.via_free_product = embedding.product_ring().decompose_pair(embedding.embed_word(x),
                                                                      embedding.embed_word(y));
    return report;
}

CrosscheckReport crosscheck_complexified_product(const ComplexifiedSet& cs, const Word& x,
                                                 const Word& y) {
    return crosscheck_complexified_product(ComplexifiedEmbedding(cs), x, y);
}

}  // namespace freefusion
