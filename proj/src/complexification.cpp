#include "freefusion/complexification.hpp"

#include <string>

namespace freefusion {

ZExponents exponents(Block block) {
    switch (block) {
        case Block::kEven1:
            return {0, 0};
        case Block::kEven2:
            return {-1, 1};
        case Block::kOdd1:
            return {0, 1};
        case Block::kOdd2:
            return {-1, 0};
    }
    throw std::logic_error("bad block");
}

std::optional<Block> block_from_exponents(ZExponents e) {
    for (Block b : kAllBlocks) {
        if (exponents(b) == e) {
            return b;
        }
    }
    return std::nullopt;
}

Parity block_parity(Block block) {
    return (block == Block::kOdd1 || block == Block::kOdd2) ? Parity::kOdd : Parity::kEven;
}

std::string_view block_name(Block block) {
    switch (block) {
        case Block::kEven1:
            return "even1";
        case Block::kEven2:
            return "even2";
        case Block::kOdd1:
            return "odd1";
        case Block::kOdd2:
            return "odd2";
    }
    return "?";
}

ComplexifiedSet::ComplexifiedSet(FusionSet source, FusionSet set,
                                 std::vector<AnnotatedLetter> annotations)
    : source_(std::move(source)), set_(std::move(set)), annotations_(std::move(annotations)) {
    if (annotations_.size() != set_.size()) {
        throw std::invalid_argument("every complexified letter needs an annotation");
    }
}

std::optional<LetterId> ComplexifiedSet::find(LetterId base, Block block) const {
    for (std::size_t i = 0; i < annotations_.size(); ++i) {
        if (annotations_[i] == AnnotatedLetter{base, block}) {
            return static_cast<LetterId>(i);
        }
    }
    return std::nullopt;
}

Word ComplexifiedSet::base_word(const Word& word) const {
    Word out;
    for (LetterId letter : word) {
        out.push_back(annotations_.at(letter).base);
    }
    return out;
}

ValidationReport validate_parity(const FusionSet& set) {
    if (!set.has_parity()) {
        throw std::invalid_argument("fusion set has no parity map");
    }
    ValidationReport report;
    const auto n = static_cast<LetterId>(set.size());
    for (LetterId s = 0; s < n; ++s) {
        if (set.parity(set.conj(s)) != set.parity(s)) {
            report.violations.push_back(
                {Axiom::kParityConjugation,
                 {s, set.conj(s)},
                 set.name(s) + " is " + std::string(parity_name(set.parity(s))) + " but conj " +
                     set.name(set.conj(s)) + " is " +
                     std::string(parity_name(set.parity(set.conj(s))))});
        }
    }
    for (LetterId s = 0; s < n; ++s) {
        for (LetterId t = 0; t < n; ++t) {
            const auto f = set.fuse(s, t);
            if (f && set.parity(*f) != set.parity(s) + set.parity(t)) {
                report.violations.push_back(
                    {Axiom::kParityFusion,
                     {s, t},
                     set.name(s) + "." + set.name(t) + " = " + set.name(*f) + " is " +
                         std::string(parity_name(set.parity(*f))) + ", expected " +
                         std::string(parity_name(set.parity(s) + set.parity(t)))});
            }
        }
    }
    return report;
}

ComplexifiedSet complexify(const FusionSet& source) {
    if (auto report = validate_fusion_set(source); !report.valid()) {
        throw ValidationError("source is not a fusion set", std::move(report));
    }
    if (auto report = validate_parity(source); !report.valid()) {
        throw ValidationError("source parity is not a grading", std::move(report));
    }

    std::vector<AnnotatedLetter> annotations;
    std::vector<std::string> names;
    for (Block block : kAllBlocks) {
        for (LetterId s = 0; s < source.size(); ++s) {
            if (source.parity(s) == block_parity(block)) {
                annotations.push_back({s, block});
                names.push_back(source.name(s) + "_" + std::string(block_name(block)));
            }
        }
    }
    const std::size_t n = annotations.size();
    auto index_of = [&](AnnotatedLetter a) -> LetterId {
        for (std::size_t i = 0; i < n; ++i) {
            if (annotations[i] == a) {
                return static_cast<LetterId>(i);
            }
        }
        throw std::logic_error("annotated letter missing from complexification");
    };

    std::vector<LetterId> conj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [base, block] = annotations[i];
        // conj(z^a s z^b) = z^-b conj(s) z^-a
        const ZExponents e = exponents(block);
        const auto conj_block = block_from_exponents({-e.suffix, -e.prefix});
        conj[i] = index_of({source.conj(base), *conj_block});
    }

    std::vector<std::optional<LetterId>> fusion(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto [s, bs] = annotations[i];
            const auto [t, bt] = annotations[j];
            if (!blocks_connect(bs, bt)) {
                continue;
            }
            const auto fused = source.fuse(s, t);
            if (!fused) {
                continue;
            }
            const auto block = block_from_exponents({exponents(bs).prefix, exponents(bt).suffix});
            fusion[i * n + j] = index_of({*fused, *block});
        }
    }

    std::vector<Parity> parities;
    for (const auto& a : annotations) {
        parities.push_back(block_parity(a.block));
    }
    FusionSet set(std::move(names), std::move(conj), std::move(fusion), std::move(parities));
    return ComplexifiedSet(source, std::move(set), std::move(annotations));
}

}  // namespace freefusion
