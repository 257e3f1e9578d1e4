#include "freefusion/fusion_ring.hpp"

#include <functional>
#include <sstream>

namespace freefusion {

namespace {

// conj(y) is a prefix of `right`, where y is the last m letters of `left`.
bool suffix_matches_conjugate_prefix(const FusionSet& set, const Word& left, const Word& right,
                                     std::size_t m) {
    const std::size_t k = left.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (right[i] != set.conj(left[k - 1 - i])) {
            return false;
        }
    }
    return true;
}

template <class Tag>
std::string render_terms(const Combination<Tag>& c,
                         const std::function<std::string(const Word&)>& render_word) {
    if (c.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, coeff] : c.terms()) {
        const BigInt magnitude = coeff < 0 ? BigInt(-coeff) : coeff;
        if (first) {
            if (coeff < 0) {
                out << '-';
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1) {
            out << magnitude << '*';
        }
        out << render_word(w);
    }
    return out.str();
}

}  // namespace

RingElement basis_product(const FusionSet& set, const Word& left, const Word& right) {
    RingElement result;
    const std::size_t k = left.size();
    const std::size_t l = right.size();
    for (std::size_t m = 0; m <= std::min(k, l); ++m) {
        if (!suffix_matches_conjugate_prefix(set, left, right, m)) {
            // The match for m+1 extends the match for m.
            break;
        }
        const Word x = left.subword(0, k - m);
        const Word z = right.subword(m);
        result.add(x + z, 1);
        if (!x.empty() && !z.empty()) {
            if (auto fused = word_fuse(set, x, z)) {
                result.add(*fused, 1);
            }
        }
    }
    return result;
}

RingElement ring_product(const FusionSet& set, const RingElement& a, const RingElement& b) {
    RingElement result;
    for (const auto& [v, cv] : a.terms()) {
        for (const auto& [w, cw] : b.terms()) {
            RingElement term = basis_product(set, v, w);
            term *= cv * cw;
            result += term;
        }
    }
    return result;
}

RingElement ring_star(const FusionSet& set, const RingElement& a) {
    RingElement result;
    for (const auto& [w, c] : a.terms()) {
        result.add(word_conj(set, w), c);
    }
    return result;
}

RingElement monomial_expand(const FusionSet& set, const Word& generators) {
    RingElement acc = RingElement::unit();
    for (LetterId s : generators) {
        acc = ring_product(set, acc, RingElement::single(Word{s}));
    }
    return acc;
}

GeneratorCombination word_to_generators(const FusionSet& set, const Word& word) {
    std::map<Word, GeneratorCombination> memo;
    std::function<const GeneratorCombination&(const Word&)> solve =
        [&](const Word& w) -> const GeneratorCombination& {
        if (auto it = memo.find(w); it != memo.end()) {
            return it->second;
        }
        GeneratorCombination out;
        if (w.size() <= 1) {
            out = GeneratorCombination::single(w);
        } else {
            const LetterId s = w.front();
            const Word rest = w.subword(1);
            // a_s * a_rest: prepend s to every monomial of rest.
            const GeneratorCombination tail = solve(rest);
            for (const auto& [mono, c] : tail.terms()) {
                out.add(Word{s} + mono, c);
            }
            if (auto fused = word_fuse(set, Word{s}, rest)) {
                out -= solve(*fused);
            }
            if (rest.front() == set.conj(s)) {
                out -= solve(rest.subword(1));
            }
        }
        return memo.emplace(w, std::move(out)).first->second;
    };
    return solve(word);
}

RingElement expand_generators(const FusionSet& set, const GeneratorCombination& combination) {
    RingElement result;
    for (const auto& [mono, c] : combination.terms()) {
        RingElement term = monomial_expand(set, mono);
        term *= c;
        result += term;
    }
    return result;
}

DimensionAssignment::DimensionAssignment(const FusionSet& set, std::vector<Polynomial> per_letter)
    : dims_(std::move(per_letter)) {
    if (dims_.size() != set.size()) {
        throw std::invalid_argument("dimension assignment must cover every letter");
    }
    for (LetterId s = 0; s < set.size(); ++s) {
        if (dims_[s] != dims_[set.conj(s)]) {
            throw std::invalid_argument("dimension of " + set.name(s) +
                                        " differs from that of its conjugate");
        }
    }
}

Polynomial dimension(const FusionSet& set, const RingElement& a, const DimensionAssignment& d) {
    Polynomial total;
    for (const auto& [w, c] : a.terms()) {
        const GeneratorCombination gens = word_to_generators(set, w);
        for (const auto& [mono, coeff] : gens.terms()) {
            Polynomial term(coeff * c);
            for (LetterId s : mono) {
                term *= d(s);
            }
            total += term;
        }
    }
    return total;
}

std::string render(const FusionSet& set, const RingElement& a) {
    return render_terms(a, [&](const Word& w) { return "a[" + set.render(w) + "]"; });
}

std::string render(const FusionSet& set, const GeneratorCombination& g) {
    return render_terms(g, [&](const Word& w) {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i > 0) {
                out += '*';
            }
            out += "a[" + set.name(w[i]) + "]";
        }
        return out;
    });
}

}  // namespace freefusion
