#ifndef FREEFUSION_FUSION_RING_HPP
#define FREEFUSION_FUSION_RING_HPP

#include <map>
#include <string>
#include <vector>

#include "freefusion/bigint.hpp"
#include "freefusion/fusion_set.hpp"
#include "freefusion/polynomial.hpp"

namespace freefusion {

/// Finite integer combination of words, with no zero coefficients stored.
///
/// The tag distinguishes what a word stands for: a basis element a_w of the
/// free fusion ring, or an ordered monomial a_{s1}...a_{sk} in the generators.
template <class Tag>
class Combination {
public:
    using Terms = std::map<Word, BigInt>;

    Combination() = default;

    static Combination single(Word w, BigInt coefficient = 1) {
        Combination c;
        c.add(std::move(w), coefficient);
        return c;
    }
    static Combination unit() { return single(Word{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(const Word& w) const {
        const auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const Word& w, const BigInt& coefficient) {
        if (coefficient == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Combination& operator+=(const Combination& other) {
        for (const auto& [w, c] : other.terms_) {
            add(w, c);
        }
        return *this;
    }
    Combination& operator-=(const Combination& other) {
        for (const auto& [w, c] : other.terms_) {
            add(w, -c);
        }
        return *this;
    }
    Combination& operator*=(const BigInt& scalar) {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) {
            c *= scalar;
        }
        return *this;
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend bool operator==(const Combination&, const Combination&) = default;

private:
    Terms terms_;
};

/// Element of ZM in the word basis a_w.
using RingElement = Combination<struct WordBasisTag>;
/// Integer combination of ordered generator monomials a_{s1}...a_{sk}; the key
/// word lists the generator letters, the empty word is the unit monomial.
using GeneratorCombination = Combination<struct MonomialBasisTag>;

/// Product of basis elements:
///   a_w a_w' = sum over w = xy, w' = conj(y)z of (a_{xz} + a_{x.z}),
/// the fusion summand present only when x and z are non-empty and x.z is
/// defined.
RingElement basis_product(const FusionSet& set, const Word& left, const Word& right);

/// Bilinear extension of basis_product.
RingElement ring_product(const FusionSet& set, const RingElement& a, const RingElement& b);

/// (a_w)* = a_{conj(w)}, extended additively.
RingElement ring_star(const FusionSet& set, const RingElement& a);

/// a_{s1} a_{s2} ... a_{sk} in the word basis. The leading term a_{s1...sk}
/// has coefficient 1 and every other term is shorter.
RingElement monomial_expand(const FusionSet& set, const Word& generators);

/// a_w written in generator monomials; unitriangular in word length.
///
/// Uses a_{s w'} = a_s a_{w'} - a_{s.w'} - [w'_1 = conj(s)] a_{w'_2...}.
GeneratorCombination word_to_generators(const FusionSet& set, const Word& word);

/// Evaluates a combination of generator monomials in the word basis.
RingElement expand_generators(const FusionSet& set, const GeneratorCombination& combination);

/// Dimension of each generator as a polynomial in n. Must be conj-invariant.
class DimensionAssignment {
public:
    /// Throws std::invalid_argument on a size mismatch or when
    /// dim(s) != dim(conj(s)).
    DimensionAssignment(const FusionSet& set, std::vector<Polynomial> per_letter);

    const Polynomial& operator()(LetterId letter) const { return dims_.at(letter); }
    const std::vector<Polynomial>& values() const { return dims_; }

private:
    std::vector<Polynomial> dims_;
};

/// The ring homomorphism ZM -> Z[n] with a_s -> d(s), evaluated through
/// word_to_generators.
Polynomial dimension(const FusionSet& set, const RingElement& a, const DimensionAssignment& d);

/// Terms sorted length-lex joined by ` + `/` - `: `1 + a[p] + a[u.u]`,
/// `2*a[s] + a[s.s.s]`, `0` for zero. The unit term prints as its coefficient.
std::string render(const FusionSet& set, const RingElement& a);

/// Monomials as `a[u]*a[u]`, the unit monomial as its coefficient:
/// `-1 - a[p] + a[u]*a[u]`.
std::string render(const FusionSet& set, const GeneratorCombination& g);

}  // namespace freefusion

#endif  // FREEFUSION_FUSION_RING_HPP
