#ifndef FREEFUSION_FUSION_SET_HPP
#define FREEFUSION_FUSION_SET_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/word.hpp"

namespace freefusion {

enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

std::string_view parity_name(Parity p);
inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// Letter tokens are `[A-Za-z0-9_]+`.
bool is_valid_token(std::string_view token);

/// Error in fusion-set source text. `line()` is 1-based, 0 when the problem is
/// not tied to a single line (e.g. a letter without a conjugate).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A finite set of letters with a partial fusion, a conjugation and an
/// optional parity grading.
///
/// Construction only checks that the data is well-formed (known letters,
/// unique tokens); the fusion-set axioms are checked by validate_fusion_set.
class FusionSet {
public:
    FusionSet(std::vector<std::string> names, std::vector<LetterId> conjugates,
              std::vector<std::optional<LetterId>> fusion_table,
              std::optional<std::vector<Parity>> parities = std::nullopt);

    std::size_t size() const { return names_.size(); }
    const std::string& name(LetterId letter) const { return names_.at(letter); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<LetterId> find(std::string_view token) const;

    /// nullopt encodes the empty fusion.
    std::optional<LetterId> fuse(LetterId a, LetterId b) const { return fusion_[a * size() + b]; }
    LetterId conj(LetterId letter) const { return conj_[letter]; }

    bool has_parity() const { return parity_.has_value(); }
    /// Throws std::logic_error when the set carries no parity.
    Parity parity(LetterId letter) const;
    const std::optional<std::vector<Parity>>& parities() const { return parity_; }

    /// Parses a dot-separated word such as `u.p.u`. Throws std::invalid_argument
    /// on an empty string or an unknown token.
    Word parse_word(std::string_view dotted) const;
    /// Dot-separated letters; the empty word renders as `1`.
    std::string render(const Word& word) const;

    /// Serializes back to the line-oriented grammar accepted by
    /// parse_fusion_set.
    std::string to_text() const;

    friend bool operator==(const FusionSet&, const FusionSet&) = default;

private:
    std::vector<std::string> names_;
    std::vector<LetterId> conj_;
    std::vector<std::optional<LetterId>> fusion_;  // row-major, size()^2
    std::optional<std::vector<Parity>> parity_;
};

/// Parses the line-oriented fusion-set grammar:
///
///     letters: <tok> <tok> ...
///     conj: <tok>=<tok> ...           every letter must appear on a left side
///     fusion: <tok>.<tok>=<tok> ...   absent pairs fuse to the empty set
///     parity: <tok>=odd|even ...      optional, all letters or none
///
/// `#` starts a comment. Directives may repeat; `letters:` lines may appear
/// anywhere in the file. The result is not checked against the axioms.
FusionSet parse_fusion_set(std::string_view text);

/// Reads and parses a file. Throws std::runtime_error if it cannot be read.
FusionSet load_fusion_set(const std::filesystem::path& path);

enum class Axiom {
    kInvolution,      // conj(conj(s)) = s
    kCompatibility,   // s1.s2 = conj(s3)  <=>  s2.s3 = conj(s1)
    kAssociativity,   // (s1.s2).s3 = s1.(s2.s3), empty absorbing
    kParityConjugation,
    kParityFusion,
};

std::string_view axiom_name(Axiom axiom);

struct Violation {
    Axiom axiom;
    std::vector<LetterId> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

/// Checks every axiom instance by exhaustive enumeration over letter pairs and
/// triples and reports all violations, each with its witness.
ValidationReport validate_fusion_set(const FusionSet& set);

/// Thrown when an operation needs a valid set (or grading) and did not get one.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Renders a witness tuple as `(a,b,c)`.
std::string render_witness(const FusionSet& set, const std::vector<LetterId>& witness);

// Induced operations on words.

/// w_1...w_{k-1}(w_k . w'_1)w'_2...w'_l, or nullopt when the boundary fusion is
/// empty. Throws std::invalid_argument if either word is empty.
std::optional<Word> word_fuse(const FusionSet& set, const Word& left, const Word& right);

/// Reversed word with every letter conjugated.
Word word_conj(const FusionSet& set, const Word& word);

/// Sum of letter parities; the empty word is even.
Parity word_parity(const FusionSet& set, const Word& word);

/// All words of length exactly `length`, length-lex ordered.
std::vector<Word> words_of_length(const FusionSet& set, std::size_t length);
/// All words of length <= max_length, length-lex ordered (starting with the
/// empty word).
std::vector<Word> words_up_to(const FusionSet& set, std::size_t max_length);

}  // namespace freefusion

#endif  // FREEFUSION_FUSION_SET_HPP
