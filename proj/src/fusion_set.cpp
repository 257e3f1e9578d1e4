#include "freefusion/fusion_set.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace freefusion {

namespace {

constexpr std::string_view kEmptySymbol = "∅";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> items;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) {
            break;
        }
        auto end = s.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) {
            end = s.size();
        }
        items.push_back(s.substr(start, end - start));
        pos = end;
    }
    return items;
}

struct Directive {
    std::size_t line;
    std::string_view keyword;
    std::vector<std::string_view> items;
};

std::string quote_token(std::string_view token) {
    return "'" + std::string(token) + "'";
}

std::string render_fused(const FusionSet& set, std::optional<LetterId> letter) {
    return letter ? set.name(*letter) : std::string(kEmptySymbol);
}

}  // namespace

std::string_view parity_name(Parity p) {
    return p == Parity::kOdd ? "odd" : "even";
}

bool is_valid_token(std::string_view token) {
    return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    });
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

ValidationError::ValidationError(const std::string& what, ValidationReport report)
    : std::runtime_error(what), report_(std::move(report)) {}

FusionSet::FusionSet(std::vector<std::string> names, std::vector<LetterId> conjugates,
                     std::vector<std::optional<LetterId>> fusion_table,
                     std::optional<std::vector<Parity>> parities)
    : names_(std::move(names)),
      conj_(std::move(conjugates)),
      fusion_(std::move(fusion_table)),
      parity_(std::move(parities)) {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_valid_token(names_[i])) {
            throw std::invalid_argument("invalid letter token " + quote_token(names_[i]));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw std::invalid_argument("duplicate letter " + quote_token(names_[i]));
            }
        }
    }
    if (conj_.size() != n) {
        throw std::invalid_argument("conjugation must be defined on every letter");
    }
    if (fusion_.size() != n * n) {
        throw std::invalid_argument("fusion table must have size^2 entries");
    }
    if (parity_ && parity_->size() != n) {
        throw std::invalid_argument("parity must be given for all letters or none");
    }
    for (LetterId c : conj_) {
        if (c >= n) {
            throw std::invalid_argument("conjugate out of range");
        }
    }
    for (const auto& f : fusion_) {
        if (f && *f >= n) {
            throw std::invalid_argument("fusion result out of range");
        }
    }
}

std::optional<LetterId> FusionSet::find(std::string_view token) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == token) {
            return static_cast<LetterId>(i);
        }
    }
    return std::nullopt;
}

Parity FusionSet::parity(LetterId letter) const {
    if (!parity_) {
        throw std::logic_error("fusion set carries no parity");
    }
    return (*parity_)[letter];
}

Word FusionSet::parse_word(std::string_view dotted) const {
    if (dotted.empty()) {
        throw std::invalid_argument("empty word");
    }
    Word word;
    std::size_t pos = 0;
    while (true) {
        const auto dot = dotted.find('.', pos);
        const auto token = dotted.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
        const auto letter = find(token);
        if (!letter) {
            throw std::invalid_argument("unknown letter " + quote_token(token) + " in word " +
                                        quote_token(dotted));
        }
        word.push_back(*letter);
        if (dot == std::string_view::npos) {
            break;
        }
        pos = dot + 1;
    }
    return word;
}

std::string FusionSet::render(const Word& word) const {
    if (word.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += names_.at(word[i]);
    }
    return out;
}

std::string FusionSet::to_text() const {
    std::ostringstream out;
    out << "letters:";
    for (const auto& name : names_) {
        out << ' ' << name;
    }
    out << "\nconj:";
    for (std::size_t i = 0; i < size(); ++i) {
        out << ' ' << names_[i] << '=' << names_[conj_[i]];
    }
    out << '\n';
    std::ostringstream fusion_line;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = 0; b < size(); ++b) {
            if (const auto& f = fusion_[a * size() + b]) {
                fusion_line << ' ' << names_[a] << '.' << names_[b] << '=' << names_[*f];
            }
        }
    }
    if (!fusion_line.str().empty()) {
        out << "fusion:" << fusion_line.str() << '\n';
    }
    if (parity_) {
        out << "parity:";
        for (std::size_t i = 0; i < size(); ++i) {
            out << ' ' << names_[i] << '=' << parity_name((*parity_)[i]);
        }
        out << '\n';
    }
    return out.str();
}

FusionSet parse_fusion_set(std::string_view text) {
    std::vector<Directive> directives;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line_no, "expected '<directive>:'");
        }
        const auto keyword = trim(line.substr(0, colon));
        if (keyword != "letters" && keyword != "conj" && keyword != "fusion" &&
            keyword != "parity") {
            throw ParseError(line_no, "unknown directive " + quote_token(keyword));
        }
        directives.push_back({line_no, keyword, split_whitespace(line.substr(colon + 1))});
    }

    std::vector<std::string> names;
    for (const auto& d : directives) {
        if (d.keyword != "letters") {
            continue;
        }
        for (auto token : d.items) {
            if (!is_valid_token(token)) {
                throw ParseError(d.line, "invalid letter token " + quote_token(token));
            }
            if (std::find(names.begin(), names.end(), token) != names.end()) {
                throw ParseError(d.line, "duplicate letter " + quote_token(token));
            }
            names.emplace_back(token);
        }
    }
    if (names.empty()) {
        throw ParseError(0, "no letters declared");
    }

    const std::size_t n = names.size();
    auto lookup = [&](std::size_t line, std::string_view token) -> LetterId {
        if (!is_valid_token(token)) {
            throw ParseError(line, "invalid token " + quote_token(token));
        }
        const auto it = std::find(names.begin(), names.end(), token);
        if (it == names.end()) {
            throw ParseError(line, "unknown letter " + quote_token(token));
        }
        return static_cast<LetterId>(it - names.begin());
    };
    auto split_once = [](std::string_view item, char sep, std::size_t line) {
        const auto at = item.find(sep);
        if (at == std::string_view::npos || item.find(sep, at + 1) != std::string_view::npos) {
            throw ParseError(line, "malformed entry " + quote_token(item));
        }
        return std::pair{item.substr(0, at), item.substr(at + 1)};
    };

    std::vector<std::optional<LetterId>> conj(n);
    std::vector<std::optional<LetterId>> fusion(n * n);
    std::vector<bool> fusion_given(n * n, false);
    std::vector<std::optional<Parity>> parity(n);
    bool any_parity = false;

    for (const auto& d : directives) {
        if (d.keyword == "conj") {
            for (auto item : d.items) {
                const auto [lhs, rhs] = split_once(item, '=', d.line);
                const LetterId a = lookup(d.line, lhs);
                const LetterId b = lookup(d.line, rhs);
                if (conj[a]) {
                    throw ParseError(d.line, "conjugate of " + quote_token(lhs) + " given twice");
                }
                conj[a] = b;
            }
        } else if (d.keyword == "fusion") {
            for (auto item : d.items) {
                const auto [lhs, rhs] = split_once(item, '=', d.line);
                const auto [left, right] = split_once(lhs, '.', d.line);
                const LetterId a = lookup(d.line, left);
                const LetterId b = lookup(d.line, right);
                const LetterId c = lookup(d.line, rhs);
                if (fusion_given[a * n + b]) {
                    throw ParseError(d.line, "fusion " + std::string(lhs) + " given twice");
                }
                fusion_given[a * n + b] = true;
                fusion[a * n + b] = c;
            }
        } else if (d.keyword == "parity") {
            any_parity = true;
            for (auto item : d.items) {
                const auto [lhs, rhs] = split_once(item, '=', d.line);
                const LetterId a = lookup(d.line, lhs);
                if (parity[a]) {
                    throw ParseError(d.line, "parity of " + quote_token(lhs) + " given twice");
                }
                if (rhs == "odd") {
                    parity[a] = Parity::kOdd;
                } else if (rhs == "even") {
                    parity[a] = Parity::kEven;
                } else {
                    throw ParseError(d.line, "parity must be odd or even, got " + quote_token(rhs));
                }
            }
        }
    }

    std::vector<LetterId> conjugates(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!conj[i]) {
            throw ParseError(0, "letter " + quote_token(names[i]) + " has no conjugate");
        }
        conjugates[i] = *conj[i];
    }
    std::optional<std::vector<Parity>> parities;
    if (any_parity) {
        parities.emplace(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!parity[i]) {
                throw ParseError(0, "letter " + quote_token(names[i]) +
                                        " has no parity (parity is all-or-none)");
            }
            (*parities)[i] = *parity[i];
        }
    }
    return FusionSet(std::move(names), std::move(conjugates), std::move(fusion),
                     std::move(parities));
}

FusionSet load_fusion_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fusion_set(buffer.str());
}

std::string_view axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::kInvolution:
            return "involution";
        case Axiom::kCompatibility:
            return "compatibility";
        case Axiom::kAssociativity:
            return "associativity";
        case Axiom::kParityConjugation:
            return "parity-conjugation";
        case Axiom::kParityFusion:
            return "parity-fusion";
    }
    return "unknown";
}

std::string render_witness(const FusionSet& set, const std::vector<LetterId>& witness) {
    std::string out = "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += set.name(witness[i]);
    }
    return out + ")";
}

ValidationReport validate_fusion_set(const FusionSet& set) {
    ValidationReport report;
    const auto n = static_cast<LetterId>(set.size());

    for (LetterId s = 0; s < n; ++s) {
        if (set.conj(set.conj(s)) != s) {
            report.violations.push_back(
                {Axiom::kInvolution,
                 {s, set.conj(s)},
                 "conj(conj(" + set.name(s) + ")) = " + set.name(set.conj(set.conj(s)))});
        }
    }

    auto fuse_opt = [&](std::optional<LetterId> a, std::optional<LetterId> b) {
        return (a && b) ? set.fuse(*a, *b) : std::nullopt;
    };

    for (LetterId s1 = 0; s1 < n; ++s1) {
        for (LetterId s2 = 0; s2 < n; ++s2) {
            for (LetterId s3 = 0; s3 < n; ++s3) {
                const auto left = set.fuse(s1, s2);
                const auto right = set.fuse(s2, s3);
                const bool lhs = left == set.conj(s3);
                const bool rhs = right == set.conj(s1);
                if (lhs != rhs) {
                    report.violations.push_back(
                        {Axiom::kCompatibility,
                         {s1, s2, s3},
                         set.name(s1) + "." + set.name(s2) + " = " + render_fused(set, left) +
                             (lhs ? " = " : " != ") + "conj(" + set.name(s3) + ") but " +
                             set.name(s2) + "." + set.name(s3) + " = " + render_fused(set, right) +
                             (rhs ? " = " : " != ") + "conj(" + set.name(s1) + ")"});
                }
            }
        }
    }

    for (LetterId s1 = 0; s1 < n; ++s1) {
        for (LetterId s2 = 0; s2 < n; ++s2) {
            for (LetterId s3 = 0; s3 < n; ++s3) {
                const auto lhs = fuse_opt(set.fuse(s1, s2), s3);
                const auto rhs = fuse_opt(s1, set.fuse(s2, s3));
                if (lhs != rhs) {
                    report.violations.push_back(
                        {Axiom::kAssociativity,
                         {s1, s2, s3},
                         "(" + set.name(s1) + "." + set.name(s2) + ")." + set.name(s3) + " = " +
                             render_fused(set, lhs) + " but " + set.name(s1) + ".(" +
                             set.name(s2) + "." + set.name(s3) + ") = " + render_fused(set, rhs)});
                }
            }
        }
    }
    return report;
}

std::optional<Word> word_fuse(const FusionSet& set, const Word& left, const Word& right) {
    if (left.empty() || right.empty()) {
        throw std::invalid_argument("fusion of words requires non-empty words");
    }
    const auto boundary = set.fuse(left.back(), right.front());
    if (!boundary) {
        return std::nullopt;
    }
    std::vector<LetterId> letters(left.begin(), left.end() - 1);
    letters.push_back(*boundary);
    letters.insert(letters.end(), right.begin() + 1, right.end());
    return Word(std::move(letters));
}

Word word_conj(const FusionSet& set, const Word& word) {
    std::vector<LetterId> letters;
    letters.reserve(word.size());
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
        letters.push_back(set.conj(*it));
    }
    return Word(std::move(letters));
}

Parity word_parity(const FusionSet& set, const Word& word) {
    Parity p = Parity::kEven;
    for (LetterId letter : word) {
        p = p + set.parity(letter);
    }
    return p;
}

std::vector<Word> words_of_length(const FusionSet& set, std::size_t length) {
    std::vector<Word> out;
    const auto n = static_cast<LetterId>(set.size());
    std::vector<LetterId> digits(length, 0);
    while (true) {
        out.emplace_back(digits);
        std::size_t i = length;
        while (i > 0 && digits[i - 1] + 1 == n) {
            digits[--i] = 0;
        }
        if (i == 0) {
            break;
        }
        ++digits[i - 1];
    }
    return out;
}

std::vector<Word> words_up_to(const FusionSet& set, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        auto batch = words_of_length(set, len);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

}  // namespace freefusion
