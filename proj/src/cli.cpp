#include "freefusion/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "freefusion/acceptance.hpp"
#include "freefusion/complexification.hpp"
#include "freefusion/embedding.hpp"
#include "freefusion/fusion_ring.hpp"
#include "freefusion/models.hpp"
#include "freefusion/partitions.hpp"

namespace freefusion::cli {

namespace {

constexpr std::string_view kEmptyFusion = "∅";
constexpr std::size_t kMaxPatternLength = 8;
constexpr std::size_t kMaxCrosscheckPairs = 1'000'000;

// Bad command-line input; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A check that ran and failed; maps to exit status 1. The report has
// already been written.
class CheckFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FusionSet read_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read fusion-set file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_fusion_set(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

void write_report(std::ostream& os, const FusionSet& set, const ValidationReport& report) {
    for (const auto& v : report.violations) {
        os << "violation\t" << axiom_name(v.axiom) << '\t' << render_witness(set, v.witness)
           << '\t' << v.detail << '\n';
    }
}

// Loads a set and insists that it satisfies the axioms.
FusionSet read_valid_set(const std::string& path, std::ostream& err) {
    FusionSet set = read_set(path);
    if (auto report = validate_fusion_set(set); !report.valid()) {
        write_report(err, set, report);
        throw CheckFailed(path + " is not a valid fusion set");
    }
    return set;
}

Word parse_word_arg(const FusionSet& set, const std::string& text, const std::string& what,
                    bool allow_unit) {
    if (allow_unit && text == "1") {
        return Word{};
    }
    if (text.empty()) {
        throw UsageError(what + ": empty word (words are dot-separated letters such as u.p)");
    }
    try {
        return set.parse_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(what + ": " + e.what());
    }
}

ModelName parse_model_arg(const std::string& token) {
    try {
        return parse_model_token(token);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("MODEL: ") + e.what() +
                         " (expected ao as ah ab abp asp apf ac ak)");
    }
}

std::string render_pattern(const std::vector<PowerFactor>& pattern) {
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += power_factor_token(pattern[i]);
    }
    return out;
}

void write_word_terms(std::ostream& out, const FusionSet& set, const RingElement& element,
                      const std::string& prefix) {
    for (const auto& [w, c] : element.terms()) {
        out << prefix << c << '\t' << (w.empty() ? "1" : "a[" + set.render(w) + "]") << '\n';
    }
}

std::string render_monomial(const FusionSet& set, const Word& mono) {
    return render(set, GeneratorCombination::single(mono));
}

int cmd_validate(const std::string& path, std::ostream& out) {
    const FusionSet set = read_set(path);
    auto report = validate_fusion_set(set);
    if (set.has_parity()) {
        auto parity = validate_parity(set);
        report.violations.insert(report.violations.end(), parity.violations.begin(),
                                 parity.violations.end());
    }
    if (report.valid()) {
        out << "valid\n";
        return kOk;
    }
    write_report(out, set, report);
    return kCheckFailed;
}

int cmd_fuse(const std::string& path, const std::string& v, const std::string& w,
             std::ostream& out, std::ostream& err) {
    const FusionSet set = read_set(path);
    const Word left = parse_word_arg(set, v, "first WORD", false);
    const Word right = parse_word_arg(set, w, "second WORD", false);
    const FusionSet valid = read_valid_set(path, err);
    const auto fused = word_fuse(valid, left, right);
    out << (fused ? valid.render(*fused) : std::string(kEmptyFusion)) << '\n';
    return kOk;
}

int cmd_product(const std::string& path, const std::string& v, const std::string& w,
                std::ostream& out, std::ostream& err) {
    const FusionSet set = read_set(path);
    const Word left = parse_word_arg(set, v, "first WORD", true);
    const Word right = parse_word_arg(set, w, "second WORD", true);
    const FusionSet valid = read_valid_set(path, err);
    const RingElement product = basis_product(valid, left, right);
    out << "# " << render(valid, RingElement::single(left)) << " * "
        << render(valid, RingElement::single(right)) << " = " << render(valid, product) << '\n';
    out << "coefficient\tterm\n";
    write_word_terms(out, valid, product, "");
    return kOk;
}

int cmd_expand(const std::string& path, const std::string& w, std::ostream& out,
               std::ostream& err) {
    const FusionSet set = read_set(path);
    const Word word = parse_word_arg(set, w, "WORD", false);
    const FusionSet valid = read_valid_set(path, err);
    const RingElement expanded = monomial_expand(valid, word);
    const GeneratorCombination gens = word_to_generators(valid, word);
    out << "# " << render_monomial(valid, word) << " = " << render(valid, expanded) << '\n';
    out << "# a[" << valid.render(word) << "] = " << render(valid, gens) << '\n';
    out << "direction\tcoefficient\tterm\n";
    write_word_terms(out, valid, expanded, "monomial_to_words\t");
    for (const auto& [mono, c] : gens.terms()) {
        out << "word_to_monomials\t" << c << '\t' << render_monomial(valid, mono) << '\n';
    }
    return kOk;
}

int cmd_complexify(const std::string& path, std::ostream& out, std::ostream& err) {
    const FusionSet set = read_set(path);
    if (!set.has_parity()) {
        err << "error: " << path << " has no parity map; complexification needs one\n";
        return kCheckFailed;
    }
    try {
        out << complexify(set).set().to_text();
    } catch (const ValidationError& e) {
        write_report(err, set, e.report());
        throw CheckFailed(e.what());
    }
    return kOk;
}

std::vector<PowerFactor> parse_pattern(const std::vector<std::string>& tokens) {
    std::vector<PowerFactor> pattern;
    for (const auto& t : tokens) {
        try {
            pattern.push_back(parse_power_factor(t));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("PATTERN: ") + e.what());
        }
    }
    if (pattern.empty()) {
        throw UsageError("PATTERN: at least one of U, Ubar is required");
    }
    return pattern;
}

int cmd_decompose(const std::string& model_token, const std::vector<std::string>& tokens,
                  std::ostream& out) {
    const ModelName name = parse_model_arg(model_token);
    const auto pattern = parse_pattern(tokens);
    if (pattern.size() > kMaxPatternLength) {
        throw LimitExceeded("pattern length " + std::to_string(pattern.size()) +
                            " exceeds the cap of " + std::to_string(kMaxPatternLength));
    }
    const Model m = model(name);
    out << "label\tmultiplicity\tdim\n";
    for (const auto& [label, mult] : decompose_fundamental_power(m, pattern)) {
        const auto d = m.ring->dim(label);
        out << m.ring->render(label) << '\t' << mult << '\t' << (d ? d->to_string() : "?") << '\n';
    }
    return kOk;
}

int cmd_dims(const std::string& model_token, std::size_t max_len,
             const std::optional<long long>& eval_n, std::ostream& out, std::ostream& err) {
    const ModelName name = parse_model_arg(model_token);
    if (max_len == 0) {
        throw UsageError("--max-len must be at least 1");
    }
    if (max_len > kMaxPatternLength) {
        throw LimitExceeded("--max-len " + std::to_string(max_len) + " exceeds the cap of " +
                            std::to_string(kMaxPatternLength));
    }
    if (eval_n && *eval_n < 4) {
        err << "warning: n = " << *eval_n
            << " is below 4; the models are formal and may not describe the quantum group there\n";
    }
    const Model m = model(name);
    const Polynomial n = Polynomial::variable();
    bool conserved = true;
    out << "pattern\tlabel\tmultiplicity\tdim\n";
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (const auto& pattern : all_patterns(len)) {
            const auto result = decompose_fundamental_power(m, pattern);
            for (const auto& [label, mult] : result) {
                const Polynomial d = *m.ring->dim(label);
                out << render_pattern(pattern) << '\t' << m.ring->render(label) << '\t' << mult
                    << '\t' << (eval_n ? d.evaluate(*eval_n).str() : d.to_string()) << '\n';
            }
            if (total_dimension(*m.ring, result) != pow(n, static_cast<unsigned>(len))) {
                err << "error: dimensions for pattern " << render_pattern(pattern)
                    << " do not sum to n^" << len << '\n';
                conserved = false;
            }
        }
    }
    return conserved ? kOk : kCheckFailed;
}

int cmd_partitions(std::size_t k, std::size_t l, bool nc, std::ostream& out) {
    const auto parts = enumerate_partitions(k, l, nc);
    out << parts.size() << '\n';
    for (const auto& p : parts) {
        out << p.to_string() << '\n';
    }
    return kOk;
}

int cmd_rank(std::size_t k, std::size_t l, std::size_t n, bool nc, std::ostream& out) {
    if (n == 0) {
        throw UsageError("--n must be at least 1");
    }
    out << span_rank(enumerate_partitions(k, l, nc), n) << '\n';
    return kOk;
}

int cmd_crosscheck(const std::string& path, std::size_t max_len, std::ostream& out,
                   std::ostream& err) {
    const FusionSet set = read_set(path);
    if (!set.has_parity()) {
        err << "error: " << path << " has no parity map; complexification needs one\n";
        return kCheckFailed;
    }
    std::optional<ComplexifiedEmbedding> embedding;
    try {
        embedding.emplace(complexify(set));
    } catch (const ValidationError& e) {
        write_report(err, set, e.report());
        throw CheckFailed(e.what());
    }
    const FusionSet& tilde = embedding->complexified().set();
    // Count words first so the cap is checked before any work.
    std::size_t words = 0;
    std::size_t per_length = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        words += per_length;
        if (words > kMaxCrosscheckPairs) {
            break;
        }
        per_length *= tilde.size();
    }
    if (words > kMaxCrosscheckPairs / std::max<std::size_t>(words, 1)) {
        throw LimitExceeded("crosscheck over " + std::to_string(words) +
                            "+ words exceeds the cap of " + std::to_string(kMaxCrosscheckPairs) +
                            " pairs");
    }
    const auto all = words_up_to(tilde, max_len);
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    std::ostringstream rows;
    const auto& ring = embedding->product_ring();
    auto render_multiset = [&](const LabelMultiset& ms) {
        std::string s;
        for (const auto& [label, m] : ms) {
            if (!s.empty()) {
                s += " + ";
            }
            s += (m == 1 ? "" : m.str() + "*") + ring.render(label);
        }
        return s;
    };
    for (const auto& x : all) {
        for (const auto& y : all) {
            ++pairs;
            const auto report = crosscheck_complexified_product(*embedding, x, y);
            if (!report.agree()) {
                ++mismatches;
                rows << "mismatch\t" << tilde.render(x) << '\t' << tilde.render(y) << '\t'
                     << render_multiset(report.via_fusion_formula) << '\t'
                     << render_multiset(report.via_free_product) << '\n';
            }
        }
    }
    out << "pairs\t" << pairs << "\nmismatches\t" << mismatches << '\n' << rows.str();
    return mismatches == 0 ? kOk : kCheckFailed;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
    bool all_passed = true;
    for (const auto& criterion : acceptance::criteria()) {
        const auto result = acceptance::run(criterion);
        out << acceptance::format_result(result, false) << '\n';
        err << "criterion " << result.id << ": " << result.seconds << "s\n";
        all_passed = all_passed && result.passed;
    }
    return all_passed ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fusion rules of free orthogonal quantum groups and their complexifications",
                 args.empty() ? "freefusion" : args.front()};
    app.require_subcommand(1);

    std::string file;
    std::string word_a;
    std::string word_b;
    std::string model_name;
    std::vector<std::string> pattern;
    std::size_t max_len = 0;
    std::optional<long long> eval_n;
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t n = 0;
    bool nc = false;

    auto* validate = app.add_subcommand("validate", "Check a fusion-set file against the axioms");
    validate->add_option("FILE", file, "fusion-set file")->required();

    auto* fuse = app.add_subcommand("fuse", "Fuse two words at their boundary letters");
    fuse->add_option("FILE", file, "fusion-set file")->required();
    fuse->add_option("V", word_a, "left word, e.g. u.p")->required();
    fuse->add_option("W", word_b, "right word")->required();

    auto* product = app.add_subcommand("product", "Ring product a_V * a_W (1 is the unit)");
    product->add_option("FILE", file, "fusion-set file")->required();
    product->add_option("V", word_a, "left word or 1")->required();
    product->add_option("W", word_b, "right word or 1")->required();

    auto* expand = app.add_subcommand("expand", "Change of basis between words and monomials");
    expand->add_option("FILE", file, "fusion-set file")->required();
    expand->add_option("WORD", word_a, "word")->required();

    auto* complexify_cmd = app.add_subcommand("complexify", "Emit the free complexification");
    complexify_cmd->add_option("FILE", file, "fusion-set file with parity")->required();

    auto* decompose = app.add_subcommand("decompose", "Decompose a tensor power of U / Ubar");
    decompose->add_option("MODEL", model_name, "ao as ah ab abp asp apf ac ak")->required();
    decompose->add_option("PATTERN", pattern, "sequence of U and Ubar")->required();

    auto* dims = app.add_subcommand("dims", "Dimension table for all patterns up to a length");
    dims->add_option("MODEL", model_name, "ao as ah ab abp asp apf ac ak")->required();
    dims->add_option("--max-len", max_len, "longest pattern")->required();
    dims->add_option("--eval-n", eval_n, "substitute an integer for n");

    auto* partitions = app.add_subcommand("partitions", "Enumerate partitions of k + l points");
    partitions->add_option("K", k, "upper points")->required();
    partitions->add_option("L", l, "lower points")->required();
    partitions->add_flag("--nc", nc, "non-crossing only");

    auto* rank = app.add_subcommand("rank", "Rank of the span of the maps T_P");
    rank->add_option("K", k, "upper points")->required();
    rank->add_option("L", l, "lower points")->required();
    rank->add_option("--n", n, "dimension")->required();
    rank->add_flag("--nc", nc, "non-crossing only");

    auto* crosscheck = app.add_subcommand(
        "crosscheck", "Compare complexified fusion with the free-product recursion");
    crosscheck->add_option("FILE", file, "fusion-set file with parity")->required();
    crosscheck->add_option("--max-len", max_len, "longest word")->required();

    auto* selftest = app.add_subcommand("selftest", "Run every acceptance check");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("freefusion");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (validate->parsed()) {
            return cmd_validate(file, out);
        }
        if (fuse->parsed()) {
            return cmd_fuse(file, word_a, word_b, out, err);
        }
        if (product->parsed()) {
            return cmd_product(file, word_a, word_b, out, err);
        }
        if (expand->parsed()) {
            return cmd_expand(file, word_a, out, err);
        }
        if (complexify_cmd->parsed()) {
            return cmd_complexify(file, out, err);
        }
        if (decompose->parsed()) {
            return cmd_decompose(model_name, pattern, out);
        }
        if (dims->parsed()) {
            return cmd_dims(model_name, max_len, eval_n, out, err);
        }
        if (partitions->parsed()) {
            return cmd_partitions(k, l, nc, out);
        }
        if (rank->parsed()) {
            return cmd_rank(k, l, n, nc, out);
        }
        if (crosscheck->parsed()) {
            return cmd_crosscheck(file, max_len, out, err);
        }
        if (selftest->parsed()) {
            return cmd_selftest(out, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const CheckFailed& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace freefusion::cli
