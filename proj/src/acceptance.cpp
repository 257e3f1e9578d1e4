#include "freefusion/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "freefusion/complexification.hpp"
#include "freefusion/embedding.hpp"
#include "freefusion/models.hpp"
#include "freefusion/partitions.hpp"

namespace freefusion::acceptance {

namespace {

const Polynomial kN = Polynomial::variable();

std::string fail(const std::string& what) {
    return what.empty() ? "unspecified failure" : what;
}

// Fusion table entry: -1 is the empty fusion.
bool satisfies_axioms(std::size_t n, const std::vector<int>& conj, const std::vector<int>& table) {
    auto f = [&](int a, int b) { return (a < 0 || b < 0) ? -1 : table[a * n + b]; };
    for (std::size_t s = 0; s < n; ++s) {
        if (conj[conj[s]] != static_cast<int>(s)) {
            return false;
        }
    }
    for (int a = 0; a < static_cast<int>(n); ++a) {
        for (int b = 0; b < static_cast<int>(n); ++b) {
            for (int c = 0; c < static_cast<int>(n); ++c) {
                if ((f(a, b) == conj[c]) != (f(b, c) == conj[a])) {
                    return false;
                }
                if (f(f(a, b), c) != f(a, f(b, c))) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string check_complexification_table() {
    const auto cs = complexify(ah_fusion_set());
    const FusionSet& tilde = cs.set();
    if (tilde.size() != 4) {
        return "expected 4 letters, got " + std::to_string(tilde.size());
    }
    // The four-letter table with letters u, v, p, q and its relabeling.
    const std::vector<std::string> short_names = {"u", "v", "p", "q"};
    const std::vector<std::string> tokens = {"u_odd1", "u_odd2", "p_even2", "p_even1"};
    const char* expected[4][4] = {
        {"", "q", "u", ""},
        {"p", "", "", "v"},
        {"", "v", "p", ""},
        {"u", "", "", "q"},
    };
    const std::vector<std::string> expected_conj = {"v", "u", "p", "q"};
    auto id = [&](const std::string& short_name) {
        for (std::size_t i = 0; i < short_names.size(); ++i) {
            if (short_names[i] == short_name) {
                return *tilde.find(tokens[i]);
            }
        }
        throw std::logic_error("bad name");
    };
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const auto got = tilde.fuse(id(short_names[r]), id(short_names[c]));
            const std::string want = expected[r][c];
            const bool ok = want.empty() ? !got.has_value() : (got && *got == id(want));
            if (!ok) {
                return "cell " + short_names[r] + "." + short_names[c] + ": expected " +
                       (want.empty() ? "empty" : want) + ", got " +
                       (got ? tilde.name(*got) : "empty");
            }
        }
        if (tilde.conj(id(short_names[r])) != id(expected_conj[r])) {
            return "conjugate of " + short_names[r] + " is not " + expected_conj[r];
        }
    }
    if (!validate_fusion_set(tilde).valid()) {
        return "complexified set fails the fusion-set axioms";
    }
    return {};
}

std::string check_ak_dimensions() {
    const Model ak = model(ModelName::kAk);
    const auto result = decompose_fundamental_power(ak, {PowerFactor::kU, PowerFactor::kUbar});
    const auto& ring = static_cast<const FusionRepRing&>(*ak.ring);
    const LabelMultiset expected{
        {Label::word(ring.set().parse_word("u_odd1.u_odd2")), 1},
        {Label::word(ring.set().parse_word("p_even1")), 1},
        {ring.trivial(), 1},
    };
    if (result != expected) {
        return "U (x) Ubar does not decompose as [u_odd1.u_odd2] + [p_even1] + [1]";
    }
    const std::vector<std::pair<std::string, Polynomial>> dims = {
        {"u_odd1.u_odd2", kN * kN - kN},
        {"p_even1", kN - Polynomial(1)},
    };
    for (const auto& [word, want] : dims) {
        const auto got = ring.dim(Label::word(ring.set().parse_word(word)));
        if (got != want) {
            return "dim [" + word + "] = " + (got ? got->to_string() : "?") + ", expected " +
                   want.to_string();
        }
    }
    if (ring.dim(ring.trivial()) != Polynomial(1)) {
        return "trivial class is not one-dimensional";
    }
    if (total_dimension(ring, result) != kN * kN) {
        return "dimensions do not sum to n^2";
    }
    return {};
}

std::string check_crosscheck() {
    for (const FusionSet& source : {ah_fusion_set(), ao_fusion_set()}) {
        const ComplexifiedEmbedding embedding(complexify(source));
        const auto words = words_up_to(embedding.complexified().set(), 3);
        for (const auto& x : words) {
            for (const auto& y : words) {
                if (!crosscheck_complexified_product(embedding, x, y).agree()) {
                    const auto& s = embedding.complexified().set();
                    return "mismatch for x = " + s.render(x) + ", y = " + s.render(y);
                }
            }
        }
    }
    return {};
}

std::string check_freeness() {
    for (const FusionSet& set : {ao_fusion_set(), as_fusion_set(), ah_fusion_set()}) {
        for (const Word& w : words_up_to(set, 6)) {
            const auto gens = word_to_generators(set, w);
            if (expand_generators(set, gens) != RingElement::single(w)) {
                return "generators -> words round trip fails at " + set.render(w);
            }
            if (gens.coefficient(w) != 1) {
                return "leading generator coefficient of " + set.render(w) + " is not 1";
            }
            const auto expanded = monomial_expand(set, w);
            if (expanded.coefficient(w) != 1) {
                return "leading word coefficient of monomial " + set.render(w) + " is not 1";
            }
            for (const auto& [v, c] : gens.terms()) {
                if (v != w && v.size() >= w.size()) {
                    return "generator expansion of " + set.render(w) + " is not unitriangular";
                }
            }
            GeneratorCombination back;
            for (const auto& [v, c] : expanded.terms()) {
                if (v != w && v.size() >= w.size()) {
                    return "monomial expansion of " + set.render(w) + " is not unitriangular";
                }
                auto part = word_to_generators(set, v);
                part *= c;
                back += part;
            }
            if (back != GeneratorCombination::single(w)) {
                return "words -> generators round trip fails at monomial " + set.render(w);
            }
        }
    }
    return {};
}

std::string associativity_failure(const FusionSet& set, std::size_t max_length) {
    const auto words = words_up_to(set, max_length);
    for (const auto& x : words) {
        const auto ax = RingElement::single(x);
        for (const auto& y : words) {
            const auto xy = basis_product(set, x, y);
            for (const auto& z : words) {
                const auto lhs = ring_product(set, xy, RingElement::single(z));
                const auto rhs = ring_product(set, ax, basis_product(set, y, z));
                if (lhs != rhs) {
                    return "(" + set.render(x) + "," + set.render(y) + "," + set.render(z) + ")";
                }
            }
        }
    }
    return {};
}

std::string check_associativity() {
    if (auto bad = associativity_failure(ah_fusion_set(), 2); !bad.empty()) {
        return "non-associative triple over ah: " + bad;
    }
    const auto sets = random_fusion_sets(100, 3, 20240517);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!validate_fusion_set(sets[i]).valid()) {
            return "random set " + std::to_string(i) + " is not valid";
        }
        if (auto bad = associativity_failure(sets[i], 2); !bad.empty()) {
            return "non-associative triple " + bad + " over random set:\n" + sets[i].to_text();
        }
    }
    const FusionSet broken = incompatible_fusion_set();
    if (validate_fusion_set(broken).valid()) {
        return "incompatible set unexpectedly validates";
    }
    if (associativity_failure(broken, 1).empty()) {
        return "incompatible set shows no non-associative letter triple";
    }
    return {};
}

std::string check_ao_closed_form() {
    const FusionSet set = ao_fusion_set();
    for (unsigned k = 0; k <= 8; ++k) {
        for (unsigned l = 0; l <= 8; ++l) {
            const Word sk(std::vector<LetterId>(k, 0));
            const Word sl(std::vector<LetterId>(l, 0));
            if (basis_product(set, sk, sl) != ao_closed_form(k, l)) {
                return "a_{s^" + std::to_string(k) + "} a_{s^" + std::to_string(l) +
                       "} differs from the closed form";
            }
        }
    }
    return {};
}

std::string check_partitions() {
    for (unsigned k = 0; k <= 10; ++k) {
        const auto count = enumerate_partitions(0, k, true).size();
        if (BigInt(count) != catalan(k)) {
            return "|NC(0," + std::to_string(k) + ")| = " + std::to_string(count) +
                   ", Catalan says " + catalan(k).str();
        }
    }
    if (catalan(10) != 16796) {
        return "Catalan oracle disagrees with C_10 = 16796";
    }
    for (unsigned k = 0; k <= 8; ++k) {
        const auto count = enumerate_partitions(0, k, false).size();
        if (BigInt(count) != bell(k)) {
            return "|Part(0," + std::to_string(k) + ")| = " + std::to_string(count) +
                   ", Bell says " + bell(k).str();
        }
    }
    if (bell(8) != 4140) {
        return "Bell oracle disagrees with Bell(8) = 4140";
    }
    const auto rank = span_rank(enumerate_partitions(0, 4, true), 4);
    if (rank != 14) {
        return "span_rank(NC(0,4), n=4) = " + std::to_string(rank) + ", expected 14";
    }
    return {};
}

std::string check_one_dimensional_summands() {
    for (ModelName name : {ModelName::kAsp, ModelName::kAbp, ModelName::kAp, ModelName::kAc}) {
        const Model m = model(name);
        const auto report = check_one_dimensional_summand(m);
        if (!report.ok) {
            return std::string(model_token(name)) + ": " + report.detail;
        }
        const bool needs_self_dual = name == ModelName::kAsp || name == ModelName::kAbp;
        if (needs_self_dual != report.self_dual) {
            return std::string(model_token(name)) + ": unexpected self-duality of " +
                   m.ring->render(*report.zeta);
        }
    }
    return {};
}

std::string check_dimension_conservation() {
    for (ModelName name : kAllModels) {
        const Model m = model(name);
        if (m.fund_dim != kN) {
            return std::string(model_token(name)) + ": fundamental has dimension " +
                   m.fund_dim.to_string();
        }
        for (std::size_t len = 1; len <= 4; ++len) {
            for (const auto& pattern : all_patterns(len)) {
                const auto total = total_dimension(*m.ring, decompose_fundamental_power(m, pattern));
                if (total != pow(kN, static_cast<unsigned>(len))) {
                    return std::string(model_token(name)) + ": pattern of length " +
                           std::to_string(len) + " sums to " + total.to_string();
                }
            }
        }
    }
    return {};
}

std::string check_odd_powers() {
    const Model ak = model(ModelName::kAk);
    for (std::size_t len : {1, 3, 5}) {
        for (const auto& pattern : all_patterns(len)) {
            const auto result = decompose_fundamental_power(ak, pattern);
            if (result.count(ak.ring->trivial()) != 0) {
                return "trivial class occurs in an odd pattern of length " + std::to_string(len);
            }
        }
    }
    return {};
}

}  // namespace

BigInt catalan(unsigned m) {
    std::vector<BigInt> c{1};
    for (unsigned i = 1; i <= m; ++i) {
        BigInt next = 0;
        for (unsigned j = 0; j < i; ++j) {
            next += c[j] * c[i - 1 - j];
        }
        c.push_back(next);
    }
    return c[m];
}

BigInt bell(unsigned m) {
    std::vector<BigInt> row{1};
    for (unsigned i = 0; i < m; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& x : row) {
            next.push_back(next.back() + x);
        }
        row = std::move(next);
    }
    return row.front();
}

RingElement ao_closed_form(unsigned k, unsigned l) {
    RingElement out;
    for (unsigned j = 0; j <= std::min(k, l); ++j) {
        out.add(Word(std::vector<LetterId>(k + l - 2 * j, 0)), 1);
    }
    return out;
}

std::vector<FusionSet> all_fusion_sets(std::size_t max_letters) {
    std::vector<FusionSet> out;
    for (std::size_t n = 1; n <= max_letters; ++n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) {
            names.emplace_back(1, static_cast<char>('a' + i));
        }
        std::vector<int> conj(n, 0);
        while (true) {
            std::vector<int> table(n * n, -1);
            while (true) {
                if (satisfies_axioms(n, conj, table)) {
                    std::vector<LetterId> c(conj.begin(), conj.end());
                    std::vector<std::optional<LetterId>> f;
                    for (int t : table) {
                        f.push_back(t < 0 ? std::nullopt
                                          : std::optional<LetterId>(static_cast<LetterId>(t)));
                    }
                    out.emplace_back(names, std::move(c), std::move(f));
                }
                std::size_t i = 0;
                while (i < table.size() && table[i] == static_cast<int>(n) - 1) {
                    table[i++] = -1;
                }
                if (i == table.size()) {
                    break;
                }
                ++table[i];
            }
            std::size_t i = 0;
            while (i < n && conj[i] == static_cast<int>(n) - 1) {
                conj[i++] = 0;
            }
            if (i == n) {
                break;
            }
            ++conj[i];
        }
    }
    return out;
}

std::vector<FusionSet> random_fusion_sets(std::size_t count, std::size_t max_letters,
                                          std::uint64_t seed) {
    const auto pool = all_fusion_sets(max_letters);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<FusionSet> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(pool[pick(rng)]);
    }
    return out;
}

FusionSet incompatible_fusion_set() {
    return parse_fusion_set("letters: a b\nconj: a=a b=b\nfusion: a.a=b\n");
}

std::vector<Criterion> criteria() {
    return {
        {1, "complexified ah reproduces the four-letter fusion table", 1.0,
         check_complexification_table},
        {2, "ak: U (x) Ubar = uv + q + 1 with dims n^2-n, n-1, 1", 1.0, check_ak_dimensions},
        {3, "complexified products agree with the free-product recursion (len <= 3)", 30.0,
         check_crosscheck},
        {4, "free fusion rings are free: unitriangular basis change (len <= 6)", 10.0,
         check_freeness},
        {5, "associativity over ah and 100 random sets; incompatible set fails", 30.0,
         check_associativity},
        {6, "ao closed form a_{s^k} a_{s^l} for k, l <= 8", 5.0, check_ao_closed_form},
        {7, "Catalan/Bell partition counts and span rank of NC(0,4) at n=4", 60.0,
         check_partitions},
        {8, "one-dimensional summand zeta with zeta (x) dual = 1 in asp, abp, apf, ac", 1.0,
         check_one_dimensional_summands},
        {9, "dimension conservation for every model, patterns of length <= 4", 30.0,
         check_dimension_conservation},
        {10, "ak: no trivial class in odd patterns up to length 5", 10.0, check_odd_powers},
    };
}

CriterionResult run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = c.check();
    } catch (const std::exception& e) {
        failure = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.budget_seconds) {
        failure = "exceeded time budget";
    }
    return {c.id, c.title, failure.empty(), failure, seconds, c.budget_seconds};
}

std::string format_result(const CriterionResult& r, bool with_timing) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << '\t' << r.id << '\t' << r.title;
    if (with_timing) {
        out << '\t' << std::fixed << std::setprecision(3) << r.seconds << "s/"
            << std::setprecision(0) << r.budget_seconds << 's';
    }
    if (!r.passed) {
        out << '\t' << r.detail;
    }
    return out.str();
}

}  // namespace freefusion::acceptance
