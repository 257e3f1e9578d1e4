#ifndef FREEFUSION_ACCEPTANCE_HPP
#define FREEFUSION_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "freefusion/bigint.hpp"
#include "freefusion/fusion_ring.hpp"
#include "freefusion/fusion_set.hpp"

namespace freefusion::acceptance {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
    double seconds;
    double budget_seconds;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    /// Returns an empty string on success, otherwise a description of the
    /// first failure.
    std::function<std::string()> check;
};

/// The ten acceptance criteria in order.
std::vector<Criterion> criteria();

/// Runs one criterion, timing it. A criterion passes only if its check
/// succeeds within its time budget.
CriterionResult run(const Criterion& c);

/// Tab-separated `PASS|FAIL  id  title  [seconds/budget]  [failure detail]`.
/// Timing is optional so that output can be kept reproducible.
std::string format_result(const CriterionResult& r, bool with_timing = true);

// Independent oracles. None of these route through the code they check.

/// Catalan numbers by the Segner recursion C_{m+1} = sum C_i C_{m-i}.
BigInt catalan(unsigned m);
/// Bell numbers by the Bell triangle.
BigInt bell(unsigned m);
/// sum_{j=0}^{min(k,l)} a_{s^{k+l-2j}} over a one-letter set with s.s empty.
RingElement ao_closed_form(unsigned k, unsigned l);

/// Every fusion set (all conjugations and partial fusion tables) with 1 to
/// max_letters letters that satisfies the axioms, found by exhaustive search.
/// Letters are named a, b, c, ...
std::vector<FusionSet> all_fusion_sets(std::size_t max_letters);

/// `count` sets drawn uniformly with replacement from all_fusion_sets.
std::vector<FusionSet> random_fusion_sets(std::size_t count, std::size_t max_letters,
                                          std::uint64_t seed);

/// The two-letter set a.a = b with trivial conjugation: associative fusion
/// but the compatibility law fails at (a,a,b).
FusionSet incompatible_fusion_set();

}  // namespace freefusion::acceptance

#endif  // FREEFUSION_ACCEPTANCE_HPP
