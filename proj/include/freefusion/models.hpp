#ifndef FREEFUSION_MODELS_HPP
#define FREEFUSION_MODELS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/fusion_set.hpp"
#include "freefusion/rep_ring.hpp"

namespace freefusion {

enum class ModelName { kAo, kAs, kAh, kAb, kAbp, kAsp, kAp, kAc, kAk };

inline constexpr ModelName kAllModels[] = {ModelName::kAo,  ModelName::kAs,  ModelName::kAh,
                                           ModelName::kAb,  ModelName::kAbp, ModelName::kAsp,
                                           ModelName::kAp,  ModelName::kAc,  ModelName::kAk};

/// CLI token: ao as ah ab abp asp apf ac ak.
std::string_view model_token(ModelName name);
/// Throws std::invalid_argument on an unknown token.
ModelName parse_model_token(std::string_view token);

/// A quantum group's representation ring with the class of its fundamental
/// corepresentation. Dimensions are polynomials in the ambient n.
struct Model {
    ModelName name;
    RepRingPtr ring;
    LabelMultiset fundamental;
    Polynomial fund_dim;

    LabelMultiset conjugate_fundamental() const;
};

/// Builds a model from the right-hand sides of the known isomorphisms:
///
///   ao   free fusion ring on {s}, s.s empty; fundamental s, dim n
///   as   free fusion ring on {p}, p.p = p; fundamental 1 + p, dim(p) = n - 1
///   ah   free fusion ring on {u, p}; fundamental u; dims n, n - 1
///   ab   ao with parameter n - 1; fundamental 1 + s
///   asp  as x Z/2; fundamental (1, g) + (p, g)
///   abp  ao(n - 1) * Z/2; fundamental g + s
///   apf  as * circle; fundamental z + p z
///   ac   ao(n - 1) * circle; fundamental z + s z
///   ak   free fusion ring on the complexification of ah; fundamental u_odd1
///
/// Models are formal in n; evaluating at small n may not describe the actual
/// quantum group.
Model model(ModelName name);

/// Built-in fusion sets (with parity where one exists).
FusionSet ao_fusion_set();
FusionSet as_fusion_set();
FusionSet ah_fusion_set();

struct OneDimensionalSummandReport {
    bool ok = false;
    std::optional<Label> zeta;
    bool self_dual = false;
    std::string detail;
};

/// Looks for a one-dimensional non-trivial class zeta in the fundamental with
/// zeta (x) dual(zeta) = 1; for asp and abp zeta must also be self-dual.
/// Throws std::invalid_argument for models other than asp, abp, apf, ac.
OneDimensionalSummandReport check_one_dimensional_summand(const Model& m);

enum class PowerFactor { kU, kUbar };

/// Parses `U` / `Ubar` tokens. Throws std::invalid_argument otherwise.
PowerFactor parse_power_factor(std::string_view token);
std::string_view power_factor_token(PowerFactor f);

/// Iterated tensor product of U / Ubar following the pattern, with
/// multiplicities. Throws std::invalid_argument on an empty pattern.
LabelMultiset decompose_fundamental_power(const Model& m, const std::vector<PowerFactor>& pattern);

/// All patterns of exactly the given length, U before Ubar.
std::vector<std::vector<PowerFactor>> all_patterns(std::size_t length);

}  // namespace freefusion

#endif  // FREEFUSION_MODELS_HPP
