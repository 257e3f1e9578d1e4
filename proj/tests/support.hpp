#ifndef FREEFUSION_TESTS_SUPPORT_HPP
#define FREEFUSION_TESTS_SUPPORT_HPP

#include "freefusion/fusion_set.hpp"

namespace freefusion::testing {

// conj(s.t) = conj(t).conj(s); the fusion-set axioms do not force this.
inline bool conj_reverses_fusion(const FusionSet& set) {
    for (LetterId s = 0; s < set.size(); ++s) {
        for (LetterId t = 0; t < set.size(); ++t) {
            const auto st = set.fuse(s, t);
            const auto reversed = set.fuse(set.conj(t), set.conj(s));
            if (st ? (!reversed || *reversed != set.conj(*st)) : reversed.has_value()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace freefusion::testing

#endif  // FREEFUSION_TESTS_SUPPORT_HPP
