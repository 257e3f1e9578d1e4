#include "freefusion/models.hpp"

#include "freefusion/complexification.hpp"

namespace freefusion {

namespace {

const Polynomial kN = Polynomial::variable();
const Polynomial kNMinus1 = Polynomial::variable() - Polynomial(1);

LabelMultiset single(const Label& label) {
    return {{label, 1}};
}

Model finish(ModelName name, RepRingPtr ring, LabelMultiset fundamental) {
    Polynomial fund_dim = total_dimension(*ring, fundamental);
    return Model{name, std::move(ring), std::move(fundamental), std::move(fund_dim)};
}

std::shared_ptr<const FusionRepRing> ao_ring(const Polynomial& dim_s) {
    auto set = ao_fusion_set();
    DimensionAssignment dims(set, {dim_s});
    return ring_from_fusion_set(std::move(set), std::move(dims));
}

std::shared_ptr<const FusionRepRing> as_ring() {
    auto set = as_fusion_set();
    DimensionAssignment dims(set, {kNMinus1});
    return ring_from_fusion_set(std::move(set), std::move(dims));
}

Label word_label(const FusionSet& set, std::string_view dotted) {
    return Label::word(set.parse_word(dotted));
}

}  // namespace

FusionSet ao_fusion_set() {
    return parse_fusion_set("letters: s\nconj: s=s\nparity: s=odd\n");
}

FusionSet as_fusion_set() {
    return parse_fusion_set("letters: p\nconj: p=p\nfusion: p.p=p\n");
}

FusionSet ah_fusion_set() {
    return parse_fusion_set(
        "letters: u p\n"
        "conj: u=u p=p\n"
        "fusion: u.u=p u.p=u p.u=u p.p=p\n"
        "parity: u=odd p=even\n");
}

std::string_view model_token(ModelName name) {
    switch (name) {
        case ModelName::kAo:
            return "ao";
        case ModelName::kAs:
            return "as";
        case ModelName::kAh:
            return "ah";
        case ModelName::kAb:
            return "ab";
        case ModelName::kAbp:
            return "abp";
        case ModelName::kAsp:
            return "asp";
        case ModelName::kAp:
            return "apf";
        case ModelName::kAc:
            return "ac";
        case ModelName::kAk:
            return "ak";
    }
    return "?";
}

ModelName parse_model_token(std::string_view token) {
    for (ModelName m : kAllModels) {
        if (model_token(m) == token) {
            return m;
        }
    }
    throw std::invalid_argument("unknown model '" + std::string(token) + "'");
}

LabelMultiset Model::conjugate_fundamental() const {
    LabelMultiset out;
    for (const auto& [label, m] : fundamental) {
        add_to(out, ring->dual(label), m);
    }
    return out;
}

Model model(ModelName name) {
    switch (name) {
        case ModelName::kAo: {
            auto ring = ao_ring(kN);
            return finish(name, ring, single(word_label(ring->set(), "s")));
        }
        case ModelName::kAs: {
            auto ring = as_ring();
            LabelMultiset fund{{ring->trivial(), 1}, {word_label(ring->set(), "p"), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAh: {
            auto set = ah_fusion_set();
            DimensionAssignment dims(set, {kN, kNMinus1});
            auto ring = ring_from_fusion_set(std::move(set), std::move(dims));
            return finish(name, ring, single(word_label(ring->set(), "u")));
        }
        case ModelName::kAb: {
            auto ring = ao_ring(kNMinus1);
            LabelMultiset fund{{ring->trivial(), 1}, {word_label(ring->set(), "s"), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAsp: {
            auto as = as_ring();
            auto ring = direct_product(as, cyclic2_ring());
            const Label g = Label::integer(1);
            LabelMultiset fund{{Label::pair(as->trivial(), g), 1},
                               {Label::pair(word_label(as->set(), "p"), g), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAbp: {
            auto ao = ao_ring(kNMinus1);
            auto ring = free_product(ao, cyclic2_ring());
            LabelMultiset fund{{ring->embed(1, Label::integer(1)), 1},
                               {ring->embed(0, word_label(ao->set(), "s")), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAp: {
            auto as = as_ring();
            auto ring = free_product(as, circle_ring());
            LabelMultiset fund{
                {ring->embed(1, Label::integer(1)), 1},
                {ring->make_label({{0, word_label(as->set(), "p")}, {1, Label::integer(1)}}), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAc: {
            auto ao = ao_ring(kNMinus1);
            auto ring = free_product(ao, circle_ring());
            LabelMultiset fund{
                {ring->embed(1, Label::integer(1)), 1},
                {ring->make_label({{0, word_label(ao->set(), "s")}, {1, Label::integer(1)}}), 1}};
            return finish(name, ring, std::move(fund));
        }
        case ModelName::kAk: {
            const auto cs = complexify(ah_fusion_set());
            const DimensionAssignment base_dims(cs.source(), {kN, kNMinus1});
            std::vector<Polynomial> dims;
            for (LetterId s = 0; s < cs.set().size(); ++s) {
                dims.push_back(base_dims(cs.annotation(s).base));
            }
            DimensionAssignment tilde_dims(cs.set(), std::move(dims));
            auto ring = ring_from_fusion_set(cs.set(), std::move(tilde_dims));
            return finish(name, ring, single(word_label(ring->set(), "u_odd1")));
        }
    }
    throw std::invalid_argument("unknown model");
}

OneDimensionalSummandReport check_one_dimensional_summand(const Model& m) {
    const bool needs_self_dual = m.name == ModelName::kAsp || m.name == ModelName::kAbp;
    if (!needs_self_dual && m.name != ModelName::kAp && m.name != ModelName::kAc) {
        throw std::invalid_argument("the one-dimensional summand check applies to asp, abp, apf, ac only; got " +
                                    std::string(model_token(m.name)));
    }
    OneDimensionalSummandReport report;
    const RepRing& ring = *m.ring;
    for (const auto& [label, mult] : m.fundamental) {
        if (label == ring.trivial() || ring.dim(label) != Polynomial(1)) {
            continue;
        }
        const Label dual = ring.dual(label);
        if (ring.decompose_pair(label, dual) != LabelMultiset{{ring.trivial(), 1}}) {
            continue;
        }
        const bool self_dual = dual == label;
        if (needs_self_dual && !self_dual) {
            continue;
        }
        report.ok = true;
        report.zeta = label;
        report.self_dual = self_dual;
        report.detail = "zeta = " + ring.render(label) + ", dual = " + ring.render(dual);
        return report;
    }
    report.detail = "no one-dimensional non-trivial class with zeta (x) dual(zeta) = 1";
    return report;
}

PowerFactor parse_power_factor(std::string_view token) {
    if (token == "U") {
        return PowerFactor::kU;
    }
    if (token == "Ubar") {
        return PowerFactor::kUbar;
    }
    throw std::invalid_argument("pattern entries must be U or Ubar, got '" + std::string(token) +
                                "'");
}

std::string_view power_factor_token(PowerFactor f) {
    return f == PowerFactor::kU ? "U" : "Ubar";
}

LabelMultiset decompose_fundamental_power(const Model& m, const std::vector<PowerFactor>& pattern) {
    if (pattern.empty()) {
        throw std::invalid_argument("pattern must be non-empty");
    }
    const LabelMultiset u = m.fundamental;
    const LabelMultiset ubar = m.conjugate_fundamental();
    LabelMultiset acc = pattern.front() == PowerFactor::kU ? u : ubar;
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        acc = tensor(*m.ring, acc, pattern[i] == PowerFactor::kU ? u : ubar);
    }
    return acc;
}

std::vector<std::vector<PowerFactor>> all_patterns(std::size_t length) {
    std::vector<std::vector<PowerFactor>> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << length); ++bits) {
        std::vector<PowerFactor> p;
        for (std::size_t i = 0; i < length; ++i) {
            p.push_back(((bits >> (length - 1 - i)) & 1U) ? PowerFactor::kUbar : PowerFactor::kU);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace freefusion
