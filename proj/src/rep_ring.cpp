#include "freefusion/rep_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace freefusion {

namespace {

class CircleRing : public RepRing {
public:
    Label trivial() const override { return Label::integer(0); }
    Label dual(const Label& label) const override { return Label::integer(-label.as_integer()); }
    LabelMultiset decompose_pair(const Label& left, const Label& right) const override {
        return {{Label::integer(left.as_integer() + right.as_integer()), 1}};
    }
    std::optional<Polynomial> dim(const Label&) const override { return Polynomial(1); }
    bool contains(const Label& label) const override {
        return label.kind() == Label::Kind::kInteger;
    }
    std::string render_bare(const Label& label) const override {
        return "z^" + std::to_string(label.as_integer());
    }
};

class Cyclic2Ring : public RepRing {
public:
    Label trivial() const override { return Label::integer(0); }
    Label dual(const Label& label) const override { return label; }
    LabelMultiset decompose_pair(const Label& left, const Label& right) const override {
        return {{Label::integer((left.as_integer() + right.as_integer()) % 2), 1}};
    }
    std::optional<Polynomial> dim(const Label&) const override { return Polynomial(1); }
    bool contains(const Label& label) const override {
        return label.kind() == Label::Kind::kInteger &&
               (label.as_integer() == 0 || label.as_integer() == 1);
    }
    std::string render_bare(const Label& label) const override {
        return "g^" + std::to_string(label.as_integer());
    }
};

class DirectProductRing : public RepRing {
public:
    DirectProductRing(RepRingPtr left, RepRingPtr right)
        : left_(std::move(left)), right_(std::move(right)) {}

    Label trivial() const override { return Label::pair(left_->trivial(), right_->trivial()); }
    Label dual(const Label& label) const override {
        return Label::pair(left_->dual(label.first()), right_->dual(label.second()));
    }
    LabelMultiset decompose_pair(const Label& left, const Label& right) const override {
        const auto a = left_->decompose_pair(left.first(), right.first());
        const auto b = right_->decompose_pair(left.second(), right.second());
        LabelMultiset out;
        for (const auto& [la, ma] : a) {
            for (const auto& [lb, mb] : b) {
                add_to(out, Label::pair(la, lb), ma * mb);
            }
        }
        return out;
    }
    std::optional<Polynomial> dim(const Label& label) const override {
        auto a = left_->dim(label.first());
        auto b = right_->dim(label.second());
        if (!a || !b) {
            return std::nullopt;
        }
        return *a * *b;
    }
    bool contains(const Label& label) const override {
        return label.kind() == Label::Kind::kPair && left_->contains(label.first()) &&
               right_->contains(label.second());
    }
    std::string render_bare(const Label& label) const override {
        return "(" + left_->render_bare(label.first()) + ", " +
               right_->render_bare(label.second()) + ")";
    }

private:
    RepRingPtr left_;
    RepRingPtr right_;
};

}  // namespace

LabelMultiset tensor(const RepRing& ring, const LabelMultiset& left, const LabelMultiset& right) {
    LabelMultiset out;
    for (const auto& [a, ma] : left) {
        for (const auto& [b, mb] : right) {
            add_to(out, ring.decompose_pair(a, b), ma * mb);
        }
    }
    return out;
}

Polynomial total_dimension(const RepRing& ring, const LabelMultiset& labels) {
    Polynomial total;
    for (const auto& [label, m] : labels) {
        const auto d = ring.dim(label);
        if (!d) {
            throw std::logic_error("ring carries no dimensions");
        }
        total += Polynomial(m) * *d;
    }
    return total;
}

FusionRepRing::FusionRepRing(FusionSet set, std::optional<DimensionAssignment> dims)
    : set_(std::move(set)), dims_(std::move(dims)) {}

Label FusionRepRing::dual(const Label& label) const {
    return Label::word(word_conj(set_, label.as_word()));
}

LabelMultiset FusionRepRing::decompose_pair(const Label& left, const Label& right) const {
    LabelMultiset out;
    const RingElement product = basis_product(set_, left.as_word(), right.as_word());
    for (const auto& [w, c] : product.terms()) {
        add_to(out, Label::word(w), c);
    }
    return out;
}

std::optional<Polynomial> FusionRepRing::dim(const Label& label) const {
    if (!dims_) {
        return std::nullopt;
    }
    return dimension(set_, RingElement::single(label.as_word()), *dims_);
}

bool FusionRepRing::contains(const Label& label) const {
    return label.kind() == Label::Kind::kWord &&
           std::all_of(label.as_word().begin(), label.as_word().end(),
                       [&](LetterId s) { return s < set_.size(); });
}

std::string FusionRepRing::render_bare(const Label& label) const {
    return set_.render(label.as_word());
}

std::shared_ptr<const FusionRepRing> ring_from_fusion_set(FusionSet set,
                                                          std::optional<DimensionAssignment> dims) {
    if (auto report = validate_fusion_set(set); !report.valid()) {
        throw ValidationError("not a fusion set", std::move(report));
    }
    return std::make_shared<const FusionRepRing>(std::move(set), std::move(dims));
}

RepRingPtr circle_ring() {
    return std::make_shared<const CircleRing>();
}

RepRingPtr cyclic2_ring() {
    return std::make_shared<const Cyclic2Ring>();
}

FreeProductRing::FreeProductRing(RepRingPtr left, RepRingPtr right)
    : left_(std::move(left)), right_(std::move(right)) {}

Label FreeProductRing::make_label(const std::vector<std::pair<std::uint8_t, Label>>& parts) const {
    std::vector<Label> labels;
    std::vector<std::uint8_t> sides;
    for (const auto& [side, part] : parts) {
        const RepRing& f = factor(side);
        if (part == f.trivial()) {
            continue;
        }
        if (!sides.empty() && sides.back() == side) {
            const auto merged = f.decompose_pair(labels.back(), part);
            if (merged.size() != 1 || merged.begin()->second != 1) {
                throw std::invalid_argument("adjacent parts do not merge to one irreducible");
            }
            const Label& m = merged.begin()->first;
            if (m == f.trivial()) {
                labels.pop_back();
                sides.pop_back();
            } else {
                labels.back() = m;
            }
            continue;
        }
        labels.push_back(part);
        sides.push_back(side);
    }
    return Label::sequence(std::move(labels), std::move(sides));
}

Label FreeProductRing::embed(std::uint8_t side, const Label& factor_label) const {
    return make_label({{side, factor_label}});
}

Label FreeProductRing::dual(const Label& label) const {
    std::vector<Label> parts;
    std::vector<std::uint8_t> sides;
    for (std::size_t i = label.parts().size(); i-- > 0;) {
        parts.push_back(factor(label.sides()[i]).dual(label.parts()[i]));
        sides.push_back(label.sides()[i]);
    }
    return Label::sequence(std::move(parts), std::move(sides));
}

LabelMultiset FreeProductRing::decompose_pair(const Label& left, const Label& right) const {
    if (left.parts().empty()) {
        return {{right, 1}};
    }
    if (right.parts().empty()) {
        return {{left, 1}};
    }
    const auto key = std::pair{left, right};
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
    }

    const auto& lp = left.parts();
    const auto& ls = left.sides();
    const auto& rp = right.parts();
    const auto& rs = right.sides();
    LabelMultiset out;

    if (ls.back() != rs.front()) {
        std::vector<Label> parts(lp);
        std::vector<std::uint8_t> sides(ls);
        parts.insert(parts.end(), rp.begin(), rp.end());
        sides.insert(sides.end(), rs.begin(), rs.end());
        out.emplace(Label::sequence(std::move(parts), std::move(sides)), 1);
    } else {
        const RepRing& f = factor(ls.back());
        const Label head = Label::sequence({lp.begin(), lp.end() - 1}, {ls.begin(), ls.end() - 1});
        const Label tail = Label::sequence({rp.begin() + 1, rp.end()}, {rs.begin() + 1, rs.end()});
        for (const auto& [summand, mult] : f.decompose_pair(lp.back(), rp.front())) {
            if (summand == f.trivial()) {
                add_to(out, decompose_pair(head, tail), mult);
                continue;
            }
            std::vector<Label> parts(head.parts());
            std::vector<std::uint8_t> sides(head.sides());
            parts.push_back(summand);
            sides.push_back(ls.back());
            parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
            sides.insert(sides.end(), tail.sides().begin(), tail.sides().end());
            add_to(out, Label::sequence(std::move(parts), std::move(sides)), mult);
        }
    }

    std::lock_guard lock(cache_mutex_);
    cache_.emplace(key, out);
    return out;
}

std::optional<Polynomial> FreeProductRing::dim(const Label& label) const {
    Polynomial total(1);
    for (std::size_t i = 0; i < label.parts().size(); ++i) {
        const auto d = factor(label.sides()[i]).dim(label.parts()[i]);
        if (!d) {
            return std::nullopt;
        }
        total *= *d;
    }
    return total;
}

bool FreeProductRing::contains(const Label& label) const {
    if (label.kind() != Label::Kind::kSequence) {
        return false;
    }
    for (std::size_t i = 0; i < label.parts().size(); ++i) {
        const std::uint8_t side = label.sides()[i];
        if (side > 1 || (i > 0 && label.sides()[i - 1] == side)) {
            return false;
        }
        const RepRing& f = factor(side);
        if (!f.contains(label.parts()[i]) || label.parts()[i] == f.trivial()) {
            return false;
        }
    }
    return true;
}

std::string FreeProductRing::render_bare(const Label& label) const {
    if (label.parts().empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < label.parts().size(); ++i) {
        if (i > 0) {
            out += " | ";
        }
        out += factor(label.sides()[i]).render_bare(label.parts()[i]);
    }
    return out;
}

std::shared_ptr<const FreeProductRing> free_product(RepRingPtr left, RepRingPtr right) {
    return std::make_shared<const FreeProductRing>(std::move(left), std::move(right));
}

RepRingPtr direct_product(RepRingPtr left, RepRingPtr right) {
    return std::make_shared<const DirectProductRing>(std::move(left), std::move(right));
}

}  // namespace freefusion
