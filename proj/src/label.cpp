#include "freefusion/label.hpp"

#include <stdexcept>

namespace freefusion {

Label Label::word(Word w) {
    Label l;
    l.kind_ = Kind::kWord;
    l.word_ = std::move(w);
    return l;
}

Label Label::integer(std::int64_t value) {
    Label l;
    l.kind_ = Kind::kInteger;
    l.value_ = value;
    return l;
}

Label Label::pair(Label first, Label second) {
    Label l;
    l.kind_ = Kind::kPair;
    l.parts_.push_back(std::move(first));
    l.parts_.push_back(std::move(second));
    return l;
}

Label Label::sequence(std::vector<Label> parts, std::vector<std::uint8_t> sides) {
    if (parts.size() != sides.size()) {
        throw std::invalid_argument("every sequence part needs a side");
    }
    Label l;
    l.kind_ = Kind::kSequence;
    l.parts_ = std::move(parts);
    l.sides_ = std::move(sides);
    return l;
}

const Word& Label::as_word() const {
    if (kind_ != Kind::kWord) {
        throw std::logic_error("label is not a word");
    }
    return word_;
}

std::int64_t Label::as_integer() const {
    if (kind_ != Kind::kInteger) {
        throw std::logic_error("label is not an integer");
    }
    return value_;
}

const Label& Label::first() const {
    if (kind_ != Kind::kPair) {
        throw std::logic_error("label is not a pair");
    }
    return parts_[0];
}

const Label& Label::second() const {
    if (kind_ != Kind::kPair) {
        throw std::logic_error("label is not a pair");
    }
    return parts_[1];
}

bool operator==(const Label& a, const Label& b) {
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
        return c;
    }
    switch (a.kind_) {
        case Label::Kind::kWord:
            return a.word_ <=> b.word_;
        case Label::Kind::kInteger:
            return a.value_ <=> b.value_;
        case Label::Kind::kPair:
        case Label::Kind::kSequence:
            break;
    }
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < a.parts_.size(); ++i) {
        if (a.kind_ == Label::Kind::kSequence) {
            if (auto c = a.sides_[i] <=> b.sides_[i]; c != 0) {
                return c;
            }
        }
        if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

void add_to(LabelMultiset& target, const Label& label, const BigInt& multiplicity) {
    if (multiplicity == 0) {
        return;
    }
    auto [it, inserted] = target.try_emplace(label, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) {
            target.erase(it);
        }
    }
}

void add_to(LabelMultiset& target, const LabelMultiset& source, const BigInt& scale) {
    for (const auto& [label, m] : source) {
        add_to(target, label, m * scale);
    }
}

}  // namespace freefusion
