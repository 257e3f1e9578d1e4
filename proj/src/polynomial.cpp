#include "freefusion/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace freefusion {

Polynomial::Polynomial(BigInt constant) {
    if (constant != 0) {
        coeffs_.push_back(std::move(constant));
    }
}

Polynomial Polynomial::variable() {
    return from_coefficients({0, 1});
}

Polynomial Polynomial::from_coefficients(std::vector<BigInt> ascending) {
    Polynomial p;
    p.coeffs_ = std::move(ascending);
    p.trim();
    return p;
}

BigInt Polynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt Polynomial::evaluate(const BigInt& n) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * n + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::string Polynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        BigInt magnitude = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) {
                out << '-';
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1) {
            out << magnitude << '*';
        }
        out << 'n';
        if (k > 1) {
            out << '^' << k;
        }
    }
    return out.str();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace freefusion
