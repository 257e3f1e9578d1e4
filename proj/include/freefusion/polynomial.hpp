#ifndef FREEFUSION_POLYNOMIAL_HPP
#define FREEFUSION_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "freefusion/bigint.hpp"

namespace freefusion {

/// Integer polynomial in the single indeterminate n.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(BigInt constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long long constant) : Polynomial(BigInt(constant)) {}  // NOLINT

    static Polynomial variable();
    static Polynomial from_coefficients(std::vector<BigInt> ascending);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coefficient(std::size_t power) const;

    BigInt evaluate(const BigInt& n) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Descending degree, e.g. `n^2 - n`, `2*n - 1`, `0`.
    std::string to_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace freefusion

#endif  // FREEFUSION_POLYNOMIAL_HPP
