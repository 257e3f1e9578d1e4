#include <gtest/gtest.h>

#include "freefusion/polynomial.hpp"

using freefusion::Polynomial;

TEST(Polynomial, RendersDescending) {
    const Polynomial n = Polynomial::variable();
    EXPECT_EQ((n * n - n).to_string(), "n^2 - n");
    EXPECT_EQ((Polynomial(2) * n - Polynomial(1)).to_string(), "2*n - 1");
    EXPECT_EQ(Polynomial().to_string(), "0");
    EXPECT_EQ(Polynomial(1).to_string(), "1");
    EXPECT_EQ((-n).to_string(), "-n");
}

TEST(Polynomial, ArithmeticNormalizes) {
    const Polynomial n = Polynomial::variable();
    EXPECT_EQ(n - n, Polynomial());
    EXPECT_EQ((n - n).degree(), -1);
    EXPECT_EQ(Polynomial(5).degree(), 0);
    EXPECT_EQ(pow(n, 3), n * n * n);
    EXPECT_EQ(pow(n + Polynomial(1), 2), n * n + Polynomial(2) * n + Polynomial(1));
}

TEST(Polynomial, Evaluates) {
    const Polynomial n = Polynomial::variable();
    EXPECT_EQ((n * n - Polynomial(3) * n + Polynomial(1)).evaluate(4), 5);
    EXPECT_EQ(pow(n, 40).evaluate(2), freefusion::BigInt(1) << 40);
}
