#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hurwitz/binomial.hpp"
#include "hurwitz/gpoly.hpp"
#include "hurwitz/rational.hpp"

using namespace hurwitz;

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(0, -7).str(), "0");
    EXPECT_EQ(Rational(8, 4), Rational(2));
    EXPECT_TRUE(Rational(8, 4).is_integer());
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "1/3", "-22/7", "123456789012345678901234567891/1024"})
        EXPECT_EQ(Rational::parse(s).str(), s);
    EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(3) / Rational(0), std::domain_error);
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(2, 3), Rational(3, 5));
    EXPECT_EQ(Rational(6, 3).to_int64(), 2);
    EXPECT_THROW(Rational(7, 3).to_int64(), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937_64 rng(7);
    auto draw = [&] { return Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 50) + 1); };
    for (int t = 0; t < 200; ++t) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a - b) + b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(Binomial, KnownValues) {
    EXPECT_EQ(binomial(4, 2), Rational(6));
    EXPECT_EQ(binomial(9, -1), Rational(0));
    EXPECT_EQ(binomial(-5, -1), Rational(0));
    EXPECT_EQ(binomial(-1, 3), Rational(-1));
    EXPECT_EQ(binomial(-1, 2), Rational(1));
    EXPECT_EQ(binomial(3, 5), Rational(0));
    EXPECT_EQ(binomial(-3, 2), Rational(6));
}

TEST(Binomial, PascalRecurrenceIncludingNegativeUpper) {
    for (long n = -12; n <= 30; ++n)
        for (long k = 0; k <= 15; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1)) << n << "," << k;
}

TEST(Binomial, SymmetryForNonnegativeUpper) {
    for (long n = 0; n <= 40; ++n)
        for (long k = 0; k <= n; ++k)
            EXPECT_EQ(binomial(n, k), binomial(n, n - k));
}

TEST(Binomial, GeneratingFunctionAtMinusOne) {
    // sum_l (-1)^l C(0, p-l) = (-1)^p = C(-1, p)
    for (long p = 0; p <= 20; ++p)
        EXPECT_EQ(binomial(-1, p), Rational(p % 2 == 0 ? 1 : -1));
}

TEST(Binomial, LargeValuesStayExact) {
    EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(GPoly, KnownValues) {
    const GPoly g = GPoly::g();
    EXPECT_EQ((GPoly(2) * g + GPoly(6)).eval(Rational(5)), Rational(16));
    EXPECT_EQ((g + GPoly(1)) * (g - GPoly(1)), g * g - GPoly(1));
    EXPECT_EQ(GPoly(12) * (GPoly(Rational(1, 12)) * g), g);
}

TEST(GPoly, Rendering) {
    const GPoly g = GPoly::g();
    EXPECT_EQ((GPoly(3) * g + GPoly(15)).str(), "3*g+15");
    EXPECT_EQ((g * g - GPoly(1)).str(), "g^2-1");
    EXPECT_EQ((GPoly(Rational(-1, 2)) * g).str(), "-1/2*g");
    EXPECT_EQ(GPoly().str(), "0");
    EXPECT_EQ((-g + GPoly(5)).str(), "-g+5");
    EXPECT_EQ(GPoly(Rational(8, 3)).str(), "8/3");
}

TEST(GPoly, ParseInvertsRendering) {
    for (const char* s : {"0", "3*g+15", "g^2-1", "-1/2*g", "-g+5", "7/2*g^3-g+1/9", "g"})
        EXPECT_EQ(GPoly::parse(s).str(), s);
    EXPECT_THROW(GPoly::parse("3*h"), std::invalid_argument);
    EXPECT_THROW(GPoly::parse("3*g+"), std::invalid_argument);
}

TEST(GPoly, DegreeAndTrim) {
    const GPoly g = GPoly::g();
    EXPECT_EQ(GPoly().degree(), -1);
    EXPECT_EQ((g * g - g * g + GPoly(2)).degree(), 0);
    EXPECT_TRUE((g - g).is_zero());
    EXPECT_TRUE(GPoly(4).is_constant());
}

TEST(GPoly, RingAxiomsOnRandomPolys) {
    std::mt19937_64 rng(11);
    auto draw = [&] {
        std::vector<Rational> c;
        const int n = static_cast<int>(rng() % 4);
        for (int k = 0; k <= n; ++k)
            c.emplace_back(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 6) + 1);
        return GPoly(c);
    };
    for (int t = 0; t < 100; ++t) {
        const GPoly a = draw(), b = draw(), c = draw();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        const Rational x(static_cast<long>(rng() % 9) - 4);
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    }
}
