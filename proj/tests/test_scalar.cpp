#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "dunklsym/cyclotomic.hpp"

using namespace dunklsym;

namespace {

CycNum random_cyc(std::mt19937_64& rng, long order) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rat> c(static_cast<std::size_t>(order));
    for (auto& v : c) v = Rat(num(rng)) / den(rng);
    return CycNum::from_coeffs(order, std::move(c));
}

} // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("2/4") == Rat(1) / 2);
    CHECK(rat_from_string("-3/7") == Rat(-3) / 7);
    CHECK(rat_from_string("5") == Rat(5));
    CHECK(rat_from_string("+5") == Rat(5));
    CHECK(rat_to_string(Rat(-3) / 7) == "-3/7");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK_THROWS_AS(rat_from_string("1/0"), usage_error);
    CHECK_THROWS_AS(rat_from_string("a/3"), usage_error);
    CHECK_THROWS_AS(rat_from_string("1/-2"), usage_error);
    CHECK_THROWS_AS(rat_from_string(""), usage_error);
    CHECK_THROWS_AS(rat_from_string("1.5"), usage_error);
}

TEST_CASE("pochhammer and factorial") {
    CHECK(pochhammer(Rat(1) / 2, 3) == Rat(1) / 2 * (Rat(3) / 2) * (Rat(5) / 2));
    CHECK(pochhammer(Rat(-2), 3) == Rat(0));
    CHECK(pochhammer(Rat(7), 0) == Rat(1));
    CHECK(factorial(5) == Rat(120));
    CHECK(factorial(0) == Rat(1));
}

TEST_CASE("cyclotomic polynomials") {
    auto check_poly = [](long n, std::vector<long> want) {
        const auto& p = cyclotomic_polynomial(n);
        REQUIRE(p.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(p[i] == Rat(want[i]));
    };
    check_poly(1, {-1, 1});
    check_poly(2, {1, 1});
    check_poly(4, {1, 0, 1});
    check_poly(8, {1, 0, 0, 0, 1});
    check_poly(12, {1, 0, -1, 0, 1});
    check_poly(20, {1, 0, -1, 0, 1, 0, -1, 0, 1});
    check_poly(28, {1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity and basic identities") {
    // zeta_n^{n/2} squares to ... equals -1.
    CHECK(CycNum::zeta(8, 4) == CycNum(Rat(-1)));
    CHECK(CycNum::zeta(8, 4) * CycNum::zeta(8, 4) == CycNum(Rat(1)));

    // session orders: lcm(4, 2m)
    CHECK(session_order(2) == 4);
    CHECK(session_order(3) == 12);
    CHECK(session_order(4) == 8);
    CHECK(session_order(5) == 20);
    CHECK(session_order(6) == 12);
    CHECK(session_order(7) == 28);
    CHECK(session_order(8) == 16);
    CHECK_THROWS_AS(session_order(1), usage_error);

    // named values
    CHECK(root_of_unity(2, 1) == imaginary_unit(session_order(2)));
    CHECK(root_of_unity(3, 3) == CycNum(Rat(-1)));
    CHECK(root_of_unity(4, 2) == imaginary_unit(session_order(4)));

    // m=2: zeta = i, so zeta + conj(zeta) = 0
    CycNum z2 = root_of_unity(2, 1);
    CHECK((z2 + z2.conj()).is_zero());

    // m=3: the full set of 6th roots of unity sums to zero
    CycNum sum = CycNum::zero(12);
    for (long j = 1; j <= 6; ++j) sum += root_of_unity(3, 2 * j);
    CHECK(sum.is_zero());

    for (long m = 2; m <= 12; ++m) {
        CAPTURE(m);
        CHECK(root_of_unity(m, 2 * m) == CycNum(Rat(1)));
        CHECK(root_of_unity(m, m) == CycNum(Rat(-1)));
        CHECK(root_of_unity(m, 1).pow(2 * m) == CycNum(Rat(1)));
    }
}

TEST_CASE("sines and cosines") {
    auto [s21, c21] = sin_cos(2, 1);
    CHECK(s21 == CycNum(Rat(1)));
    CHECK(c21.is_zero());
    auto [s22, c22] = sin_cos(2, 2);
    CHECK(s22.is_zero());
    CHECK(c22 == CycNum(Rat(-1)));

    auto [s41, c41] = sin_cos(4, 1);
    CHECK(s41 == c41); // sin(pi/4) = cos(pi/4)
    CHECK(s41 * s41 == CycNum(Rat(1) / 2));
    CHECK(c41 * c41 == CycNum(Rat(1) / 2));
    CHECK(is_real(s41));
    CHECK(is_real(c41));

    auto [s31, c31] = sin_cos(3, 1);
    CHECK(c31 == CycNum(Rat(1) / 2));
    CHECK(s31 * s31 == CycNum(Rat(3) / 4));

    for (long m = 2; m <= 12; ++m) {
        for (long j = 0; j <= 2 * m; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            auto [s, c] = sin_cos(m, j);
            CHECK(is_real(s));
            CHECK(is_real(c));
            CHECK(s * s + c * c == CycNum(Rat(1)));
        }
    }
}

TEST_CASE("conjugation and real part") {
    std::mt19937_64 rng(20260825);
    for (int trial = 0; trial < 20; ++trial) {
        CycNum a = random_cyc(rng, 12);
        CycNum b = random_cyc(rng, 12);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CycNum re = real_part(a);
        CHECK(is_real(re));
        CHECK(re.conj() == re);
    }
}

TEST_CASE("field arithmetic properties") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 15; ++trial) {
        CycNum a = random_cyc(rng, 12);
        CycNum b = random_cyc(rng, 12);
        CycNum c = random_cyc(rng, 12);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum(Rat(1)));
            CHECK(b / a * a == b);
        }
    }
    CHECK_THROWS_AS(CycNum::zero(12).inverse(), division_by_zero);
    CHECK_THROWS_AS(CycNum::one(12) / CycNum::zero(12), division_by_zero);
}

TEST_CASE("powers") {
    CycNum z = root_of_unity(5, 1); // order 20
    CHECK(z.pow(0) == CycNum(Rat(1)));
    CHECK(z.pow(5) == CycNum(Rat(-1)));
    CHECK(z.pow(10) == CycNum(Rat(1)));
    CHECK(z.pow(-3) * z.pow(3) == CycNum(Rat(1)));
    CHECK(z.pow(7) == z * z * z * z * z * z * z);
}

TEST_CASE("order mixing") {
    CycNum i8 = CycNum::zeta(8, 2);
    CycNum z12 = CycNum::zeta(12, 1);
    CHECK_THROWS_AS(i8 + z12, order_mismatch);
    CHECK_THROWS_AS(i8 * z12, order_mismatch);
    // rational-valued operands lift into any order, even when stored wide
    CHECK(CycNum(Rat(2), 8) + CycNum(Rat(3), 12) == CycNum(Rat(5)));
    CHECK(z12 * CycNum(Rat(2), 8) == z12 + z12);
    CHECK(i8 + CycNum(Rat(1)) == CycNum::zeta(8, 2) + CycNum::one(8));
    // zeta_12^6 = -1 is rational after reduction, so this lifts too
    CHECK(CycNum::zeta(12, 6) + i8 * i8 == CycNum(Rat(-2)));
}

TEST_CASE("rationality detection") {
    CHECK(CycNum::zeta(12, 6).is_rational());
    CHECK(CycNum::zeta(12, 6).to_rat() == Rat(-1));
    CHECK(!CycNum::zeta(12, 1).is_rational());
    CHECK_THROWS_AS(CycNum::zeta(12, 1).to_rat(), not_rational);
    // zeta_12^2 + zeta_12^{-2} = 2cos(pi/3) = 1
    CycNum twocos = CycNum::zeta(12, 2) + CycNum::zeta(12, 10);
    CHECK(twocos.is_rational());
    CHECK(twocos.to_rat() == Rat(1));
}

TEST_CASE("sign of real values") {
    CHECK(sign_of_real(CycNum::zero(12)) == Sign::zero);
    CHECK(sign_of_real(CycNum(Rat(-3) / 2, 12)) == Sign::negative);

    // 2cos(pi/3) = 1 > 0, decided by exact reduction
    CycNum z3 = root_of_unity(3, 1);
    CHECK(sign_of_real(z3 + z3.conj()) == Sign::positive);

    // genuinely irrational values, decided by interval refinement
    auto [s41, c41] = sin_cos(4, 1);
    CHECK(sign_of_real(s41) == Sign::positive);
    CHECK(sign_of_real(-s41) == Sign::negative);
    auto [s43, c43] = sin_cos(4, 3);
    CHECK(sign_of_real(c43) == Sign::negative);   // cos(3pi/4) < 0
    auto [s51, c51] = sin_cos(5, 1);
    CHECK(sign_of_real(c51) == Sign::positive);   // cos(pi/5) = (1+sqrt5)/4
    CHECK(sign_of_real(c51 - s51) == Sign::positive); // cos > sin at pi/5
    auto [s83, c83] = sin_cos(8, 3);
    CHECK(sign_of_real(s83 - c83) == Sign::positive); // sin > cos at 3pi/8
    // a difference that reduces to exact zero must be classified as zero
    auto [s85, c85] = sin_cos(8, 5);
    CHECK(sign_of_real(s83 - s85) == Sign::zero);  // sin(3pi/8) = sin(5pi/8)

    CHECK_THROWS_AS(sign_of_real(imaginary_unit(8)), not_real);
    CHECK_THROWS_AS(sign_of_real(root_of_unity(3, 1)), not_real);
}

TEST_CASE("canonical form is stable and trims to the field degree") {
    // phi(12) = 4: canonical support lies below index 4
    CycNum z = CycNum::zeta(12, 7) * CycNum::zeta(12, 9); // = zeta^16 = zeta^4
    auto c = z.canonical();
    REQUIRE(c.size() == 12);
    for (std::size_t k = 4; k < c.size(); ++k) CHECK(c[k] == 0);
    // zeta_12^4 is a primitive cube root: zeta^4 = zeta^2 - 1
    CHECK(z == CycNum::zeta(12, 2) - CycNum::one(12));
}
