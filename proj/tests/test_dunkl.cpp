#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "dunklsym/ledger.hpp"

using namespace dunklsym;

namespace {

MPoly x(int i) { return MPoly::variable(i); }

RootSystem rs_m2() { return RootSystem(2, Rat(1) / 2, Rat(1) / 3, Rat(1) / 5); }
RootSystem rs_m3() { return RootSystem(3, Rat(1) / 3, Rat(2) / 5, Rat(2) / 5); }

void expect_all_pass(const std::vector<IdentityResult>& results) {
    for (const auto& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample);
        REQUIRE(r.pass);
    }
}

} // namespace

TEST_CASE("root system construction") {
    RootSystem rs = rs_m2();
    CHECK(rs.positive_roots().size() == 3); // alpha_0, alpha_1, alpha_2
    CHECK(rs.scalar_order() == 4);
    CHECK(rs.kappa_dihedral(1) == Rat(1) / 3);
    CHECK(rs.kappa_dihedral(2) == Rat(1) / 5);
    CHECK(rs.kappa_dihedral(3) == Rat(1) / 3); // parity rule continues past m

    for (long m = 2; m <= 8; ++m) {
        // constructor runs its own unit-norm/involution checks
        CHECK_NOTHROW(RootSystem(m, Rat(1) / 2, Rat(1) / 3, (m % 2 == 1) ? Rat(1) / 3
                                                                         : Rat(1) / 5));
    }
    CHECK_THROWS_AS(RootSystem(5, Rat(1) / 2, Rat(1) / 3, Rat(1) / 5), usage_error);
    // odd m: every in-plane root carries the same kappa
    RootSystem rs5(5, Rat(1) / 2, Rat(1) / 7, Rat(1) / 7);
    for (long j = 1; j <= 5; ++j) CHECK(rs5.kappa_dihedral(j) == Rat(1) / 7);
}

TEST_CASE("dunkl operator point evaluations") {
    Operators ops(rs_m2(), +1);

    // T3 on x3 chi+: derivative 1 plus kappa0 * (x3 - (-x3))/x3 = 1 + 2kappa0
    SpinorPoly f{x(2), MPoly()};
    SpinorPoly t3f = ops.dunkl(2)(f);
    CHECK(t3f == CycNum(Rat(1) + 2 * (Rat(1) / 2)) * chi_plus());

    CHECK(ops.dunkl(0)(chi_plus()).is_zero());

    // m=2: only alpha_1 = (1,0,0) sees x1
    SpinorPoly g{x(0), MPoly()};
    CHECK(ops.dunkl(0)(g) == CycNum(Rat(1) + 2 * (Rat(1) / 3)) * chi_plus());

    // C12 kills x1 chi+ for m=2 (axis-aligned roots)
    CHECK(ops.C(0, 1)(g).is_zero());

    // x^2 multiplies by the quadric
    SpinorPoly q = (ops.vector_x() * ops.vector_x())(chi_plus());
    MPoly r2 = x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
    CHECK(q == SpinorPoly{r2, MPoly()});

    // gamma for m=2
    CHECK(ops.gamma() == Rat(1) / 2 + Rat(1) / 3 + Rat(1) / 5);
}

TEST_CASE("clifford generators") {
    Operators ops(rs_m3(), +1);
    LinOperator e1 = ops.clifford(0), e2 = ops.clifford(1), e3 = ops.clifford(2);
    CycNum i = imaginary_unit(12);

    CHECK(e1(chi_plus()) == chi_minus());
    CHECK(e1(chi_minus()) == chi_plus());
    CHECK(e2(chi_plus()) == i * chi_minus());
    CHECK(e2(chi_minus()) == -i * chi_plus());
    CHECK(e3(chi_plus()) == chi_plus());
    CHECK(e3(chi_minus()) == -chi_minus());

    // anticommutation and squares on a sample
    SpinorPoly f{x(0) * x(1), x(2)};
    for (int a = 0; a < 3; ++a) {
        CHECK((ops.clifford(a) * ops.clifford(a))(f) == f);
        for (int b = a + 1; b < 3; ++b)
            CHECK(anticommutator(ops.clifford(a), ops.clifford(b))(f).is_zero());
    }
    // e1 e2 e3 = i delta for both delta choices
    Operators opsm(rs_m3(), -1);
    CHECK((e1 * e2 * e3)(f) == i * f);
    CHECK((opsm.clifford(0) * opsm.clifford(1) * opsm.clifford(2))(f) == -i * f);
}

TEST_CASE("degree shifts and linearity") {
    Operators ops(rs_m3(), +1);
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> num(-3, 3);
    LinOperator D = ops.dirac();
    CHECK(D.degree_shift() == -1);
    CHECK(ops.vector_x().degree_shift() == 1);
    CHECK(ops.laplacian().degree_shift() == -2);
    CHECK(ops.euler().degree_shift() == 0);
    for (int trial = 0; trial < 8; ++trial) {
        Mono mono;
        for (int d = 0; d < 4; ++d) mono.e[static_cast<std::size_t>(pick(rng))] += 1;
        SpinorPoly f{MPoly::monomial(mono, CycNum(Rat(1))), MPoly()};
        SpinorPoly g{MPoly(), MPoly::monomial(mono, CycNum(Rat(num(rng))))};
        // shift honored
        CHECK(D(f).degree() <= f.degree() - 1);
        for (int i = 0; i < 3; ++i) CHECK(ops.dunkl(i)(f).degree() <= f.degree() - 1);
        // linearity
        CycNum a = CycNum::zeta(12, 5), b = CycNum(Rat(num(rng)));
        CHECK(D(a * f + b * g) == a * D(f) + b * D(g));
        // Euler eigenvalue = homogeneous degree
        CHECK(ops.euler()(f) == CycNum(Rat(4)) * f);
    }
}

TEST_CASE("structural identity suite") {
    SUBCASE("m=3 spec point") {
        Operators ops(rs_m3(), +1);
        expect_all_pass(check_identities(osp12_identities(ops, 3)));
    }
    SUBCASE("undeformed kappa = 0") {
        Operators ops(RootSystem(3, Rat(0), Rat(0), Rat(0)), +1);
        expect_all_pass(check_identities(osp12_identities(ops, 3)));
    }
    SUBCASE("m=2 with delta = -1") {
        Operators ops(rs_m2(), -1);
        expect_all_pass(check_identities(osp12_identities(ops, 3)));
    }
    SUBCASE("corrupted gamma is caught at degree 0") {
        Operators ops(rs_m3(), +1);
        LinOperator bad_center =
            CycNum(Rat(2)) *
            (ops.euler() + LinOperator::scalar(CycNum(Rat(3) / 2 + ops.gamma() + 1)));
        OperatorIdentity id{"{D,x} with wrong gamma",
                            anticommutator(ops.dirac(), ops.vector_x()), bad_center, 3};
        IdentityResult res = check_identity(id);
        CHECK(!res.pass);
        CHECK(res.fail_degree == 0);
        CHECK(!res.counterexample.empty());
    }
}

TEST_CASE("angular momentum identity suite") {
    SUBCASE("m=2 spec point") {
        Operators ops(rs_m2(), +1);
        expect_all_pass(check_identities(angular_identities(ops, 3)));
    }
    SUBCASE("m=5 odd") {
        Operators ops(RootSystem(5, Rat(1) / 2, Rat(1) / 7, Rat(1) / 7), +1);
        expect_all_pass(check_identities(angular_identities(ops, 3)));
    }
}

TEST_CASE("reflection equivariance of dunkl operators") {
    for (long m : {2L, 3L, 4L}) {
        CAPTURE(m);
        Operators ops(RootSystem(m, Rat(1) / 2, Rat(1) / 3,
                                 (m % 2 == 1) ? Rat(1) / 3 : Rat(1) / 5),
                      +1);
        expect_all_pass(check_identities(equivariance_identities(ops, 3)));
    }
}
