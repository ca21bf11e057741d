#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "dunklsym/json_io.hpp"
#include "dunklsym/linalg.hpp"
#include "dunklsym/poly.hpp"

using namespace dunklsym;

namespace {

MPoly x(int i) { return MPoly::variable(i); }

MPoly random_poly(std::mt19937_64& rng, int max_deg, long order = 12) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    MPoly f;
    for (int t = 0; t < 6; ++t) {
        Mono m;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) m.e[static_cast<std::size_t>(pick(rng))] += 1;
        std::vector<Rat> c(static_cast<std::size_t>(order), Rat(0));
        c[0] = Rat(num(rng)) / den(rng);
        c[1] = Rat(num(rng)) / den(rng);
        f += MPoly::monomial(m, CycNum::from_coeffs(order, std::move(c)));
    }
    return f;
}

CMatrix diag3(const Rat& a, const Rat& b, const Rat& c) {
    CMatrix M(3, 3);
    M.at(0, 0) = CycNum(a);
    M.at(1, 1) = CycNum(b);
    M.at(2, 2) = CycNum(c);
    return M;
}

// Reflection matrices of the dihedral-times-Z2 group acting on R^3:
// s0 flips x3; s_j reflects the (x1,x2) plane across the line at angle
// j*pi/m.
CMatrix s0_matrix() { return diag3(1, 1, -1); }

CMatrix sj_matrix(long m, long j) {
    auto [s, c] = sin_cos(m, 2 * j);
    CMatrix M(3, 3);
    M.at(0, 0) = c;
    M.at(0, 1) = s;
    M.at(1, 0) = s;
    M.at(1, 1) = -c;
    M.at(2, 2) = CycNum(Rat(1));
    return M;
}

std::vector<CMatrix> group_closure(std::vector<CMatrix> gens) {
    std::vector<CMatrix> elems = {CMatrix::identity(3)};
    auto known = [&](const CMatrix& M) {
        for (const auto& E : elems)
            if (E == M) return true;
        return false;
    };
    std::vector<CMatrix> frontier = {CMatrix::identity(3)};
    while (!frontier.empty()) {
        std::vector<CMatrix> next;
        for (const auto& F : frontier)
            for (const auto& G : gens) {
                CMatrix P = F * G;
                if (!known(P)) {
                    elems.push_back(P);
                    next.push_back(P);
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    MPoly f = x(0) * x(0) - x(1) * x(1);
    CHECK(f.degree() == 2);
    CHECK(MPoly().degree() == -1);
    CHECK(MPoly().is_zero());
    CHECK((f - f).is_zero());
    CHECK(f + f == CycNum(Rat(2)) * f);
    CHECK(f.coefficient(Mono{{2, 0, 0}}) == CycNum(Rat(1)));
    CHECK(f.coefficient(Mono{{0, 2, 0}}) == CycNum(Rat(-1)));
    CHECK(f.coefficient(Mono{{1, 1, 0}}).is_zero());
    CHECK(x(0).pow(3) * x(0) == x(0).pow(4));
    // no zero terms survive normalization
    MPoly g = f + MPoly::monomial(Mono{{0, 2, 0}}, CycNum(Rat(1)));
    CHECK(g.terms().size() == 1);
}

TEST_CASE("monomial enumeration and order") {
    CHECK(monomials_of_degree(0).size() == 1);
    CHECK(monomials_of_degree(3).size() == 10);
    auto ms = monomials_of_degree(2);
    REQUIRE(ms.size() == 6);
    // graded-lex within one degree: (0,0,2) < (0,1,1) < ... < (2,0,0)
    CHECK(ms.front() == Mono{{0, 0, 2}});
    CHECK(ms.back() == Mono{{2, 0, 0}});
    for (std::size_t k = 1; k < ms.size(); ++k) CHECK(MonoLess{}(ms[k - 1], ms[k]));
}

TEST_CASE("substitute_linear examples") {
    CHECK(substitute_linear(x(0), CMatrix::identity(3)) == x(0));
    CHECK(substitute_linear(x(2) * x(2), s0_matrix()) == x(2) * x(2));
    // m=2, j=1: the reflection negating x1
    CHECK(sj_matrix(2, 1) == diag3(-1, 1, 1));
    CHECK(substitute_linear(x(0) * x(1), sj_matrix(2, 1)) == -(x(0) * x(1)));
}

TEST_CASE("substitute_linear respects the group law on W") {
    std::mt19937_64 rng(7);
    MPoly f = x(0) * x(0) * x(1) + CycNum(Rat(-2)) * x(2).pow(3) + x(0) * x(1) * x(2);
    for (long m = 2; m <= 6; ++m) {
        CAPTURE(m);
        auto elems = group_closure({s0_matrix(), sj_matrix(m, 1), sj_matrix(m, m)});
        CHECK(elems.size() == static_cast<std::size_t>(4 * m));
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        std::size_t pairs = (m <= 3) ? elems.size() * elems.size() : 40;
        for (std::size_t t = 0; t < pairs; ++t) {
            const CMatrix& A = (m <= 3) ? elems[t / elems.size()] : elems[pick(rng)];
            const CMatrix& B = (m <= 3) ? elems[t % elems.size()] : elems[pick(rng)];
            // (f o A) o B = f o (A*B): the inner substitution applies the
            // left factor
            REQUIRE(substitute_linear(substitute_linear(f, A), B) ==
                    substitute_linear(f, A * B));
        }
    }
}

TEST_CASE("exact division by linear forms") {
    std::array<CycNum, 3> L1 = {CycNum(Rat(1)), CycNum(Rat(-1)), CycNum()};
    CHECK(exact_div_linear(x(0) * x(0) - x(1) * x(1), L1) == x(0) + x(1));

    std::array<CycNum, 3> L3 = {CycNum(), CycNum(), CycNum(Rat(1))};
    CHECK(exact_div_linear(MPoly(), L3).is_zero());

    MPoly f = x(2).pow(3) - substitute_linear(x(2).pow(3), s0_matrix());
    CHECK(f == CycNum(Rat(2)) * x(2).pow(3));
    CHECK(exact_div_linear(f, L3) == CycNum(Rat(2)) * x(2) * x(2));

    CHECK_THROWS_AS(exact_div_linear(x(0) * x(0) + x(1), L1), not_divisible);
    std::array<CycNum, 3> LZ = {CycNum(), CycNum(), CycNum()};
    CHECK_THROWS_AS(exact_div_linear(x(0), LZ), division_by_zero);
}

TEST_CASE("division round-trips on random polynomials") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        MPoly f = random_poly(rng, 3);
        std::array<CycNum, 3> L;
        do {
            for (auto& v : L) v = CycNum(Rat(num(rng)));
        } while (L[0].is_zero() && L[1].is_zero() && L[2].is_zero());
        MPoly lpoly;
        for (int i = 0; i < 3; ++i) lpoly += L[static_cast<std::size_t>(i)] * x(i);
        CHECK(exact_div_linear(f * lpoly, L) == f);
    }
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(x(0) * x(0) * x(1), 0) == CycNum(Rat(2)) * x(0) * x(1));
    CHECK(partial_derivative(x(0), 2).is_zero());
    CHECK(partial_derivative(x(0) * x(1) * x(1) + x(1), 1) ==
          CycNum(Rat(2)) * x(0) * x(1) + MPoly::constant(CycNum(Rat(1))));
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly f = random_poly(rng, 3);
        MPoly g = random_poly(rng, 2);
        for (int i = 0; i < 3; ++i) {
            CAPTURE(i);
            CHECK(partial_derivative(f * g, i) ==
                  partial_derivative(f, i) * g + f * partial_derivative(g, i));
        }
    }
}

TEST_CASE("linear solver") {
    // unique solution
    CMatrix I2 = CMatrix::identity(2);
    CVec b = {CycNum(Rat(1)), CycNum::zeta(12, 1)};
    auto sol = solve_linear_system(I2, b);
    CHECK(sol.consistent);
    CHECK(sol.rank == 2);
    CHECK(sol.nullspace.empty());
    CHECK(sol.particular[0] == b[0]);
    CHECK(sol.particular[1] == b[1]);

    // rank-deficient homogeneous
    CMatrix A(2, 2);
    A.at(0, 0) = A.at(0, 1) = A.at(1, 0) = A.at(1, 1) = CycNum(Rat(1));
    auto hom = solve_linear_system(A, CVec(2));
    CHECK(hom.rank == 1);
    REQUIRE(hom.nullspace.size() == 1);
    CHECK(hom.nullspace[0][0] + hom.nullspace[0][1] == CycNum());

    // inconsistent
    CVec bad = {CycNum(Rat(1)), CycNum(Rat(2))};
    CHECK(!solve_linear_system(A, bad).consistent);

    // Gram matrix of {x1+x2, x1-x2, x1} coefficient vectors has rank 2
    CMatrix G(3, 3);
    long g[3][3] = {{2, 0, 1}, {0, 2, 1}, {1, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) G.at(i, j) = CycNum(Rat(g[i][j]));
    CHECK(rank_of(G) == 2);

    // solver respects cyclotomic coefficients exactly
    CMatrix Z(2, 2);
    Z.at(0, 0) = CycNum::zeta(12, 1);
    Z.at(0, 1) = CycNum(Rat(1));
    Z.at(1, 0) = CycNum(Rat(1));
    Z.at(1, 1) = CycNum::zeta(12, 11); // zeta^{-1}: second row = zeta^{-1} * first
    CHECK(rank_of(Z) == 1);
    auto zsol = solve_linear_system(Z, CVec{CycNum(Rat(1)), CycNum::zeta(12, 11)});
    CHECK(zsol.consistent);
    REQUIRE(zsol.nullspace.size() == 1);
    CVec residual = Z.apply(zsol.particular);
    CHECK(residual[0] == CycNum(Rat(1)));
    CHECK(residual[1] == CycNum::zeta(12, 11));
}

TEST_CASE("matrix helpers") {
    CMatrix M(2, 2);
    M.at(0, 1) = CycNum::zeta(12, 3); // i
    M.at(1, 0) = -CycNum::zeta(12, 3);
    CHECK(M.conj_transpose() == M); // Hermitian
    CHECK((M * M) == -CMatrix::identity(2) * CycNum(Rat(-1)));
    CHECK(M.pow(2) == CMatrix::identity(2));
    CHECK(M.pow(0) == CMatrix::identity(2));
    CHECK(M.trace().is_zero());
    CVec v = {CycNum(Rat(1)), CycNum(Rat(2))};
    CVec Mv = M.apply(v);
    CHECK(Mv[0] == CycNum(Rat(2)) * CycNum::zeta(12, 3));
    CHECK(Mv[1] == -CycNum::zeta(12, 3));
}

TEST_CASE("graded basis") {
    GradedBasis b0(0);
    CHECK(b0.size() == 2);
    GradedBasis b3(3);
    CHECK(b3.size() == 20); // (3+1)(3+2)
    // coordinates round-trip
    SpinorPoly f{x(0) * x(1) * x(2) + CycNum(Rat(1) / 2) * x(2).pow(3),
                 -x(0).pow(3)};
    auto coords = b3.coordinates(f);
    SpinorPoly rebuilt;
    for (std::size_t k = 0; k < coords.size(); ++k)
        rebuilt += coords[k] * b3.elements()[k];
    CHECK(rebuilt == f);
    // degree mismatch is an error
    CHECK_THROWS_AS(b3.coordinates(chi_plus()), construction_mismatch);
}

TEST_CASE("json round trips") {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly f = random_poly(rng, 3);
        CHECK(poly_from_json(poly_to_json(f)) == f);
    }
    CycNum z = CycNum::zeta(12, 5) + CycNum(Rat(-7) / 3);
    CHECK(scalar_from_json(scalar_to_json(z)) == z);
    CHECK(scalar_to_json(CycNum::zero(12))["coeffs"].empty());
    // serialization is canonical: equal values give identical bytes
    CycNum a = CycNum::zeta(12, 7) * CycNum::zeta(12, 9);
    CycNum b = CycNum::zeta(12, 2) - CycNum::one(12);
    CHECK(scalar_to_json(a).dump() == scalar_to_json(b).dump());
    SpinorPoly sp{x(0) * x(1), -x(2) + MPoly::constant(CycNum(Rat(1) / 3))};
    CHECK(spinor_from_json(spinor_to_json(sp)) == sp);
    CHECK_THROWS_AS(scalar_from_json(nlohmann::json::array()), usage_error);
}
