#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include "dunklsym/cover.hpp"
#include "dunklsym/errors.hpp"

using namespace dunklsym;

TEST_CASE("normal-form arithmetic implements the presentations") {
    // construction re-derives every relation and the group axioms; a throw
    // here is the failure mode
    for (long m = 2; m <= 8; ++m)
        for (CoverSign s : {CoverSign::plus, CoverSign::minus}) CoverGroup g(m, s);
    CHECK_THROWS_AS(CoverGroup(1, CoverSign::plus), usage_error);

    CoverGroup g3(3, CoverSign::plus);
    const auto e = CoverGroup::identity();
    // (s0 s1)^2 = z and s0^2 = 1 in the odd plus cover
    CHECK(g3.power(g3.mul(g3.sigma0(), g3.sigma1()), 2) == g3.z());
    CHECK(g3.mul(g3.sigma0(), g3.sigma0()) == e);
    // t has order m here: t^m = 1, and z is a separate element
    CHECK(g3.power(g3.tau(), 3) == e);
    CHECK(g3.z() != e);

    CoverGroup g2(2, CoverSign::plus);
    // (s1 sm)^2 = z in the even plus cover, so t^m folds into z
    CHECK(g2.power(g2.mul(g2.sigma1(), g2.sigmam()), 2) == g2.z());
    CHECK(g2.power(g2.tau(), 2) == g2.z());
    CHECK(g2.power(g2.tau(), 4) == e);

    CoverGroup g5(5, CoverSign::minus);
    // minus cover: all Coxeter relations lift to z
    CHECK(g5.mul(g5.sigma0(), g5.sigma0()) == g5.z());
    CHECK(g5.power(g5.mul(g5.sigma1(), g5.sigmam()), 5) == g5.z());

    // normal forms are unique: 8m distinct elements, closed under mul
    CHECK(g3.elements().size() == 24);
    std::set<CoverElement> all(g3.elements().begin(), g3.elements().end());
    CHECK(all.size() == 24);
    for (const auto& x : g3.elements())
        for (const auto& y : g3.elements()) CHECK(all.count(g3.mul(x, y)) == 1);
    for (std::size_t i = 0; i < g3.elements().size(); ++i)
        CHECK(g3.index_of(g3.elements()[i]) == i);

    CHECK(g3.to_string(e) == "e");
    CHECK(g3.to_string(g3.mul(g3.z(), g3.mul(g3.tau(), g3.sigmam()))) == "z*t*sm");
}

TEST_CASE("conjugacy classes: counts, sizes, centrality of z") {
    for (long m = 2; m <= 8; ++m) {
        CAPTURE(m);
        const long expected = (m % 2 == 0) ? 2 * m + 6 : 2 * m + 3;
        for (CoverSign s : {CoverSign::plus, CoverSign::minus}) {
            CoverGroup g(m, s);
            auto classes = g.conjugacy_classes();
            CHECK((long)classes.size() == expected);
            std::size_t total = 0;
            for (const auto& cls : classes) total += cls.size();
            CHECK(total == (std::size_t)(8 * m));
            // the central z forms a singleton class
            bool found = false;
            for (const auto& cls : classes)
                if (cls.size() == 1 && cls[0] == g.z()) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("irrep tables: counts, dimensions, characters") {
    for (long m = 2; m <= 8; ++m) {
        CAPTURE(m);
        for (CoverSign s : {CoverSign::plus, CoverSign::minus}) {
            // irrep_table verifies presentation per row, multiplicativity,
            // orthonormal characters and class counts internally
            IrrepTable t = irrep_table(make_cover(m, s));
            CHECK(t.irreps.size() == t.classes.size());
            long dimsq = 0;
            for (const auto& X : t.irreps) dimsq += (long)(X.dim * X.dim);
            CHECK(dimsq == 8 * m);
            // spin rows act by z = -1 and are all two-dimensional for plus
            for (std::size_t i : t.spin_indices()) {
                CHECK(t.irreps[i].epsilon == -1);
                if (s == CoverSign::plus) CHECK(t.irreps[i].dim == 2);
            }
        }
    }

    // m=2 minus: 10 irreps with sum dim^2 = 16
    IrrepTable t2 = irrep_table(make_cover(2, CoverSign::minus));
    CHECK(t2.irreps.size() == 10);
    long dimsq = 0;
    for (const auto& X : t2.irreps) dimsq += (long)(X.dim * X.dim);
    CHECK(dimsq == 16);

    // m=3 plus: 4 one-dim + 5 two-dim
    IrrepTable t3 = irrep_table(make_cover(3, CoverSign::plus));
    CHECK(t3.irreps.size() == 9);
    int ones = 0, twos = 0;
    for (const auto& X : t3.irreps) (X.dim == 1 ? ones : twos)++;
    CHECK(ones == 4);
    CHECK(twos == 5);

    // trivial row sends every generator to 1
    const Irrep& x1 = t3.irreps[0];
    CHECK(x1.name == "X1");
    CoverGroup g3(3, CoverSign::plus);
    for (const CoverElement& g : g3.elements()) CHECK(x1.evaluate(g) == CMatrix::identity(1));
}

TEST_CASE("irrep matrices multiply like the group") {
    CoverGroup g(4, CoverSign::minus);
    IrrepTable t = irrep_table(g);
    // full homomorphism check on a two-dimensional spin row
    const Irrep* y = nullptr;
    for (const auto& X : t.irreps)
        if (X.dim == 2 && X.epsilon == -1) {
            y = &X;
            break;
        }
    REQUIRE(y != nullptr);
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            CHECK(y->evaluate(g.mul(a, b)) == y->evaluate(a) * y->evaluate(b));
    // generator matrices are unitary, so characters pair conjugately with
    // inverses
    for (const auto& a : g.elements())
        CHECK(y->character(g.inverse(a)) == y->character(a).conj());
}

TEST_CASE("realization: plus-cover relations hold with z = -1") {
    RootSystem rs3(3, Rat(1) / 2, Rat(1) / 3, Rat(1) / 3);
    auto rep = verify_realization(make_cover(3, CoverSign::plus), rs3, +1, 2);
    CHECK(rep.m == 3);
    // 6 presentation relations plus the m closed forms s_j = +-t^j sm
    CHECK(rep.relations_checked.size() == 9);
    CHECK(rep.restriction_name.substr(0, 1) == "Y");

    RootSystem rs4(4, Rat(1) / 3, Rat(1) / 4, Rat(1) / 5);
    auto rep4 = verify_realization(make_cover(4, CoverSign::plus), rs4, -1, 2);
    CHECK(rep4.relations_checked.size() == 10);

    // restriction to constant spinors is a spin row in both delta signs
    auto repp = verify_realization(make_cover(4, CoverSign::plus), rs4, +1, 1);
    IrrepTable t4 = irrep_table(make_cover(4, CoverSign::plus));
    CHECK(t4.irreps[repp.restriction_irrep].epsilon == -1);
    CHECK(t4.irreps[rep4.restriction_irrep].epsilon == -1);

    // the minus cover is not realized by these operators
    CHECK_THROWS_AS(verify_realization(make_cover(3, CoverSign::minus), rs3, +1, 1), usage_error);
    // mismatched m is rejected
    CHECK_THROWS_AS(verify_realization(make_cover(4, CoverSign::plus), rs3, +1, 1), usage_error);
}
