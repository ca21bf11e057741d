#pragma once
#include <array>
#include <vector>
#include "dunklsym/linalg.hpp"

namespace dunklsym {

struct Root {
    std::array<CycNum, 3> v; // unit vector
    Rat kappa;
    CMatrix reflection; // associated reflection matrix, an involution
};

// Reflection data for Z2 x (dihedral of order 2m) acting on R^3:
// alpha_0 = (0,0,1) flips x3; alpha_j = (sin(j pi/m), -cos(j pi/m), 0) for
// j = 1..m are the in-plane positive roots. The multiplicity function is
// kappa0 on alpha_0 and alternates kappa1 (odd j) / kappam (even j) when m
// is even; for odd m all in-plane roots are conjugate and kappa1 = kappam
// is required.
class RootSystem {
public:
    RootSystem(long m, Rat kappa0, Rat kappa1, Rat kappam);

    long m() const { return m_; }
    long scalar_order() const { return order_; } // lcm(4, 2m)
    const Rat& kappa0() const { return kappa0_; }
    const Rat& kappa1() const { return kappa1_; }
    const Rat& kappam() const { return kappam_; }

    // kappa of the in-plane root alpha_j for any j >= 1 (period 2m in j).
    Rat kappa_dihedral(long j) const;

    // [0] = alpha_0, [j] = alpha_j for j = 1..m.
    const std::vector<Root>& positive_roots() const { return roots_; }

    const CMatrix& sigma0() const { return roots_[0].reflection; }
    // In-plane reflection matrix for any j (depends on j mod m).
    CMatrix sigma(long j) const;

    static CycNum dot(const std::array<CycNum, 3>& a, const std::array<CycNum, 3>& b);

private:
    long m_;
    long order_;
    Rat kappa0_, kappa1_, kappam_;
    std::vector<Root> roots_;
};

} // namespace dunklsym
