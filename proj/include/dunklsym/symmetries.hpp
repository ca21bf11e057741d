#pragma once
#include <vector>
#include "dunklsym/ledger.hpp"

namespace dunklsym {

// The symmetries of the deformed Dirac operator for Z2 x D_2m, realized as
// operators on spinor polynomials. Everything here supercommutes with D and
// x: the Clifford-even members (O12, O31, O23, dtau, O0, O+-, L+-) commute,
// the Clifford-odd ones (O1..O3, O123, the spin reflections, T0, T+-)
// anticommute.
//
// dsig0 = e3*act(sigma0) and dsigj = (sin(j pi/m) e1 - cos(j pi/m) e2)*
// act(sigma_j) are the spin lifts of the reflections; dtau = dsig1*dsigm.
// O1..O3 live in the group algebra, O12/O31/O23 deform the angular momenta,
// O123 is central. O0 = -i O12 and O+- = i O31 +- O23 are the so(3)-style
// recombination, T0/T+/T- the matching group-algebra invariants, and
// L+- = (1/2){O0, O+-} the ladder pair shifting O0-eigenvalues by +-1.
struct SymmetrySet {
    Operators ops;

    LinOperator dsig0, dsig1, dsigm, dtau;
    LinOperator O1, O2, O3;
    LinOperator O12, O31, O23, O123;
    LinOperator O0, Op, Om;
    LinOperator T0, Tp, Tm;
    LinOperator Lp, Lm;

    // Spin lift of any reflection: j = 0 gives dsig0; j >= 1 is in-plane
    // with period 2m and spin(j + m) = -spin(j).
    LinOperator spin(long j) const;
};

// Constructs the full set. Every operator admitting two independent
// expressions (O_i as Dunkl commutator vs. weighted group sum, the two
// Clifford orderings of O_ij, the Scasimir form of O123 vs. its two
// expansions, T0/T+/T- vs. the one-index combinations) is cross-checked on
// graded slices of degree <= check_degree; any difference throws
// construction_mismatch.
SymmetrySet build_symmetries(const RootSystem& rs, int delta, int check_degree = 2);

// Identity batches for check_identities. Names below describe the content;
// symmetry_identities concatenates all of them.

// Graded supercommutation with D and x: [O_ij, .] = 0 for the even
// two-index symmetries, {., .} = 0 for the odd O123 and spin reflections.
std::vector<OperatorIdentity> supercommutation_identities(const SymmetrySet& S, int max_degree);

// Clifford/one-index exchange {e_i, O_j} = {e_j, O_i}, the two-index
// commutators [O12,O31] = O23 + {O123,O1} + [O2,O3] (and cyclic), and the
// recombined form [O0,O+-] = +-O+- + {O123,T+-} +- [T0,T+-],
// [O+,O-] = 2 O0 - 2{O123,T0} + [T+,T-].
std::vector<OperatorIdentity> bracket_identities(const SymmetrySet& S, int max_degree);

// The square of O123 as a sum of squares, the O+O-/O-O+ product formulas,
// [O0, L+-] = +-L+-, and the ladder factorizations together with their
// intermediate forms.
std::vector<OperatorIdentity> product_identities(const SymmetrySet& S, int max_degree);

// How the group side moves through the symmetries: brackets of O0 with
// T0/T+/T-, the T/O exchange rules, conjugation of O0, O+-, L+- by the spin
// reflections with their zeta-phases, the tau twists of L+-, and
// T+-L-+ = L+-T-+.
std::vector<OperatorIdentity> action_table_identities(const SymmetrySet& S, int max_degree);

// Spin-group presentation: involutivity of the lifted reflections,
// (dsig0 dsig1)^2 = (dsig0 dsigm)^2 = -1, (dsig1 dsigm)^m = (-1)^{m+1},
// and the rewriting dsigj = (-1)^{j+1} dtau^j dsigm for j = 1..m.
std::vector<OperatorIdentity> presentation_identities(const SymmetrySet& S, int max_degree);

// O123 commutes with every listed generator.
std::vector<OperatorIdentity> centrality_identities(const SymmetrySet& S, int max_degree);

std::vector<OperatorIdentity> symmetry_identities(const SymmetrySet& S, int max_degree);

} // namespace dunklsym
