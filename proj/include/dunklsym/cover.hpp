#pragma once
#include <cstddef>
#include <string>
#include <vector>
#include "dunklsym/linalg.hpp"
#include "dunklsym/rootsystem.hpp"

namespace dunklsym {

// The reflection group Z2 x (dihedral of order 2m) has two double covers,
// distinguished by a sign convention: relations of the underlying Coxeter
// presentation lift either to 1 or to the central element z.
enum class CoverSign { plus, minus };

// Normal form z^a s0^b t^c sm^d where s0, sm are the lifted reflections,
// t = s1*sm is the lifted rotation, and z is central of order 2. Exponents:
// a, b, d in {0,1} and c in {0..m-1}; t^m = z^e (e per cover) folds larger
// rotation powers back into the z flag, so every group element has exactly
// one normal form and the four fields enumerate all 8m elements.
struct CoverElement {
    int a = 0, b = 0, c = 0, d = 0;
    friend bool operator==(const CoverElement&, const CoverElement&) = default;
    friend auto operator<=>(const CoverElement&, const CoverElement&) = default;
};

// Double cover as a finite group with multiplication by presentation-derived
// rewriting (no permutation embedding). Construction re-derives the defining
// relations from the normal-form arithmetic and verifies the group axioms;
// a mismatch throws construction_mismatch.
class CoverGroup {
public:
    CoverGroup(long m, CoverSign sign);

    long m() const { return m_; }
    CoverSign sign() const { return sign_; }
    long order() const { return 8 * m_; }

    // z-exponents of the relation values: s0^2 = z^sq0, s1^2 = z^sq1,
    // sm^2 = z^sqm, (s0 s1)^2 = z^braid01, (s0 sm)^2 = z^braid0m,
    // (s1 sm)^m = z^braid1m.
    int sq0() const { return a0_; }
    int sq1() const { return a1_; }
    int sqm() const { return am_; }
    int braid01() const { return b01_; }
    int braid0m() const { return b0m_; }
    int braid1m() const { return bm1_; }

    static CoverElement identity() { return {}; }
    CoverElement z() const { return {1, 0, 0, 0}; }
    CoverElement sigma0() const { return {0, 1, 0, 0}; }
    CoverElement sigmam() const { return {0, 0, 0, 1}; }
    CoverElement tau() const { return {0, 0, 1 % (int)m_, 0}; }
    CoverElement sigma1() const; // t * sm * z^sqm in normal form

    CoverElement mul(const CoverElement& x, const CoverElement& y) const;
    CoverElement inverse(const CoverElement& x) const;
    CoverElement power(const CoverElement& x, long e) const; // any sign of e

    // All 8m elements in lexicographic (a,b,c,d) order; index 0 is the
    // identity. The order fixes serialization and class numbering.
    const std::vector<CoverElement>& elements() const { return elements_; }
    std::size_t index_of(const CoverElement& x) const;

    std::string to_string(const CoverElement& x) const; // "z*s0*t^2*sm", "e"

    // Brute-force orbit partition under conjugation, deterministic order:
    // classes appear by their lexicographically first member. {z} is always
    // a singleton; the count is 2m+3 (odd m) or 2m+6 (even m).
    std::vector<std::vector<CoverElement>> conjugacy_classes() const;

private:
    long m_;
    CoverSign sign_;
    int a0_, a1_, am_, b01_, b0m_, bm1_; // relation z-exponents
    int q01_, q0m_, qt0_, qtm_;          // derived crossing z-exponents
    std::vector<CoverElement> elements_;

    void rmul_z(CoverElement& x) const;
    void rmul_s0(CoverElement& x) const;
    void rmul_tau(CoverElement& x) const;
    void rmul_sm(CoverElement& x) const;
    void self_check() const;
};

inline CoverGroup make_cover(long m, CoverSign sign) { return CoverGroup(m, sign); }

// One irreducible representation given by explicit generator matrices over
// the cyclotomic scalars. epsilon is the scalar by which z acts; the spin
// representations are exactly those with epsilon = -1.
struct Irrep {
    std::string name;
    std::size_t dim = 1;
    CMatrix z, s0, sm, t; // images of z, s0, sm, tau
    CMatrix s1;           // image of s1 = t * sm * z^sqm
    int epsilon = 1;
    long ell = -1;     // rotation label j of the Y_j family, -1 for X rows
    CycNum delta;      // s0 eigenvalue parameter (Y rows); may be +-1 or +-i

    // X(z)^a X(s0)^b X(t)^c X(sm)^d; exact since that is the normal form.
    CMatrix evaluate(const CoverElement& g) const;
    CycNum character(const CoverElement& g) const { return evaluate(g).trace(); }
};

// The complete list of irreducible representations of one double cover,
// instantiated as matrices and cross-checked at construction: presentation
// relations per row, multiplicativity against the normal-form arithmetic,
// one row per conjugacy class, sum of dim^2 = 8m, exact orthonormality of
// characters under the hermitian group pairing, characters constant on
// classes, and pairwise distinctness.
struct IrrepTable {
    long m = 0;
    CoverSign sign = CoverSign::plus;
    std::vector<Irrep> irreps;
    std::vector<std::vector<CoverElement>> classes;
    // character_values[i][k] = character of irrep i on class k
    std::vector<std::vector<CycNum>> character_values;

    std::vector<std::size_t> spin_indices() const; // rows with epsilon = -1
};

IrrepTable irrep_table(const CoverGroup& g);

// Outcome of mapping the abstract cover onto the operator realization
// (s0 -> e3 sigma0 etc., z -> -1) and of restricting that action to the
// two-dimensional space of constant spinors.
struct RealizationReport {
    long m = 0;
    int delta = 1;
    std::vector<std::string> relations_checked; // all passed if we returned
    std::size_t restriction_irrep = 0; // index into irrep_table(g).irreps
    std::string restriction_name;      // its name; always a spin row
};

// Verifies every presentation relation of the plus cover, with z realized
// as -1, as exact operator identities on the graded slices of degree
// <= max_degree, plus the closed form s_j = (-1)^(j+1) t^j sm for all j.
// Throws relation_violated naming the first failing relation, usage_error
// when sign != plus or m differs from the root system's.
RealizationReport verify_realization(const CoverGroup& g, const RootSystem& rs,
                                     int delta, int max_degree = 2);

} // namespace dunklsym
