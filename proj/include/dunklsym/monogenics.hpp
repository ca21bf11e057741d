#pragma once
#include <utility>
#include <vector>
#include "dunklsym/operators.hpp"
#include "dunklsym/reps.hpp"

namespace dunklsym {

// Conjugate pair of degree-n harmonics of the planar Dunkl Laplacian
// T1^2 + T2^2. Writing z = x1 + i x2, `plus` is z^ell times a polynomial in
// z^m, zbar^m (odd m; n = km + ell, 0 <= ell < m) or in z^p, zbar^p
// (m = 2p; n = kp + ell, 0 <= ell < p), and `minus` is the image of `plus`
// under z <-> zbar. Annihilation is checked exactly at construction.
struct Harmonic2D {
    long n = 0;
    MPoly plus, minus;
};
Harmonic2D harmonics_2d(const RootSystem& rs, long n);

// Spinor refinement: Phi_n^+ = phi_n^+ chi+ and Phi_n^- = phi_n^- chi-,
// each annihilated by the planar Dirac operator e1 T1 + e2 T2 (checked).
std::pair<SpinorPoly, SpinorPoly> monogenics_2d(const RootSystem& rs, long n);

// Splitting of the homogeneous planar spinor slice of degree n as the span
// of x^{n-k} Phi_k^{+-}, k = 0..n, with x = e1 x1 + e2 x2: the 2(n+1)
// candidates form a basis exactly when their rank fills the slice.
struct FischerReport {
    long n = 0;
    std::size_t count = 0;     // 2(n+1) candidates
    std::size_t space_dim = 0; // planar degree-n spinor slice
    long rank = 0;
    bool direct_sum = false;
};
FischerReport fischer_check(const RootSystem& rs, int delta, long n);

// Extends a planar spinor polynomial f(x1, x2) to the unique element of
// ker(e1 T1 + e2 T2 + e3 T3) that restricts to f at x3 = 0, via the
// terminating series in x3 whose coefficients invert the x3-direction
// Dunkl derivative. Throws usage_error when f depends on x3.
SpinorPoly ck_extend(const Operators& ops, const SpinorPoly& f);

struct Monogenic3D {
    long n = 0;    // total degree
    long k = 0;    // planar monogenic degree before extension
    int sign = +1; // which member of the planar pair
    SpinorPoly psi;
};

// psi_{n,k}^{+-}: extensions of x^{n-k} Phi_k^{+-} for k = 0..n, ordered
// all + then all -, k ascending within each block. Dirac annihilation of
// every element and linear independence of all 2n+2 are checked.
std::vector<Monogenic3D> monogenic_basis(const RootSystem& rs, int delta, long n);

// The same elements assembled without the extension series: radial
// Jacobi-type coefficients in rho^2 = x1^2 + x2^2 and x3^2 multiply
// Phi_k^{+-}, x Phi_k^{+-} and their e3 x3 partners. Dirac annihilation is
// checked; equality with monogenic_basis element by element is a test-level
// invariant.
std::vector<Monogenic3D> explicit_basis(const RootSystem& rs, int delta, long n);

// dim ker(Dirac) on the homogeneous degree-n spinor slice by exact
// elimination, independent of the constructions above. Equals 2n+2.
long dirac_kernel_dimension(const RootSystem& rs, int delta, long n);

// Scalar in D^a (x^b Phi_k) = d x^{b-a} Phi_k for planar monogenics Phi_k
// (zero when a > b), in closed Pochhammer form; gamma_hat is the planar
// weight m(kappa1+kappam)/2.
Rat iterated_dirac_factor(long a, long b, long k, const Rat& gamma_hat);

// The ladder cell realized on the degree-n monogenics: the unrestricted top
// lambda row of case I (odd m) or I.i (even m) with the label ell and the
// Lambda branch forced by n and delta.
RepSpec monogenic_rep_spec(const RootSystem& rs, int delta, long n);

// Outcome of extracting the symmetry action on the degree-n monogenic
// basis and comparing it against the classification.
struct MonogenicRepReport {
    long n = 0;
    int delta = +1;
    long dim = 0;  // 2n+2
    CycNum scalar; // observed central value on the kernel
    RepSpec cell;
    bool eigenvalues_ok = false; // O0 and the central element act as stated
    bool phases_ok = false;      // lifted reflection and rotation tables
    bool relations_ok = false;   // full defining-relation battery
    long commutant_dim = 0;
    bool irreducible = false;
    bool matches_cell = false; // joint spectra equal the cell's
    std::vector<std::string> failures;
    bool ok() const {
        return eigenvalues_ok && phases_ok && relations_ok && irreducible && matches_cell;
    }
};
MonogenicRepReport verify_monogenic_rep(const RootSystem& rs, int delta, long n);

} // namespace dunklsym
