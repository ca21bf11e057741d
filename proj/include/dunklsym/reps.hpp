#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>
#include "dunklsym/linalg.hpp"
#include "dunklsym/rational.hpp"

namespace dunklsym {

// Classification families for the finite-dimensional irreducible modules of
// the symmetry algebra. Cases I (odd m) and I.i / I.ii (even m) are the
// dihedral-resonant families; II is the generic family; III is the family
// whose ladder length is tied to kappa0.
enum class RepCase { I, Ii, Iii, II, III };

RepCase rep_case_from_string(const std::string& s); // "I", "I.i", "I.ii", "II", "III"
std::string to_string(RepCase c);

// Parameters selecting one candidate module. `ell` labels the dihedral
// isotype of the top vector and only matters modulo m. `lambda_branch` is
// the subscript of the lambda row in the classification tables (1..7;
// which subscripts are meaningful depends on the case and the parity of m).
// `Lambda_branch` picks the root of the central element:
//   branch 1: Lambda = +i (lambda + 1/2 + kappa0 delta)
//   branch 2: Lambda = -i (lambda + 1/2 - kappa0 delta)
struct RepSpec {
    long m = 2;
    long N = 0;
    long ell = 0;
    int delta = 1;
    RepCase rep_case = RepCase::II;
    int lambda_branch = 0;
    int Lambda_branch = 1;
    Rat kappa0, kappa1, kappam;
};

std::string to_string(const RepSpec& spec);

// Explicit matrices on the ladder basis v_0^+ .. v_N^+, v_0^- .. v_N^-
// (dimension 2N+2). `A` holds the ladder products A(1)..A(N) and `gram`
// the diagonal Gram values h_0..h_N with h_0 = 1, h_k = A(k) h_{k-1}.
struct RepMatrices {
    RepSpec spec;
    long dim = 0;
    Rat lambda;
    CycNum Lambda;
    std::vector<std::string> basis;
    std::vector<std::pair<std::string, CMatrix>> generators;
    std::vector<Rat> A;
    std::vector<Rat> gram;

    const CMatrix& matrix(const std::string& name) const; // internal_error if absent
};

// The lifted group action and reflection sums on the ladder basis
// v0+..vN+, v0-..vN-. These depend only on the sizes and coupling
// constants, never on the lambda ladder, so they exist for every cell of
// the size table (including cells that carry no module).
struct CoverAction {
    long dim = 0;
    std::vector<std::string> basis;
    CMatrix s0, s1, sm, tau; // lifted reflections and rotation
    CMatrix T0, Tp, Tm;      // reflection sums
};

CoverAction build_cover_action(long m, long N, long ell, int delta, const Rat& kappa0,
                               const Rat& kappa1, const Rat& kappam);

// Resolves the eigenvalue pair (lambda, Lambda) for a spec, enforcing the
// congruence gate of the requested case. Throws incompatible_case when the
// gate fails, no_representation when the case is empty for these sizes
// (type III with odd N), usage_error on malformed input.
std::pair<CycNum, CycNum> resolve_lambda_Lambda(const RepSpec& spec);

// Builds all generator matrices. The reflection sums T+/T- are assembled
// from the m dihedral reflections directly, so the entries are ground truth
// for the closed forms below. Throws division_by_zero when a ladder
// denominator vanishes with a nonzero numerator (the module does not exist
// at this parameter point).
RepMatrices build_rep(const RepSpec& spec);

// One named excluded-parameter constraint, evaluated exactly. `holds` is
// true when the parameters sit on the constraint (so the module degenerates).
struct Constraint {
    std::string name;
    bool holds = false;
};

struct AdmissibilityVerdict {
    bool representable = false;      // build_rep succeeds
    bool irreducible = false;        // no excluded-set membership
    bool unitary_sufficient = false; // all A(k) > 0
    std::vector<std::string> violated_constraints;
    std::vector<CycNum> A_values;    // from build_rep; empty when not representable
    std::string obstruction;         // ladder denominator message when not representable
};

// Evaluates every excluded-set membership for the spec's table row plus the
// direct positivity of the ladder products. The two verdicts coincide by
// construction; the independent check is certify() below.
AdmissibilityVerdict check_admissibility(const RepSpec& spec);

struct RelationCheck {
    std::string name;
    bool pass = false;
};

// The defining relations of the symmetry algebra evaluated as exact matrix
// identities on any realization carrying the thirteen named generators:
// double-cover presentation, conjugation table, bracket and product
// closures, centrality, and the square of the scalar element. Reads only
// spec.m, spec.kappa0, dim and the generator matrices, so it applies to
// realizations that carry no ladder data (the monogenic model).
std::vector<RelationCheck> defining_relations(const RepMatrices& rep);

// Certificate produced by re-verifying a built module from scratch:
// the defining relations of the algebra as matrix identities, the
// commutant dimension by exact elimination (1 iff irreducible), and the
// star-compatibility of the Gram form (unitarity when all A(k) > 0).
struct Certificate {
    std::vector<RelationCheck> relations;
    bool relations_pass = false;
    long commutant_dim = 0;
    bool irreducible = false;
    bool gram_compatible = false;
    bool unitary = false; // gram_compatible and all A(k) > 0
    std::vector<std::string> failures;
};

Certificate certify(const RepMatrices& rep);

// Exact commutant dimension: solutions X of X M = M X for all generators.
// Equal to one whenever the module is irreducible, but the converse can fail:
// at parameters where a ladder product A(k) vanishes the module becomes a
// non-split extension whose endomorphism ring is still trivial.
long commutant_dimension(const RepMatrices& rep);

// Complete reducibility test. Every built module has a multiplicity-one
// joint (O0, s0^) diagonal spectrum, so each invariant subspace is spanned
// by a subset of the ladder basis; a proper one exists exactly when the
// support digraph of the generators is not strongly connected.
bool has_proper_invariant_subspace(const RepMatrices& rep);

// One row of a classification sweep.
struct ScanCell {
    RepSpec spec;
    bool compatible = false;   // congruence gate passed
    bool representable = false;
    bool table_irreducible = false;
    bool oracle_irreducible = false; // no proper invariant subspace
    bool agree = false;
    bool unitary_sufficient = false;
    bool unitary_certified = false;
};

// Sweeps every case, branch pair, delta, and isotype label for N <= N_max
// over the given kappa triples, certifying each buildable cell.
std::vector<ScanCell> classify_scan(long m, long N_max,
                                    const std::vector<std::array<Rat, 3>>& kappa_grid);

// Closed forms for the reflection-sum eigenvalues when m = 2p is even:
// G(X) = p (kappa1 - kappam) when X = 0 mod m, -p (kappa1 + kappam) when
// X = p mod m, 0 otherwise; H = G^2. Cross-checked against the assembled
// T+/T- matrices by the tests.
Rat even_G_closed_form(long m, const Rat& kappa1, const Rat& kappam, long X);
Rat even_H_closed_form(long m, const Rat& kappa1, const Rat& kappam, long X);

} // namespace dunklsym
