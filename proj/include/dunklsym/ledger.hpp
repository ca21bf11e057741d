#pragma once
#include <string>
#include <vector>
#include "dunklsym/operators.hpp"

namespace dunklsym {

// One identity of operators, verified by applying both sides to every
// element of the graded slices of degree 0..check_degree.
struct OperatorIdentity {
    std::string name;
    LinOperator lhs, rhs;
    int check_degree = 4;
};

struct IdentityResult {
    std::string name;
    int check_degree = 0;
    bool pass = true;
    int fail_degree = -1;        // degree of the first counterexample
    std::string counterexample;  // first failing basis element and mismatch
};

IdentityResult check_identity(const OperatorIdentity& id);

// Checks a batch in parallel; results keep the input order.
std::vector<IdentityResult> check_identities(const std::vector<OperatorIdentity>& ids);

bool all_pass(const std::vector<IdentityResult>& results);

// Structural identities of the deformed operators: vanishing Dunkl
// commutators, symmetry and reflection expansion of C_ij, the
// anticommutator {D,x}, the sl2-triple brackets, D^2 = Laplacian,
// x^2 = |x|^2, and the two {D,x} ladder brackets.
std::vector<OperatorIdentity> osp12_identities(const Operators& ops, int max_degree);

// Commutation and cyclic-sum identities among the deformed angular momenta
// L_ij and the C_kl, over all index tuples in {1,2,3}.
std::vector<OperatorIdentity> angular_identities(const Operators& ops, int max_degree);

// Reflection equivariance: conjugating T_v by the action of a generating
// reflection w equals the Dunkl operator along w(v).
std::vector<OperatorIdentity> equivariance_identities(const Operators& ops, int max_degree);

} // namespace dunklsym
