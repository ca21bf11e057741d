#pragma once
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include "dunklsym/poly.hpp"
#include "dunklsym/rootsystem.hpp"

namespace dunklsym {

// Linear operator on spinor polynomials as a lazy closure. Operators are
// never truncated to matrices: identity checks evaluate both sides on
// finite graded slices, which keeps multiplication-by-x exact at the top
// degree. degree_shift is the exact shift when known, nullopt for mixed
// sums; deg(T f) <= deg f + shift always holds when it is set.
class LinOperator {
public:
    using Fn = std::function<SpinorPoly(const SpinorPoly&)>;

    LinOperator() : LinOperator("0", 0, [](const SpinorPoly&) { return SpinorPoly{}; }) {}
    LinOperator(std::string label, std::optional<int> degree_shift, Fn fn)
        : label_(std::move(label)), shift_(degree_shift), fn_(std::move(fn)) {}

    static LinOperator identity();
    static LinOperator scalar(const CycNum& c); // c * id

    const std::string& label() const { return label_; }
    std::optional<int> degree_shift() const { return shift_; }
    SpinorPoly operator()(const SpinorPoly& f) const { return fn_(f); }

    LinOperator operator-() const;
    friend LinOperator operator+(const LinOperator& A, const LinOperator& B);
    friend LinOperator operator-(const LinOperator& A, const LinOperator& B);
    // composition: (A * B)(f) = A(B(f))
    friend LinOperator operator*(const LinOperator& A, const LinOperator& B);
    friend LinOperator operator*(const CycNum& c, const LinOperator& A);

    LinOperator pow(int k) const;

private:
    std::string label_;
    std::optional<int> shift_;
    Fn fn_;
};

LinOperator commutator(const LinOperator& A, const LinOperator& B);
LinOperator anticommutator(const LinOperator& A, const LinOperator& B);

// Wraps A with an input -> output table shared by all copies of the result.
// Worth it for expensive closures applied to the same inputs across many
// identities. Keys compare stored representations, so equal values in
// different representations merely miss the table.
LinOperator memoized(const LinOperator& A);

// Factory for the concrete operators attached to one reflection group and
// one choice of Pauli sign delta (e3 = delta * sigma_z). Dunkl results are
// memoized per monomial; the cache is shared by all copies and is
// thread-safe.
class Operators {
public:
    Operators(RootSystem rs, int delta);

    const RootSystem& roots() const { return *rs_; }
    int delta() const { return delta_; }
    Rat gamma() const; // kappa0 + m(kappa1+kappam)/2

    // scalar (componentwise) building blocks
    LinOperator dunkl(int axis) const;   // T_{axis+1}, shift -1
    LinOperator coord(int axis) const;   // multiplication by x_{axis+1}
    LinOperator partial(int axis) const; // plain derivative
    LinOperator x_squared() const;       // multiplication by |x|^2
    // componentwise action f -> f(w^{-1} x); pass w as a matrix
    LinOperator group_action(const CMatrix& w) const;
    LinOperator reflection_action(long j) const; // j = 0 or in-plane index

    // Clifford generators: e1, e2 swap the spinor components (Pauli x, y),
    // e3 = delta * Pauli z.
    LinOperator clifford(int axis) const;

    // composites of the above
    LinOperator dirac() const;     // D = sum e_i T_i, shift -1
    LinOperator vector_x() const;  // x = sum e_i x_i, shift +1
    LinOperator euler() const;     // E = sum x_i d_i, shift 0
    LinOperator laplacian() const; // sum T_i^2, shift -2
    LinOperator C(int i, int j) const;       // [T_i, x_j]
    LinOperator angular(int i, int j) const; // L_ij = x_i T_j - x_j T_i

    // [T_i, x_j] expanded as delta_ij + sum_r 2 kappa(r) r_i r_j sigma_r,
    // an independent construction used to cross-check C(i, j).
    LinOperator C_reflection_form(int i, int j) const;

private:
    struct Cache;
    std::shared_ptr<const RootSystem> rs_;
    int delta_;
    std::shared_ptr<Cache> cache_;

    MPoly dunkl_scalar(int axis, const MPoly& f) const;
};

} // namespace dunklsym
