#pragma once
#include <array>
#include <map>
#include <string>
#include <vector>
#include "dunklsym/cyclotomic.hpp"

namespace dunklsym {

struct Mono {
    std::array<int, 3> e{0, 0, 0};
    int degree() const { return e[0] + e[1] + e[2]; }
    friend bool operator==(const Mono&, const Mono&) = default;
    // graded-lexicographic, so Mono can key ordered containers directly
    friend bool operator<(const Mono& l, const Mono& r) {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        return l.e < r.e;
    }
};

// Map iteration in graded-lex order fixes the serialization layout.
struct MonoLess {
    bool operator()(const Mono& l, const Mono& r) const { return l < r; }
};

std::vector<Mono> monomials_of_degree(int n);

// Sparse polynomial in x1, x2, x3 over the cyclotomic scalars. No zero
// coefficients are stored; all operations return normalized values.
class MPoly {
public:
    using TermMap = std::map<Mono, CycNum, MonoLess>;

    MPoly() = default;
    static MPoly constant(const CycNum& c);
    static MPoly variable(int i); // x_{i+1} for i in {0,1,2}
    static MPoly monomial(const Mono& m, const CycNum& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 on the zero polynomial
    CycNum coefficient(const Mono& m) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& g);
    MPoly& operator-=(const MPoly& g);
    friend MPoly operator+(MPoly f, const MPoly& g) { return f += g; }
    friend MPoly operator-(MPoly f, const MPoly& g) { return f -= g; }
    friend MPoly operator*(const MPoly& f, const MPoly& g);
    friend MPoly operator*(const CycNum& c, const MPoly& f);
    friend MPoly operator*(const MPoly& f, const CycNum& c) { return c * f; }
    MPoly pow(int k) const;

    friend bool operator==(const MPoly& f, const MPoly& g);
    friend bool operator!=(const MPoly& f, const MPoly& g) { return !(f == g); }

    std::string to_string() const;

    // Removes terms whose coefficient reduces to zero; every mutating path
    // calls this before returning.
    void normalize();

private:
    TermMap terms_;
};

class CMatrix; // linalg.hpp

// f(M x) for a 3x3 matrix M, i.e. x_i -> sum_j M(i,j) x_j.
MPoly substitute_linear(const MPoly& f, const CMatrix& M);

// Exact quotient of f by the linear form L[0]x1 + L[1]x2 + L[2]x3.
// Throws not_divisible if a remainder survives, division_by_zero if L = 0.
MPoly exact_div_linear(const MPoly& f, const std::array<CycNum, 3>& L);

MPoly partial_derivative(const MPoly& f, int axis);

// Element of P(R^3) (x) C^2 in the spinor-column picture: chi+ = (1,0)^T
// carries `up`, chi- = (0,1)^T carries `down`.
struct SpinorPoly {
    MPoly up, down;

    bool is_zero() const { return up.is_zero() && down.is_zero(); }
    int degree() const { return std::max(up.degree(), down.degree()); }

    SpinorPoly operator-() const { return {-up, -down}; }
    SpinorPoly& operator+=(const SpinorPoly& g);
    SpinorPoly& operator-=(const SpinorPoly& g);
    friend SpinorPoly operator+(SpinorPoly f, const SpinorPoly& g) { return f += g; }
    friend SpinorPoly operator-(SpinorPoly f, const SpinorPoly& g) { return f -= g; }
    friend SpinorPoly operator*(const CycNum& c, const SpinorPoly& f) {
        return {c * f.up, c * f.down};
    }
    friend bool operator==(const SpinorPoly& f, const SpinorPoly& g) {
        return f.up == g.up && f.down == g.down;
    }
    friend bool operator!=(const SpinorPoly& f, const SpinorPoly& g) { return !(f == g); }

    std::string to_string() const;
};

SpinorPoly chi_plus();
SpinorPoly chi_minus();

// Ordered basis of the homogeneous degree-n slice of P(R^3) (x) C^2:
// all degree-n monomials times chi+ (graded-lex order), then times chi-.
class GradedBasis {
public:
    explicit GradedBasis(int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<SpinorPoly>& elements() const { return elements_; }
    const std::vector<Mono>& monomials() const { return monos_; }

    // Coordinates of a homogeneous degree-n spinor polynomial; throws
    // construction_mismatch when sp has terms outside this slice.
    std::vector<CycNum> coordinates(const SpinorPoly& sp) const;

private:
    int degree_;
    std::vector<Mono> monos_;
    std::map<Mono, std::size_t, MonoLess> index_;
    std::vector<SpinorPoly> elements_;
};

} // namespace dunklsym
