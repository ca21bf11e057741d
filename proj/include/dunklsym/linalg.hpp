#pragma once
#include <string>
#include <vector>
#include "dunklsym/cyclotomic.hpp"

namespace dunklsym {

using CVec = std::vector<CycNum>;

// Dense matrix over the cyclotomic scalars. Entries may sit at different
// orders; scalar alignment handles rational lifts, so zero-initialized
// entries are plain rational zeros.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const CVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycNum& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix operator-() const;
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CycNum& c, const CMatrix& a);
    friend CMatrix operator*(const CMatrix& a, const CycNum& c) { return c * a; }
    CMatrix pow(long e) const; // e >= 0
    CVec apply(const CVec& v) const;

    CMatrix transpose() const;
    CMatrix conj_transpose() const;
    CycNum trace() const;

    bool is_zero() const;
    friend bool operator==(const CMatrix& a, const CMatrix& b);
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNum> data_;
};

// Result of exact Gauss-Jordan elimination on A x = b.
struct LinearSolution {
    bool consistent = true;
    long rank = 0;
    CVec particular;            // empty when inconsistent
    std::vector<CVec> nullspace; // basis, one vector per free column
};

LinearSolution solve_linear_system(const CMatrix& A, const CVec& b);
long rank_of(const CMatrix& A);
std::vector<CVec> nullspace_of(const CMatrix& A);

} // namespace dunklsym
