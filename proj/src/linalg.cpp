#include "dunklsym/linalg.hpp"

#include <sstream>

namespace dunklsym {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = CycNum(Rat(1));
    return I;
}

CMatrix CMatrix::diagonal(const CVec& d) {
    CMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D.at(i, i) = d[i];
    return D;
}

CMatrix CMatrix::operator-() const {
    CMatrix r = *this;
    for (auto& v : r.data_) v = -v;
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw internal_error("matrix addition shape mismatch");
    CMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw internal_error("matrix subtraction shape mismatch");
    CMatrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw internal_error("matrix product shape mismatch");
    CMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const CycNum& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const CycNum& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

CMatrix operator*(const CycNum& c, const CMatrix& a) {
    CMatrix r = a;
    for (auto& v : r.data_) v *= c;
    return r;
}

CMatrix CMatrix::pow(long e) const {
    if (rows_ != cols_) throw internal_error("matrix power needs a square matrix");
    if (e < 0) throw internal_error("negative matrix power unsupported");
    CMatrix r = identity(rows_);
    CMatrix base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

CVec CMatrix::apply(const CVec& v) const {
    if (v.size() != cols_) throw internal_error("matrix apply shape mismatch");
    CVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

CMatrix CMatrix::transpose() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycNum CMatrix::trace() const {
    if (rows_ != cols_) throw internal_error("trace needs a square matrix");
    CycNum t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool CMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return (a - b).is_zero();
}

std::string CMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (std::size_t j = 0; j < cols_; ++j) os << at(i, j).to_string() << " ; ";
        os << "]\n";
    }
    return os.str();
}

LinearSolution solve_linear_system(const CMatrix& A, const CVec& b) {
    if (b.size() != A.rows()) throw internal_error("system shape mismatch");
    std::size_t nr = A.rows(), nc = A.cols();
    CMatrix R = A;
    CVec aug = b;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t p = row;
        while (p < nr && R.at(p, col).is_zero()) ++p;
        if (p == nr) continue;
        if (p != row) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(R.at(p, j), R.at(row, j));
            std::swap(aug[p], aug[row]);
        }
        CycNum inv = R.at(row, col).inverse();
        for (std::size_t j = col; j < nc; ++j) R.at(row, j) *= inv;
        aug[row] *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            CycNum f = R.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < nc; ++j) R.at(i, j) -= f * R.at(row, j);
            aug[i] -= f * aug[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinearSolution sol;
    sol.rank = static_cast<long>(row);
    for (std::size_t i = row; i < nr; ++i)
        if (!aug[i].is_zero()) {
            sol.consistent = false;
            return sol;
        }
    std::vector<long> pivot_of_col(nc, -1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
        pivot_of_col[pivot_col[k]] = static_cast<long>(k);
    sol.particular.assign(nc, CycNum());
    for (std::size_t k = 0; k < pivot_col.size(); ++k) sol.particular[pivot_col[k]] = aug[k];
    for (std::size_t col = 0; col < nc; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        CVec v(nc);
        v[col] = CycNum(Rat(1));
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -R.at(k, col);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

long rank_of(const CMatrix& A) {
    return solve_linear_system(A, CVec(A.rows())).rank;
}

std::vector<CVec> nullspace_of(const CMatrix& A) {
    return solve_linear_system(A, CVec(A.rows())).nullspace;
}

} // namespace dunklsym
