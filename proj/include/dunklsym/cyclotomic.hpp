#pragma once
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>
#include "dunklsym/rational.hpp"

namespace dunklsym {

// Element of the cyclotomic field Q(zeta_n), held on the power basis
// {zeta_n^k : 0 <= k < n}. Stored representatives are not canonical;
// equality, zero tests and sign tests reduce modulo the n-th cyclotomic
// polynomial. Values are immutable in spirit: every operation returns a
// fresh value, so instances are freely shareable across threads.
//
// Orders never mix silently. Binary operations align orders only when one
// side is rational-valued (which lifts into any Q(zeta_n)); anything else
// throws order_mismatch.
class CycNum {
public:
    CycNum() : order_(1), c_(1, Rat(0)) {}
    CycNum(const Rat& r, long order = 1);

    static CycNum zero(long order) { return CycNum(Rat(0), order); }
    static CycNum one(long order) { return CycNum(Rat(1), order); }
    static CycNum zeta(long order, long k); // zeta_order^k
    static CycNum from_coeffs(long order, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b);
    CycNum& operator/=(const CycNum& b);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    bool is_zero() const;
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum conj() const;    // ring automorphism zeta_n -> zeta_n^{n-1}
    CycNum inverse() const; // throws division_by_zero on zero
    CycNum pow(long e) const;

    // Remainder modulo Phi_n: the unique representative supported on
    // {zeta_n^k : k < phi(n)}, padded with zeros to length n.
    std::vector<Rat> canonical() const;

    bool is_rational() const;
    Rat to_rat() const; // throws not_rational outside Q

    std::string to_string() const; // canonical form, for diagnostics

private:
    long order_;
    std::vector<Rat> c_; // size order_
    static void align(CycNum& a, CycNum& b);
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Exact sign of a real cyclotomic value. Zero is decided symbolically by
// reduction; a nonzero value is localized with rational interval enclosures
// of cos(2*pi*k/n) refined until zero is excluded, so no tolerance is
// involved. Throws not_real when conj(a) != a.
Sign sign_of_real(const CycNum& a);
bool is_real(const CycNum& a);

inline CycNum real_part(const CycNum& a) {
    return (a + a.conj()) * CycNum(Rat(1, 2));
}

// Monic Phi_n as a coefficient vector of degree phi(n) (index = power).
const std::vector<Rat>& cyclotomic_polynomial(long n);

// Scalars for the reflection group of order 4m: everything lives in
// Q(zeta_n) with n = lcm(4, 2m), which contains i and zeta = e^{i*pi/m}.
long session_order(long m);
CycNum root_of_unity(long m, long k);  // zeta^k at order lcm(4, 2m)
CycNum imaginary_unit(long order);     // requires 4 | order
std::pair<CycNum, CycNum> sin_cos(long m, long j); // (sin, cos)(j*pi/m)

} // namespace dunklsym
