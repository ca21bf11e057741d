#include "dunklsym/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dunklsym {

namespace {

// --- dense univariate polynomials over Q, index = power -------------------

using QP = std::vector<Rat>;

long degree(const QP& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(QP& p) {
    long d = degree(p);
    p.resize(static_cast<std::size_t>(d + 1));
}

// Remainder of a modulo b (b nonzero). Quotient is discarded.
QP poly_rem(QP a, const QP& b) {
    long db = degree(b);
    const Rat& lead = b[static_cast<std::size_t>(db)];
    for (long da = degree(a); da >= db; da = degree(a)) {
        Rat f = a[static_cast<std::size_t>(da)] / lead;
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= f * b[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(da)] = 0; // kill rounding-free residue exactly
    }
    trim(a);
    return a;
}

// Exact quotient; throws if the division leaves a remainder.
QP poly_div_exact(QP a, const QP& b) {
    long db = degree(b);
    long da = degree(a);
    if (da < db) throw internal_error("polynomial division underflow");
    QP q(static_cast<std::size_t>(da - db + 1), Rat(0));
    const Rat& lead = b[static_cast<std::size_t>(db)];
    for (; da >= db; da = degree(a)) {
        Rat f = a[static_cast<std::size_t>(da)] / lead;
        q[static_cast<std::size_t>(da - db)] = f;
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= f * b[static_cast<std::size_t>(j)];
        a[static_cast<std::size_t>(da)] = 0;
    }
    if (degree(a) >= 0) throw internal_error("inexact polynomial division");
    return q;
}

QP poly_mul(const QP& a, const QP& b) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    QP c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

// --- rational interval arithmetic ------------------------------------------

struct QI {
    Rat lo, hi;
};

QI qi(const Rat& v) { return {v, v}; }

QI operator+(const QI& a, const QI& b) { return {a.lo + b.lo, a.hi + b.hi}; }
QI operator-(const QI& a, const QI& b) { return {a.lo - b.hi, a.hi - b.lo}; }

QI operator*(const QI& a, const QI& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

QI scale(const Rat& c, const QI& a) {
    if (sgn(c) >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

// atan(1/x) enclosed by two consecutive alternating partial sums.
QI atan_inv(long x, int terms) {
    Rat inv_x2 = Rat(1, x * x);
    Rat power(1, x);
    Rat s(0), s_prev(0);
    for (int j = 0; j <= terms; ++j) {
        s_prev = s;
        Rat term = power / (2 * j + 1);
        s += (j % 2 == 0) ? term : -term;
        power *= inv_x2;
    }
    return {std::min(s, s_prev), std::max(s, s_prev)};
}

QI pi_interval(int terms) {
    QI a5 = atan_inv(5, terms);
    QI a239 = atan_inv(239, terms);
    return scale(Rat(16), a5) - scale(Rat(4), a239);
}

// cos/sin of theta (0 <= theta <= 2.2) from K Taylor terms plus a rigorous
// alternating-series tail bound. Requires K >= 2 so the dropped terms are
// decreasing in magnitude.
void cos_sin_taylor(const QI& theta, int K, QI& c, QI& s) {
    // theta >= 0, so powers are monotone: theta^p in [lo^p, hi^p].
    QI c_sum = qi(Rat(0)), s_sum = qi(Rat(0));
    QI pow_even = qi(Rat(1));                 // theta^(2j)
    QI pow_odd = theta;                       // theta^(2j+1)
    QI theta2 = theta * theta;
    Rat fact_even(1), fact_odd(1);            // (2j)!, (2j+1)!
    for (int j = 0; j < K; ++j) {
        QI ct = scale(Rat(1) / fact_even, pow_even);
        QI st = scale(Rat(1) / fact_odd, pow_odd);
        if (j % 2 == 0) {
            c_sum = c_sum + ct;
            s_sum = s_sum + st;
        } else {
            c_sum = c_sum - ct;
            s_sum = s_sum - st;
        }
        pow_even = pow_even * theta2;
        pow_odd = pow_odd * theta2;
        fact_even *= (2 * j + 1) * (2 * j + 2);
        fact_odd *= (2 * j + 2) * (2 * j + 3);
    }
    // First omitted terms, evaluated at the upper endpoint.
    Rat hi_pow(1);
    for (int j = 0; j < K; ++j) hi_pow *= theta.hi * theta.hi;
    Rat c_tail = hi_pow / fact_even;
    Rat s_tail = hi_pow * theta.hi / fact_odd;
    c = {c_sum.lo - c_tail, c_sum.hi + c_tail};
    s = {s_sum.lo - s_tail, s_sum.hi + s_tail};
}

} // namespace

// --- CycNum ----------------------------------------------------------------

CycNum::CycNum(const Rat& r, long order) : order_(order), c_() {
    if (order < 1) throw internal_error("cyclotomic order must be positive");
    c_.assign(static_cast<std::size_t>(order), Rat(0));
    c_[0] = r;
}

CycNum CycNum::zeta(long order, long k) {
    CycNum z(Rat(0), order);
    long e = ((k % order) + order) % order;
    z.c_[static_cast<std::size_t>(e)] = 1;
    return z;
}

CycNum CycNum::from_coeffs(long order, std::vector<Rat> coeffs) {
    if (order < 1 || coeffs.size() != static_cast<std::size_t>(order))
        throw internal_error("coefficient vector length must equal the order");
    CycNum z(Rat(0), order);
    z.c_ = std::move(coeffs);
    return z;
}

void CycNum::align(CycNum& a, CycNum& b) {
    if (a.order_ == b.order_) return;
    if (a.is_rational()) {
        a = CycNum(a.to_rat(), b.order_);
        return;
    }
    if (b.is_rational()) {
        b = CycNum(b.to_rat(), a.order_);
        return;
    }
    throw order_mismatch("mixing cyclotomic orders " + std::to_string(a.order_) +
                         " and " + std::to_string(b.order_));
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& b) {
    CycNum rhs = b;
    align(*this, rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
    CycNum rhs = b;
    align(*this, rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& b) {
    CycNum rhs = b;
    align(*this, rhs);
    std::size_t n = c_.size();
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.c_[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n; // zeta_n^n = 1
            out[k] += c_[i] * rhs.c_[j];
        }
    }
    c_ = std::move(out);
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& b) {
    CycNum rhs = b;
    align(*this, rhs);
    return *this *= rhs.inverse();
}

std::vector<Rat> CycNum::canonical() const {
    long top = -1;
    for (long k = static_cast<long>(c_.size()) - 1; k >= 0; --k)
        if (c_[static_cast<std::size_t>(k)] != 0) {
            top = k;
            break;
        }
    const QP& phi = cyclotomic_polynomial(order_);
    long field_degree = static_cast<long>(phi.size()) - 1;
    if (top < field_degree) return c_; // already the reduced representative
    QP rem = poly_rem(c_, phi);
    rem.resize(static_cast<std::size_t>(order_), Rat(0));
    return rem;
}

bool CycNum::is_zero() const {
    long top = -1;
    for (long k = static_cast<long>(c_.size()) - 1; k >= 0; --k)
        if (c_[static_cast<std::size_t>(k)] != 0) {
            top = k;
            break;
        }
    if (top < 0) return true;
    const QP& phi = cyclotomic_polynomial(order_);
    if (top < static_cast<long>(phi.size()) - 1) return false; // canonical and nonzero
    for (const Rat& v : poly_rem(c_, phi))
        if (v != 0) return false;
    return true;
}

bool operator==(const CycNum& a, const CycNum& b) {
    CycNum d = a;
    d -= b;
    return d.is_zero();
}

CycNum CycNum::conj() const {
    CycNum r(Rat(0), order_);
    std::size_t n = c_.size();
    for (std::size_t k = 0; k < n; ++k)
        r.c_[k == 0 ? 0 : n - k] = c_[k];
    return r;
}

CycNum CycNum::inverse() const {
    std::vector<Rat> a = canonical();
    trim(a);
    if (a.empty()) throw division_by_zero("inverse of zero");
    if (order_ == 1 || a.size() == 1) {
        return CycNum(Rat(1) / a[0], order_);
    }
    // Extended Euclid in Q[x] against the irreducible Phi_n: since a is a
    // nonzero reduced representative, gcd(a, Phi_n) is a nonzero constant g
    // with u*a + v*Phi_n = g, so a^{-1} = u/g in the field.
    QP r0 = cyclotomic_polynomial(order_), r1 = a;
    QP u0 = {}, u1 = {Rat(1)}; // coefficients of a
    while (degree(r1) > 0) {
        long d0 = degree(r0), d1 = degree(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        // r0 -= q * r1 by one leading-term elimination step at a time.
        Rat f = r0[static_cast<std::size_t>(d0)] / r1[static_cast<std::size_t>(d1)];
        long shift = d0 - d1;
        for (long j = 0; j <= d1; ++j)
            r0[static_cast<std::size_t>(shift + j)] -= f * r1[static_cast<std::size_t>(j)];
        r0[static_cast<std::size_t>(d0)] = 0;
        QP shifted(static_cast<std::size_t>(shift), Rat(0));
        shifted.insert(shifted.end(), u1.begin(), u1.end());
        if (u0.size() < shifted.size()) u0.resize(shifted.size(), Rat(0));
        for (std::size_t j = 0; j < shifted.size(); ++j) u0[j] -= f * shifted[j];
        trim(r0);
    }
    if (degree(r1) != 0)
        throw internal_error("cyclotomic inverse: gcd degenerated");
    Rat g = r1[0];
    QP inv = u1;
    for (auto& v : inv) v /= g;
    inv.resize(static_cast<std::size_t>(order_), Rat(0));
    return from_coeffs(order_, std::move(inv));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result = one(order_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool CycNum::is_rational() const {
    std::vector<Rat> c = canonical();
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0) return false;
    return true;
}

Rat CycNum::to_rat() const {
    std::vector<Rat> c = canonical();
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0)
            throw not_rational("value is not rational: " + to_string());
    return c[0];
}

std::string CycNum::to_string() const {
    std::vector<Rat> c = canonical();
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!first) os << " + ";
        os << c[k].get_str();
        if (k > 0) os << "*z" << order_ << "^" << k;
        first = false;
    }
    if (first) os << "0";
    os << " [order " << order_ << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
    return os << a.to_string();
}

bool is_real(const CycNum& a) {
    return a.conj().canonical() == a.canonical();
}

Sign sign_of_real(const CycNum& a) {
    std::vector<Rat> c = a.canonical();
    if (a.conj().canonical() != c)
        throw not_real("sign of a non-real value: " + a.to_string());
    bool irrational = false;
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0) irrational = true;
    if (!irrational) {
        int s = sgn(c[0]);
        return s == 0 ? Sign::zero : (s > 0 ? Sign::positive : Sign::negative);
    }
    // Nonzero (canonical form is nonzero) and irrational: evaluate
    // sum_k c_k cos(2*pi*k/n) with rational interval enclosures, refining
    // until zero is excluded. Realness makes the sine parts cancel, so the
    // cosine evaluation equals the value itself.
    long n = a.order();
    for (int K = 8; K <= (1 << 14); K *= 2) {
        QI pi = pi_interval(K);
        QI theta = scale(Rat(2) / n, pi);
        QI cos1, sin1;
        cos_sin_taylor(theta, K, cos1, sin1);
        QI total = qi(c[0]);
        QI ck = cos1, sk = sin1; // angle k*theta, starting at k=1
        for (std::size_t k = 1; k < c.size(); ++k) {
            if (c[k] != 0) total = total + scale(c[k], ck);
            QI next_c = ck * cos1 - sk * sin1;
            QI next_s = sk * cos1 + ck * sin1;
            ck = next_c;
            sk = next_s;
        }
        if (sgn(total.lo) > 0) return Sign::positive;
        if (sgn(total.hi) < 0) return Sign::negative;
    }
    throw internal_error("sign_of_real: enclosure failed to separate from zero");
}

// --- cyclotomic polynomials and session helpers -----------------------------

const std::vector<Rat>& cyclotomic_polynomial(long n) {
    if (n < 1) throw internal_error("cyclotomic order must be positive");
    static std::map<long, QP> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = registry.find(n); it != registry.end()) return it->second;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0 || registry.count(d)) continue;
        // Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
        QP num(static_cast<std::size_t>(d + 1), Rat(0));
        num[0] = -1;
        num[static_cast<std::size_t>(d)] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = poly_div_exact(std::move(num), registry.at(e));
        registry.emplace(d, std::move(num));
    }
    return registry.at(n);
}

long session_order(long m) {
    if (m < 2) throw usage_error("dihedral parameter m must be at least 2");
    return std::lcm(4L, 2 * m);
}

CycNum root_of_unity(long m, long k) {
    long n = session_order(m);
    return CycNum::zeta(n, (n / (2 * m)) * k);
}

CycNum imaginary_unit(long order) {
    if (order % 4 != 0)
        throw order_mismatch("Q(zeta_" + std::to_string(order) + ") has no i");
    return CycNum::zeta(order, order / 4);
}

std::pair<CycNum, CycNum> sin_cos(long m, long j) {
    CycNum zp = root_of_unity(m, j);
    CycNum zm = root_of_unity(m, -j);
    CycNum half(Rat(1, 2));
    CycNum i = imaginary_unit(session_order(m));
    CycNum cos = (zp + zm) * half;
    CycNum sin = (zp - zm) * half * (-i); // 1/(2i) = -i/2
    return {sin, cos};
}

} // namespace dunklsym
