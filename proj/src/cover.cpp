#include "dunklsym/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dunklsym/errors.hpp"
#include "dunklsym/ledger.hpp"
#include "dunklsym/symmetries.hpp"

namespace dunklsym {

namespace {

std::string cover_tag(long m, CoverSign s) {
    std::ostringstream os;
    os << "cover(m=" << m << ", " << (s == CoverSign::plus ? "plus" : "minus") << ")";
    return os.str();
}

CMatrix mat1(const CycNum& v) {
    CMatrix a(1, 1);
    a.at(0, 0) = v;
    return a;
}

CMatrix diag2(const CycNum& p, const CycNum& q) {
    CMatrix a(2, 2);
    a.at(0, 0) = p;
    a.at(1, 1) = q;
    return a;
}

// [[0, p], [q, 0]]
CMatrix anti2(const CycNum& p, const CycNum& q) {
    CMatrix a(2, 2);
    a.at(0, 1) = p;
    a.at(1, 0) = q;
    return a;
}

std::string scalar_label(const CycNum& v) {
    if (v.is_rational()) return v.to_rat() >= 0 ? "+" + v.to_rat().get_str() : v.to_rat().get_str();
    CycNum iu = imaginary_unit(v.order());
    if (v == iu) return "+i";
    if (v == -iu) return "-i";
    return v.to_string();
}

} // namespace

CoverGroup::CoverGroup(long m, CoverSign sign) : m_(m), sign_(sign) {
    if (m < 2) throw usage_error("double cover needs m >= 2");
    const bool even = (m % 2 == 0);
    if (sign == CoverSign::plus) {
        a0_ = a1_ = am_ = 0;
        b01_ = b0m_ = 1;
        bm1_ = even ? 1 : 0;
    } else {
        a0_ = a1_ = am_ = 1;
        b01_ = b0m_ = bm1_ = 1;
    }
    // crossing exponents, derived from the relations:
    //   s1 s0 = z^q01 s0 s1 with q01 = a0 + a1 + b01,
    //   sm s0 = z^q0m s0 sm with q0m = a0 + am + b0m,
    // hence t s0 = z^(q01+q0m) s0 t, and sm t = z^(a1+am) t^-1 sm.
    q01_ = (a0_ + a1_ + b01_) % 2;
    q0m_ = (a0_ + am_ + b0m_) % 2;
    qt0_ = (q01_ + q0m_) % 2;
    qtm_ = (a1_ + am_) % 2;

    elements_.reserve(static_cast<std::size_t>(8 * m));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < 2; ++d) elements_.push_back({a, b, c, d});
    self_check();
}

void CoverGroup::rmul_z(CoverElement& x) const { x.a ^= 1; }

void CoverGroup::rmul_s0(CoverElement& x) const {
    // move the new s0 left across sm^d and t^c, then merge with s0^b
    x.a ^= (x.d * q0m_ + x.c * qt0_) % 2;
    if (x.b == 1) {
        x.b = 0;
        x.a ^= a0_;
    } else {
        x.b = 1;
    }
}

void CoverGroup::rmul_tau(CoverElement& x) const {
    if (x.d == 0) {
        if (++x.c == m_) {
            x.c = 0;
            x.a ^= bm1_; // t^m = z^bm1
        }
    } else {
        x.a ^= qtm_; // crossing sm
        if (--x.c < 0) {
            x.c += static_cast<int>(m_);
            x.a ^= bm1_;
        }
    }
}

void CoverGroup::rmul_sm(CoverElement& x) const {
    if (x.d == 0) {
        x.d = 1;
    } else {
        x.d = 0;
        x.a ^= am_; // sm^2 = z^am
    }
}

CoverElement CoverGroup::mul(const CoverElement& x, const CoverElement& y) const {
    CoverElement r = x;
    if (y.a) rmul_z(r);
    if (y.b) rmul_s0(r);
    for (int k = 0; k < y.c; ++k) rmul_tau(r);
    if (y.d) rmul_sm(r);
    return r;
}

CoverElement CoverGroup::inverse(const CoverElement& x) const {
    for (const CoverElement& y : elements_)
        if (mul(x, y) == identity() && mul(y, x) == identity()) return y;
    throw internal_error(cover_tag(m_, sign_) + ": element without inverse");
}

CoverElement CoverGroup::power(const CoverElement& x, long e) const {
    CoverElement base = e < 0 ? inverse(x) : x;
    long k = e < 0 ? -e : e;
    CoverElement r = identity();
    for (long i = 0; i < k; ++i) r = mul(r, base);
    return r;
}

std::size_t CoverGroup::index_of(const CoverElement& x) const {
    return static_cast<std::size_t>(((x.a * 2 + x.b) * m_ + x.c) * 2 + x.d);
}

CoverElement CoverGroup::sigma1() const {
    // s1 = t sm^-1 = t sm z^am
    return mul(mul(tau(), sigmam()), power(z(), am_));
}

std::string CoverGroup::to_string(const CoverElement& x) const {
    std::vector<std::string> parts;
    if (x.a) parts.push_back("z");
    if (x.b) parts.push_back("s0");
    if (x.c == 1) parts.push_back("t");
    if (x.c > 1) parts.push_back("t^" + std::to_string(x.c));
    if (x.d) parts.push_back("sm");
    if (parts.empty()) return "e";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::vector<std::vector<CoverElement>> CoverGroup::conjugacy_classes() const {
    std::vector<std::vector<CoverElement>> classes;
    std::set<CoverElement> seen;
    for (const CoverElement& x : elements_) {
        if (seen.count(x)) continue;
        std::set<CoverElement> orbit;
        for (const CoverElement& g : elements_) orbit.insert(mul(mul(g, x), inverse(g)));
        classes.emplace_back(orbit.begin(), orbit.end());
        seen.insert(orbit.begin(), orbit.end());
    }
    return classes;
}

void CoverGroup::self_check() const {
    const std::string tag = cover_tag(m_, sign_);
    auto expect = [&](const CoverElement& got, const CoverElement& want, const char* what) {
        if (got != want)
            throw construction_mismatch(tag + ": relation " + what +
                                        " fails in the normal-form arithmetic");
    };
    const CoverElement e = identity(), zz = z(), s0 = sigma0(), s1 = sigma1(), sm = sigmam();

    expect(mul(zz, zz), e, "z^2 = 1");
    expect(mul(s0, s0), power(zz, a0_), "s0^2 = z^a0");
    expect(mul(s1, s1), power(zz, a1_), "s1^2 = z^a1");
    expect(mul(sm, sm), power(zz, am_), "sm^2 = z^am");
    expect(power(mul(s0, s1), 2), power(zz, b01_), "(s0 s1)^2 = z^b01");
    expect(power(mul(s0, sm), 2), power(zz, b0m_), "(s0 sm)^2 = z^b0m");
    expect(power(mul(s1, sm), m_), power(zz, bm1_), "(s1 sm)^m = z^bm1");
    expect(mul(s1, sm), tau(), "t = s1 sm");

    // group axioms on the full multiplication table: z central, every row
    // and column a permutation, inverses exist, associativity
    const std::size_t n = elements_.size();
    for (const CoverElement& x : elements_) {
        expect(mul(zz, x), mul(x, zz), "z central");
        std::set<CoverElement> row, col;
        for (const CoverElement& y : elements_) {
            row.insert(mul(x, y));
            col.insert(mul(y, x));
        }
        if (row.size() != n || col.size() != n)
            throw construction_mismatch(tag + ": multiplication table is not a latin square");
        inverse(x); // throws if missing
    }
    for (const CoverElement& x : elements_)
        for (const CoverElement& y : elements_)
            for (const CoverElement& w : elements_)
                if (mul(mul(x, y), w) != mul(x, mul(y, w)))
                    throw construction_mismatch(tag + ": multiplication is not associative");
}

CMatrix Irrep::evaluate(const CoverElement& g) const {
    return z.pow(g.a) * s0.pow(g.b) * t.pow(g.c) * sm.pow(g.d);
}

std::vector<std::size_t> IrrepTable::spin_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].epsilon == -1) out.push_back(i);
    return out;
}

namespace {

// Construction-time verification of one table: every claim the table makes
// is re-derived from the normal-form arithmetic.
void verify_table(const CoverGroup& g, IrrepTable& T) {
    const std::string tag = cover_tag(g.m(), g.sign());
    const long n = 8 * g.m();
    auto fail = [&](const std::string& why) { throw construction_mismatch(tag + ": " + why); };

    // per-row: presentation relations and multiplicativity
    for (const Irrep& X : T.irreps) {
        const CMatrix I = CMatrix::identity(X.dim);
        auto zpow = [&](int e) { return X.z.pow(e); };
        auto rel = [&](const CMatrix& got, const CMatrix& want, const char* what) {
            if (got != want) fail(X.name + " violates " + what);
        };
        rel(X.z * X.z, I, "z^2 = 1");
        rel(X.s1, X.t * X.sm * zpow(g.sqm()), "s1 = t sm z^sqm");
        rel(X.s0 * X.s0, zpow(g.sq0()), "s0^2 = z^a0");
        rel(X.s1 * X.s1, zpow(g.sq1()), "s1^2 = z^a1");
        rel(X.sm * X.sm, zpow(g.sqm()), "sm^2 = z^am");
        rel((X.s0 * X.s1).pow(2), zpow(g.braid01()), "(s0 s1)^2 = z^b01");
        rel((X.s0 * X.sm).pow(2), zpow(g.braid0m()), "(s0 sm)^2 = z^b0m");
        rel((X.s1 * X.sm).pow(g.m()), zpow(g.braid1m()), "(s1 sm)^m = z^bm1");
        if (X.z != CycNum(Rat(X.epsilon)) * I) fail(X.name + ": z is not epsilon * id");

        // X(g0 h) = X(g0) X(h) for every generator g0 and element h pins the
        // normal-form evaluation to the group multiplication
        const std::pair<CoverElement, CMatrix> gens[] = {
            {g.z(), X.z}, {g.sigma0(), X.s0}, {g.tau(), X.t}, {g.sigmam(), X.sm}};
        for (const auto& [g0, M0] : gens)
            for (const CoverElement& h : g.elements())
                if (X.evaluate(g.mul(g0, h)) != M0 * X.evaluate(h))
                    fail(X.name + ": evaluation is not multiplicative");
    }

    // characters: constant on classes, orthonormal, pairwise distinct
    T.classes = g.conjugacy_classes();
    if (T.irreps.size() != T.classes.size()) fail("irrep count != class count");
    long expected = (g.m() % 2 == 0) ? 2 * g.m() + 6 : 2 * g.m() + 3;
    if (static_cast<long>(T.classes.size()) != expected) fail("unexpected class count");

    long dimsq = 0;
    for (const Irrep& X : T.irreps) dimsq += static_cast<long>(X.dim * X.dim);
    if (dimsq != n) fail("sum of squared dimensions != group order");

    T.character_values.assign(T.irreps.size(), {});
    for (std::size_t i = 0; i < T.irreps.size(); ++i) {
        for (const auto& cls : T.classes) {
            CycNum val = T.irreps[i].character(cls.front());
            for (const CoverElement& x : cls)
                if (T.irreps[i].character(x) != val)
                    fail(T.irreps[i].name + ": character not constant on a class");
            T.character_values[i].push_back(val);
        }
    }
    const CycNum inv_n(Rat(1, n));
    for (std::size_t i = 0; i < T.irreps.size(); ++i) {
        for (std::size_t j = i; j < T.irreps.size(); ++j) {
            CycNum acc(Rat(0));
            for (std::size_t k = 0; k < T.classes.size(); ++k)
                acc += CycNum(Rat(static_cast<long>(T.classes[k].size()))) *
                       T.character_values[i][k] * T.character_values[j][k].conj();
            acc *= inv_n;
            if (acc != CycNum(Rat(i == j ? 1 : 0)))
                fail("characters of " + T.irreps[i].name + " and " + T.irreps[j].name +
                     " are not orthonormal");
        }
        for (std::size_t j = 0; j < i; ++j)
            if (T.character_values[i] == T.character_values[j])
                fail(T.irreps[i].name + " duplicates " + T.irreps[j].name);
    }

    if (g.sign() == CoverSign::plus)
        for (std::size_t i : T.spin_indices())
            if (T.irreps[i].dim != 2) fail("one-dimensional spin row " + T.irreps[i].name);
}

} // namespace

IrrepTable irrep_table(const CoverGroup& g) {
    const long m = g.m();
    const long ord = session_order(m);
    const bool even = (m % 2 == 0);
    const long p = even ? m / 2 : (m - 1) / 2;
    const CycNum one(Rat(1)), neg(Rat(-1));
    const CycNum iu = imaginary_unit(ord);

    IrrepTable T;
    T.m = m;
    T.sign = g.sign();

    auto add_x = [&](int k, int s0, int sm, int t) {
        Irrep X;
        X.name = "X" + std::to_string(k);
        X.dim = 1;
        X.z = mat1(one);
        X.s0 = mat1(CycNum(Rat(s0)));
        X.sm = mat1(CycNum(Rat(sm)));
        X.t = mat1(CycNum(Rat(t)));
        X.s1 = X.t * X.sm * X.z.pow(g.sqm());
        X.epsilon = 1;
        X.delta = CycNum(Rat(s0));
        T.irreps.push_back(std::move(X));
    };
    // two-dimensional row: z = eps, s0 = diag(delta, zdiag*delta),
    // sm = [[0, smtop], [1, 0]], t = diag(zeta^tpow, zeta^-tpow)
    auto add_y = [&](std::string name, int eps, const CycNum& delta, const CycNum& zdiag,
                     const CycNum& smtop, long tpow, long ell) {
        Irrep Y;
        Y.name = std::move(name);
        Y.dim = 2;
        Y.z = diag2(CycNum(Rat(eps)), CycNum(Rat(eps)));
        Y.s0 = diag2(delta, zdiag * delta);
        Y.sm = anti2(smtop, one);
        Y.t = diag2(root_of_unity(m, tpow), root_of_unity(m, -tpow));
        Y.s1 = Y.t * Y.sm * Y.z.pow(g.sqm());
        Y.epsilon = eps;
        Y.delta = delta;
        Y.ell = ell;
        T.irreps.push_back(std::move(Y));
    };

    if (!even) {
        add_x(1, 1, 1, 1);
        add_x(2, -1, 1, 1);
        add_x(3, 1, -1, 1);
        add_x(4, -1, -1, 1);
        if (g.sign() == CoverSign::plus) {
            add_y("Y0", -1, one, neg, one, 0, 0);
            for (long j = 1; j <= p; ++j)
                for (int eps : {1, -1})
                    for (int dl : {1, -1}) {
                        std::string nm = "Y" + std::to_string(j) + "(" +
                                         (eps > 0 ? "+1" : "-1") + "," + (dl > 0 ? "+1" : "-1") +
                                         ")";
                        add_y(nm, eps, CycNum(Rat(dl)), CycNum(Rat(eps)), one, 2 * j, j);
                    }
        } else {
            add_y("Ym", -1, iu, neg, neg, m, m);
            for (long j = 1; j <= 2 * p; ++j) {
                int eps = (j % 2 == 0) ? 1 : -1;
                for (int s : {1, -1}) {
                    CycNum dl = (j % 2 == 0) ? CycNum(Rat(s)) : CycNum(Rat(s)) * iu;
                    std::string nm = "Y" + std::to_string(j) + "(" + scalar_label(dl) + ")";
                    add_y(nm, eps, dl, CycNum(Rat(eps)), CycNum(Rat(eps)), j, j);
                }
            }
        }
    } else {
        int k = 0;
        for (int t : {1, -1})
            for (int sm : {1, -1})
                for (int s0 : {1, -1}) add_x(++k, s0, sm, t);
        for (long j = 1; j <= 2 * p - 1; ++j) {
            int eps = (j % 2 == 0) ? 1 : -1;
            CycNum smtop = g.sign() == CoverSign::plus ? one : CycNum(Rat(eps));
            for (int s : {1, -1}) {
                CycNum dl = CycNum(Rat(s));
                if (g.sign() == CoverSign::minus && j % 2 == 1) dl *= iu;
                std::string nm = "Y" + std::to_string(j) + "(" + scalar_label(dl) + ")";
                add_y(nm, eps, dl, CycNum(Rat(eps)), smtop, j, j);
            }
        }
    }

    verify_table(g, T);
    return T;
}

RealizationReport verify_realization(const CoverGroup& g, const RootSystem& rs, int delta,
                                     int max_degree) {
    if (g.sign() != CoverSign::plus)
        throw usage_error("the operator realization squares generators to +1: plus cover only");
    if (g.m() != rs.m()) throw usage_error("cover and root system have different m");
    if (max_degree < 0) throw usage_error("max_degree must be >= 0");

    SymmetrySet S = build_symmetries(rs, delta);
    RealizationReport report;
    report.m = g.m();
    report.delta = delta;

    for (const IdentityResult& r : check_identities(presentation_identities(S, max_degree))) {
        if (!r.pass)
            throw relation_violated(cover_tag(g.m(), g.sign()) + ": " + r.name + " at degree " +
                                    std::to_string(r.fail_degree) + " (" + r.counterexample + ")");
        report.relations_checked.push_back(r.name);
    }

    // Restrict the realized action to the constant spinors. The span of
    // chi+ and sm^(chi+) must carry one of the spin rows of the table.
    const GradedBasis consts(0);
    const SpinorPoly w1 = chi_plus();
    const SpinorPoly w2 = S.dsigm(w1);
    CMatrix B(2, 2);
    {
        const CVec c1 = consts.coordinates(w1), c2 = consts.coordinates(w2);
        for (std::size_t i = 0; i < 2; ++i) {
            B.at(i, 0) = c1[i];
            B.at(i, 1) = c2[i];
        }
    }
    if (rank_of(B) != 2)
        throw relation_violated("constant spinor and its sm^ image are dependent");

    auto realize = [&](const CoverElement& x) {
        LinOperator op = LinOperator::identity();
        if (x.a) op = LinOperator::scalar(CycNum(Rat(-1)));
        if (x.b) op = op * S.dsig0;
        if (x.c) op = op * S.dtau.pow(x.c);
        if (x.d) op = op * S.dsigm;
        return op;
    };
    auto restriction = [&](const CoverElement& x) {
        const LinOperator op = realize(x);
        CMatrix R(2, 2);
        const SpinorPoly images[2] = {op(w1), op(w2)};
        for (int col = 0; col < 2; ++col) {
            LinearSolution sol = solve_linear_system(B, consts.coordinates(images[col]));
            if (!sol.consistent)
                throw relation_violated("constant spinors are not invariant under " +
                                        g.to_string(x));
            R.at(0, col) = sol.particular[0];
            R.at(1, col) = sol.particular[1];
        }
        return R;
    };

    const IrrepTable table = irrep_table(g);
    std::vector<CycNum> chi;
    chi.reserve(g.elements().size());
    for (const CoverElement& x : g.elements()) chi.push_back(restriction(x).trace());

    std::vector<std::size_t> matches;
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        bool ok = true;
        for (std::size_t k = 0; ok && k < g.elements().size(); ++k)
            ok = (chi[k] == table.irreps[i].character(g.elements()[k]));
        if (ok) matches.push_back(i);
    }
    if (matches.size() != 1)
        throw relation_violated("constant-spinor restriction matches " +
                                std::to_string(matches.size()) + " table rows");
    if (table.irreps[matches[0]].epsilon != -1)
        throw relation_violated("constant-spinor restriction is not a spin representation");

    report.restriction_irrep = matches[0];
    report.restriction_name = table.irreps[matches[0]].name;
    return report;
}

} // namespace dunklsym
