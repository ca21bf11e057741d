#include "dunklsym/monogenics.hpp"
#include <string>
#include <utility>
#include "dunklsym/errors.hpp"
#include "dunklsym/linalg.hpp"
#include "dunklsym/symmetries.hpp"

namespace dunklsym {
namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

SpinorPoly scaled(const MPoly& p, const SpinorPoly& f) { return {p * f.up, p * f.down}; }

// f(x) -> conj(f)(x): conjugate every coefficient. On polynomials written
// in z = x1 + i x2, zbar this is exactly the swap z <-> zbar composed with
// conjugation of the z,zbar-coefficients.
MPoly conj_coefficients(const MPoly& f) {
    MPoly out;
    for (const auto& [mono, c] : f.terms()) out += MPoly::monomial(mono, c.conj());
    return out;
}

bool depends_on_x3(const MPoly& f) {
    for (const auto& [mono, c] : f.terms())
        if (mono.e[2] != 0) return true;
    return false;
}

LinOperator planar_dirac(const Operators& ops) {
    return ops.clifford(0) * ops.dunkl(0) + ops.clifford(1) * ops.dunkl(1);
}

LinOperator planar_vector_x(const Operators& ops) {
    return ops.clifford(0) * ops.coord(0) + ops.clifford(1) * ops.coord(1);
}

// Radial factor of the even-m harmonics in X1 = (Z + Zb)/2 and
// IX2 = (Z - Zb)/2 where Z = z^p: interlocking hypergeometric sums whose
// parity in IX2 alternates with k.
MPoly even_radial(long k, const Rat& k1, const Rat& km, const MPoly& X1, const MPoly& IX2) {
    const long t = k / 2;
    const Rat am = Rat(1) / 2 - t - km;
    const Rat a1 = Rat(1) / 2 - t - k1;
    auto coeff = [&](long i, long j, bool flip) {
        Rat c = pochhammer(am, i) * pochhammer(a1, j);
        return flip ? Rat(-c) : c;
    };
    MPoly g;
    if (k % 2 == 0) {
        for (long j = 0; j <= t; ++j)
            g += CycNum(coeff(t - j, j, t % 2 != 0) / (factorial(t - j) * factorial(j))) *
                 (X1.pow(static_cast<int>(2 * (t - j))) * IX2.pow(static_cast<int>(2 * j)));
        for (long j = 0; j + 1 <= t; ++j)
            g += CycNum(coeff(t - 1 - j, j, t % 2 == 0) /
                        (factorial(t - 1 - j) * factorial(j))) *
                 (X1.pow(static_cast<int>(2 * t - 1 - 2 * j)) *
                  IX2.pow(static_cast<int>(2 * j + 1)));
    } else {
        for (long j = 0; j <= t; ++j)
            g += CycNum(coeff(t + 1 - j, j, t % 2 == 0) / (factorial(t - j) * factorial(j))) *
                 (X1.pow(static_cast<int>(2 * t + 1 - 2 * j)) *
                  IX2.pow(static_cast<int>(2 * j)));
        for (long j = 0; j <= t; ++j)
            g += CycNum(coeff(t - j, j + 1, t % 2 == 0) / (factorial(t - j) * factorial(j))) *
                 (X1.pow(static_cast<int>(2 * (t - j))) * IX2.pow(static_cast<int>(2 * j + 1)));
    }
    return g;
}

Harmonic2D harmonics_2d_impl(const Operators& ops, long n) {
    if (n < 0) throw usage_error("harmonic degree must be nonnegative");
    const RootSystem& rs = ops.roots();
    const long m = rs.m();
    const CycNum i_ = imaginary_unit(rs.scalar_order());
    const MPoly z = MPoly::variable(0) + i_ * MPoly::variable(1);
    const MPoly zb = MPoly::variable(0) - i_ * MPoly::variable(1);

    Harmonic2D h;
    h.n = n;
    if (m % 2 != 0) {
        const long k = n / m, ell = n % m;
        const Rat k1 = rs.kappa1();
        MPoly sum;
        for (long j = 0; j <= k; ++j)
            sum += CycNum(pochhammer(k1, j) * pochhammer(k1 + 1, k - j) /
                          (factorial(j) * factorial(k - j))) *
                   (zb.pow(static_cast<int>(m * j)) * z.pow(static_cast<int>(m * (k - j))));
        h.plus = z.pow(static_cast<int>(ell)) * sum;
    } else {
        const long p = m / 2, k = n / p, ell = n % p;
        const MPoly Z = z.pow(static_cast<int>(p)), Zb = zb.pow(static_cast<int>(p));
        const CycNum half{Rat(1) / 2};
        const MPoly X1 = half * (Z + Zb), IX2 = half * (Z - Zb);
        const long t = k / 2;
        const Rat pre = pochhammer(rs.kappam() + rs.kappa1() + 1, t) /
                        pochhammer(rs.kappa1() + Rat(1) / 2, k % 2 == 0 ? t : t + 1);
        h.plus = CycNum(pre) *
                 (z.pow(static_cast<int>(ell)) * even_radial(k, rs.kappa1(), rs.kappam(), X1, IX2));
    }
    h.minus = conj_coefficients(h.plus);

    const LinOperator lap = ops.dunkl(0) * ops.dunkl(0) + ops.dunkl(1) * ops.dunkl(1);
    if (!lap({h.plus, MPoly{}}).is_zero() || !lap({h.minus, MPoly{}}).is_zero())
        throw internal_error("closed-form harmonic of degree " + std::to_string(n) +
                             " is not annihilated by the planar Laplacian");
    return h;
}

std::pair<SpinorPoly, SpinorPoly> monogenics_2d_impl(const Operators& ops, long n) {
    const Harmonic2D h = harmonics_2d_impl(ops, n);
    SpinorPoly plus{h.plus, MPoly{}}, minus{MPoly{}, h.minus};
    const LinOperator D2 = planar_dirac(ops);
    if (!D2(plus).is_zero() || !D2(minus).is_zero())
        throw internal_error("closed-form planar monogenic of degree " + std::to_string(n) +
                             " is not annihilated by the planar Dirac operator");
    return {std::move(plus), std::move(minus)};
}

// |x|^{2t} P_t^{(a,b)}((rho^2 - x3^2)/|x|^2) expanded through the
// terminating 2F1 form, so the rational argument never materializes:
// ((a+1)_t / t!) sum_j (-t)_j (-t-b)_j / ((a+1)_j j!) (-1)^j rho^{2(t-j)} x3^{2j}.
MPoly jacobi_radial(const Rat& a, const Rat& b, long t) {
    if (t < 0) return MPoly{};
    const MPoly x1 = MPoly::variable(0), x2 = MPoly::variable(1), x3 = MPoly::variable(2);
    const MPoly rho2 = x1 * x1 + x2 * x2;
    MPoly out;
    for (long j = 0; j <= t; ++j) {
        Rat c = pochhammer(Rat(-t), j) * pochhammer(Rat(-t) - b, j) /
                (pochhammer(a + 1, j) * factorial(j));
        if (j % 2 != 0) c = -c;
        out += CycNum(c) * (rho2.pow(static_cast<int>(t - j)) * x3.pow(static_cast<int>(2 * j)));
    }
    return CycNum(pochhammer(a + 1, t) / factorial(t)) * out;
}

} // namespace

Harmonic2D harmonics_2d(const RootSystem& rs, long n) {
    return harmonics_2d_impl(Operators(rs, +1), n);
}

std::pair<SpinorPoly, SpinorPoly> monogenics_2d(const RootSystem& rs, long n) {
    return monogenics_2d_impl(Operators(rs, +1), n);
}

FischerReport fischer_check(const RootSystem& rs, int delta, long n) {
    if (n < 0) throw usage_error("degree must be nonnegative");
    const Operators ops(rs, delta);
    const LinOperator xhat = planar_vector_x(ops);
    const GradedBasis slice(static_cast<int>(n));

    // rows: coordinates of the planar part of the slice (x3-free monomials,
    // both spinor components)
    std::vector<std::size_t> planar;
    const std::size_t nm = slice.monomials().size();
    for (std::size_t i = 0; i < nm; ++i)
        if (slice.monomials()[i].e[2] == 0) {
            planar.push_back(i);
            planar.push_back(nm + i);
        }

    FischerReport rep;
    rep.n = n;
    rep.count = 2 * static_cast<std::size_t>(n + 1);
    rep.space_dim = planar.size();
    CMatrix E(planar.size(), rep.count);
    std::size_t col = 0;
    for (long k = 0; k <= n; ++k) {
        auto [fp, fm] = monogenics_2d_impl(ops, k);
        for (SpinorPoly* f : {&fp, &fm}) {
            for (long j = 0; j < n - k; ++j) *f = xhat(*f);
            const CVec coords = slice.coordinates(*f);
            for (std::size_t r = 0; r < planar.size(); ++r) E.at(r, col) = coords[planar[r]];
            ++col;
        }
    }
    rep.rank = rank_of(E);
    rep.direct_sum = rep.rank == static_cast<long>(rep.count) && rep.count == rep.space_dim;
    return rep;
}

SpinorPoly ck_extend(const Operators& ops, const SpinorPoly& f) {
    if (depends_on_x3(f.up) || depends_on_x3(f.down))
        throw usage_error("extension input must be free of x3");
    const Rat k0 = ops.roots().kappa0();
    const LinOperator D2 = planar_dirac(ops);
    const LinOperator e3 = ops.clifford(2);
    const MPoly x3 = MPoly::variable(2);

    SpinorPoly out;
    SpinorPoly even_pow = f; // D2^{2j} f
    Rat four_pow(1);         // 4^j
    for (long j = 0; !even_pow.is_zero(); ++j) {
        const int sgn = j % 2 == 0 ? 1 : -1;
        const Rat c_even = Rat(sgn) / (four_pow * pochhammer(k0 + Rat(1) / 2, j) * factorial(j));
        out += scaled(x3.pow(static_cast<int>(2 * j)), CycNum(c_even) * even_pow);
        const SpinorPoly odd_pow = D2(even_pow); // D2^{2j+1} f
        if (!odd_pow.is_zero()) {
            const Rat c_odd = Rat(-sgn) / (four_pow * (2 * k0 + 1) *
                                           pochhammer(k0 + Rat(3) / 2, j) * factorial(j));
            out += scaled(x3.pow(static_cast<int>(2 * j + 1)), CycNum(c_odd) * e3(odd_pow));
        }
        even_pow = D2(odd_pow);
        four_pow *= 4;
    }
    return out;
}

std::vector<Monogenic3D> monogenic_basis(const RootSystem& rs, int delta, long n) {
    if (n < 0) throw usage_error("degree must be nonnegative");
    const Operators ops(rs, delta);
    const LinOperator xhat = planar_vector_x(ops);
    const LinOperator D = ops.dirac();

    std::vector<Monogenic3D> out;
    for (int sign : {+1, -1})
        for (long k = 0; k <= n; ++k) {
            auto pair = monogenics_2d_impl(ops, k);
            SpinorPoly f = sign > 0 ? std::move(pair.first) : std::move(pair.second);
            for (long j = 0; j < n - k; ++j) f = xhat(f);
            SpinorPoly psi = ck_extend(ops, f);
            if (!D(psi).is_zero())
                throw internal_error("extension of a planar monogenic escaped the Dirac kernel");
            out.push_back({n, k, sign, std::move(psi)});
        }

    const GradedBasis slice(static_cast<int>(n));
    CMatrix E(slice.size(), out.size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        const CVec coords = slice.coordinates(out[c].psi);
        for (std::size_t r = 0; r < slice.size(); ++r) E.at(r, c) = coords[r];
    }
    if (rank_of(E) != static_cast<long>(out.size()))
        throw internal_error("monogenic family of degree " + std::to_string(n) +
                             " is linearly dependent");
    return out;
}

std::vector<Monogenic3D> explicit_basis(const RootSystem& rs, int delta, long n) {
    if (n < 0) throw usage_error("degree must be nonnegative");
    const Operators ops(rs, delta);
    const LinOperator xhat = planar_vector_x(ops);
    const LinOperator e3 = ops.clifford(2);
    const LinOperator D = ops.dirac();
    const Rat k0 = rs.kappa0();
    const Rat gh = ops.gamma() - k0; // planar weight m(kappa1+kappam)/2
    const MPoly x3 = MPoly::variable(2);

    std::vector<Monogenic3D> out;
    for (int sign : {+1, -1})
        for (long k = 0; k <= n; ++k) {
            auto pair = monogenics_2d_impl(ops, k);
            const SpinorPoly Phi = sign > 0 ? std::move(pair.first) : std::move(pair.second);
            const long rem = n - k;
            const long t = rem / 2;
            const CycNum ct{factorial(t) / pochhammer(k0 + Rat(1) / 2, t)};
            SpinorPoly psi;
            if (rem % 2 == 0) {
                psi = scaled(jacobi_radial(k0 - Rat(1) / 2, Rat(k) + gh, t), Phi);
                if (t > 0)
                    psi -= scaled(x3, e3(xhat(scaled(
                               jacobi_radial(k0 + Rat(1) / 2, Rat(k) + 1 + gh, t - 1), Phi))));
            } else {
                psi = xhat(scaled(jacobi_radial(k0 - Rat(1) / 2, Rat(k) + 1 + gh, t), Phi));
                const Rat facing = (t + k + 1 + gh) / (t + k0 + Rat(1) / 2);
                psi -= CycNum(facing) *
                       scaled(x3, e3(scaled(jacobi_radial(k0 + Rat(1) / 2, Rat(k) + gh, t), Phi)));
            }
            psi = ct * psi;
            if (!D(psi).is_zero())
                throw internal_error("closed-form monogenic escaped the Dirac kernel");
            out.push_back({n, k, sign, std::move(psi)});
        }
    return out;
}

long dirac_kernel_dimension(const RootSystem& rs, int delta, long n) {
    if (n < 0) throw usage_error("degree must be nonnegative");
    const GradedBasis dom(static_cast<int>(n));
    if (n == 0) return static_cast<long>(dom.size()); // constants are killed
    const Operators ops(rs, delta);
    const LinOperator D = ops.dirac();
    const GradedBasis cod(static_cast<int>(n - 1));
    CMatrix E(cod.size(), dom.size());
    for (std::size_t c = 0; c < dom.size(); ++c) {
        const CVec coords = cod.coordinates(D(dom.elements()[c]));
        for (std::size_t r = 0; r < cod.size(); ++r) E.at(r, c) = coords[r];
    }
    return static_cast<long>(dom.size()) - rank_of(E);
}

Rat iterated_dirac_factor(long a, long b, long k, const Rat& gamma_hat) {
    if (a < 0 || b < 0 || k < 0) throw usage_error("indices must be nonnegative");
    if (a > b) return Rat(0);
    const long alpha = a / 2, beta = b / 2;
    Rat two_pow(1);
    for (long i = 0; i < a; ++i) two_pow *= 2;
    const Rat kg = Rat(k) + gamma_hat;
    if (a % 2 == 0 && b % 2 == 0)
        return two_pow * pochhammer(Rat(-beta), alpha) * pochhammer(-Rat(beta) - kg, alpha);
    if (a % 2 == 1 && b % 2 == 0)
        return -two_pow * pochhammer(Rat(-beta), alpha + 1) * pochhammer(-Rat(beta) - kg, alpha);
    if (a % 2 == 1)
        return -two_pow * pochhammer(Rat(-beta), alpha) *
               pochhammer(-Rat(beta) - 1 - kg, alpha + 1);
    return two_pow * pochhammer(Rat(-beta), alpha) * pochhammer(-Rat(beta) - 1 - kg, alpha);
}

RepSpec monogenic_rep_spec(const RootSystem& rs, int delta, long n) {
    if (n < 0) throw usage_error("degree must be nonnegative");
    if (delta != 1 && delta != -1) throw usage_error("delta must be +1 or -1");
    const long m = rs.m();
    RepSpec s;
    s.m = m;
    s.N = n;
    s.delta = delta;
    s.kappa0 = rs.kappa0();
    s.kappa1 = rs.kappa1();
    s.kappam = rs.kappam();
    s.lambda_branch = 1;
    s.Lambda_branch = delta == 1 ? 1 : 2;
    if (m % 2 != 0) {
        s.rep_case = RepCase::I;
        s.ell = mod((m - 1) / 2 - n, m);
    } else {
        s.rep_case = RepCase::Ii;
        s.ell = mod(m / 2 - 1 - n, m);
    }
    return s;
}

MonogenicRepReport verify_monogenic_rep(const RootSystem& rs, int delta, long n) {
    MonogenicRepReport report;
    report.n = n;
    report.delta = delta;
    report.dim = 2 * (n + 1);
    report.cell = monogenic_rep_spec(rs, delta, n);

    const std::vector<Monogenic3D> basis = monogenic_basis(rs, delta, n);
    const SymmetrySet S = build_symmetries(rs, delta);
    const long m = rs.m();
    const CycNum i_ = imaginary_unit(rs.scalar_order());
    const Rat gh = S.ops.gamma() - rs.kappa0();
    auto zeta = [&](long k) { return root_of_unity(m, k); };

    const GradedBasis slice(static_cast<int>(n));
    const std::size_t dim = basis.size();
    CMatrix E(slice.size(), dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const CVec coords = slice.coordinates(basis[c].psi);
        for (std::size_t r = 0; r < slice.size(); ++r) E.at(r, c) = coords[r];
    }

    auto extract = [&](const LinOperator& X, const char* name) {
        CMatrix M(dim, dim);
        for (std::size_t c = 0; c < dim; ++c) {
            const CVec target = slice.coordinates(X(basis[c].psi));
            const LinearSolution sol = solve_linear_system(E, target);
            if (!sol.consistent || !sol.nullspace.empty())
                throw internal_error(std::string("symmetry ") + name +
                                     " does not preserve the monogenic span");
            for (std::size_t r = 0; r < dim; ++r) M.at(r, c) = sol.particular[r];
        }
        return M;
    };

    RepMatrices mat;
    mat.spec = report.cell;
    mat.dim = static_cast<long>(dim);
    mat.lambda = Rat(n) + Rat(1) / 2 + gh;
    mat.generators = {{"O0", extract(S.O0, "O0")},     {"O123", extract(S.O123, "O123")},
                      {"T0", extract(S.T0, "T0")},     {"T+", extract(S.Tp, "T+")},
                      {"T-", extract(S.Tm, "T-")},     {"s0^", extract(S.dsig0, "s0^")},
                      {"s1^", extract(S.dsig1, "s1^")}, {"sm^", extract(S.dsigm, "sm^")},
                      {"tau^", extract(S.dtau, "tau^")}, {"L+", extract(S.Lp, "L+")},
                      {"L-", extract(S.Lm, "L-")},     {"O+", extract(S.Op, "O+")},
                      {"O-", extract(S.Om, "O-")}};
    for (const Monogenic3D& e : basis)
        mat.basis.push_back("psi_" + std::to_string(e.n) + "," + std::to_string(e.k) +
                            (e.sign > 0 ? "^+" : "^-"));

    const auto ip = [&](long k) { return static_cast<std::size_t>(k); };
    const auto im = [&](long k) { return static_cast<std::size_t>(n + 1 + k); };

    // O0 eigenvalues +-(k + 1/2 + gammahat); central scalar
    // delta i (n + 1 + gammahat + kappa0).
    {
        CVec d0(dim);
        for (long k = 0; k <= n; ++k) {
            d0[ip(k)] = CycNum(Rat(k) + Rat(1) / 2 + gh);
            d0[im(k)] = CycNum(-(Rat(k) + Rat(1) / 2 + gh));
        }
        const CycNum lam = CycNum(Rat(delta) * (n + 1 + gh + rs.kappa0())) * i_;
        report.scalar = mat.matrix("O123").at(0, 0);
        report.eigenvalues_ok = true;
        if (mat.matrix("O0") != CMatrix::diagonal(d0)) {
            report.eigenvalues_ok = false;
            report.failures.push_back("O0 is not the predicted diagonal");
        }
        if (mat.matrix("O123") != lam * CMatrix::identity(dim)) {
            report.eigenvalues_ok = false;
            report.failures.push_back("central element is not the predicted scalar");
        }
        mat.Lambda = lam;
    }

    // Spin reflection and rotation tables, with ell = k mod m:
    //   s0^ psi_k^+- = +-delta (-1)^{n-k} psi_k^+-
    //   sm^ psi_k^+- = +-i (-1)^{n-k} psi_k^-+
    //   s1^ psi_k^+- = -+i (-1)^{n-k} zeta^{+-(2 ell + 1)} psi_k^-+
    //   tau^ psi_k^+- = -zeta^{-+(2 ell + 1)} psi_k^+-
    {
        CMatrix Es0(dim, dim), Esm(dim, dim), Es1(dim, dim), Etau(dim, dim);
        for (long k = 0; k <= n; ++k) {
            const Rat par((n - k) % 2 == 0 ? 1 : -1);
            const long ell = k % m;
            Es0.at(ip(k), ip(k)) = CycNum(Rat(delta) * par);
            Es0.at(im(k), im(k)) = CycNum(-Rat(delta) * par);
            Esm.at(im(k), ip(k)) = CycNum(par) * i_;
            Esm.at(ip(k), im(k)) = CycNum(-par) * i_;
            Es1.at(im(k), ip(k)) = CycNum(-par) * i_ * zeta(2 * ell + 1);
            Es1.at(ip(k), im(k)) = CycNum(par) * i_ * zeta(-(2 * ell + 1));
            Etau.at(ip(k), ip(k)) = -zeta(-(2 * ell + 1));
            Etau.at(im(k), im(k)) = -zeta(2 * ell + 1);
        }
        report.phases_ok = true;
        const std::pair<const char*, const CMatrix*> expected[] = {
            {"s0^", &Es0}, {"sm^", &Esm}, {"s1^", &Es1}, {"tau^", &Etau}};
        for (const auto& [name, M] : expected)
            if (mat.matrix(name) != *M) {
                report.phases_ok = false;
                report.failures.push_back(std::string(name) + " deviates from the phase table");
            }
    }

    const std::vector<RelationCheck> rel = defining_relations(mat);
    report.relations_ok = true;
    for (const RelationCheck& r : rel)
        if (!r.pass) {
            report.relations_ok = false;
            report.failures.push_back("relation failed: " + r.name);
        }

    report.commutant_dim = commutant_dimension(mat);
    report.irreducible = !has_proper_invariant_subspace(mat);
    if (report.irreducible && report.commutant_dim != 1) {
        report.irreducible = false;
        report.failures.push_back("connectivity and commutant verdicts disagree");
    }

    // Intrinsic data against the classified cell: joint diagonal spectra of
    // (O0, s0^, tau^), the central scalar, and the diagonals of the ladder
    // products (basis-scale invariant).
    {
        const RepMatrices cell = build_rep(report.cell);
        auto joint = [](const RepMatrices& r) {
            const CMatrix &O0 = r.matrix("O0"), &s0 = r.matrix("s0^"), &tau = r.matrix("tau^"),
                          &LpLm = O0, &unused = s0;
            (void)LpLm;
            (void)unused;
            const CMatrix prod_pm = r.matrix("L+") * r.matrix("L-");
            const CMatrix prod_mp = r.matrix("L-") * r.matrix("L+");
            std::vector<std::string> rows;
            for (long i = 0; i < r.dim; ++i) {
                const std::size_t u = static_cast<std::size_t>(i);
                rows.push_back(O0.at(u, u).to_string() + "|" + s0.at(u, u).to_string() + "|" +
                               tau.at(u, u).to_string() + "|" + prod_pm.at(u, u).to_string() +
                               "|" + prod_mp.at(u, u).to_string());
            }
            std::sort(rows.begin(), rows.end());
            return rows;
        };
        report.matches_cell = true;
        if (joint(mat) != joint(cell)) {
            report.matches_cell = false;
            report.failures.push_back("joint spectrum differs from the classified cell");
        }
        if (cell.matrix("O123").at(0, 0) != report.scalar) {
            report.matches_cell = false;
            report.failures.push_back("central scalar differs from the classified cell");
        }
    }
    return report;
}

} // namespace dunklsym
