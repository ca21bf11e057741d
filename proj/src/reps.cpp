#include "dunklsym/reps.hpp"

#include <sstream>
#include <tuple>
#include <utility>

#include "dunklsym/errors.hpp"
#include "dunklsym/rootsystem.hpp"

namespace dunklsym {

namespace {

long mod(long x, long n) { return ((x % n) + n) % n; }

int par(long k) { return k % 2 == 0 ? 1 : -1; }

Rat sq(const Rat& r) { return r * r; }

// Both members of a Lambda-branch/delta pair share their ladder data; the
// tables split along this sign.
bool pair_a(const RepSpec& s) { return (s.Lambda_branch == 1) == (s.delta == 1); }

struct Resolved {
    Rat lambda;
    Rat t; // Lambda = i t
    long ell; // reduced mod m
};

void validate(const RepSpec& s) {
    if (s.m < 2) throw usage_error("m must be at least 2");
    if (s.N < 0) throw usage_error("N must be nonnegative");
    if (s.delta != 1 && s.delta != -1) throw usage_error("delta must be +1 or -1");
    if (s.Lambda_branch != 1 && s.Lambda_branch != 2)
        throw usage_error("Lambda branch must be 1 or 2");
    if (!(s.kappa0 > 0 && s.kappa1 > 0 && s.kappam > 0))
        throw usage_error("all kappa parameters must be positive");
    const bool even = s.m % 2 == 0;
    if (!even && s.kappa1 != s.kappam)
        throw usage_error("odd m has a single dihedral orbit: kappa1 must equal kappam");

    auto subscript_ok = [&]() -> bool {
        switch (s.rep_case) {
        case RepCase::I: return !even && (s.lambda_branch == 1 || s.lambda_branch == 2);
        case RepCase::Ii: return even && (s.lambda_branch == 1 || s.lambda_branch == 2);
        case RepCase::Iii: return even && (s.lambda_branch == 3 || s.lambda_branch == 4);
        case RepCase::II: return s.lambda_branch == (even ? 5 : 3);
        case RepCase::III: return s.lambda_branch == (even ? 6 : 4) || s.lambda_branch == 7;
        }
        return false;
    };
    if (!subscript_ok())
        throw usage_error("lambda branch " + std::to_string(s.lambda_branch) +
                          " does not label a row of case " + to_string(s.rep_case) +
                          " for m = " + std::to_string(s.m));
}

Resolved resolve_internal(const RepSpec& s) {
    validate(s);
    const long m = s.m, N = s.N, ell = mod(s.ell, m);
    const long p = m / 2;
    const bool even = m % 2 == 0;
    const Rat half = Rat(1) / 2;

    Resolved r;
    r.ell = ell;
    switch (s.rep_case) {
    case RepCase::I: {
        if (mod(2 * (N + ell) + 1, m) != 0)
            throw incompatible_case("case I needs 2(N+ell)+1 = 0 mod m; got " +
                                    std::to_string(mod(2 * (N + ell) + 1, m)));
        const int sign = s.lambda_branch == 1 ? 1 : -1;
        r.lambda = Rat(N) + half + Rat(sign * m) * s.kappa1;
        break;
    }
    case RepCase::Ii: {
        if (mod(N + ell + 1 - p, m) != 0)
            throw incompatible_case("case I.i needs N+ell+1 = p mod m; got " +
                                    std::to_string(mod(N + ell + 1, m)));
        const int sign = s.lambda_branch == 1 ? 1 : -1;
        r.lambda = Rat(N) + half + Rat(sign * p) * (s.kappa1 + s.kappam);
        break;
    }
    case RepCase::Iii: {
        if (mod(N + ell + 1, m) != 0)
            throw incompatible_case("case I.ii needs N+ell+1 = 0 mod m; got " +
                                    std::to_string(mod(N + ell + 1, m)));
        const int sign = s.lambda_branch == 3 ? 1 : -1;
        r.lambda = Rat(N) + half + Rat(sign * p) * (s.kappa1 - s.kappam);
        break;
    }
    case RepCase::II: {
        const bool resonant = even ? (mod(N + ell + 1 - p, m) == 0 || mod(N + ell + 1, m) == 0)
                                   : mod(2 * (N + ell) + 1, m) == 0;
        if (resonant)
            throw incompatible_case(
                "case II needs the edge reflection sum to vanish, but these sizes are resonant");
        r.lambda = Rat(N) + half;
        break;
    }
    case RepCase::III: {
        if (s.lambda_branch == 7)
            throw no_representation("the odd-length branch of case III is empty");
        if (N % 2 != 0)
            throw no_representation(
                "case III needs an even ladder length N: the two half-ladders cannot close");
        const Rat kd = Rat(s.delta) * s.kappa0;
        r.lambda = s.Lambda_branch == 1 ? Rat(Rat(N) / 2 - kd) : Rat(Rat(N) / 2 + kd);
        break;
    }
    }

    r.t = s.Lambda_branch == 1 ? Rat(r.lambda + half + Rat(s.delta) * s.kappa0)
                               : Rat(-(r.lambda + half - Rat(s.delta) * s.kappa0));
    return r;
}

} // namespace

RepCase rep_case_from_string(const std::string& s) {
    if (s == "I") return RepCase::I;
    if (s == "I.i") return RepCase::Ii;
    if (s == "I.ii") return RepCase::Iii;
    if (s == "II") return RepCase::II;
    if (s == "III") return RepCase::III;
    throw usage_error("unknown case '" + s + "' (expected I, I.i, I.ii, II or III)");
}

std::string to_string(RepCase c) {
    switch (c) {
    case RepCase::I: return "I";
    case RepCase::Ii: return "I.i";
    case RepCase::Iii: return "I.ii";
    case RepCase::II: return "II";
    case RepCase::III: return "III";
    }
    return "?";
}

std::string to_string(const RepSpec& s) {
    std::ostringstream os;
    os << "m=" << s.m << " N=" << s.N << " ell=" << s.ell << " delta=" << (s.delta > 0 ? "+1" : "-1")
       << " case=" << to_string(s.rep_case) << " lambda_branch=" << s.lambda_branch
       << " Lambda_branch=" << s.Lambda_branch << " kappa=(" << s.kappa0.get_str() << ","
       << s.kappa1.get_str() << "," << s.kappam.get_str() << ")";
    return os.str();
}

const CMatrix& RepMatrices::matrix(const std::string& name) const {
    for (const auto& [nm, M] : generators)
        if (nm == name) return M;
    throw internal_error("no generator named '" + name + "'");
}

std::pair<CycNum, CycNum> resolve_lambda_Lambda(const RepSpec& spec) {
    Resolved r = resolve_internal(spec);
    const long n0 = session_order(spec.m);
    return {CycNum(r.lambda), imaginary_unit(n0) * CycNum(r.t)};
}

CoverAction build_cover_action(long m, long N, long ell, int delta, const Rat& kappa0,
                               const Rat& kappa1, const Rat& kappam) {
    if (m < 2) throw usage_error("m must be at least 2");
    if (N < 0) throw usage_error("N must be nonnegative");
    if (delta != 1 && delta != -1) throw usage_error("delta must be +1 or -1");
    if (m % 2 != 0 && kappa1 != kappam)
        throw usage_error("odd m has a single dihedral orbit: kappa1 must equal kappam");
    ell = mod(ell, m);

    const long dim = 2 * (N + 1);
    const bool even = m % 2 == 0;
    const CycNum i_ = imaginary_unit(session_order(m));
    auto ip = [&](long k) { return static_cast<std::size_t>(k); };
    auto im = [&](long k) { return static_cast<std::size_t>(N + 1 + k); };

    CoverAction W;
    W.dim = dim;
    for (long k = 0; k <= N; ++k) W.basis.push_back("v" + std::to_string(k) + "+");
    for (long k = 0; k <= N; ++k) W.basis.push_back("v" + std::to_string(k) + "-");

    CVec ds0(dim), dtau(dim);
    for (long k = 0; k <= N; ++k) {
        ds0[ip(k)] = CycNum(Rat(par(k) * delta));
        ds0[im(k)] = CycNum(Rat(-par(k) * delta));
        const long e = even ? 2 * (k + ell) + 1 : 2 * (k + ell);
        dtau[ip(k)] = root_of_unity(m, e);
        dtau[im(k)] = root_of_unity(m, -e);
    }
    W.s0 = CMatrix::diagonal(ds0);
    W.tau = CMatrix::diagonal(dtau);

    W.sm = CMatrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (long k = 0; k <= N; ++k) {
        W.sm.at(im(k), ip(k)) = CycNum(Rat(1));
        W.sm.at(ip(k), im(k)) = CycNum(Rat(1));
    }
    W.s1 = W.tau * W.sm;
    W.T0 = (i_ * CycNum(kappa0)) * W.s0;

    // Reflection sums assembled from the m dihedral reflections
    // s_j = (-1)^{j+1} tau^j sm; this is the ground truth the closed forms
    // are checked against.
    const RootSystem rs(m, kappa0, kappa1, kappam);
    CMatrix Tp(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    CMatrix Tm = Tp;
    {
        CMatrix tau_pow = CMatrix::identity(static_cast<std::size_t>(dim));
        for (long j = 1; j <= m; ++j) {
            tau_pow = W.tau * tau_pow;
            CMatrix Mj = tau_pow * W.sm;
            if (j % 2 == 0) Mj = -Mj;
            const CycNum kj{rs.kappa_dihedral(j)};
            Tp = Tp + (kj * root_of_unity(m, j)) * Mj;
            Tm = Tm + (kj * root_of_unity(m, -j)) * Mj;
        }
        Tp = -(i_ * Tp);
        Tm = i_ * Tm;
    }
    // The reflection sums must swap the two half-ladders rung by rung.
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c) {
            const bool swap_pos = (r < N + 1) != (c < N + 1) && mod(r, N + 1) == mod(c, N + 1);
            if (swap_pos) continue;
            if (!Tp.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).is_zero() ||
                !Tm.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).is_zero())
                throw internal_error("reflection sum has support off the rung-swap positions");
        }
    W.Tp = Tp;
    W.Tm = Tm;
    return W;
}

RepMatrices build_rep(const RepSpec& spec) {
    const Resolved R = resolve_internal(spec);
    const long m = spec.m, N = spec.N, n0 = session_order(m);
    const long dim = 2 * (N + 1);
    const bool even = m % 2 == 0;
    const Rat half = Rat(1) / 2;
    const CycNum i_ = imaginary_unit(n0);
    const CycNum Lambda = i_ * CycNum(R.t);

    auto ip = [&](long k) { return static_cast<std::size_t>(k); };
    auto im = [&](long k) { return static_cast<std::size_t>(N + 1 + k); };

    RepMatrices rep;
    rep.spec = spec;
    rep.spec.ell = R.ell;
    rep.dim = dim;
    rep.lambda = R.lambda;
    rep.Lambda = Lambda;
    const CoverAction W =
        build_cover_action(m, N, R.ell, spec.delta, spec.kappa0, spec.kappa1, spec.kappam);
    rep.basis = W.basis;
    const CMatrix &s0 = W.s0, &s1 = W.s1, &sm = W.sm, &tau = W.tau;
    const CMatrix &T0 = W.T0, &Tp = W.Tp, &Tm = W.Tm;

    // Diagonal ladder generators.
    CVec d0(dim);
    for (long k = 0; k <= N; ++k) {
        d0[ip(k)] = CycNum(R.lambda - k);
        d0[im(k)] = CycNum(Rat(k) - R.lambda);
    }
    const CMatrix O0 = CMatrix::diagonal(d0);
    const CMatrix O123 = Lambda * CMatrix::identity(static_cast<std::size_t>(dim));

    const CMatrix TpTm = Tp * Tm, TmTp = Tm * Tp;
    auto rat_entry = [&](const CMatrix& M, std::size_t i, const char* what) -> Rat {
        try {
            return M.at(i, i).to_rat();
        } catch (const not_rational&) {
            throw internal_error(std::string("diagonal of ") + what + " is not rational");
        }
    };

    // Ladder products A(k) = -A1(k) A2(k).
    std::vector<Rat> hplus(static_cast<std::size_t>(N + 1));
    for (long k = 0; k <= N; ++k) hplus[ip(k)] = rat_entry(TpTm, ip(k), "T+T-");
    for (long k = 1; k <= N; ++k) {
        const Rat base = R.lambda - k + half;
        const Rat a1 = sq(base) - sq(R.t - Rat(par(k) * spec.delta) * spec.kappa0);
        const Rat a2 = sq(base) - hplus[ip(k - 1)];
        rep.A.push_back(-a1 * a2);
    }

    // Ladder maps.
    CMatrix Lp(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    CMatrix Lm = Lp;
    for (long k = 0; k < N; ++k) Lm.at(ip(k + 1), ip(k)) = CycNum(Rat(1));
    for (long k = 1; k <= N; ++k) Lm.at(im(k - 1), im(k)) = CycNum(-rep.A[ip(k - 1)]);
    for (long k = 1; k <= N; ++k) Lp.at(ip(k - 1), ip(k)) = CycNum(rep.A[ip(k - 1)]);
    for (long k = 0; k < N; ++k) Lp.at(im(k + 1), im(k)) = CycNum(Rat(-1));

    // Both edge products must vanish: the bottom one by the Lambda branch,
    // the top one by the case's lambda row (or the Lambda branch for III).
    {
        const Rat e0 = sq(R.lambda + half);
        const Rat f1 = e0 - sq(R.t - Rat(spec.delta) * spec.kappa0);
        const Rat f2 = e0 - rat_entry(TpTm, im(0), "T+T-");
        if (f1 * f2 != 0) throw internal_error("bottom edge condition failed");
        const Rat eN = sq(R.lambda - N - half);
        const Rat g1 = eN - sq(R.t + Rat(par(N) * spec.delta) * spec.kappa0);
        const Rat g2 = eN - rat_entry(TmTp, im(N), "T-T+");
        if (g1 * g2 != 0) throw internal_error("top edge condition failed");
    }

    // O+ and O- are recovered row by row from (O0 -+ 1/2) O+- = L+- +
    // Lambda T+- +- (1/2)[T0, T+-]. A vanishing row denominator is
    // tolerated only against a vanishing numerator.
    //
    // At lambda = N + 1/2 (resp. lambda = -1/2) the top (bottom) cross
    // entries coupling vN+ <-> vN- (v0+ <-> v0-) are 0/0 in this inversion.
    // They are pinned instead by the quadratic relation O+O- = T+T- -
    // (O0-1/2)^2 - (O123+T0)^2 together with the sm^/s1^ intertwiners: the
    // coupling squares to a + t-hat^2 (a = matching cross entry of T+T-,
    // t-hat the Lambda edge factor), it must vanish unless the tau^
    // eigenvalue phases cancel, and the surviving sign follows the branch
    // whose lambda degenerates to the edge.
    struct Pin { std::size_t r, c; CycNum v; };
    std::vector<Pin> pin_p, pin_m;
    const bool edge_congruence =
        even ? (mod(N + R.ell + 1, m) == 0 || mod(N + R.ell + 1 - m / 2, m) == 0)
             : mod(2 * (N + R.ell) + 1, m) == 0;
    const CycNum branch_sign{Rat(spec.Lambda_branch == 1 ? -1 : 1)};
    if (R.lambda == Rat(N) + half) {
        const CycNum a = Tp.at(ip(N), im(N));
        const Rat that = R.t + Rat(par(N) * spec.delta) * spec.kappa0;
        CycNum x;
        if (!a.is_zero()) {
            if (that != 0) throw internal_error("resonant top rung with a nonzero edge factor");
            x = branch_sign * (i_ * a);
        } else if (that == 0) {
            x = CycNum();
        } else if (!edge_congruence) {
            throw no_representation(
                "lambda = N + 1/2 couples the top rung with squared strength " +
                sq(that).get_str() + ", but the reflection intertwiners force that coupling "
                "to vanish for these sizes");
        } else if (spec.lambda_branch == 3 || spec.lambda_branch == 4) {
            x = CycNum(spec.lambda_branch == 3 ? that : -that);
        } else {
            throw internal_error("resonant top rung on an unexpected lambda branch");
        }
        pin_p.push_back({ip(N), im(N), x});
        pin_m.push_back({im(N), ip(N), x});
    }
    if (R.lambda == -half) {
        if (R.t - Rat(spec.delta) * spec.kappa0 != 0)
            throw internal_error("resonant bottom rung with a nonzero edge factor");
        const CycNum x = branch_sign * (i_ * Tp.at(im(0), ip(0)));
        pin_p.push_back({im(0), ip(0), x});
        pin_m.push_back({ip(0), im(0), x});
    }
    const CMatrix Rp = Lp + Lambda * Tp + CycNum(half) * (T0 * Tp - Tp * T0);
    const CMatrix Rm = Lm + Lambda * Tm - CycNum(half) * (T0 * Tm - Tm * T0);
    std::vector<Rat> mu(static_cast<std::size_t>(dim));
    for (long k = 0; k <= N; ++k) {
        mu[ip(k)] = R.lambda - k;
        mu[im(k)] = Rat(k) - R.lambda;
    }
    auto invert_rows = [&](const CMatrix& src, const Rat& shift, const std::vector<Pin>& pins,
                           const char* name) {
        CMatrix out(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (long r = 0; r < dim; ++r) {
            const Rat den = mu[static_cast<std::size_t>(r)] + shift;
            for (long c = 0; c < dim; ++c) {
                const CycNum& num = src.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
                if (den == 0) {
                    if (!num.is_zero())
                        throw division_by_zero(std::string("ladder denominator for ") + name +
                                               " vanishes on " + rep.basis[static_cast<std::size_t>(r)] +
                                               " against a nonzero numerator (lambda = " +
                                               rep.lambda.get_str() + ")");
                    continue;
                }
                if (!num.is_zero())
                    out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        num / CycNum(den);
            }
        }
        for (const Pin& pin : pins) out.at(pin.r, pin.c) = pin.v;
        return out;
    };
    const CMatrix Op = invert_rows(Rp, -half, pin_p, "O+");
    const CMatrix Om = invert_rows(Rm, half, pin_m, "O-");

    rep.gram.assign(1, Rat(1));
    for (long k = 1; k <= N; ++k) rep.gram.push_back(rep.A[ip(k - 1)] * rep.gram[ip(k - 1)]);

    rep.generators = {{"O0", O0},   {"O123", O123}, {"T0", T0}, {"T+", Tp}, {"T-", Tm},
                      {"s0^", s0},  {"s1^", s1},    {"sm^", sm}, {"tau^", tau},
                      {"L+", Lp},   {"L-", Lm},     {"O+", Op}, {"O-", Om}};
    return rep;
}

namespace {

std::vector<Constraint> table_constraints(const RepSpec& spec, const Resolved& R) {
    const long m = spec.m, N = spec.N, p = m / 2, ell = R.ell;
    const bool even = m % 2 == 0;
    const bool pa = pair_a(spec);
    const Rat half = Rat(1) / 2;
    std::vector<Constraint> cons;
    auto add = [&](std::string name, bool holds) { cons.push_back({std::move(name), holds}); };

    // Interior rungs where the ladder denominators vanish identically.
    for (long j = 0; j + 1 <= N; ++j)
        add("lambda = " + std::to_string(j) + " + 1/2 on an interior rung",
            R.lambda == Rat(j) + half);

    // Case II pins lambda at the top edge while the reflection sums vanish
    // there, so the cross coupling must vanish too; that in turn forces the
    // Lambda edge factor to zero (even N, delta opposing the Lambda branch
    // sign, kappa0 = (N+1)/2).
    if (spec.rep_case == RepCase::II)
        add("case II edge factor t + (-1)^N delta kappa0 is nonzero",
            R.t + Rat(par(N) * spec.delta) * spec.kappa0 != 0);

    // Zeros of the kappa0 edge factor at odd rungs (even rungs reduce to
    // the interior half-integer family above).
    for (long k = 1; k <= N; k += 2) {
        if (pa) {
            add("kappa0 = (k-1)/2 - lambda (k=" + std::to_string(k) + ")",
                spec.kappa0 == Rat(k - 1) / 2 - R.lambda);
        } else {
            add("kappa0 = k/2 (k=" + std::to_string(k) + ")", spec.kappa0 == Rat(k) / 2);
            add("kappa0 = lambda + (1-k)/2 (k=" + std::to_string(k) + ")",
                spec.kappa0 == R.lambda + Rat(1 - k) / 2);
        }
    }

    // Zeros of the reflection-sum factor at congruence-supported rungs
    // (unsupported rungs again reduce to the half-integer family).
    for (long k = 1; k <= N; ++k) {
        const Rat base = R.lambda - k + half;
        if (even) {
            if (mod(k + ell - p, m) == 0)
                add("kappa1 + kappam = |lambda - k + 1/2|/p (k=" + std::to_string(k) + ")",
                    sq(base) == sq(Rat(p) * (spec.kappa1 + spec.kappam)));
            else if (mod(k + ell, m) == 0)
                add("|kappa1 - kappam| = |lambda - k + 1/2|/p (k=" + std::to_string(k) + ")",
                    sq(base) == sq(Rat(p) * (spec.kappa1 - spec.kappam)));
        } else if (mod(2 * (k + ell) - 1, m) == 0) {
            add("kappa1 = |lambda - k + 1/2|/m (k=" + std::to_string(k) + ")",
                sq(base) == sq(Rat(m) * spec.kappa1));
        }
    }
    return cons;
}

} // namespace

AdmissibilityVerdict check_admissibility(const RepSpec& spec) {
    const Resolved R = resolve_internal(spec);
    AdmissibilityVerdict v;

    bool any = false;
    for (auto& c : table_constraints(spec, R))
        if (c.holds) {
            any = true;
            v.violated_constraints.push_back(c.name);
        }
    v.irreducible = !any;

    try {
        const RepMatrices rep = build_rep(spec);
        v.representable = true;
        bool pos = true;
        for (std::size_t k = 0; k < rep.A.size(); ++k) {
            v.A_values.push_back(CycNum(rep.A[k]));
            if (!(rep.A[k] > 0)) {
                pos = false;
                v.violated_constraints.push_back("unitarity: A(" + std::to_string(k + 1) +
                                                 ") <= 0");
            }
        }
        v.unitary_sufficient = pos;
        // The named table rows and the assembled ladder must agree.
        bool direct = true;
        for (const Rat& a : rep.A)
            if (a == 0) direct = false;
        if (direct != v.irreducible)
            throw internal_error("table verdict disagrees with the assembled ladder for " +
                                 to_string(spec));
    } catch (const division_by_zero& e) {
        v.representable = false;
        v.obstruction = e.what();
        if (v.irreducible)
            throw internal_error("table verdict claims an irreducible module that fails to build: " +
                                 to_string(spec));
    } catch (const no_representation& e) {
        v.representable = false;
        v.obstruction = e.what();
        if (v.irreducible)
            throw internal_error("table verdict claims an irreducible module that fails to build: " +
                                 to_string(spec));
    }
    return v;
}

long commutant_dimension(const RepMatrices& rep) {
    const std::size_t n = static_cast<std::size_t>(rep.dim);
    const CMatrix &O0 = rep.matrix("O0"), &s0 = rep.matrix("s0^"), &tau = rep.matrix("tau^");

    // The three diagonal generators confine the commutant to positions with
    // matching eigenvalue triples; the rest impose linear conditions there.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (O0.at(i, i) == O0.at(j, j) && s0.at(i, i) == s0.at(j, j) &&
                tau.at(i, i) == tau.at(j, j))
                vars.emplace_back(i, j);

    const char* names[] = {"sm^", "T+", "T-", "L+", "L-", "O+", "O-"};
    std::vector<CVec> rows;
    for (const char* nm : names) {
        const CMatrix& M = rep.matrix(nm);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                CVec row(vars.size());
                bool nonzero = false;
                for (std::size_t v = 0; v < vars.size(); ++v) {
                    const auto [a, b] = vars[v];
                    CycNum coeff;
                    if (b == c) coeff += M.at(r, a);
                    if (a == r) coeff -= M.at(b, c);
                    if (!coeff.is_zero()) {
                        row[v] = coeff;
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return static_cast<long>(vars.size());
    CMatrix E(rows.size(), vars.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < vars.size(); ++c) E.at(r, c) = rows[r][c];
    return static_cast<long>(vars.size()) - rank_of(E);
}

bool has_proper_invariant_subspace(const RepMatrices& rep) {
    const std::size_t n = static_cast<std::size_t>(rep.dim);
    const CMatrix &O0 = rep.matrix("O0"), &s0 = rep.matrix("s0^");
    // Multiplicity-one joint spectrum makes every invariant subspace a
    // coordinate subspace, reducing the question to graph reachability.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (O0.at(i, i) == O0.at(j, j) && s0.at(i, i) == s0.at(j, j))
                throw internal_error("degenerate joint diagonal spectrum in " + to_string(rep.spec));

    std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
    for (const auto& [name, M] : rep.generators)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r)
                if (r != c && !M.at(r, c).is_zero()) {
                    fwd[c].push_back(r);
                    bwd[r].push_back(c);
                }
    auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> work{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!work.empty()) {
            const std::size_t v = work.back();
            work.pop_back();
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    work.push_back(w);
                }
        }
        return count == n;
    };
    return !(reaches_all(fwd) && reaches_all(bwd));
}

std::vector<RelationCheck> defining_relations(const RepMatrices& rep) {
    std::vector<RelationCheck> checks;
    const long m = rep.spec.m;
    const std::size_t n = static_cast<std::size_t>(rep.dim);
    const long n0 = session_order(m);
    const CycNum i_ = imaginary_unit(n0);
    const CycNum half{Rat(1) / 2};
    const CMatrix Id = CMatrix::identity(n);

    const CMatrix &O0 = rep.matrix("O0"), &O123 = rep.matrix("O123"), &T0 = rep.matrix("T0"),
                  &Tp = rep.matrix("T+"), &Tm = rep.matrix("T-"), &s0 = rep.matrix("s0^"),
                  &s1 = rep.matrix("s1^"), &sm = rep.matrix("sm^"), &tau = rep.matrix("tau^"),
                  &Lp = rep.matrix("L+"), &Lm = rep.matrix("L-"), &Op = rep.matrix("O+"),
                  &Om = rep.matrix("O-");

    CMatrix tau_inv(n, n);
    for (std::size_t i = 0; i < n; ++i) tau_inv.at(i, i) = tau.at(i, i).conj();

    auto zeta = [&](long k) { return root_of_unity(m, k); };
    auto comm = [](const CMatrix& a, const CMatrix& b) { return a * b - b * a; };
    auto anti = [](const CMatrix& a, const CMatrix& b) { return a * b + b * a; };
    auto add = [&](std::string name, const CMatrix& lhs, const CMatrix& rhs) {
        checks.push_back({std::move(name), lhs == rhs});
    };

    // Presentation of the spin double cover with the central element at -1.
    add("s0^2 = 1", s0 * s0, Id);
    add("s1^2 = 1", s1 * s1, Id);
    add("sm^2 = 1", sm * sm, Id);
    add("(s0^ s1^)^2 = -1", (s0 * s1).pow(2), -Id);
    add("(s0^ sm^)^2 = -1", (s0 * sm).pow(2), -Id);
    add("(s1^ sm^)^m = (-1)^{m+1}", (s1 * sm).pow(m), m % 2 == 0 ? -Id : Id);
    add("tau^ = s1^ sm^", tau, s1 * sm);
    {
        CMatrix tau_pow = Id;
        for (long j = 1; j <= m; ++j) {
            tau_pow = tau * tau_pow;
            CMatrix sj = tau_pow * sm;
            if (j % 2 == 0) sj = -sj;
            add("s" + std::to_string(j) + "^2 = 1", sj * sj, Id);
        }
    }

    // Conjugation table.
    add("[O0,T0] = 0", comm(O0, T0), CMatrix(n, n));
    add("{O0,T+} = 0", anti(O0, Tp), CMatrix(n, n));
    add("{O0,T-} = 0", anti(O0, Tm), CMatrix(n, n));
    add("T0 O+ = -O+ T0", T0 * Op, -(Op * T0));
    add("T0 O- = -O- T0", T0 * Om, -(Om * T0));
    add("T0 T+ = -T+ T0", T0 * Tp, -(Tp * T0));
    add("T0 T- = -T- T0", T0 * Tm, -(Tm * T0));
    add("T+ O- = -O+ T-", Tp * Om, -(Op * Tm));
    add("T- O+ = -O- T+", Tm * Op, -(Om * Tp));
    add("s0^ O0 = O0 s0^", s0 * O0, O0 * s0);
    add("s1^ O0 = -O0 s1^", s1 * O0, -(O0 * s1));
    add("sm^ O0 = -O0 sm^", sm * O0, -(O0 * sm));
    add("s0^ O+ = -O+ s0^", s0 * Op, -(Op * s0));
    add("s1^ O+ = zeta^2 O- s1^", s1 * Op, zeta(2) * (Om * s1));
    add("sm^ O+ = O- sm^", sm * Op, Om * sm);
    add("s0^ O- = -O- s0^", s0 * Om, -(Om * s0));
    add("s1^ O- = zeta^-2 O+ s1^", s1 * Om, zeta(-2) * (Op * s1));
    add("sm^ O- = O+ sm^", sm * Om, Op * sm);
    add("s0^ L+ = -L+ s0^", s0 * Lp, -(Lp * s0));
    add("s1^ L+ = -zeta^2 L- s1^", s1 * Lp, -(zeta(2) * (Lm * s1)));
    add("sm^ L+ = -L- sm^", sm * Lp, -(Lm * sm));
    add("s0^ L- = -L- s0^", s0 * Lm, -(Lm * s0));
    add("s1^ L- = -zeta^-2 L+ s1^", s1 * Lm, -(zeta(-2) * (Lp * s1)));
    add("sm^ L- = -L+ sm^", sm * Lm, -(Lp * sm));
    add("tau^ L+ = zeta^-2 L+ tau^", tau * Lp, zeta(-2) * (Lp * tau));
    add("tau^ L- = zeta^2 L- tau^", tau * Lm, zeta(2) * (Lm * tau));
    add("tau^-1 L+ = zeta^2 L+ tau^-1", tau_inv * Lp, zeta(2) * (Lp * tau_inv));
    add("tau^-1 L- = zeta^-2 L- tau^-1", tau_inv * Lm, zeta(-2) * (Lm * tau_inv));
    add("T+ L- = L+ T-", Tp * Lm, Lp * Tm);
    add("T- L+ = L- T+", Tm * Lp, Lm * Tp);

    // Brackets and products that close the algebra.
    add("[O0,O+] = O+ + {O123,T+} + [T0,T+]", comm(O0, Op), Op + anti(O123, Tp) + comm(T0, Tp));
    add("[O0,O-] = -O- + {O123,T-} - [T0,T-]", comm(O0, Om),
        -Om + anti(O123, Tm) - comm(T0, Tm));
    add("[O+,O-] = 2O0 - 2{O123,T0} + [T+,T-]", comm(Op, Om),
        CycNum(Rat(2)) * (O0 - anti(O123, T0)) + comm(Tp, Tm));
    const CMatrix lo = O0 - half * Id, hi = O0 + half * Id;
    const CMatrix lo2 = lo * lo, hi2 = hi * hi;
    const CMatrix cp = O123 + T0, cm = O123 - T0;
    const CMatrix cp2 = cp * cp, cm2 = cm * cm;
    const CMatrix TpTm = Tp * Tm, TmTp = Tm * Tp;
    add("O+O- = T+T- - (O0-1/2)^2 - (O123+T0)^2", Op * Om, TpTm - lo2 - cp2);
    add("O-O+ = T-T+ - (O0+1/2)^2 - (O123-T0)^2", Om * Op, TmTp - hi2 - cm2);
    add("[O0,L+] = L+", comm(O0, Lp), Lp);
    add("[O0,L-] = -L-", comm(O0, Lm), -Lm);
    add("L+ = (1/2){O0,O+}", Lp, half * anti(O0, Op));
    add("L- = (1/2){O0,O-}", Lm, half * anti(O0, Om));
    add("L+L- intermediate form", Lp * Lm, cp2 * TpTm + lo2 * (Op * Om));
    add("L-L+ intermediate form", Lm * Lp, cm2 * TmTp + hi2 * (Om * Op));
    add("L+L- factorization", Lp * Lm, -((lo2 + cp2) * (lo2 - TpTm)));
    add("L-L+ factorization", Lm * Lp, -((hi2 + cm2) * (hi2 - TmTp)));
    add("T0 = i kappa0 s0^", T0, (i_ * CycNum(rep.spec.kappa0)) * s0);

    // Centrality of the scalar element.
    {
        const std::pair<const char*, const CMatrix*> gens[] = {
            {"O0", &O0}, {"O+", &Op}, {"O-", &Om}, {"L+", &Lp}, {"L-", &Lm}, {"T0", &T0},
            {"T+", &Tp}, {"T-", &Tm}, {"s0^", &s0}, {"s1^", &s1}, {"sm^", &sm}};
        for (const auto& [nm, g] : gens)
            add(std::string("[O123, ") + nm + "] = 0", comm(O123, *g), CMatrix(n, n));
    }
    add("O123^2 = -1/4 + (T+T- + T-T+)/2 - T0^2 - O0^2 - (O+O- + O-O+)/2", O123 * O123,
        CycNum(Rat(-1) / 4) * Id + half * (TpTm + TmTp) - T0 * T0 - O0 * O0 -
            half * (Op * Om + Om * Op));

    return checks;
}

Certificate certify(const RepMatrices& rep) {
    Certificate cert;
    cert.relations = defining_relations(rep);
    cert.relations_pass = true;
    for (const auto& r : cert.relations)
        if (!r.pass) {
            cert.relations_pass = false;
            cert.failures.push_back("relation failed: " + r.name);
        }

    cert.commutant_dim = commutant_dimension(rep);
    cert.irreducible = !has_proper_invariant_subspace(rep);
    if (cert.irreducible && cert.commutant_dim != 1)
        cert.failures.push_back("irreducible module with nontrivial commutant");

    // Star compatibility of the diagonal Gram form built from the ladder
    // products: G M(X*) = M(X)^dagger G for every generator.
    {
        const std::size_t n = static_cast<std::size_t>(rep.dim);
        const CMatrix &O0 = rep.matrix("O0"), &O123 = rep.matrix("O123"),
                      &T0 = rep.matrix("T0"), &Tp = rep.matrix("T+"), &Tm = rep.matrix("T-"),
                      &s0 = rep.matrix("s0^"), &s1 = rep.matrix("s1^"), &sm = rep.matrix("sm^"),
                      &tau = rep.matrix("tau^"), &Lp = rep.matrix("L+"), &Lm = rep.matrix("L-"),
                      &Op = rep.matrix("O+"), &Om = rep.matrix("O-");
        CMatrix tau_inv(n, n);
        for (std::size_t i = 0; i < n; ++i) tau_inv.at(i, i) = tau.at(i, i).conj();
        CVec g(n);
        for (long k = 0; k <= static_cast<long>(n) / 2 - 1; ++k) {
            g[static_cast<std::size_t>(k)] = CycNum(rep.gram[static_cast<std::size_t>(k)]);
            g[n / 2 + static_cast<std::size_t>(k)] =
                CycNum(rep.gram[static_cast<std::size_t>(k)]);
        }
        const CMatrix G = CMatrix::diagonal(g);
        const std::tuple<const char*, const CMatrix*, CMatrix> pairs[] = {
            {"O0* = O0", &O0, O0},
            {"O123* = -O123", &O123, -O123},
            {"T0* = -T0", &T0, -T0},
            {"T+* = T-", &Tp, Tm},
            {"T-* = T+", &Tm, Tp},
            {"O+* = O-", &Op, Om},
            {"O-* = O+", &Om, Op},
            {"L+* = L-", &Lp, Lm},
            {"L-* = L+", &Lm, Lp},
            {"s0^* = s0^", &s0, s0},
            {"s1^* = s1^", &s1, s1},
            {"sm^* = sm^", &sm, sm},
            {"tau^* = tau^-1", &tau, tau_inv}};
        cert.gram_compatible = true;
        for (const auto& [nm, X, Xstar] : pairs)
            if (G * Xstar != (*X).conj_transpose() * G) {
                cert.gram_compatible = false;
                cert.failures.push_back(std::string("Gram star compatibility failed: ") + nm);
            }
    }
    bool pos = true;
    for (const Rat& a : rep.A)
        if (!(a > 0)) pos = false;
    cert.unitary = cert.gram_compatible && pos;
    return cert;
}

std::vector<ScanCell> classify_scan(long m, long N_max,
                                    const std::vector<std::array<Rat, 3>>& kappa_grid) {
    if (m < 2) throw usage_error("m must be at least 2");
    const bool even = m % 2 == 0;
    const long p = m / 2;

    std::vector<std::pair<RepCase, std::vector<int>>> cases;
    if (even) {
        cases = {{RepCase::Ii, {1, 2}}, {RepCase::Iii, {3, 4}}, {RepCase::II, {5}},
                 {RepCase::III, {6}}};
    } else {
        cases = {{RepCase::I, {1, 2}}, {RepCase::II, {3}}, {RepCase::III, {4}}};
    }
    const long ell_max = even ? p - 1 : (m - 1) / 2;

    std::vector<ScanCell> cells;
    for (const auto& kappa : kappa_grid)
        for (long N = 0; N <= N_max; ++N)
            for (long ell = 0; ell <= ell_max; ++ell)
                for (int delta : {1, -1})
                    for (const auto& [rc, branches] : cases)
                        for (int lb : branches)
                            for (int Lb : {1, 2}) {
                                ScanCell cell;
                                cell.spec = {m,  N,  ell, delta, rc,
                                             lb, Lb, kappa[0], kappa[1],
                                             even ? kappa[2] : kappa[1]};
                                try {
                                    resolve_internal(cell.spec);
                                    cell.compatible = true;
                                } catch (const incompatible_case&) {
                                } catch (const no_representation&) {
                                }
                                if (!cell.compatible) {
                                    cells.push_back(std::move(cell));
                                    continue;
                                }
                                const AdmissibilityVerdict adm = check_admissibility(cell.spec);
                                cell.representable = adm.representable;
                                cell.table_irreducible = adm.irreducible;
                                cell.unitary_sufficient = adm.unitary_sufficient;
                                if (adm.representable) {
                                    const Certificate cert = certify(build_rep(cell.spec));
                                    cell.oracle_irreducible = cert.irreducible;
                                    cell.unitary_certified = cert.unitary;
                                    cell.agree =
                                        cell.table_irreducible == cell.oracle_irreducible &&
                                        cert.relations_pass;
                                } else {
                                    cell.agree = !cell.table_irreducible;
                                }
                                cells.push_back(std::move(cell));
                            }
    return cells;
}

Rat even_G_closed_form(long m, const Rat& kappa1, const Rat& kappam, long X) {
    if (m % 2 != 0) throw usage_error("closed form only applies to even m");
    const long p = m / 2, r = mod(X, m);
    if (r == 0) return Rat(p) * (kappa1 - kappam);
    if (r == p) return Rat(-p) * (kappa1 + kappam);
    return Rat(0);
}

Rat even_H_closed_form(long m, const Rat& kappa1, const Rat& kappam, long X) {
    return sq(even_G_closed_form(m, kappa1, kappam, X));
}

} // namespace dunklsym
