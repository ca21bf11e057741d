#include "dunklsym/ledger.hpp"

#include "dunklsym/parallel.hpp"

namespace dunklsym {

IdentityResult check_identity(const OperatorIdentity& id) {
    IdentityResult res;
    res.name = id.name;
    res.check_degree = id.check_degree;
    for (int d = 0; d <= id.check_degree; ++d) {
        GradedBasis basis(d);
        for (const SpinorPoly& f : basis.elements()) {
            SpinorPoly l = id.lhs(f);
            SpinorPoly r = id.rhs(f);
            if (l != r) {
                res.pass = false;
                res.fail_degree = d;
                res.counterexample = "on " + f.to_string() + ": lhs = " + l.to_string() +
                                     ", rhs = " + r.to_string();
                return res;
            }
        }
    }
    return res;
}

std::vector<IdentityResult> check_identities(const std::vector<OperatorIdentity>& ids) {
    std::vector<IdentityResult> results(ids.size());
    parallel_for(ids.size(), [&](std::size_t k) { results[k] = check_identity(ids[k]); });
    return results;
}

bool all_pass(const std::vector<IdentityResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace {

std::string idx(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

} // namespace

std::vector<OperatorIdentity> osp12_identities(const Operators& ops, int max_degree) {
    std::vector<OperatorIdentity> ids;
    auto add = [&](std::string name, LinOperator lhs, LinOperator rhs) {
        ids.push_back({std::move(name), std::move(lhs), std::move(rhs), max_degree});
    };

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            add("[T" + std::to_string(i + 1) + ",T" + std::to_string(j + 1) + "] = 0",
                commutator(ops.dunkl(i), ops.dunkl(j)), LinOperator());

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            add("C" + idx(i, j) + " = C" + idx(j, i), ops.C(i, j), ops.C(j, i));

    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            add("C" + idx(i, j) + " reflection expansion", ops.C(i, j),
                ops.C_reflection_form(i, j));

    LinOperator D = ops.dirac(), X = ops.vector_x(), E = ops.euler(), Lap = ops.laplacian();
    LinOperator X2 = ops.x_squared();
    CycNum two(Rat(2));
    LinOperator center = two * (E + LinOperator::scalar(CycNum(Rat(3) / 2 + ops.gamma())));

    add("{D,x} = 2(E + 3/2 + gamma)", anticommutator(D, X), center);
    add("D^2 = Lap", D * D, Lap);
    add("x^2 = |x|^2", X * X, X2);
    add("[E,x^2] = 2x^2", commutator(E, X2), two * X2);
    add("[E,Lap] = -2Lap", commutator(E, Lap), CycNum(Rat(-2)) * Lap);
    add("[x^2,Lap] = -4(E + 3/2 + gamma)", commutator(X2, Lap), CycNum(Rat(-2)) * center);
    add("[{D,x},D] = -2D", commutator(anticommutator(D, X), D), CycNum(Rat(-2)) * D);
    add("[{D,x},x] = 2x", commutator(anticommutator(D, X), X), two * X);

    return ids;
}

std::vector<OperatorIdentity> angular_identities(const Operators& ops, int max_degree) {
    std::vector<OperatorIdentity> ids;
    LinOperator L[3][3], C[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            L[i][j] = ops.angular(i, j);
            C[i][j] = ops.C(i, j);
        }
    auto add = [&](std::string name, LinOperator lhs, LinOperator rhs) {
        ids.push_back({std::move(name), std::move(lhs), std::move(rhs), max_degree});
    };

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    std::string suffix = idx(i, j) + "," + idx(k, l);
                    add("[L,L] vs LC sum " + suffix,
                        commutator(L[i][j], L[k][l]),
                        L[i][l] * C[j][k] + L[j][k] * C[i][l] + L[k][i] * C[l][j] +
                            L[l][j] * C[k][i]);
                    add("[L,L] vs CL sum " + suffix,
                        commutator(L[i][j], L[k][l]),
                        C[j][k] * L[i][l] + C[i][l] * L[j][k] + C[l][j] * L[k][i] +
                            C[k][i] * L[l][j]);
                    add("cyclic {L,L} " + suffix,
                        anticommutator(L[i][j], L[k][l]) + anticommutator(L[k][i], L[j][l]) +
                            anticommutator(L[j][k], L[i][l]),
                        LinOperator());
                    add("cyclic [L,C] " + suffix,
                        commutator(L[i][j], C[k][l]) + commutator(L[k][i], C[j][l]) +
                            commutator(L[j][k], C[i][l]),
                        LinOperator());
                    add("LL sum = LC sum " + suffix,
                        L[i][j] * L[k][l] + L[k][i] * L[j][l] + L[j][k] * L[i][l],
                        L[i][j] * C[k][l] + L[k][i] * C[j][l] + L[j][k] * C[i][l]);
                }
    return ids;
}

std::vector<OperatorIdentity> equivariance_identities(const Operators& ops, int max_degree) {
    std::vector<OperatorIdentity> ids;
    const RootSystem& rs = ops.roots();
    std::vector<std::pair<std::string, CMatrix>> gens = {
        {"s0", rs.sigma0()}, {"s1", rs.sigma(1)}, {"sm", rs.sigma(rs.m())}};
    for (const auto& [wname, w] : gens) {
        LinOperator act = ops.group_action(w);
        for (int v = 0; v < 3; ++v) {
            // T along w(xi_v): coefficients are column v of w
            LinOperator rhs;
            for (int i = 0; i < 3; ++i) {
                const CycNum& wi = w.at(static_cast<std::size_t>(i), static_cast<std::size_t>(v));
                if (!wi.is_zero()) rhs = rhs + wi * ops.dunkl(i);
            }
            ids.push_back({wname + " T" + std::to_string(v + 1) + " " + wname +
                               " = T[" + wname + " xi" + std::to_string(v + 1) + "]",
                           act * ops.dunkl(v) * act, rhs, max_degree});
        }
    }
    return ids;
}

} // namespace dunklsym
