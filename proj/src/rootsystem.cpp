#include "dunklsym/rootsystem.hpp"

namespace dunklsym {

RootSystem::RootSystem(long m, Rat kappa0, Rat kappa1, Rat kappam)
    : m_(m),
      order_(session_order(m)),
      kappa0_(std::move(kappa0)),
      kappa1_(std::move(kappa1)),
      kappam_(std::move(kappam)) {
    if (m_ % 2 == 1 && kappa1_ != kappam_)
        throw usage_error("odd m has a single class of in-plane roots; "
                          "kappa1 and kappam must coincide");

    Root a0;
    a0.v = {CycNum(), CycNum(), CycNum(Rat(1))};
    a0.kappa = kappa0_;
    a0.reflection = CMatrix::identity(3);
    a0.reflection.at(2, 2) = CycNum(Rat(-1));
    roots_.push_back(std::move(a0));

    for (long j = 1; j <= m_; ++j) {
        auto [s, c] = sin_cos(m_, j);
        Root r;
        r.v = {s, -c, CycNum()};
        r.kappa = kappa_dihedral(j);
        r.reflection = sigma(j);
        roots_.push_back(std::move(r));
    }

    for (const Root& r : roots_) {
        if (dot(r.v, r.v) != CycNum(Rat(1)))
            throw construction_mismatch("root is not unit-norm");
        if (r.reflection * r.reflection != CMatrix::identity(3))
            throw construction_mismatch("reflection is not an involution");
        CVec rv = {r.v[0], r.v[1], r.v[2]};
        CVec image = r.reflection.apply(rv);
        for (int i = 0; i < 3; ++i)
            if (image[static_cast<std::size_t>(i)] != -r.v[static_cast<std::size_t>(i)])
                throw construction_mismatch("reflection does not negate its root");
    }
}

Rat RootSystem::kappa_dihedral(long j) const {
    if (j < 1) throw internal_error("in-plane root index must be >= 1");
    if (m_ % 2 == 1) return kappa1_;
    return (j % 2 == 1) ? kappa1_ : kappam_;
}

CMatrix RootSystem::sigma(long j) const {
    auto [s2, c2] = sin_cos(m_, 2 * j);
    CMatrix M(3, 3);
    M.at(0, 0) = c2;
    M.at(0, 1) = s2;
    M.at(1, 0) = s2;
    M.at(1, 1) = -c2;
    M.at(2, 2) = CycNum(Rat(1));
    return M;
}

CycNum RootSystem::dot(const std::array<CycNum, 3>& a, const std::array<CycNum, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

} // namespace dunklsym
