#include "dunklsym/poly.hpp"

#include <algorithm>
#include <sstream>
#include "dunklsym/linalg.hpp"

namespace dunklsym {

std::vector<Mono> monomials_of_degree(int n) {
    std::vector<Mono> out;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n - a; ++b)
            out.push_back(Mono{{a, b, n - a - b}});
    std::sort(out.begin(), out.end(), [](const Mono& l, const Mono& r) {
        return MonoLess{}(l, r);
    });
    return out;
}

MPoly MPoly::constant(const CycNum& c) { return monomial(Mono{}, c); }

MPoly MPoly::variable(int i) {
    Mono m;
    m.e[static_cast<std::size_t>(i)] = 1;
    return monomial(m, CycNum(Rat(1)));
}

MPoly MPoly::monomial(const Mono& m, const CycNum& c) {
    MPoly f;
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
}

int MPoly::degree() const {
    // terms_ is graded-ordered, so the last key has maximal total degree
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

CycNum MPoly::coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNum() : it->second;
}

void MPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& g) {
    for (const auto& [m, c] : g.terms_) {
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) it->second += c;
    }
    normalize();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& g) {
    for (const auto& [m, c] : g.terms_) {
        auto [it, fresh] = terms_.emplace(m, -c);
        if (!fresh) it->second -= c;
    }
    normalize();
    return *this;
}

MPoly operator*(const MPoly& f, const MPoly& g) {
    MPoly r;
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            Mono m{{mf.e[0] + mg.e[0], mf.e[1] + mg.e[1], mf.e[2] + mg.e[2]}};
            auto [it, fresh] = r.terms_.emplace(m, cf * cg);
            if (!fresh) it->second += cf * cg;
        }
    }
    r.normalize();
    return r;
}

MPoly operator*(const CycNum& c, const MPoly& f) {
    if (c.is_zero()) return {};
    MPoly r = f;
    for (auto& [m, v] : r.terms_) v *= c;
    r.normalize();
    return r;
}

MPoly MPoly::pow(int k) const {
    MPoly r = constant(CycNum(Rat(1)));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool operator==(const MPoly& f, const MPoly& g) { return (f - g).is_zero(); }

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        for (int i = 0; i < 3; ++i)
            if (m.e[static_cast<std::size_t>(i)] > 0)
                os << "*x" << i + 1 << "^" << m.e[static_cast<std::size_t>(i)];
        first = false;
    }
    return os.str();
}

MPoly substitute_linear(const MPoly& f, const CMatrix& M) {
    if (M.rows() != 3 || M.cols() != 3)
        throw internal_error("substitute_linear needs a 3x3 matrix");
    std::array<MPoly, 3> image;
    for (int i = 0; i < 3; ++i) {
        MPoly yi;
        for (int j = 0; j < 3; ++j)
            yi += M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                  MPoly::variable(j);
        image[static_cast<std::size_t>(i)] = yi;
    }
    // power tables, grown on demand, shared across terms
    std::array<std::vector<MPoly>, 3> powers;
    for (int i = 0; i < 3; ++i)
        powers[static_cast<std::size_t>(i)] = {MPoly::constant(CycNum(Rat(1)))};
    auto power = [&](int i, int k) -> const MPoly& {
        auto& tab = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(tab.size()) <= k)
            tab.push_back(tab.back() * image[static_cast<std::size_t>(i)]);
        return tab[static_cast<std::size_t>(k)];
    };
    MPoly r;
    for (const auto& [m, c] : f.terms()) {
        MPoly t = MPoly::constant(c);
        for (int i = 0; i < 3; ++i)
            if (m.e[static_cast<std::size_t>(i)] > 0)
                t = t * power(i, m.e[static_cast<std::size_t>(i)]);
        r += t;
    }
    return r;
}

MPoly exact_div_linear(const MPoly& f, const std::array<CycNum, 3>& L) {
    int pivot = -1;
    for (int i = 0; i < 3 && pivot < 0; ++i)
        if (!L[static_cast<std::size_t>(i)].is_zero()) pivot = i;
    if (pivot < 0) throw division_by_zero("division by the zero linear form");
    MPoly lform;
    for (int i = 0; i < 3; ++i)
        lform += L[static_cast<std::size_t>(i)] * MPoly::variable(i);
    const CycNum& lc = L[static_cast<std::size_t>(pivot)];

    MPoly rem = f, quot;
    while (!rem.is_zero()) {
        // leading term in the order that ranks the pivot exponent first
        const auto* lead_m = &rem.terms().begin()->first;
        const CycNum* lead_c = &rem.terms().begin()->second;
        for (const auto& [m, c] : rem.terms()) {
            int mp = m.e[static_cast<std::size_t>(pivot)];
            int lp = lead_m->e[static_cast<std::size_t>(pivot)];
            if (mp > lp || (mp == lp && MonoLess{}(*lead_m, m))) {
                lead_m = &m;
                lead_c = &c;
            }
        }
        if (lead_m->e[static_cast<std::size_t>(pivot)] == 0)
            throw not_divisible("linear-form division left remainder " + rem.to_string());
        Mono qm = *lead_m;
        qm.e[static_cast<std::size_t>(pivot)] -= 1;
        MPoly qt = MPoly::monomial(qm, *lead_c / lc);
        quot += qt;
        rem -= qt * lform;
    }
    return quot;
}

MPoly partial_derivative(const MPoly& f, int axis) {
    MPoly r;
    for (const auto& [m, c] : f.terms()) {
        int e = m.e[static_cast<std::size_t>(axis)];
        if (e == 0) continue;
        Mono d = m;
        d.e[static_cast<std::size_t>(axis)] = e - 1;
        r += MPoly::monomial(d, CycNum(Rat(e)) * c);
    }
    return r;
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& g) {
    up += g.up;
    down += g.down;
    return *this;
}

SpinorPoly& SpinorPoly::operator-=(const SpinorPoly& g) {
    up -= g.up;
    down -= g.down;
    return *this;
}

std::string SpinorPoly::to_string() const {
    return "[" + up.to_string() + " ; " + down.to_string() + "]";
}

SpinorPoly chi_plus() { return {MPoly::constant(CycNum(Rat(1))), MPoly()}; }
SpinorPoly chi_minus() { return {MPoly(), MPoly::constant(CycNum(Rat(1)))}; }

GradedBasis::GradedBasis(int degree) : degree_(degree) {
    if (degree < 0) throw internal_error("graded basis needs degree >= 0");
    monos_ = monomials_of_degree(degree);
    for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], k);
    for (const Mono& m : monos_)
        elements_.push_back({MPoly::monomial(m, CycNum(Rat(1))), MPoly()});
    for (const Mono& m : monos_)
        elements_.push_back({MPoly(), MPoly::monomial(m, CycNum(Rat(1)))});
}

std::vector<CycNum> GradedBasis::coordinates(const SpinorPoly& sp) const {
    std::vector<CycNum> coords(elements_.size());
    std::size_t half = monos_.size();
    auto fill = [&](const MPoly& part, std::size_t offset) {
        for (const auto& [m, c] : part.terms()) {
            auto it = index_.find(m);
            if (it == index_.end())
                throw construction_mismatch("term of degree " + std::to_string(m.degree()) +
                                            " outside the degree-" + std::to_string(degree_) +
                                            " slice");
            coords[offset + it->second] = c;
        }
    };
    fill(sp.up, 0);
    fill(sp.down, half);
    return coords;
}

} // namespace dunklsym
