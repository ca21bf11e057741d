#include "dunklsym/operators.hpp"

#include <map>
#include <mutex>

namespace dunklsym {

LinOperator LinOperator::identity() {
    return {"id", 0, [](const SpinorPoly& f) { return f; }};
}

LinOperator LinOperator::scalar(const CycNum& c) {
    return {"(" + c.to_string() + ")*id", 0,
            [c](const SpinorPoly& f) { return c * f; }};
}

LinOperator LinOperator::operator-() const {
    auto fn = fn_;
    return {"-" + label_, shift_,
            [fn](const SpinorPoly& f) { return -fn(f); }};
}

namespace {
std::optional<int> merged_shift(std::optional<int> a, std::optional<int> b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
}
} // namespace

LinOperator operator+(const LinOperator& A, const LinOperator& B) {
    return {"(" + A.label_ + " + " + B.label_ + ")",
            merged_shift(A.shift_, B.shift_),
            [fa = A.fn_, fb = B.fn_](const SpinorPoly& f) { return fa(f) + fb(f); }};
}

LinOperator operator-(const LinOperator& A, const LinOperator& B) {
    return {"(" + A.label_ + " - " + B.label_ + ")",
            merged_shift(A.shift_, B.shift_),
            [fa = A.fn_, fb = B.fn_](const SpinorPoly& f) { return fa(f) - fb(f); }};
}

LinOperator operator*(const LinOperator& A, const LinOperator& B) {
    std::optional<int> shift;
    if (A.shift_ && B.shift_) shift = *A.shift_ + *B.shift_;
    return {"(" + A.label_ + " " + B.label_ + ")", shift,
            [fa = A.fn_, fb = B.fn_](const SpinorPoly& f) { return fa(fb(f)); }};
}

LinOperator operator*(const CycNum& c, const LinOperator& A) {
    return {"(" + c.to_string() + ")*" + A.label_, A.shift_,
            [c, fa = A.fn_](const SpinorPoly& f) { return c * fa(f); }};
}

LinOperator LinOperator::pow(int k) const {
    LinOperator r = identity();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

LinOperator commutator(const LinOperator& A, const LinOperator& B) {
    return A * B - B * A;
}

LinOperator anticommutator(const LinOperator& A, const LinOperator& B) {
    return A * B + B * A;
}

namespace {

int repr_cmp(const CycNum& a, const CycNum& b) {
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c;
    }
    return 0;
}

int repr_cmp(const MPoly& a, const MPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first < ib->first) return -1;
        if (ib->first < ia->first) return 1;
        int c = repr_cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

struct SpinorReprLess {
    bool operator()(const SpinorPoly& A, const SpinorPoly& B) const {
        int c = repr_cmp(A.up, B.up);
        if (c != 0) return c < 0;
        return repr_cmp(A.down, B.down) < 0;
    }
};

} // namespace

LinOperator memoized(const LinOperator& A) {
    struct Memo {
        std::mutex mu;
        std::map<SpinorPoly, SpinorPoly, SpinorReprLess> table;
    };
    auto memo = std::make_shared<Memo>();
    return {A.label(), A.degree_shift(), [A, memo](const SpinorPoly& f) {
                {
                    std::lock_guard<std::mutex> lock(memo->mu);
                    auto it = memo->table.find(f);
                    if (it != memo->table.end()) return it->second;
                }
                SpinorPoly out = A(f);
                std::lock_guard<std::mutex> lock(memo->mu);
                memo->table.emplace(f, out);
                return out;
            }};
}

struct Operators::Cache {
    std::mutex mu;
    std::map<std::pair<int, Mono>, MPoly> dunkl_memo;
};

Operators::Operators(RootSystem rs, int delta)
    : rs_(std::make_shared<const RootSystem>(std::move(rs))),
      delta_(delta),
      cache_(std::make_shared<Cache>()) {
    if (delta != 1 && delta != -1) throw usage_error("delta must be +1 or -1");
}

Rat Operators::gamma() const {
    return rs_->kappa0() + Rat(rs_->m()) * (rs_->kappa1() + rs_->kappam()) / 2;
}

MPoly Operators::dunkl_scalar(int axis, const MPoly& f) const {
    MPoly out;
    for (const auto& [mono, coeff] : f.terms()) {
        MPoly image;
        bool cached = false;
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->dunkl_memo.find({axis, mono});
            if (it != cache_->dunkl_memo.end()) {
                image = it->second;
                cached = true;
            }
        }
        if (!cached) {
            MPoly single = MPoly::monomial(mono, CycNum(Rat(1)));
            image = partial_derivative(single, axis);
            for (const Root& r : rs_->positive_roots()) {
                const CycNum& ri = r.v[static_cast<std::size_t>(axis)];
                if (ri.is_zero() || r.kappa == 0) continue;
                MPoly diff = single - substitute_linear(single, r.reflection);
                if (diff.is_zero()) continue;
                image += (CycNum(r.kappa) * ri) * exact_div_linear(diff, r.v);
            }
            std::lock_guard<std::mutex> lock(cache_->mu);
            cache_->dunkl_memo.emplace(std::make_pair(axis, mono), image);
        }
        out += coeff * image;
    }
    return out;
}

LinOperator Operators::dunkl(int axis) const {
    auto self = *this;
    return {"T" + std::to_string(axis + 1), -1, [self, axis](const SpinorPoly& f) {
                return SpinorPoly{self.dunkl_scalar(axis, f.up),
                                  self.dunkl_scalar(axis, f.down)};
            }};
}

LinOperator Operators::coord(int axis) const {
    MPoly xi = MPoly::variable(axis);
    return {"x" + std::to_string(axis + 1), 1, [xi](const SpinorPoly& f) {
                return SpinorPoly{xi * f.up, xi * f.down};
            }};
}

LinOperator Operators::partial(int axis) const {
    return {"d" + std::to_string(axis + 1), -1, [axis](const SpinorPoly& f) {
                return SpinorPoly{partial_derivative(f.up, axis),
                                  partial_derivative(f.down, axis)};
            }};
}

LinOperator Operators::x_squared() const {
    MPoly r2;
    for (int i = 0; i < 3; ++i) r2 += MPoly::variable(i) * MPoly::variable(i);
    return {"|x|^2", 2, [r2](const SpinorPoly& f) {
                return SpinorPoly{r2 * f.up, r2 * f.down};
            }};
}

namespace {

// Substitution closures are constructed once and applied to many inputs, so
// each keeps its own monomial-image table (degree-preserving, hence small).
struct ActionMemo {
    std::mutex mu;
    std::map<Mono, MPoly> image;
};

MPoly memoized_substitution(ActionMemo& memo, const CMatrix& w, const MPoly& f) {
    MPoly out;
    for (const auto& [mono, coeff] : f.terms()) {
        MPoly img;
        bool cached = false;
        {
            std::lock_guard<std::mutex> lock(memo.mu);
            auto it = memo.image.find(mono);
            if (it != memo.image.end()) {
                img = it->second;
                cached = true;
            }
        }
        if (!cached) {
            img = substitute_linear(MPoly::monomial(mono, CycNum(Rat(1))), w);
            std::lock_guard<std::mutex> lock(memo.mu);
            memo.image.emplace(mono, img);
        }
        out += coeff * img;
    }
    return out;
}

LinOperator substitution_operator(std::string name, CMatrix w) {
    auto memo = std::make_shared<ActionMemo>();
    return {std::move(name), 0, [w = std::move(w), memo](const SpinorPoly& f) {
                return SpinorPoly{memoized_substitution(*memo, w, f.up),
                                  memoized_substitution(*memo, w, f.down)};
            }};
}

} // namespace

LinOperator Operators::group_action(const CMatrix& w) const {
    // (w f)(x) = f(w^{-1} x); reflections are involutions, and group
    // elements are fed through normal forms, so the caller supplies w and
    // we invert via the transpose (all W matrices are real orthogonal).
    return substitution_operator("act[w]", w.transpose());
}

LinOperator Operators::reflection_action(long j) const {
    CMatrix s = (j == 0) ? rs_->sigma0() : rs_->sigma(j);
    return substitution_operator("act[s" + std::to_string(j) + "]", s);
}

LinOperator Operators::clifford(int axis) const {
    int delta = delta_;
    switch (axis) {
        case 0:
            return {"e1", 0, [](const SpinorPoly& f) {
                        return SpinorPoly{f.down, f.up};
                    }};
        case 1: {
            CycNum i = imaginary_unit(rs_->scalar_order());
            return {"e2", 0, [i](const SpinorPoly& f) {
                        return SpinorPoly{-i * f.down, i * f.up};
                    }};
        }
        default:
            return {"e3", 0, [delta](const SpinorPoly& f) {
                        CycNum d{Rat(delta)};
                        return SpinorPoly{d * f.up, -d * f.down};
                    }};
    }
}

LinOperator Operators::dirac() const {
    LinOperator D = clifford(0) * dunkl(0);
    for (int i = 1; i < 3; ++i) D = D + clifford(i) * dunkl(i);
    return {"D", -1, [D](const SpinorPoly& f) { return D(f); }};
}

LinOperator Operators::vector_x() const {
    LinOperator X = clifford(0) * coord(0);
    for (int i = 1; i < 3; ++i) X = X + clifford(i) * coord(i);
    return {"x", 1, [X](const SpinorPoly& f) { return X(f); }};
}

LinOperator Operators::euler() const {
    LinOperator E = coord(0) * partial(0);
    for (int i = 1; i < 3; ++i) E = E + coord(i) * partial(i);
    return {"E", 0, [E](const SpinorPoly& f) { return E(f); }};
}

LinOperator Operators::laplacian() const {
    LinOperator L = dunkl(0) * dunkl(0);
    for (int i = 1; i < 3; ++i) L = L + dunkl(i) * dunkl(i);
    return {"Lap", -2, [L](const SpinorPoly& f) { return L(f); }};
}

LinOperator Operators::C(int i, int j) const {
    LinOperator c = commutator(dunkl(i), coord(j));
    return {"C" + std::to_string(i + 1) + std::to_string(j + 1), 0,
            [c](const SpinorPoly& f) { return c(f); }};
}

LinOperator Operators::angular(int i, int j) const {
    LinOperator l = coord(i) * dunkl(j) - coord(j) * dunkl(i);
    return {"L" + std::to_string(i + 1) + std::to_string(j + 1), 0,
            [l](const SpinorPoly& f) { return l(f); }};
}

LinOperator Operators::C_reflection_form(int i, int j) const {
    LinOperator sum = (i == j) ? LinOperator::identity() : LinOperator();
    for (const Root& r : rs_->positive_roots()) {
        CycNum w = CycNum(Rat(2) * r.kappa) * r.v[static_cast<std::size_t>(i)] *
                   r.v[static_cast<std::size_t>(j)];
        if (w.is_zero()) continue;
        sum = sum + w * group_action(r.reflection);
    }
    std::string name = "Cref" + std::to_string(i + 1) + std::to_string(j + 1);
    return {name, 0, [sum](const SpinorPoly& f) { return sum(f); }};
}

} // namespace dunklsym
