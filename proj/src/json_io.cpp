#include "dunklsym/json_io.hpp"

namespace dunklsym {

using nlohmann::json;

json scalar_to_json(const CycNum& a) {
    std::vector<Rat> c = a.canonical();
    while (!c.empty() && c.back() == 0) c.pop_back();
    json coeffs = json::array();
    for (const Rat& v : c)
        coeffs.push_back({v.get_num().get_str(), v.get_den().get_str()});
    return {{"order", a.order()}, {"coeffs", coeffs}};
}

CycNum scalar_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw usage_error("scalar JSON needs {order, coeffs}");
    long order = j.at("order").get<long>();
    if (order < 1) throw usage_error("scalar JSON: order must be positive");
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() > static_cast<std::size_t>(order))
        throw usage_error("scalar JSON: bad coefficient list");
    std::vector<Rat> c(static_cast<std::size_t>(order), Rat(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const json& pair = coeffs[k];
        if (!pair.is_array() || pair.size() != 2)
            throw usage_error("scalar JSON: coefficient must be [num, den]");
        std::string num = pair[0].get<std::string>();
        std::string den = pair[1].get<std::string>();
        c[k] = rat_from_string(num + "/" + den);
    }
    return CycNum::from_coeffs(order, std::move(c));
}

json poly_to_json(const MPoly& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"exps", {m.e[0], m.e[1], m.e[2]}}, {"coeff", scalar_to_json(c)}});
    return terms;
}

MPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw usage_error("polynomial JSON must be a list of terms");
    MPoly f;
    for (const json& term : j) {
        if (!term.is_object() || !term.contains("exps") || !term.contains("coeff"))
            throw usage_error("polynomial term JSON needs {exps, coeff}");
        const json& exps = term.at("exps");
        if (!exps.is_array() || exps.size() != 3)
            throw usage_error("polynomial term JSON: exps must have 3 entries");
        Mono m;
        for (std::size_t i = 0; i < 3; ++i) {
            int e = exps[i].get<int>();
            if (e < 0) throw usage_error("polynomial term JSON: negative exponent");
            m.e[i] = e;
        }
        f += MPoly::monomial(m, scalar_from_json(term.at("coeff")));
    }
    return f;
}

json spinor_to_json(const SpinorPoly& f) {
    return {{"up", poly_to_json(f.up)}, {"down", poly_to_json(f.down)}};
}

SpinorPoly spinor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("up") || !j.contains("down"))
        throw usage_error("spinor JSON needs {up, down}");
    return {poly_from_json(j.at("up")), poly_from_json(j.at("down"))};
}

} // namespace dunklsym
