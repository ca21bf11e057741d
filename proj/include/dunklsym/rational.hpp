#pragma once
#include <gmpxx.h>
#include <string>
#include "dunklsym/errors.hpp"

namespace dunklsym {

// GMP keeps mpq_class canonical: gcd(num, den) = 1 and den > 0.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& r) { return sgn(r); }

// Strict parser for "p" or "p/q" with optional sign on p. GMP's own string
// constructor tolerates a zero denominator; we must reject it up front.
inline Rat rat_from_string(const std::string& s) {
    auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && (t[0] == '+' || t[0] == '-')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!is_int(num, true) || !is_int(den, false))
        throw usage_error("not a rational number: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1); // GMP rejects an explicit plus sign
    Int d(den);
    if (d == 0)
        throw usage_error("zero denominator in '" + s + "'");
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
inline Rat pochhammer(const Rat& a, long k) {
    Rat p(1);
    for (long i = 0; i < k; ++i) p *= a + i;
    return p;
}

inline Rat factorial(long k) {
    Rat p(1);
    for (long i = 2; i <= k; ++i) p *= i;
    return p;
}

} // namespace dunklsym
