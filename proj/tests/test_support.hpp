#ifndef CDGAW_TEST_SUPPORT_HPP
#define CDGAW_TEST_SUPPORT_HPP

#include <random>

#include "cdgaw/algebra.hpp"

namespace cdgaw::testing {

/* deterministic generators for property-style tests */
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed = 0xCD6A) : eng(seed) {}

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }

    Rational rational(long num_max = 9, long den_max = 5) {
        Rational r(pick(-num_max, num_max), pick(1, den_max));
        r.canonicalize();
        return r;
    }

    Scalar scalar(const Field& f, long num_max = 9) {
        std::vector<Rational> c;
        for (int i = 0; i < f.degree(); ++i) c.push_back(rational(num_max));
        return f.from_coeffs(c);
    }

    Scalar nonzero_scalar(const Field& f) {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    Element element(const Cdga& a, int degree, int max_terms = 4) {
        auto monos = a.monomials_of_degree(degree);
        Element out = a.zero();
        if (monos.empty()) return out;
        int terms = static_cast<int>(pick(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            Mono m = monos[static_cast<size_t>(pick(0, static_cast<long>(monos.size()) - 1))];
            out += a.monomial(m, scalar(a.field(), 3));
        }
        return out;
    }
};

/* -- shared fixtures: the nilmanifold example in both presentations -- */

/* complex presentation: u1,cu1,...,u4,cu4 with d u3 = u1 u2, d cu3 = cu1 cu2 */
inline Cdga complex_nilmanifold() {
    Field f = Field::default_field();
    std::vector<GeneratorDecl> gens;
    for (int i = 1; i <= 4; ++i) {
        gens.push_back({"u" + std::to_string(i), 1, std::nullopt});
        gens.push_back({"cu" + std::to_string(i), 1, std::nullopt});
    }
    Cdga a0 = Cdga::make(f, gens);
    return a0.with_differential(
        {{"u3", a0.gen("u1") * a0.gen("u2")}, {"cu3", a0.gen("cu1") * a0.gen("cu2")}});
}

/* omega = i u1 cu1 + u2 u3 + cu2 cu3 + i u4 cu4 */
inline Element complex_omega(const Cdga& a) {
    Scalar i = a.field().imaginary_unit();
    return i * (a.gen("u1") * a.gen("cu1")) + a.gen("u2") * a.gen("u3") +
           a.gen("cu2") * a.gen("cu3") + i * (a.gen("u4") * a.gen("cu4"));
}

/* the 13 degree-2 invariant classes in the fixed table order */
inline std::vector<Element> complex_h2_basis(const Cdga& a) {
    auto w = [&](const char* x, const char* y) { return a.gen(x) * a.gen(y); };
    return {w("u1", "cu1"), w("u4", "cu4"), w("u2", "u3"),  w("cu2", "cu3"), w("cu1", "u2"),
            w("u1", "u3"),  w("u1", "cu2"), w("cu1", "cu3"), w("u1", "cu4"), w("cu1", "u4"),
            w("u2", "cu2"), w("u2", "cu4"), w("cu2", "u4")};
}

/* real presentation: e1..e8, d e5 = e13 - e24, d e6 = e14 + e23 */
inline Cdga real_nilmanifold() {
    Field f = Field::default_field();
    std::vector<GeneratorDecl> gens;
    for (int k = 1; k <= 8; ++k) gens.push_back({"e" + std::to_string(k), 1, std::nullopt});
    Cdga a0 = Cdga::make(f, gens);
    return a0.with_differential(
        {{"e5", a0.gen("e1") * a0.gen("e3") - a0.gen("e2") * a0.gen("e4")},
         {"e6", a0.gen("e1") * a0.gen("e4") + a0.gen("e2") * a0.gen("e3")}});
}

inline Element real_omega(const Cdga& a) {
    return a.gen("e1") * a.gen("e2") + a.gen("e3") * a.gen("e5") - a.gen("e4") * a.gen("e6") +
           a.gen("e7") * a.gen("e8");
}

}  // namespace cdgaw::testing

#endif
