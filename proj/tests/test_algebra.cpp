#include <doctest.h>

#include "cdgaw/algebra.hpp"
#include "test_support.hpp"

using namespace cdgaw;

/* complex presentation of the nilmanifold example: u1,cu1,...,u4,cu4 with
 * d u3 = u1 u2 and d cu3 = cu1 cu2 */
static Cdga complex_nilmanifold() {
    Field f = Field::default_field();
    std::vector<GeneratorDecl> gens;
    for (int i = 1; i <= 4; ++i) {
        gens.push_back({"u" + std::to_string(i), 1, std::nullopt});
        gens.push_back({"cu" + std::to_string(i), 1, std::nullopt});
    }
    Cdga a0 = Cdga::make(f, gens);
    return a0.with_differential({{"u3", a0.gen("u1") * a0.gen("u2")},
                                 {"cu3", a0.gen("cu1") * a0.gen("cu2")}});
}

TEST_CASE("wedge basics and Koszul signs") {
    Field f = Field::default_field();
    Cdga a = Cdga::make(f, {{"e1", 1, {}}, {"e2", 1, {}}, {"e3", 1, {}}});
    CHECK((a.gen("e1") * a.gen("e1")).is_zero());
    CHECK(a.gen("e3") * a.gen("e1") == -(a.gen("e1") * a.gen("e3")));

    Scalar i = f.imaginary_unit();
    Element x = a.gen("e1") + i * a.gen("e2");
    Element y = a.gen("e1") - i * a.gen("e2");
    Element expect = (f.integer(-2) * i) * (a.gen("e1") * a.gen("e2"));
    CHECK(x * y == expect);
}

TEST_CASE("differential on the complex nilmanifold presentation") {
    Cdga a = complex_nilmanifold();
    CHECK(a.d(a.gen("u3")) == a.gen("u1") * a.gen("u2"));
    CHECK(a.d(a.gen("u1")).is_zero());
    CHECK(a.d(a.gen("u2")).is_zero());
    CHECK(a.d(a.gen("u4")).is_zero());
}

TEST_CASE("mixed algebras are rejected") {
    Field f = Field::default_field();
    Cdga a = Cdga::make(f, {{"x", 1, {}}});
    Cdga b = Cdga::make(f, {{"x", 1, {}}});
    CHECK_THROWS_AS(a.gen(0) * b.gen(0), MixedAlgebras);
}

TEST_CASE("from_lie_algebra: Heisenberg and the 8-dim example") {
    Field f = Field::rationals();
    LieAlgebraSpec h3;
    h3.dimension = 3;
    h3.brackets[{0, 1}] = {Rational(0), Rational(0), Rational(-1)};  // [e1,e2] = -e3
    Cdga heis = from_lie_algebra(f, h3);
    CHECK(heis.d(heis.gen("e3")) == heis.gen("e1") * heis.gen("e2"));

    // printed brackets: -[e1,e3] = -[e2,e4] = e5, -[e1,e4] = -[e2,e3] = e6
    LieAlgebraSpec g8;
    g8.dimension = 8;
    auto ek = [](int k) {
        std::vector<Rational> v(8, Rational(0));
        v[static_cast<size_t>(k - 1)] = Rational(-1);
        return v;
    };
    g8.brackets[{0, 2}] = ek(5);
    g8.brackets[{1, 3}] = ek(5);
    g8.brackets[{0, 3}] = ek(6);
    g8.brackets[{1, 2}] = ek(6);
    Cdga g = from_lie_algebra(f, g8);
    CHECK(g.d(g.gen("e5")) == g.gen("e1") * g.gen("e3") + g.gen("e2") * g.gen("e4"));
    CHECK(g.d(g.gen("e6")) == g.gen("e1") * g.gen("e4") + g.gen("e2") * g.gen("e3"));
    for (int i = 0; i < 8; ++i)
        if (i != 4 && i != 5) CHECK(g.d(g.gen(i)).is_zero());
}

TEST_CASE("from_lie_algebra rejects Jacobi violations") {
    Field f = Field::rationals();
    LieAlgebraSpec bad;  // [e1,e2] = e3, [e3,e4] = e5: Jacobi(e1,e2,e4) = e5 != 0
    bad.dimension = 5;
    bad.brackets[{0, 1}] = {Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)};
    bad.brackets[{2, 3}] = {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)};
    CHECK_THROWS_AS(from_lie_algebra(f, bad), JacobiFailure);
}

TEST_CASE("substitute: identity, u-to-e consistency, singular rejection") {
    Cdga cplx = complex_nilmanifold();
    const Field& f = cplx.field();
    Scalar i = f.imaginary_unit();

    CdgaIsomorphism id = substitute(cplx, {});
    testing::Rng rng;
    for (int t = 0; t < 10; ++t) {
        Element x = rng.element(cplx, static_cast<int>(rng.pick(0, 4)));
        CHECK(id.apply(x) == x);
    }

    // real presentation consistent with the standard split u^j = e^{2j-1} + i e^{2j}
    std::vector<GeneratorDecl> egens;
    for (int k = 1; k <= 8; ++k) egens.push_back({"e" + std::to_string(k), 1, std::nullopt});
    Cdga e0 = Cdga::make(f, egens);
    Element de5 = e0.gen("e1") * e0.gen("e3") - e0.gen("e2") * e0.gen("e4");
    Element de6 = e0.gen("e1") * e0.gen("e4") + e0.gen("e2") * e0.gen("e3");
    Cdga real = e0.with_differential({{"e5", de5}, {"e6", de6}});

    std::map<std::string, Element> images;
    for (int j = 1; j <= 4; ++j) {
        Element re = real.gen("e" + std::to_string(2 * j - 1));
        Element im = real.gen("e" + std::to_string(2 * j));
        images["u" + std::to_string(j)] = re + i * im;
        images["cu" + std::to_string(j)] = re - i * im;
    }
    CdgaIsomorphism phi = substitute(cplx, real, images);
    // d(e5 + i e6) = (e1 + i e2)(e3 + i e4), i.e. phi maps du3 = u12 correctly
    CHECK(phi.apply(cplx.d(cplx.gen("u3"))) == real.d(phi.apply(cplx.gen("u3"))));
    for (int t = 0; t < 20; ++t) {
        Element x = rng.element(cplx, static_cast<int>(rng.pick(0, 5)));
        CHECK(phi.inverse_apply(phi.apply(x)) == x);
    }

    // singular: e1, e2 -> e1
    Cdga two = Cdga::make(f, {{"e1", 1, {}}, {"e2", 1, {}}});
    CHECK_THROWS_AS(substitute(two, {{"e1", two.gen("e1")}, {"e2", two.gen("e1")}}), NotInvertible);

    // incompatible differential: swapping u3 with the closed u4 is no chain map
    CHECK_THROWS_AS(substitute(cplx, {{"u3", cplx.gen("u4")}, {"u4", cplx.gen("u3")}}), NotChainMap);
}

TEST_CASE("evaluate_on_plane") {
    Field f = Field::default_field();
    std::vector<GeneratorDecl> egens;
    for (int k = 1; k <= 8; ++k) egens.push_back({"e" + std::to_string(k), 1, std::nullopt});
    Cdga a = Cdga::make(f, egens);
    auto e = [&](int k) { return a.gen("e" + std::to_string(k)); };
    auto unit = [&](int k) {
        Vec v = zero_vec(f, 8);
        v[static_cast<size_t>(k - 1)] = f.one();
        return v;
    };
    auto plus = [&](Vec x, const Vec& y) {
        for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
        return x;
    };

    Element e34 = e(3) * e(4);
    Vec t1a = plus(unit(3), unit(7)), t1b = plus(unit(4), unit(8));
    CHECK(evaluate_on_plane(e34, t1a, t1b) == f.one());
    CHECK(evaluate_on_plane(e34, unit(3), unit(3)).is_zero());

    Element x = e(3) * e(7) - e(4) * e(8);
    Vec t2a = unit(3);
    t2a[7] = f.sqrt3();  // e3 + sqrt(3) e8
    CHECK(evaluate_on_plane(x, t2a, unit(7)) == f.one());

    CHECK_THROWS_AS(evaluate_on_plane(e(1), t1a, t1b), DegreeMismatch);
}

TEST_CASE("graded commutativity, associativity, Leibniz, d^2 = 0 on random elements") {
    Cdga a = complex_nilmanifold();
    testing::Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        int p = static_cast<int>(rng.pick(0, 4)), q = static_cast<int>(rng.pick(0, 4)), r = static_cast<int>(rng.pick(0, 3));
        Element x = rng.element(a, p), y = rng.element(a, q), z = rng.element(a, r);
        Element xy = x * y, yx = y * x;
        CHECK(xy == ((p * q) % 2 ? -yx : yx));
        CHECK((x * y) * z == x * (y * z));
        Element leib = a.d(x * y) - (a.d(x) * y + (p % 2 ? -x : x) * a.d(y));
        CHECK(leib.is_zero());
        CHECK(a.d(a.d(x)).is_zero());
    }
}

TEST_CASE("element serialization is deterministic and lexicographic") {
    Cdga a = complex_nilmanifold();
    Element x = a.gen("u2") * a.gen("u3") + a.field().imaginary_unit() * (a.gen("u1") * a.gen("cu1"));
    CHECK(x.str() == "(z^3)*u1*cu1 + u2*u3");
    CHECK(a.zero().str() == "0");
    CHECK(a.unit().str() == "1");
}
