#include <doctest.h>

#include <algorithm>

#include "cdgaw/linalg.hpp"
#include "test_support.hpp"

using namespace cdgaw;

static Mat mat(const Field& f, std::vector<std::vector<long>> rows) {
    Mat m(f, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = f.integer(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    return m;
}

static Vec vec(const Field& f, std::vector<long> v) {
    Vec out;
    for (long x : v) out.push_back(f.integer(x));
    return out;
}

TEST_CASE("solve: deterministic particular solutions") {
    Field f = Field::rationals();
    auto s1 = solve(Mat::identity(f, 2), vec(f, {3, 5}));
    REQUIRE(s1);
    CHECK(*s1 == vec(f, {3, 5}));

    auto s2 = solve(mat(f, {{1, 1}}), vec(f, {7}));
    REQUIRE(s2);
    CHECK(*s2 == vec(f, {7, 0}));  // free variable zeroed

    auto s3 = solve(mat(f, {{1}, {1}}), vec(f, {0, 1}));
    CHECK(!s3);
}

TEST_CASE("kernel and image basics") {
    Field f = Field::rationals();
    Subspace k = kernel(mat(f, {{0, 0}, {0, 0}}));
    CHECK(k == Subspace::full(f, 2));

    testing::Rng rng;
    for (int t = 0; t < 50; ++t) {
        int r = static_cast<int>(rng.pick(1, 5)), c = static_cast<int>(rng.pick(1, 5));
        Mat m(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = f.rational(rng.rational(4));
        CHECK(kernel(m).dim() + m.rank() == c);
        CHECK(image(m).dim() == m.rank());
    }
}

TEST_CASE("subspace lattice operations") {
    Field f = Field::rationals();
    Subspace u = Subspace::span(f, {vec(f, {1, 0, 0}), vec(f, {0, 1, 0})}, 3);
    Subspace v = Subspace::span(f, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})}, 3);
    CHECK(u.intersect(u) == u);
    CHECK(u.intersect(v) == Subspace::span(f, {vec(f, {0, 1, 0})}, 3));

    Subspace a = Subspace::span(f, {vec(f, {1, 0})}, 2);
    Subspace b = Subspace::span(f, {vec(f, {0, 1})}, 2);
    CHECK(a.sum(b) == Subspace::full(f, 2));

    CHECK_THROWS_AS(u.sum(a), DimensionMismatch);
}

TEST_CASE("dimension formula and membership on random subspaces") {
    Field f = Field::rationals();
    testing::Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        int n = 5;
        auto rand_space = [&] {
            std::vector<Vec> rows;
            int k = static_cast<int>(rng.pick(0, 4));
            for (int i = 0; i < k; ++i) {
                Vec v;
                for (int j = 0; j < n; ++j) v.push_back(f.rational(rng.rational(3)));
                rows.push_back(v);
            }
            return Subspace::span(f, rows, n);
        };
        Subspace u = rand_space(), v = rand_space();
        CHECK(u.dim() + v.dim() == u.sum(v).dim() + u.intersect(v).dim());
        for (int r = 0; r < u.basis().rows(); ++r) CHECK(u.contains_vector(u.basis().row(r)));
        CHECK(u.sum(v).contains(u));
        CHECK(u.contains(u.intersect(v)));
    }
}

TEST_CASE("canonicality: shuffled spanning sets give identical echelon bases") {
    Field f = Field::rationals();
    testing::Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        int n = 6;
        std::vector<Vec> rows;
        for (int i = 0; i < 4; ++i) {
            Vec v;
            for (int j = 0; j < n; ++j) v.push_back(f.rational(rng.rational(3)));
            rows.push_back(v);
        }
        // add linear combinations, then shuffle
        std::vector<Vec> shuffled = rows;
        Vec combo = zero_vec(f, n);
        for (auto& r : rows)
            for (int j = 0; j < n; ++j) combo[static_cast<size_t>(j)] += r[static_cast<size_t>(j)];
        shuffled.push_back(combo);
        std::shuffle(shuffled.begin(), shuffled.end(), rng.eng);
        CHECK(Subspace::span(f, rows, n) == Subspace::span(f, shuffled, n));
    }
}

TEST_CASE("quotient coordinates reduce by pivots") {
    Field f = Field::rationals();
    Subspace u = Subspace::span(f, {vec(f, {1, 2, 0}), vec(f, {0, 0, 1})}, 3);
    Vec q = u.quotient_coords(vec(f, {3, 1, 4}));
    // pivots at columns 0 and 2: residue is supported on column 1
    CHECK(q[0].is_zero());
    CHECK(q[2].is_zero());
    CHECK(q[1] == f.integer(1 - 6));
    CHECK(u.contains_vector(vec(f, {2, 4, 7})));
    CHECK(!u.contains_vector(vec(f, {2, 3, 7})));
}

TEST_CASE("det and inverse") {
    Field f = Field::rationals();
    Mat m = mat(f, {{2, 1}, {1, 1}});
    CHECK(m.det() == f.one());
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((*inv) * m == Mat::identity(f, 2));
    CHECK(!mat(f, {{1, 2}, {2, 4}}).inverse());
}
