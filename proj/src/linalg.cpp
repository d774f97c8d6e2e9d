#include "cdgaw/linalg.hpp"

#include <algorithm>

namespace cdgaw {

Mat::Mat(Field f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols) {
    a_.assign(static_cast<size_t>(rows) * cols, field_.zero());
}

Mat Mat::identity(const Field& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Mat Mat::from_rows(const Field& f, const std::vector<Vec>& rows, int cols) {
    Mat m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Mat::col(int c) const {
    Vec v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Mat Mat::transposed() const {
    Mat t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Mat r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape");
    Vec r(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Scalar inv = at(r, c).inv();
        for (int j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            Scalar f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
}

Scalar Mat::det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
    Mat m = *this;
    Scalar d = field_.one();
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return field_.zero();
        if (p != r) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
            d = -d;
        }
        d = d * m.at(r, c);
        Scalar inv = m.at(r, c).inv();
        for (int i = r + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Mat aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_.one();
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != rows_ || piv.back() >= cols_) return std::nullopt;
    Mat inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<size_t>(n), f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
    Vec v = zero_vec(f, n);
    v[static_cast<size_t>(i)] = f.one();
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw DimensionMismatch("rhs length");
    Mat aug(A.field(), A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    auto piv = aug.rref();
    for (int p : piv)
        if (p == A.cols()) return std::nullopt;  // inconsistent
    Vec x = zero_vec(A.field(), A.cols());
    for (size_t r = 0; r < piv.size(); ++r) x[static_cast<size_t>(piv[r])] = aug.at(static_cast<int>(r), A.cols());
    return x;
}

Subspace kernel(const Mat& A) {
    Mat m = A;
    auto piv = m.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
    for (int p : piv) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < A.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec v = zero_vec(A.field(), A.cols());
        v[static_cast<size_t>(c)] = A.field().one();
        for (size_t r = 0; r < piv.size(); ++r) v[static_cast<size_t>(piv[r])] = -m.at(static_cast<int>(r), c);
        rows.push_back(std::move(v));
    }
    return Subspace::span(A.field(), rows, A.cols());
}

Subspace image(const Mat& A) {
    std::vector<Vec> rows;
    for (int c = 0; c < A.cols(); ++c) rows.push_back(A.col(c));
    return Subspace::span(A.field(), rows, A.rows());
}

Subspace Subspace::zero(const Field& f, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat(f, 0, ambient);
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) { return from_echelon(Mat::identity(f, ambient), ambient); }

Subspace Subspace::span(const Field& f, const std::vector<Vec>& rows, int ambient) {
    Mat m = Mat::from_rows(f, rows, ambient);
    auto piv = m.rref();
    Mat b(f, static_cast<int>(piv.size()), ambient);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < ambient; ++c) b.at(r, c) = m.at(r, c);
    return from_echelon(std::move(b), ambient);
}

Subspace Subspace::from_echelon(Mat basis, int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = std::move(basis);
    return s;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Vec Subspace::quotient_coords(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("vector length");
    Vec r = v;
    for (int row = 0; row < basis_.rows(); ++row) {
        int p = -1;
        for (int c = 0; c < ambient_; ++c)
            if (!basis_.at(row, c).is_zero()) {
                p = c;
                break;
            }
        if (p < 0) continue;
        Scalar f = r[static_cast<size_t>(p)];
        if (f.is_zero()) continue;
        for (int c = 0; c < ambient_; ++c) r[static_cast<size_t>(c)] -= f * basis_.at(row, c);
    }
    return r;
}

bool Subspace::contains_vector(const Vec& v) const { return is_zero_vec(quotient_coords(v)); }

bool Subspace::contains(const Subspace& o) const {
    for (int r = 0; r < o.basis_.rows(); ++r)
        if (!contains_vector(o.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace sum ambient");
    std::vector<Vec> rows;
    for (int r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    for (int r = 0; r < o.basis_.rows(); ++r) rows.push_back(o.basis_.row(r));
    return span(field(), rows, ambient_);
}

/* Zassenhaus: rref of [U | U; V | 0]; rows with zero left half carry the
 * intersection in their right half. */
Subspace Subspace::intersect(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("subspace intersect ambient");
    const Field& f = field();
    int n = ambient_;
    int rows_total = basis_.rows() + o.basis_.rows();
    Mat z(f, rows_total, 2 * n);
    for (int r = 0; r < basis_.rows(); ++r)
        for (int c = 0; c < n; ++c) {
            z.at(r, c) = basis_.at(r, c);
            z.at(r, n + c) = basis_.at(r, c);
        }
    for (int r = 0; r < o.basis_.rows(); ++r)
        for (int c = 0; c < n; ++c) z.at(basis_.rows() + r, c) = o.basis_.at(r, c);
    z.rref();
    std::vector<Vec> inter;
    for (int r = 0; r < rows_total; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n && left_zero; ++c)
            if (!z.at(r, c).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v;
        v.reserve(n);
        for (int c = 0; c < n; ++c) v.push_back(z.at(r, n + c));
        if (!is_zero_vec(v)) inter.push_back(std::move(v));
    }
    return span(f, inter, n);
}

}  // namespace cdgaw
