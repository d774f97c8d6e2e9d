#ifndef CDGAW_LINALG_HPP
#define CDGAW_LINALG_HPP

#include <optional>
#include <vector>

#include "cdgaw/field.hpp"

namespace cdgaw {

using Vec = std::vector<Scalar>;

/* Dense matrix over the scalar field. Sizes here stay tiny (ambient <= 2^8),
 * so determinism beats asymptotics throughout. */
class Mat {
  public:
    Mat() = default;
    Mat(Field f, int rows, int cols);
    static Mat identity(const Field& f, int n);
    static Mat from_rows(const Field& f, const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    Mat transposed() const;
    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;
    bool operator==(const Mat& o) const;

    /* In-place reduced row echelon form with the first-nonzero pivot rule.
     * Returns pivot column indices. */
    std::vector<int> rref();

    int rank() const;
    Scalar det() const;  // square only
    std::optional<Mat> inverse() const;

  private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/* Canonical echelon-basis subspace: equality of subspaces is equality of
 * representations. */
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero(const Field& f, int ambient);
    static Subspace full(const Field& f, int ambient);
    /* span of the given rows, echelonized */
    static Subspace span(const Field& f, const std::vector<Vec>& rows, int ambient);
    static Subspace from_echelon(Mat basis, int ambient);  // trusts the caller

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const;
    bool contains_vector(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;  // Zassenhaus
    /* Coordinates of v in the canonical complement (standard basis vectors on
     * non-pivot columns); i.e. the residue of v after reduction by the basis. */
    Vec quotient_coords(const Vec& v) const;

  private:
    int ambient_ = 0;
    Mat basis_;
};

/* Deterministic solver: particular solution with free variables set to zero
 * under the fixed column order. nullopt on inconsistent systems. */
std::optional<Vec> solve(const Mat& A, const Vec& b);

Subspace kernel(const Mat& A);
Subspace image(const Mat& A);

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool is_zero_vec(const Vec& v);

}  // namespace cdgaw

#endif
