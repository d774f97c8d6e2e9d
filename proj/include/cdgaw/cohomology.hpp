#ifndef CDGAW_COHOMOLOGY_HPP
#define CDGAW_COHOMOLOGY_HPP

#include "cdgaw/symmetry.hpp"

namespace cdgaw {

/* Cochain complex of a CDGA, possibly restricted to a d- and product-stable
 * subcomplex. Per degree: a basis of elements, the matrix expressing them in
 * monomial coordinates, and the differential in basis coordinates. */
class CochainComplex {
  public:
    static CochainComplex make(const Cdga& alg);
    static CochainComplex make(const Cdga& alg, const InvariantSubcomplex& sub);

    const Cdga& algebra() const { return alg_; }
    int top() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int k) const;
    const Mat& d_matrix(int k) const;  // dim(k+1) x dim(k)
    const std::vector<Element>& basis(int k) const;

    Element from_coords(int k, const Vec& v) const;
    /* coordinates in the degree-k basis; ValidationError if outside the span */
    Vec coords(int k, const Element& x) const;
    bool in_span(int k, const Element& x) const;

  private:
    Cdga alg_;
    std::vector<int> dims_;
    std::vector<std::vector<Element>> basis_;
    std::vector<Mat> mono_of_basis_;  // |monomials_k| x dim_k
    std::vector<Mat> d_;
};

/* Cohomology class: coordinates in the ring's chosen degree-k basis. */
struct CohClass {
    int degree = 0;
    Vec coords;
    bool is_zero() const { return is_zero_vec(coords); }
};

class CohomologyRing {
  public:
    /* H^k basis = kernel(d_k) mod image(d_{k-1}) with echelon-lift
     * representatives; preferred_bases pins a degree's basis to the given
     * cocycles (they must represent a basis). */
    static CohomologyRing build(const Cdga& alg);
    static CohomologyRing build(const Cdga& alg, const InvariantSubcomplex& sub,
                                const std::map<int, std::vector<Element>>& preferred_bases = {});

    const CochainComplex& complex() const { return cx_; }
    const Cdga& algebra() const { return cx_.algebra(); }
    const Field& field() const { return cx_.algebra().field(); }

    int top() const { return cx_.top(); }
    int betti(int k) const;
    std::vector<int> betti() const;
    /* largest degree with nonzero cohomology */
    int top_nonzero() const;

    const Element& representative(int k, int i) const;
    Element representative(const CohClass& c) const;

    /* class of a closed element (NotExact-style failure if d(x) != 0) */
    CohClass class_of(const Element& x) const;
    CohClass class_of(const Element& x, int degree) const;
    CohClass zero_class(int degree) const;
    CohClass basis_class(int degree, int i) const;

    CohClass cup(const CohClass& a, const CohClass& b) const;
    CohClass cup_power(const CohClass& a, int p) const;

    /* exactness certificate: xi with d(xi) = x, deterministic free-variable
     * zeroing; NotExact if [x] != 0 */
    Element primitive(const Element& x) const;
    bool is_exact(const Element& x) const;

    /* image of d in degree k, as a subspace of chain coordinates */
    Subspace exact_subspace(int k) const;

    /* volume normalization: pairings multiply the top-class coefficient by
     * this scale (default 1) */
    const Scalar& volume_scale() const { return volume_scale_; }
    void set_volume_scale(const Scalar& s) { volume_scale_ = s; }

    /* scalar pairing <a, b> = scale * top-coefficient of a cup b; degrees must
     * be complementary w.r.t. top_nonzero(); TopNotOneDimensional guard */
    Scalar pair(const CohClass& a, const CohClass& b) const;

    /* B(x, y) = <x cup y cup omega^p> on H^k x H^{top-k-2p} */
    Mat pairing_matrix(const CohClass& omega, int k, int p) const;

    /* plain Poincare pairing H^k x H^{top-k} */
    Mat poincare_matrix(int k) const;

    /* matrix of x -> omega^p cup x : H^k -> H^{k+2p} in the chosen bases */
    Mat cup_power_matrix(const CohClass& omega, int k, int p) const;

    Subspace lefschetz_kernel(const CohClass& omega, int k) const;

    struct LefschetzReport {
        std::vector<std::pair<int, bool>> degree_iso;  // k in 1..n
        bool satisfied = true;
    };
    LefschetzReport lefschetz_report(const CohClass& omega) const;

  private:
    CochainComplex cx_;
    std::vector<int> betti_;
    std::vector<std::vector<Element>> reps_;
    std::vector<Mat> rep_coords_;       // betti_k x dim_k (chain coords of reps)
    std::vector<Subspace> exact_;       // image subspaces per degree
    Scalar volume_scale_;
};

/* Gysin pushforward: the per-degree maps H^j(N) -> H^{j+codim}(M) adjoint to
 * restriction under the Poincare pairings. restriction[j] : H^j(M) -> H^j(N).
 * Validates nondegeneracy (DegeneratePairing) and multiplicativity of the
 * restriction on basis products (NotRingMap). */
std::vector<Mat> gysin_matrix(const CohomologyRing& ring_M, const CohomologyRing& ring_N,
                              const std::vector<Mat>& restriction, int codim);

}  // namespace cdgaw

#endif
