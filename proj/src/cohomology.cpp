#include "cdgaw/cohomology.hpp"

#include <algorithm>

namespace cdgaw {

CochainComplex CochainComplex::make(const Cdga& alg) { return make(alg, InvariantSubcomplex::whole(alg)); }

CochainComplex CochainComplex::make(const Cdga& alg, const InvariantSubcomplex& sub) {
    CochainComplex cx;
    cx.alg_ = alg;
    int top = alg.max_degree();
    const Field& f = alg.field();
    cx.dims_.resize(static_cast<size_t>(top) + 1);
    cx.basis_.resize(static_cast<size_t>(top) + 1);
    cx.mono_of_basis_.resize(static_cast<size_t>(top) + 1);
    cx.d_.resize(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) {
        cx.basis_[static_cast<size_t>(k)] = sub.basis(k);
        cx.dims_[static_cast<size_t>(k)] = static_cast<int>(cx.basis_[static_cast<size_t>(k)].size());
        auto monos = alg.monomials_of_degree(k);
        Mat mb(f, static_cast<int>(monos.size()), cx.dims_[static_cast<size_t>(k)]);
        for (int c = 0; c < mb.cols(); ++c) {
            const Element& x = cx.basis_[static_cast<size_t>(k)][static_cast<size_t>(c)];
            for (size_t r = 0; r < monos.size(); ++r) mb.at(static_cast<int>(r), c) = x.coeff(monos[r]);
        }
        cx.mono_of_basis_[static_cast<size_t>(k)] = std::move(mb);
    }
    for (int k = 0; k <= top; ++k) {
        int dk = cx.dims_[static_cast<size_t>(k)];
        int dk1 = k + 1 <= top ? cx.dims_[static_cast<size_t>(k + 1)] : 0;
        Mat D(f, dk1, dk);
        for (int c = 0; c < dk; ++c) {
            Element dx = alg.d(cx.basis_[static_cast<size_t>(k)][static_cast<size_t>(c)]);
            if (dx.is_zero()) continue;
            Vec v = cx.coords(k + 1, dx);
            for (int r = 0; r < dk1; ++r) D.at(r, c) = v[static_cast<size_t>(r)];
        }
        cx.d_[static_cast<size_t>(k)] = std::move(D);
    }
    // d_{k+1} d_k = 0 comes with the CDGA validation; assert cheaply anyway
    for (int k = 0; k + 1 <= top; ++k) {
        Mat z = cx.d_[static_cast<size_t>(k + 1)] * cx.d_[static_cast<size_t>(k)];
        for (int r = 0; r < z.rows(); ++r)
            for (int c = 0; c < z.cols(); ++c)
                if (!z.at(r, c).is_zero()) throw ValidationError("d o d != 0 in the cochain complex");
    }
    return cx;
}

int CochainComplex::dim(int k) const {
    if (k < 0 || k > top()) return 0;
    return dims_[static_cast<size_t>(k)];
}

const Mat& CochainComplex::d_matrix(int k) const {
    static Mat dummy;
    if (k < 0 || k > top()) throw DimensionMismatch("degree out of range");
    return d_[static_cast<size_t>(k)];
}

const std::vector<Element>& CochainComplex::basis(int k) const {
    static const std::vector<Element> empty;
    if (k < 0 || k > top()) return empty;
    return basis_[static_cast<size_t>(k)];
}

Element CochainComplex::from_coords(int k, const Vec& v) const {
    Element out = alg_.zero();
    const auto& b = basis(k);
    if (v.size() != b.size()) throw DimensionMismatch("coordinate length");
    for (size_t i = 0; i < b.size(); ++i)
        if (!v[i].is_zero()) out += v[i] * b[i];
    return out;
}

Vec CochainComplex::coords(int k, const Element& x) const {
    const Field& f = alg_.field();
    if (k < 0 || k > top()) {
        if (x.is_zero()) return {};
        throw DimensionMismatch("degree out of range");
    }
    auto monos = alg_.monomials_of_degree(k);
    Vec rhs;
    rhs.reserve(monos.size());
    for (Mono m : monos) rhs.push_back(x.coeff(m));
    auto sol = solve(mono_of_basis_[static_cast<size_t>(k)], rhs);
    if (!sol) throw ValidationError("element lies outside the subcomplex in degree " + std::to_string(k));
    return *sol;
}

bool CochainComplex::in_span(int k, const Element& x) const {
    if (x.is_zero()) return true;
    auto monos = alg_.monomials_of_degree(k);
    Vec rhs;
    rhs.reserve(monos.size());
    for (Mono m : monos) rhs.push_back(x.coeff(m));
    return static_cast<bool>(solve(mono_of_basis_[static_cast<size_t>(k)], rhs));
}

CohomologyRing CohomologyRing::build(const Cdga& alg) { return build(alg, InvariantSubcomplex::whole(alg)); }

CohomologyRing CohomologyRing::build(const Cdga& alg, const InvariantSubcomplex& sub,
                                     const std::map<int, std::vector<Element>>& preferred_bases) {
    CohomologyRing ring;
    ring.cx_ = CochainComplex::make(alg, sub);
    ring.volume_scale_ = alg.field().one();
    int top = ring.cx_.top();
    const Field& f = alg.field();
    ring.betti_.resize(static_cast<size_t>(top) + 1, 0);
    ring.reps_.resize(static_cast<size_t>(top) + 1);
    ring.rep_coords_.resize(static_cast<size_t>(top) + 1);
    ring.exact_.resize(static_cast<size_t>(top) + 1);

    for (int k = 0; k <= top; ++k) {
        Subspace K = kernel(ring.cx_.d_matrix(k));
        Subspace I = k > 0 ? image(ring.cx_.d_matrix(k - 1)) : Subspace::zero(f, ring.cx_.dim(k));
        ring.exact_[static_cast<size_t>(k)] = I;
        // pivots(I) is a subset of pivots(K); kernel rows whose pivot is not an
        // image pivot are canonical representatives of the quotient
        auto pivot_of = [](const Mat& m, int r) {
            for (int c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) return c;
            return -1;
        };
        std::vector<int> ipiv;
        for (int r = 0; r < I.dim(); ++r) ipiv.push_back(pivot_of(I.basis(), r));
        std::vector<Vec> reps;
        for (int r = 0; r < K.dim(); ++r) {
            int p = pivot_of(K.basis(), r);
            if (std::find(ipiv.begin(), ipiv.end(), p) == ipiv.end()) reps.push_back(K.basis().row(r));
        }
        ring.betti_[static_cast<size_t>(k)] = static_cast<int>(reps.size());
        Mat rc = Mat::from_rows(f, reps, ring.cx_.dim(k));
        ring.rep_coords_[static_cast<size_t>(k)] = rc;
        for (const Vec& v : reps) ring.reps_[static_cast<size_t>(k)].push_back(ring.cx_.from_coords(k, v));
    }

    for (auto& [k, elems] : preferred_bases) {
        if (k < 0 || k > top) throw DimensionMismatch("preferred basis degree out of range");
        if (static_cast<int>(elems.size()) != ring.betti_[static_cast<size_t>(k)])
            throw ValidationError("preferred basis size != betti number in degree " + std::to_string(k));
        std::vector<Vec> coords;
        Mat C(f, ring.betti_[static_cast<size_t>(k)], ring.betti_[static_cast<size_t>(k)]);
        for (size_t i = 0; i < elems.size(); ++i) {
            CohClass c = ring.class_of(elems[i], k);
            for (int j = 0; j < C.cols(); ++j) C.at(static_cast<int>(i), j) = c.coords[static_cast<size_t>(j)];
            coords.push_back(ring.cx_.coords(k, elems[i]));
        }
        if (!C.inverse()) throw ValidationError("preferred basis does not span H^" + std::to_string(k));
        ring.reps_[static_cast<size_t>(k)] = elems;
        ring.rep_coords_[static_cast<size_t>(k)] = Mat::from_rows(f, coords, ring.cx_.dim(k));
    }
    return ring;
}

int CohomologyRing::betti(int k) const {
    if (k < 0 || k > top()) return 0;
    return betti_[static_cast<size_t>(k)];
}

std::vector<int> CohomologyRing::betti() const { return betti_; }

int CohomologyRing::top_nonzero() const {
    for (int k = top(); k >= 0; --k)
        if (betti_[static_cast<size_t>(k)] > 0) return k;
    return 0;
}

const Element& CohomologyRing::representative(int k, int i) const {
    return reps_[static_cast<size_t>(k)][static_cast<size_t>(i)];
}

Element CohomologyRing::representative(const CohClass& c) const {
    Element out = algebra().zero();
    if (c.degree < 0 || c.degree > top()) return out;
    for (size_t i = 0; i < c.coords.size(); ++i)
        if (!c.coords[i].is_zero()) out += c.coords[i] * reps_[static_cast<size_t>(c.degree)][i];
    return out;
}

CohClass CohomologyRing::zero_class(int degree) const {
    return {degree, zero_vec(field(), betti(degree))};
}

CohClass CohomologyRing::basis_class(int degree, int i) const {
    return {degree, unit_vec(field(), betti(degree), i)};
}

CohClass CohomologyRing::class_of(const Element& x) const {
    if (x.is_zero()) throw DegreeMismatch("class_of(0) needs an explicit degree");
    return class_of(x, x.degree());
}

CohClass CohomologyRing::class_of(const Element& x, int degree) const {
    if (x.is_zero()) return zero_class(degree);
    if (degree > top()) throw DimensionMismatch("degree above the top of the complex");
    if (!algebra().d(x).is_zero()) throw ValidationError("class_of: element is not closed");
    Vec xc = cx_.coords(degree, x);
    // solve [reps^T | image-basis^T] (lambda; mu) = x
    const Mat& R = rep_coords_[static_cast<size_t>(degree)];
    const Subspace& I = exact_[static_cast<size_t>(degree)];
    int dk = cx_.dim(degree);
    Mat A(field(), dk, R.rows() + I.dim());
    for (int r = 0; r < dk; ++r) {
        for (int c = 0; c < R.rows(); ++c) A.at(r, c) = R.at(c, r);
        for (int c = 0; c < I.dim(); ++c) A.at(r, R.rows() + c) = I.basis().at(c, r);
    }
    auto sol = solve(A, xc);
    if (!sol) throw ValidationError("class_of: element is not in ker(d) of the subcomplex");
    Vec lambda(sol->begin(), sol->begin() + R.rows());
    return {degree, std::move(lambda)};
}

CohClass CohomologyRing::cup(const CohClass& a, const CohClass& b) const {
    int deg = a.degree + b.degree;
    if (deg > top()) return zero_class(deg);  // product lands beyond the top: zero
    Element prod = representative(a) * representative(b);
    return class_of(prod, deg);
}

CohClass CohomologyRing::cup_power(const CohClass& a, int p) const {
    CohClass acc = basis_class(0, 0);  // the unit class
    if (betti(0) != 1) throw ValidationError("H^0 is not one-dimensional");
    for (int i = 0; i < p; ++i) acc = cup(acc, a);
    return acc;
}

Subspace CohomologyRing::exact_subspace(int k) const {
    if (k < 0 || k > top()) return Subspace::zero(field(), 0);
    return exact_[static_cast<size_t>(k)];
}

Element CohomologyRing::primitive(const Element& x) const {
    if (x.is_zero()) return algebra().zero();
    int k = x.degree();
    if (k == 0 || k > top()) throw NotExact("degree-" + std::to_string(k) + " element cannot be exact");
    Vec xc = cx_.coords(k, x);
    auto sol = solve(cx_.d_matrix(k - 1), xc);
    if (!sol) throw NotExact("element has nonzero cohomology class");
    return cx_.from_coords(k - 1, *sol);
}

bool CohomologyRing::is_exact(const Element& x) const {
    if (x.is_zero()) return true;
    int k = x.degree();
    if (k == 0 || k > top()) return false;
    Vec xc = cx_.coords(k, x);
    return static_cast<bool>(solve(cx_.d_matrix(k - 1), xc));
}

Scalar CohomologyRing::pair(const CohClass& a, const CohClass& b) const {
    int t = top_nonzero();
    if (betti(t) != 1) throw TopNotOneDimensional("top cohomology has dimension " + std::to_string(betti(t)));
    if (a.degree + b.degree != t) return field().zero();
    CohClass p = cup(a, b);
    return volume_scale_ * p.coords[0];
}

Mat CohomologyRing::pairing_matrix(const CohClass& omega, int k, int p) const {
    int t = top_nonzero();
    if (betti(t) != 1) throw TopNotOneDimensional("top cohomology has dimension " + std::to_string(betti(t)));
    int k2 = t - k - 2 * p;
    if (k2 < 0) throw DimensionMismatch("degree/power exceed the top degree");
    CohClass wp = cup_power(omega, p);
    Mat B(field(), betti(k), betti(k2));
    for (int i = 0; i < betti(k); ++i) {
        CohClass xi = cup(basis_class(k, i), wp);
        for (int j = 0; j < betti(k2); ++j) {
            CohClass pr = cup(xi, basis_class(k2, j));
            B.at(i, j) = volume_scale_ * pr.coords[0];
        }
    }
    return B;
}

Mat CohomologyRing::poincare_matrix(int k) const {
    int t = top_nonzero();
    if (betti(t) != 1) throw TopNotOneDimensional("top cohomology has dimension " + std::to_string(betti(t)));
    int k2 = t - k;
    Mat B(field(), betti(k), betti(k2));
    for (int i = 0; i < betti(k); ++i)
        for (int j = 0; j < betti(k2); ++j) {
            CohClass pr = cup(basis_class(k, i), basis_class(k2, j));
            B.at(i, j) = volume_scale_ * pr.coords[0];
        }
    return B;
}

Mat CohomologyRing::cup_power_matrix(const CohClass& omega, int k, int p) const {
    CohClass wp = cup_power(omega, p);
    int k2 = k + 2 * p;
    Mat M(field(), betti(k2), betti(k));
    for (int i = 0; i < betti(k); ++i) {
        CohClass y = cup(wp, basis_class(k, i));
        for (int r = 0; r < betti(k2); ++r) M.at(r, i) = y.coords[static_cast<size_t>(r)];
    }
    return M;
}

Subspace CohomologyRing::lefschetz_kernel(const CohClass& omega, int k) const {
    int n = top_nonzero() / 2;
    return kernel(cup_power_matrix(omega, k, n - k));
}

CohomologyRing::LefschetzReport CohomologyRing::lefschetz_report(const CohClass& omega) const {
    LefschetzReport rep;
    int n = top_nonzero() / 2;
    for (int k = 1; k <= n; ++k) {
        Mat M = cup_power_matrix(omega, k, n - k);
        bool iso = betti(k) == betti(2 * n - k) && M.rank() == betti(k);
        rep.degree_iso.emplace_back(k, iso);
        if (!iso) rep.satisfied = false;
    }
    return rep;
}

std::vector<Mat> gysin_matrix(const CohomologyRing& ring_M, const CohomologyRing& ring_N,
                              const std::vector<Mat>& restriction, int codim) {
    const Field& f = ring_M.field();
    int tM = ring_M.top_nonzero(), tN = ring_N.top_nonzero();
    if (tM - tN != codim) throw DimensionMismatch("codimension does not match the top degrees");

    auto rest = [&](int j) -> Mat {
        if (j >= 0 && j < static_cast<int>(restriction.size())) return restriction[static_cast<size_t>(j)];
        return Mat(f, ring_N.betti(j), ring_M.betti(j));
    };

    /* restriction must be a ring map: rest(1) = 1 and multiplicative on basis
     * products */
    {
        if (ring_M.betti(0) != 1 || ring_N.betti(0) != 1) throw NotRingMap("rings must be connected");
        Mat r0 = rest(0);
        if (!(r0.rows() == 1 && r0.cols() == 1 && r0.at(0, 0) == f.one())) throw NotRingMap("restriction(1) != 1");
        for (int p2 = 0; p2 <= tN; ++p2)
            for (int q = p2; p2 + q <= tN; ++q)
                for (int i = 0; i < ring_M.betti(p2); ++i)
                    for (int j = 0; j < ring_M.betti(q); ++j) {
                        CohClass prod = ring_M.cup(ring_M.basis_class(p2, i), ring_M.basis_class(q, j));
                        Vec lhs = rest(p2 + q).apply(prod.coords);
                        Vec ra = rest(p2).apply(ring_M.basis_class(p2, i).coords);
                        Vec rb = rest(q).apply(ring_M.basis_class(q, j).coords);
                        CohClass rc = ring_N.cup({p2, ra}, {q, rb});
                        for (size_t s = 0; s < lhs.size(); ++s)
                            if (lhs[s] != rc.coords[s])
                                throw NotRingMap("restriction fails multiplicativity on basis product in degrees " +
                                                 std::to_string(p2) + "," + std::to_string(q));
                    }
    }

    std::vector<Mat> out;
    for (int j = 0; j <= tN; ++j) {
        int jM = j + codim;
        int jc = tM - jM;  // complementary degree in M; equals tN - j
        Mat G(f, ring_M.betti(jM), ring_N.betti(j));
        if (ring_N.betti(j) > 0 && ring_M.betti(jM) > 0) {
            Mat BM = ring_M.poincare_matrix(jM);  // betti(jM) x betti(jc)
            if (BM.rows() != BM.cols() || BM.rank() != BM.rows())
                throw DegeneratePairing("pairing on H^" + std::to_string(jM) + "(M) is singular");
            Mat BN2 = ring_N.poincare_matrix(j);  // betti_N(j) x betti_N(jc)
            if (BN2.rows() != BN2.cols() || BN2.rank() != BN2.rows())
                throw DegeneratePairing("pairing on H^" + std::to_string(j) + "(N) is singular");
            /* pairing_M(G beta_b, alpha_a) = pairing_N(beta_b, rest(alpha_a)):
             * BM^T g_b = (BN2 R) row b */
            Mat R = rest(jc);
            Mat RHS = BN2 * R;  // betti_N(j) x betti_M(jc)
            Mat BMt = BM.transposed();
            for (int b = 0; b < ring_N.betti(j); ++b) {
                Vec rhs = RHS.row(b);
                auto g = solve(BMt, rhs);
                if (!g) throw DegeneratePairing("gysin adjunction system inconsistent");
                for (int r = 0; r < G.rows(); ++r) G.at(r, b) = (*g)[static_cast<size_t>(r)];
            }
        }
        out.push_back(std::move(G));
    }
    return out;
}

}  // namespace cdgaw
