#ifndef CDGAW_ALGEBRA_HPP
#define CDGAW_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cdgaw/linalg.hpp"

namespace cdgaw {

struct GeneratorDecl {
    std::string name;
    int degree = 1;  // odd
    std::optional<int> weight;  // character weight for diagonal actions
};

/* Square-free monomial in odd generators: strictly increasing index set,
 * stored as a bitmask. The empty monomial is the unit. */
class Mono {
  public:
    Mono() = default;
    explicit Mono(uint32_t mask) : mask_(mask) {}
    static Mono unit() { return Mono(0); }
    static Mono gen(int i) { return Mono(1u << i); }

    uint32_t mask() const { return mask_; }
    bool contains(int i) const { return mask_ >> i & 1u; }
    int count() const { return __builtin_popcount(mask_); }
    std::vector<int> indices() const;

    /* lexicographic order on the increasing index sequences */
    bool operator<(const Mono& o) const;
    bool operator==(const Mono& o) const { return mask_ == o.mask_; }

  private:
    uint32_t mask_ = 0;
};

/* concatenation with Koszul sign; {0, .} if a generator repeats.
 * All generators are odd, so each transposition contributes -1. */
std::pair<int, Mono> wedge_monomials(Mono a, Mono b);

class Cdga;

/* Sparse scalar combination of monomials over a fixed algebra. Immutable in
 * spirit: all operations return new elements. */
class Element {
  public:
    Element() = default;

    Cdga algebra() const;
    const std::map<Mono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /* degree of a homogeneous element; DegreeMismatch if mixed, -1 for zero */
    int degree() const;
    bool is_homogeneous() const;
    Scalar coeff(Mono m) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;  // wedge
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    /* (-1)^{|x|} x for homogeneous x; zero passes through */
    Element bar() const;
    /* apply the field's conjugation automorphism to every coefficient */
    Element conj_coeffs() const;

    std::string str() const;

  private:
    friend class Cdga;
    struct CdgaData;
    Element(std::shared_ptr<const CdgaData> alg, std::map<Mono, Scalar> t)
        : alg_(std::move(alg)), terms_(std::move(t)) {}
    std::shared_ptr<const CdgaData> alg_;
    std::map<Mono, Scalar> terms_;
};

Element operator*(const Scalar& c, const Element& x);
Element wedge(const Element& a, const Element& b);

/* Free graded-commutative algebra on odd generators with a differential. */
class Cdga {
  public:
    Cdga() = default;

    /* algebra with zero differential */
    static Cdga make(const Field& f, std::vector<GeneratorDecl> gens);
    /* same generators, differential d(name) = image; validates homogeneity of
     * degree deg(g)+1 and d^2 = 0 on every generator. Elements passed in may
     * come from any algebra with identical generators over the same field. */
    Cdga with_differential(const std::map<std::string, Element>& images) const;

    const Field& field() const;
    int num_generators() const;
    const std::vector<GeneratorDecl>& generators() const;
    int generator_index(const std::string& name) const;  // UnknownGenerator
    int max_degree() const;  // sum of generator degrees

    Element zero() const;
    Element unit() const;
    Element gen(int i) const;
    Element gen(const std::string& name) const;
    Element monomial(Mono m, const Scalar& c) const;
    Element element(const std::map<Mono, Scalar>& terms) const;
    /* rebuild an element of a generator-compatible algebra over this one */
    Element adopt(const Element& x) const;

    Element d(const Element& x) const;
    Element d_gen(int i) const;

    int mono_degree(Mono m) const;
    /* all monomials of total degree k, lexicographic order */
    std::vector<Mono> monomials_of_degree(int k) const;

    bool same_as(const Cdga& o) const { return data_ == o.data_; }
    bool compatible_generators(const Cdga& o) const;

  private:
    friend class Element;
    std::shared_ptr<const Element::CdgaData> data_;
};

/* Lie algebra by structure constants: [e_i, e_j] = sum_k c^k_{ij} e_k, i < j. */
struct LieAlgebraSpec {
    int dimension = 0;
    /* (i, j) with i < j (0-based) -> coefficient vector of length dimension */
    std::map<std::pair<int, int>, std::vector<Rational>> brackets;
};

/* Chevalley-Eilenberg: degree-1 generators e1..en, d e^k = -sum c^k_{ij} e^i e^j.
 * d^2 = 0 is exactly the Jacobi identity; JacobiFailure otherwise. */
Cdga from_lie_algebra(const Field& f, const LieAlgebraSpec& spec);

/* Degree-1 generator substitution between (or within) algebras. */
class CdgaIsomorphism {
  public:
    const Cdga& source() const { return src_; }
    const Cdga& target() const { return dst_; }
    Element apply(const Element& x) const;
    Element inverse_apply(const Element& x) const;
    CdgaIsomorphism inverse() const;

  private:
    friend CdgaIsomorphism substitute(const Cdga&, const Cdga&, const std::map<std::string, Element>&);
    Cdga src_, dst_;
    /* images of generators, forward and backward */
    std::vector<Element> fwd_, bwd_;
};

/* images: src generator name -> degree-1 element of dst. Requires an
 * invertible generator matrix (NotInvertible) and d-commutation (NotChainMap).
 * For non-degree-1 generators the image must be the generator itself. */
CdgaIsomorphism substitute(const Cdga& src, const Cdga& dst, const std::map<std::string, Element>& images);
CdgaIsomorphism substitute(const Cdga& alg, const std::map<std::string, Element>& images);

/* x(v1, v2) for a homogeneous degree-2 element of an algebra whose relevant
 * generators have degree 1; vectors in the generator basis. */
Scalar evaluate_on_plane(const Element& x, const Vec& v1, const Vec& v2);

}  // namespace cdgaw

#endif
