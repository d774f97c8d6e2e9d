#ifndef CDGAW_SYMMETRY_HPP
#define CDGAW_SYMMETRY_HPP

#include <variant>

#include "cdgaw/algebra.hpp"

namespace cdgaw {

/* Diagonal action of Z/m: each generator scaled by xi^weight for a fixed
 * primitive m-th root xi. Pure integer bookkeeping: the invariant span is the
 * weight-0 monomial span regardless of whether xi lives in the field. */
struct DiagonalAction {
    int order = 1;
    std::map<std::string, int> weights;
};

/* One generator of a cyclic group acting by a degree-1 substitution. */
struct LinearAction {
    int order = 1;
    std::map<std::string, Element> images;
};

using GroupAction = std::variant<DiagonalAction, LinearAction>;

struct ActionReport {
    bool valid = true;
    std::vector<std::string> failures;
};

/* order, d-equivariance; multiplicativity holds by construction for
 * substitutions and additively for diagonal weights */
ActionReport validate_action(const Cdga& alg, const GroupAction& act);

/* d-stable and product-stable graded subspace with a chosen per-degree basis */
class InvariantSubcomplex {
  public:
    const Cdga& algebra() const { return alg_; }
    const std::vector<Element>& basis(int degree) const;
    int dim(int degree) const;

    static InvariantSubcomplex whole(const Cdga& alg);
    static InvariantSubcomplex from_bases(const Cdga& alg, std::vector<std::vector<Element>> bases,
                                          bool validate = true);

  private:
    Cdga alg_;
    std::vector<std::vector<Element>> basis_;  // by degree 0..max_degree
};

/* Diagonal: weight-0 monomials. Linear: image of the averaging projector
 * (1/m) sum rho^j. ActionIncompatible if validation fails. */
InvariantSubcomplex invariant_subcomplex(const Cdga& alg, const GroupAction& act);

int monomial_weight(const Cdga& alg, const DiagonalAction& act, Mono m);

}  // namespace cdgaw

#endif
