#include "cdgaw/symmetry.hpp"

namespace cdgaw {

int monomial_weight(const Cdga& alg, const DiagonalAction& act, Mono m) {
    int w = 0;
    for (int i : m.indices()) {
        const auto& g = alg.generators()[static_cast<size_t>(i)];
        auto it = act.weights.find(g.name);
        int gw = it != act.weights.end() ? it->second : g.weight.value_or(0);
        w += gw;
    }
    int r = w % act.order;
    return r < 0 ? r + act.order : r;
}

namespace {

ActionReport validate_diagonal(const Cdga& alg, const DiagonalAction& act) {
    ActionReport rep;
    auto fail = [&](const std::string& s) {
        rep.valid = false;
        rep.failures.push_back(s);
    };
    if (act.order < 1) fail("order must be positive");
    for (const auto& g : alg.generators()) {
        if (!act.weights.count(g.name) && !g.weight) fail("no weight for generator '" + g.name + "'");
    }
    if (!rep.valid) return rep;
    for (int i = 0; i < alg.num_generators(); ++i) {
        const auto& g = alg.generators()[static_cast<size_t>(i)];
        int gw = monomial_weight(alg, act, Mono::gen(i));
        for (const auto& [m, c] : alg.d_gen(i).terms()) {
            int tw = monomial_weight(alg, act, m);
            if (tw != gw)
                fail("d(" + g.name + ") has a term of weight " + std::to_string(tw) + " != weight(" + g.name +
                     ") = " + std::to_string(gw));
        }
    }
    return rep;
}

ActionReport validate_linear(const Cdga& alg, const LinearAction& act, CdgaIsomorphism* out_iso) {
    ActionReport rep;
    auto fail = [&](const std::string& s) {
        rep.valid = false;
        rep.failures.push_back(s);
    };
    if (act.order < 1) {
        fail("order must be positive");
        return rep;
    }
    try {
        CdgaIsomorphism iso = substitute(alg, act.images);  // checks invertibility + d-equivariance
        for (int i = 0; i < alg.num_generators(); ++i) {
            Element x = alg.gen(i);
            for (int j = 0; j < act.order; ++j) x = iso.apply(x);
            if (!(x == alg.gen(i))) {
                fail("action does not have order dividing " + std::to_string(act.order) + " on generator '" +
                     alg.generators()[static_cast<size_t>(i)].name + "'");
            }
        }
        if (out_iso && rep.valid) *out_iso = iso;
    } catch (const NotInvertible& e) {
        fail(e.what());
    } catch (const NotChainMap& e) {
        fail(e.what());
    } catch (const ValidationError& e) {
        fail(e.what());
    }
    return rep;
}

}  // namespace

ActionReport validate_action(const Cdga& alg, const GroupAction& act) {
    if (std::holds_alternative<DiagonalAction>(act)) return validate_diagonal(alg, std::get<DiagonalAction>(act));
    return validate_linear(alg, std::get<LinearAction>(act), nullptr);
}

const std::vector<Element>& InvariantSubcomplex::basis(int degree) const {
    static const std::vector<Element> empty;
    if (degree < 0 || degree >= static_cast<int>(basis_.size())) return empty;
    return basis_[static_cast<size_t>(degree)];
}

int InvariantSubcomplex::dim(int degree) const { return static_cast<int>(basis(degree).size()); }

InvariantSubcomplex InvariantSubcomplex::whole(const Cdga& alg) {
    std::vector<std::vector<Element>> bases(static_cast<size_t>(alg.max_degree()) + 1);
    for (int k = 0; k <= alg.max_degree(); ++k)
        for (Mono m : alg.monomials_of_degree(k))
            bases[static_cast<size_t>(k)].push_back(alg.monomial(m, alg.field().one()));
    return from_bases(alg, std::move(bases), false);
}

InvariantSubcomplex InvariantSubcomplex::from_bases(const Cdga& alg, std::vector<std::vector<Element>> bases,
                                                    bool validate) {
    InvariantSubcomplex s;
    s.alg_ = alg;
    s.basis_ = std::move(bases);
    s.basis_.resize(static_cast<size_t>(alg.max_degree()) + 1);
    if (validate) {
        const Field& f = alg.field();
        auto span_of = [&](int k) {
            auto monos = alg.monomials_of_degree(k);
            std::vector<Vec> rows;
            for (const Element& x : s.basis(k)) {
                Vec v;
                v.reserve(monos.size());
                for (Mono m : monos) v.push_back(x.coeff(m));
                rows.push_back(std::move(v));
            }
            return Subspace::span(f, rows, static_cast<int>(monos.size()));
        };
        std::vector<Subspace> spans;
        for (int k = 0; k <= alg.max_degree(); ++k) spans.push_back(span_of(k));
        auto in_span = [&](const Element& x, int k) {
            if (x.is_zero()) return true;
            if (k > alg.max_degree()) return false;
            auto monos = alg.monomials_of_degree(k);
            Vec v;
            for (Mono m : monos) v.push_back(x.coeff(m));
            return spans[static_cast<size_t>(k)].contains_vector(v);
        };
        for (int k = 0; k <= alg.max_degree(); ++k) {
            for (const Element& x : s.basis(k)) {
                if (!in_span(alg.d(x), k + 1) && !alg.d(x).is_zero())
                    throw ValidationError("subcomplex is not d-stable in degree " + std::to_string(k));
                for (int l = k; k + l <= alg.max_degree(); ++l)
                    for (const Element& y : s.basis(l))
                        if (!(x * y).is_zero() && !in_span(x * y, k + l))
                            throw ValidationError("subcomplex is not product-stable in degrees " +
                                                  std::to_string(k) + "," + std::to_string(l));
            }
        }
    }
    return s;
}

InvariantSubcomplex invariant_subcomplex(const Cdga& alg, const GroupAction& act) {
    if (std::holds_alternative<DiagonalAction>(act)) {
        const auto& da = std::get<DiagonalAction>(act);
        ActionReport rep = validate_diagonal(alg, da);
        if (!rep.valid) throw ActionIncompatible(rep.failures.front());
        std::vector<std::vector<Element>> bases(static_cast<size_t>(alg.max_degree()) + 1);
        for (int k = 0; k <= alg.max_degree(); ++k)
            for (Mono m : alg.monomials_of_degree(k))
                if (monomial_weight(alg, da, m) == 0)
                    bases[static_cast<size_t>(k)].push_back(alg.monomial(m, alg.field().one()));
        return InvariantSubcomplex::from_bases(alg, std::move(bases), false);
    }

    const auto& la = std::get<LinearAction>(act);
    CdgaIsomorphism iso;
    ActionReport rep = validate_linear(alg, la, &iso);
    if (!rep.valid) throw ActionIncompatible(rep.failures.front());
    const Field& f = alg.field();
    Scalar inv_m = f.integer(la.order).inv();
    std::vector<std::vector<Element>> bases(static_cast<size_t>(alg.max_degree()) + 1);
    for (int k = 0; k <= alg.max_degree(); ++k) {
        auto monos = alg.monomials_of_degree(k);
        std::vector<Vec> rows;
        for (Mono m : monos) {
            Element x = alg.monomial(m, f.one());
            Element acc = alg.zero(), cur = x;
            for (int j = 0; j < la.order; ++j) {
                acc += cur;
                cur = iso.apply(cur);
            }
            Element p = inv_m * acc;
            Vec v;
            v.reserve(monos.size());
            for (Mono mm : monos) v.push_back(p.coeff(mm));
            rows.push_back(std::move(v));
        }
        Subspace img = Subspace::span(f, rows, static_cast<int>(monos.size()));
        for (int r = 0; r < img.dim(); ++r) {
            std::map<Mono, Scalar> terms;
            for (size_t c = 0; c < monos.size(); ++c) {
                Scalar s2 = img.basis().at(r, static_cast<int>(c));
                if (!s2.is_zero()) terms.emplace(monos[c], s2);
            }
            bases[static_cast<size_t>(k)].push_back(alg.element(terms));
        }
    }
    return InvariantSubcomplex::from_bases(alg, std::move(bases), true);
}

}  // namespace cdgaw
