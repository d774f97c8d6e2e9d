#include "cdgaw/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace cdgaw {

std::vector<int> Mono::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask_ >> i & 1u) out.push_back(i);
    return out;
}

bool Mono::operator<(const Mono& o) const {
    uint32_t a = mask_, b = o.mask_;
    while (a && b) {
        int ia = __builtin_ctz(a), ib = __builtin_ctz(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;  // proper prefix is smaller
}

std::pair<int, Mono> wedge_monomials(Mono a, Mono b) {
    if (a.mask() & b.mask()) return {0, Mono()};
    int sign = 1;
    uint32_t bb = b.mask();
    while (bb) {
        int i = __builtin_ctz(bb);
        bb &= bb - 1;
        uint32_t higher = a.mask() >> (i + 1);
        if (__builtin_popcount(higher) & 1) sign = -sign;
    }
    return {sign, Mono(a.mask() | b.mask())};
}

struct Element::CdgaData {
    Field field;
    std::vector<GeneratorDecl> gens;
    std::map<std::string, int> index;
    std::vector<Element> dgen;  // differential images, one per generator
    int max_degree = 0;
};

Cdga Element::algebra() const {
    if (!alg_) throw Error("element has no algebra");
    Cdga holder;
    holder.data_ = alg_;
    return holder;
}

int Element::degree() const {
    if (terms_.empty()) return -1;
    int deg = -1;
    for (auto& [m, c] : terms_) {
        int d = 0;
        for (int i : m.indices()) d += alg_->gens[static_cast<size_t>(i)].degree;
        if (deg < 0) deg = d;
        else if (deg != d) throw DegreeMismatch("element is not homogeneous");
    }
    return deg;
}

bool Element::is_homogeneous() const {
    if (terms_.empty()) return true;
    try {
        degree();
        return true;
    } catch (const DegreeMismatch&) {
        return false;
    }
}

Scalar Element::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? alg_->field.zero() : it->second;
}

static void check_same_algebra(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!a.algebra().same_as(b.algebra())) throw MixedAlgebras("operands belong to different algebras");
}

Element Element::operator+(const Element& o) const {
    if (o.is_zero() && !alg_) return *this;
    if (is_zero() && !alg_) return o;
    check_same_algebra(*this, o);
    auto alg = alg_ ? alg_ : o.alg_;
    std::map<Mono, Scalar> t = terms_;
    for (auto& [m, c] : o.terms_) {
        auto it = t.find(m);
        if (it == t.end()) t.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return Element(alg, std::move(t));
}

Element Element::operator-() const {
    std::map<Mono, Scalar> t;
    for (auto& [m, c] : terms_) t.emplace(m, -c);
    return Element(alg_, std::move(t));
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
    check_same_algebra(*this, o);
    auto alg = alg_ ? alg_ : o.alg_;
    std::map<Mono, Scalar> t;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            auto [sign, m] = wedge_monomials(ma, mb);
            if (sign == 0) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            auto it = t.find(m);
            if (it == t.end()) it = t.emplace(m, c).first;
            else it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    return Element(alg, std::move(t));
}

bool Element::operator==(const Element& o) const {
    if (is_zero() && o.is_zero()) return true;
    check_same_algebra(*this, o);
    return terms_ == o.terms_;
}

Element Element::bar() const {
    if (is_zero()) return *this;
    return degree() % 2 ? -*this : *this;
}

Element Element::conj_coeffs() const {
    std::map<Mono, Scalar> t;
    for (auto& [m, c] : terms_) t.emplace(m, c.conj());
    return Element(alg_, std::move(t));
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        std::string body = neg ? cs.substr(1) : cs;
        bool simple = body == "1";
        bool needs_parens = body.find(' ') != std::string::npos || body.find('z') != std::string::npos;
        if (m.mask() == 0) {
            os << (needs_parens ? "(" + body + ")" : body);
        } else {
            if (!simple) os << (needs_parens ? "(" + body + ")" : body) << "*";
            bool g1 = true;
            for (int i : m.indices()) {
                if (!g1) os << "*";
                os << alg_->gens[static_cast<size_t>(i)].name;
                g1 = false;
            }
        }
        first = false;
    }
    return os.str();
}

Element operator*(const Scalar& c, const Element& x) {
    if (x.is_zero()) return x;
    if (c.is_zero()) return x.algebra().zero();
    std::map<Mono, Scalar> t;
    for (auto& [m, xc] : x.terms()) {
        Scalar p = c * xc;
        if (!p.is_zero()) t.emplace(m, p);
    }
    return x.algebra().element(t);
}

Element wedge(const Element& a, const Element& b) { return a * b; }

Cdga Cdga::make(const Field& f, std::vector<GeneratorDecl> gens) {
    auto d = std::make_shared<Element::CdgaData>();
    d->field = f;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree <= 0 || gens[i].degree % 2 == 0)
            throw ValidationError("generator '" + gens[i].name + "' must have odd positive degree");
        if (d->index.count(gens[i].name)) throw ValidationError("duplicate generator name '" + gens[i].name + "'");
        d->index[gens[i].name] = static_cast<int>(i);
        d->max_degree += gens[i].degree;
    }
    if (gens.size() > 31) throw ValidationError("at most 31 generators supported");
    d->gens = std::move(gens);
    d->dgen.assign(d->gens.size(), Element());
    Cdga a;
    a.data_ = std::move(d);
    return a;
}

Cdga Cdga::with_differential(const std::map<std::string, Element>& images) const {
    auto d = std::make_shared<Element::CdgaData>(*data_);
    Cdga out;
    out.data_ = d;
    for (auto& [name, img] : images) {
        int i = generator_index(name);
        Element adopted = out.adopt(img);
        if (!adopted.is_zero() && adopted.degree() != data_->gens[static_cast<size_t>(i)].degree + 1)
            throw ValidationError("d(" + name + ") is not homogeneous of degree deg+1");
        d->dgen[static_cast<size_t>(i)] = adopted;
    }
    for (size_t i = 0; i < d->gens.size(); ++i) {
        Element dd = out.d(d->dgen[i]);
        if (!dd.is_zero())
            throw ValidationError("d^2 != 0 on generator '" + d->gens[i].name + "': d(d g) = " + dd.str());
    }
    return out;
}

const Field& Cdga::field() const { return data_->field; }
int Cdga::num_generators() const { return static_cast<int>(data_->gens.size()); }
const std::vector<GeneratorDecl>& Cdga::generators() const { return data_->gens; }
int Cdga::max_degree() const { return data_->max_degree; }

int Cdga::generator_index(const std::string& name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) throw UnknownGenerator("'" + name + "'");
    return it->second;
}

Element Cdga::zero() const { return Element(data_, {}); }

Element Cdga::unit() const { return monomial(Mono::unit(), data_->field.one()); }

Element Cdga::gen(int i) const { return monomial(Mono::gen(i), data_->field.one()); }

Element Cdga::gen(const std::string& name) const { return gen(generator_index(name)); }

Element Cdga::monomial(Mono m, const Scalar& c) const {
    if (c.is_zero()) return zero();
    std::map<Mono, Scalar> t;
    t.emplace(m, c);
    return Element(data_, std::move(t));
}

Element Cdga::element(const std::map<Mono, Scalar>& terms) const {
    std::map<Mono, Scalar> t;
    for (auto& [m, c] : terms)
        if (!c.is_zero()) t.emplace(m, c);
    return Element(data_, std::move(t));
}

bool Cdga::compatible_generators(const Cdga& o) const {
    if (data_ == o.data_) return true;
    if (!data_->field.same_as(o.data_->field)) return false;
    if (data_->gens.size() != o.data_->gens.size()) return false;
    for (size_t i = 0; i < data_->gens.size(); ++i)
        if (data_->gens[i].name != o.data_->gens[i].name || data_->gens[i].degree != o.data_->gens[i].degree)
            return false;
    return true;
}

Element Cdga::adopt(const Element& x) const {
    if (x.is_zero()) return zero();
    if (x.alg_ == data_) return x;
    if (!compatible_generators(x.algebra())) throw MixedAlgebras("cannot adopt element: incompatible generators");
    return Element(data_, x.terms_);
}

Element Cdga::d_gen(int i) const { return data_->dgen[static_cast<size_t>(i)]; }

/* Graded Leibniz extension of the generator differential: for a monomial
 * g_{i1}...g_{ik}, d = sum_j (-1)^{deg prefix} g_{i1}..d(g_{ij})..g_{ik}. */
Element Cdga::d(const Element& x) const {
    Element out = zero();
    for (auto& [m, c] : x.terms_) {
        auto idx = m.indices();
        int prefix_deg = 0;
        for (size_t j = 0; j < idx.size(); ++j) {
            const Element& dg = data_->dgen[static_cast<size_t>(idx[j])];
            int gdeg = data_->gens[static_cast<size_t>(idx[j])].degree;
            if (!dg.is_zero()) {
                Mono before, after;
                uint32_t bm = 0, am = 0;
                for (size_t t2 = 0; t2 < j; ++t2) bm |= 1u << idx[t2];
                for (size_t t2 = j + 1; t2 < idx.size(); ++t2) am |= 1u << idx[t2];
                before = Mono(bm);
                after = Mono(am);
                Element term = monomial(before, prefix_deg % 2 ? -c : c) * dg * monomial(after, data_->field.one());
                out += term;
            }
            prefix_deg += gdeg;
        }
    }
    return out;
}

int Cdga::mono_degree(Mono m) const {
    int d = 0;
    for (int i : m.indices()) d += data_->gens[static_cast<size_t>(i)].degree;
    return d;
}

std::vector<Mono> Cdga::monomials_of_degree(int k) const {
    std::vector<Mono> out;
    uint32_t total = 1u << data_->gens.size();
    for (uint32_t m = 0; m < total; ++m)
        if (mono_degree(Mono(m)) == k) out.push_back(Mono(m));
    std::sort(out.begin(), out.end());
    return out;
}

Cdga from_lie_algebra(const Field& f, const LieAlgebraSpec& spec) {
    std::vector<GeneratorDecl> gens;
    for (int i = 0; i < spec.dimension; ++i) gens.push_back({"e" + std::to_string(i + 1), 1, std::nullopt});
    Cdga a0 = Cdga::make(f, gens);
    std::vector<Element> d(static_cast<size_t>(spec.dimension), a0.zero());
    for (auto& [ij, cs] : spec.brackets) {
        auto [i, j] = ij;
        if (i >= j || j >= spec.dimension || i < 0) throw ValidationError("bracket indices must satisfy 0 <= i < j < n");
        if (static_cast<int>(cs.size()) != spec.dimension) throw ValidationError("bracket coefficient vector length");
        for (int k = 0; k < spec.dimension; ++k) {
            if (cs[static_cast<size_t>(k)] == 0) continue;
            d[static_cast<size_t>(k)] -= f.rational(cs[static_cast<size_t>(k)]) * (a0.gen(i) * a0.gen(j));
        }
    }
    std::map<std::string, Element> images;
    for (int k = 0; k < spec.dimension; ++k) images["e" + std::to_string(k + 1)] = d[static_cast<size_t>(k)];
    try {
        return a0.with_differential(images);
    } catch (const ValidationError& e) {
        throw JacobiFailure(std::string("structure constants violate the Jacobi identity: ") + e.what());
    }
}

Element CdgaIsomorphism::apply(const Element& x) const {
    Element out = dst_.zero();
    for (auto& [m, c] : x.terms()) {
        Element term = dst_.monomial(Mono::unit(), c);
        for (int i : m.indices()) term = term * fwd_[static_cast<size_t>(i)];
        out += term;
    }
    return out;
}

Element CdgaIsomorphism::inverse_apply(const Element& x) const {
    Element out = src_.zero();
    for (auto& [m, c] : x.terms()) {
        Element term = src_.monomial(Mono::unit(), c);
        for (int i : m.indices()) term = term * bwd_[static_cast<size_t>(i)];
        out += term;
    }
    return out;
}

CdgaIsomorphism CdgaIsomorphism::inverse() const {
    CdgaIsomorphism r;
    r.src_ = dst_;
    r.dst_ = src_;
    r.fwd_ = bwd_;
    r.bwd_ = fwd_;
    return r;
}

CdgaIsomorphism substitute(const Cdga& src, const Cdga& dst, const std::map<std::string, Element>& images) {
    if (!src.field().same_as(dst.field())) throw MixedFields("substitution between different fields");
    int n = src.num_generators();
    if (dst.num_generators() != n) throw NotInvertible("generator counts differ");
    const Field& f = src.field();

    std::vector<Element> fwd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& g = src.generators()[static_cast<size_t>(i)];
        auto it = images.find(g.name);
        Element img = it != images.end() ? dst.adopt(it->second) : dst.gen(g.name);
        if (!img.is_zero() && img.degree() != g.degree)
            throw ValidationError("image of '" + g.name + "' has wrong degree");
        fwd[static_cast<size_t>(i)] = img;
    }

    /* generator-image matrix restricted to the degree-1 span; higher odd
     * generators must map to single generators of the same degree for the
     * matrix inversion story to stay linear */
    Mat M(f, n, n);
    for (int i = 0; i < n; ++i)
        for (auto& [m, c] : fwd[static_cast<size_t>(i)].terms()) {
            auto idx = m.indices();
            if (idx.size() != 1) throw ValidationError("generator images must be linear in generators");
            M.at(idx[0], i) = c;
        }
    auto Minv = M.inverse();
    if (!Minv) throw NotInvertible("generator-image matrix is singular");

    std::vector<Element> bwd(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Element img = src.zero();
        for (int j = 0; j < n; ++j)
            if (!Minv->at(j, i).is_zero()) img += Minv->at(j, i) * src.gen(j);
        bwd[static_cast<size_t>(i)] = img;
    }

    CdgaIsomorphism iso;
    iso.src_ = src;
    iso.dst_ = dst;
    iso.fwd_ = std::move(fwd);
    iso.bwd_ = std::move(bwd);

    for (int i = 0; i < n; ++i) {
        Element lhs = iso.apply(src.d(src.gen(i)));
        Element rhs = dst.d(iso.apply(src.gen(i)));
        if (!(lhs == rhs))
            throw NotChainMap("substitution does not commute with d on generator '" +
                              src.generators()[static_cast<size_t>(i)].name + "'");
    }
    return iso;
}

CdgaIsomorphism substitute(const Cdga& alg, const std::map<std::string, Element>& images) {
    return substitute(alg, alg, images);
}

Scalar evaluate_on_plane(const Element& x, const Vec& v1, const Vec& v2) {
    if (x.is_zero()) {
        if (v1.empty()) throw DimensionMismatch("cannot infer field from empty data");
        return v1[0].field().zero();
    }
    if (x.degree() != 2) throw DegreeMismatch("evaluate_on_plane needs a homogeneous degree-2 element");
    const Cdga& a = x.algebra();
    if (static_cast<int>(v1.size()) != a.num_generators() || static_cast<int>(v2.size()) != a.num_generators())
        throw DimensionMismatch("plane vectors must have one coordinate per generator");
    Scalar acc = a.field().zero();
    for (auto& [m, c] : x.terms()) {
        auto idx = m.indices();  // i < j, both degree-1 since total degree is 2
        int i = idx[0], j = idx[1];
        acc += c * (v1[static_cast<size_t>(i)] * v2[static_cast<size_t>(j)] -
                    v1[static_cast<size_t>(j)] * v2[static_cast<size_t>(i)]);
    }
    return acc;
}

}  // namespace cdgaw
