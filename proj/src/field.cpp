#include "cdgaw/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cdgaw {

namespace {

using Poly = std::vector<Rational>;  // ascending degree, no canonical trim required

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly scale(const Rational& c, const Poly& a) {
    if (c == 0) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    return r;
}

/* division with remainder by a monic divisor */
Poly rem(Poly a, const Poly& m) {
    trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        trim(a);
        if (a.size() > dm && a.back() == 0) trim(a);
    }
    return a;
}

/* extended Euclid: returns (g, s) with s*a = g mod m, g the monic gcd(a, m) */
std::pair<Poly, Poly> half_ext_gcd(Poly a, Poly m) {
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly s0 = {}, s1 = {Rational(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rr = r0;
        size_t d1 = r1.size() - 1;
        Rational lead1 = r1.back();
        while (rr.size() >= r1.size() && !rr.empty()) {
            Rational c = rr.back() / lead1;
            size_t shift = rr.size() - 1 - d1;
            if (q.size() < shift + 1) q.resize(shift + 1, Rational(0));
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rr[shift + i] -= c * r1[i];
            trim(rr);
        }
        Poly s2 = add(s0, scale(Rational(-1), mul(q, s1)));
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rational inv_lead = 1 / r0.back();
        r0 = scale(inv_lead, r0);
        s0 = scale(inv_lead, s0);
    }
    return {r0, s0};
}

/* substitute polynomial q(z) into p, reduce mod m */
Poly compose_mod(const Poly& p, const Poly& q, const Poly& m) {
    Poly acc = {};
    for (size_t i = p.size(); i-- > 0;) {
        acc = rem(mul(acc, q), m);
        if (p[i] != 0) acc = add(acc, {p[i]});
    }
    return acc;
}

}  // namespace

struct Field::Data {
    FieldSpec spec;
    int deg;
    Poly m;     // minimal polynomial, ascending
    Poly conj;  // image of z, identity if not specified
};

static std::vector<Rational> canon(Poly p, int deg) {
    p.resize(static_cast<size_t>(deg), Rational(0));
    for (auto& c : p) c.canonicalize();
    return p;
}

Field Field::make(const FieldSpec& spec) {
    auto d = std::make_shared<Data>();
    d->spec = spec;
    d->m = spec.minimal_polynomial;
    trim(d->m);
    if (d->m.size() < 2) throw ValidationError("minimal polynomial must have degree >= 1");
    if (d->m.back() != 1) throw ValidationError("minimal polynomial must be monic");
    d->deg = static_cast<int>(d->m.size()) - 1;
    if (d->deg >= 2) {
        // reject rational roots p/q with p | m0, q | lead (monic: q = 1); also test 0
        // full irreducibility testing is out of scope and documented as user responsibility
        Rational m0 = d->m.front();
        if (m0 == 0) throw ValidationError("minimal polynomial has root 0, reducible");
        mpz_class num = m0.get_num(), den = m0.get_den();
        mpz_class p0 = num * den;  // integer rescale not needed for the simple candidates below
        // test candidates +-(divisors of numerator of m0) over divisors of lcm of denominators:
        // keep it simple and exact: test all +-p/q with p | num(m0 scaled), bounded search
        // Scale m to integer coefficients first.
        mpz_class lcm = 1;
        for (auto& c : d->m) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
        std::vector<mpz_class> zi;
        for (auto& c : d->m) zi.push_back(mpz_class(c * lcm));
        mpz_class a0 = abs(zi.front()), an = abs(zi.back());
        auto divisors = [](mpz_class n) {
            std::vector<mpz_class> out;
            for (mpz_class k = 1; k * k <= n; ++k)
                if (n % k == 0) {
                    out.push_back(k);
                    out.push_back(n / k);
                }
            return out;
        };
        for (const auto& p : divisors(a0))
            for (const auto& q : divisors(an))
                for (int sgn : {1, -1}) {
                    Rational root(sgn * p, q);
                    root.canonicalize();
                    Rational val = 0;
                    for (size_t i = d->m.size(); i-- > 0;) val = val * root + d->m[i];
                    if (val == 0)
                        throw ValidationError("minimal polynomial has rational root " + root.get_str() +
                                              ", not irreducible");
                }
    }
    if (spec.conjugation_image) {
        d->conj = *spec.conjugation_image;
        trim(d->conj);
        d->conj = rem(d->conj, d->m);
        Poly twice = compose_mod(d->conj, d->conj, d->m);
        Poly z = d->deg > 1 ? Poly{Rational(0), Rational(1)} : Poly{};
        if (twice != z) throw ValidationError("conjugation image applied twice does not equal z");
    } else {
        d->conj = d->deg > 1 ? Poly{Rational(0), Rational(1)} : Poly{};
    }
    Field f;
    f.data_ = std::move(d);
    return f;
}

Field Field::default_field() {
    FieldSpec s;
    s.minimal_polynomial = {Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
    s.conjugation_image = {{Rational(0), Rational(1), Rational(0), Rational(-1)}};
    return make(s);
}

Field Field::rationals() {
    FieldSpec s;
    s.minimal_polynomial = {Rational(0), Rational(1)};  // m(x) = x
    return make(s);
}

int Field::degree() const { return data_->deg; }
const FieldSpec& Field::spec() const { return data_->spec; }

Scalar Field::zero() const { return Scalar(*this, std::vector<Rational>(data_->deg, Rational(0))); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long n) const {
    std::vector<Rational> c(data_->deg, Rational(0));
    c[0] = Rational(n);
    return Scalar(*this, std::move(c));
}

Scalar Field::rational(const Rational& q) const {
    std::vector<Rational> c(data_->deg, Rational(0));
    c[0] = q;
    c[0].canonicalize();
    return Scalar(*this, std::move(c));
}

Scalar Field::generator() const {
    Poly z = data_->deg > 1 ? Poly{Rational(0), Rational(1)} : Poly{};
    return Scalar(*this, canon(std::move(z), data_->deg));
}

Scalar Field::from_coeffs(std::vector<Rational> c) const {
    Poly p = std::move(c);
    p = rem(std::move(p), data_->m);
    return Scalar(*this, canon(std::move(p), data_->deg));
}

Scalar Field::imaginary_unit() const {
    Scalar z3 = generator().pow(3);
    if (!(z3 * z3 == integer(-1))) throw ValidationError("field does not contain i as z^3");
    return z3;
}

Scalar Field::sqrt3() const {
    Scalar r = integer(2) * generator() - generator().pow(3);
    if (!(r * r == integer(3))) throw ValidationError("field does not contain sqrt(3) as 2z - z^3");
    return r;
}

bool Scalar::is_zero() const {
    for (auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

Scalar Scalar::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Scalar(field_, std::move(c));
}

static void require_same_field(const Scalar& a, const Scalar& b) {
    if (!a.field().same_as(b.field())) throw MixedFields("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(*this, o);
    std::vector<Rational> c(c_);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] += o.c_[i];
        c[i].canonicalize();
    }
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(*this, o);
    Poly p = mul(Poly(c_.begin(), c_.end()), Poly(o.c_.begin(), o.c_.end()));
    p = rem(std::move(p), field_.data_->m);
    return Scalar(field_, canon(std::move(p), field_.data_->deg));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(*this, o);
    return c_ == o.c_;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    Poly a(c_.begin(), c_.end());
    trim(a);
    auto [g, s] = half_ext_gcd(a, field_.data_->m);
    if (g.size() != 1) throw ValidationError("element not invertible: gcd with m nontrivial (m reducible?)");
    Poly r = scale(1 / g[0], s);
    r = rem(std::move(r), field_.data_->m);
    return Scalar(field_, canon(std::move(r), field_.data_->deg));
}

Scalar Scalar::conj() const {
    Poly r = compose_mod(Poly(c_.begin(), c_.end()), field_.data_->conj, field_.data_->m);
    return Scalar(field_, canon(std::move(r), field_.data_->deg));
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    Scalar acc = field_.one(), base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool need_coeff = (i == 0) || a != 1;
        if (need_coeff) {
            bool frac = a.get_den() != 1;
            if (frac && i > 0) os << "(" << a.get_str() << ")";
            else os << a.get_str();
        }
        if (i >= 1) {
            os << "z";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

/* ---- scalar literal parser ---- */

namespace {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarLexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
};

Rational parse_rational(ScalarLexer& lx) {
    lx.skip_ws();
    std::string num;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        num += lx.s[lx.pos++];
    if (num.empty()) throw ParseError("expected digits in scalar literal");
    std::string den;
    if (lx.peek() == '/') {
        lx.get();
        lx.skip_ws();
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            den += lx.s[lx.pos++];
        if (den.empty()) throw ParseError("expected denominator digits");
    }
    Rational r(num + (den.empty() ? "" : "/" + den));
    r.canonicalize();
    return r;
}

}  // namespace

Scalar Field::parse(const std::string& text) const {
    ScalarLexer lx(text);
    std::vector<Rational> acc(static_cast<size_t>(degree()), Rational(0));
    bool any = false;
    int sign = 1;
    if (lx.peek() == '+' || lx.peek() == '-') sign = (lx.get() == '-') ? -1 : 1;
    while (true) {
        Rational coeff(1);
        bool saw_coeff = false;
        if (lx.peek() == '(') {
            lx.get();
            if (lx.peek() == '+' || lx.peek() == '-') coeff = (lx.get() == '-') ? Rational(-1) : Rational(1);
            coeff *= parse_rational(lx);
            if (lx.peek() != ')') throw ParseError("expected ')' in scalar literal");
            lx.get();
            saw_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = parse_rational(lx);
            saw_coeff = true;
        }
        size_t power = 0;
        if (lx.peek() == 'z') {
            lx.get();
            power = 1;
            if (lx.peek() == '^') {
                lx.get();
                lx.skip_ws();
                std::string digits;
                while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                    digits += lx.s[lx.pos++];
                if (digits.empty()) throw ParseError("expected exponent digits after '^'");
                power = std::stoul(digits);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected rational or 'z' in scalar literal");
        }
        Poly term(power + 1, Rational(0));
        term[power] = sign * coeff;
        Poly reduced = rem(std::move(term), data_->m);
        for (size_t i = 0; i < reduced.size(); ++i) acc[i] += reduced[i];
        any = true;
        if (lx.eof()) break;
        char op = lx.get();
        if (op == '+') sign = 1;
        else if (op == '-') sign = -1;
        else throw ParseError(std::string("unexpected character '") + op + "' in scalar literal");
    }
    if (!any) throw ParseError("empty scalar literal");
    for (auto& c : acc) c.canonicalize();
    return Scalar(*this, std::move(acc));
}

}  // namespace cdgaw
