#include "montesinos/fraction.hpp"

#include <utility>

namespace montesinos {

ExtGcd ext_gcd(BigInt a, BigInt b) {
    BigInt old_r = std::move(a), r = std::move(b);
    BigInt old_u = 1, u = 0;
    BigInt old_v = 0, v = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_u -= q * u;
        std::swap(old_u, u);
        old_v -= q * v;
        std::swap(old_v, v);
    }
    return {old_r, old_u, old_v};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    ExtGcd e = ext_gcd(((a % m) + m) % m, m);
    if (e.g != 1)
        throw std::domain_error("mod_inverse: arguments not coprime");
    BigInt inv = e.u % m;
    if (inv < 0)
        inv += m;
    return inv;
}

Fraction::Fraction(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    reduce();
}

void Fraction::reduce() {
    if (den_ == 0) {
        if (num_ == 0)
            throw std::domain_error("Fraction: 0/0 is not a value");
        num_ = 1;  // the single point at infinity
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

namespace {
void require_finite(const Fraction& f, const char* op) {
    if (f.is_infinite())
        throw std::domain_error(std::string("Fraction: infinity has no ") + op);
}
}  // namespace

Fraction Fraction::operator-() const {
    require_finite(*this, "negation");
    return Fraction(-num_, den_);
}

Fraction Fraction::operator+(const Fraction& o) const {
    require_finite(*this, "sum");
    require_finite(o, "sum");
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    require_finite(*this, "difference");
    require_finite(o, "difference");
    return Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    require_finite(*this, "product");
    require_finite(o, "product");
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    require_finite(*this, "quotient");
    require_finite(o, "quotient");
    if (o.num_ == 0)
        throw std::domain_error("Fraction: division by zero");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
    if (is_infinite() && o.is_infinite())
        return std::strong_ordering::equal;
    if (is_infinite())
        return std::strong_ordering::greater;
    if (o.is_infinite())
        return std::strong_ordering::less;
    // dens positive, so cross-multiplication preserves order
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Fraction::floor() const {
    require_finite(*this, "floor");
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_)
        --q;
    return q;
}

std::string Fraction::str() const {
    return num_.str() + "/" + den_.str();
}

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Fraction(BigInt(text), BigInt(1));
        return Fraction(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Fraction: cannot parse '" + text + "'");
    }
}

bool is_farey_neighbor(const Fraction& a, const Fraction& b) {
    BigInt det = a.numerator() * b.denominator() - a.denominator() * b.numerator();
    return det == 1 || det == -1;
}

std::vector<BigInt> continued_fraction(const Fraction& a) {
    if (a.is_infinite())
        throw std::domain_error("continued_fraction: infinite slope");
    std::vector<BigInt> terms;
    if (a.is_zero())
        return terms;
    BigInt p = a.numerator(), q = a.denominator();
    while (q != 0) {
        BigInt fl = p / q;
        if (p < 0 && fl * q != p)
            --fl;
        terms.push_back(fl);
        BigInt rem = p - fl * q;
        p = q;
        q = rem;
    }
    return terms;
}

Fraction from_continued_fraction(const std::vector<BigInt>& terms) {
    if (terms.empty())
        return Fraction();
    Fraction value(terms.back());
    for (auto it = std::next(terms.rbegin()); it != terms.rend(); ++it)
        value = Fraction(*it) + Fraction(value.denominator(), value.numerator());
    return value;
}

std::pair<Fraction, Fraction> stern_brocot_parents(const Fraction& a) {
    if (a.is_infinite())
        throw std::domain_error("stern_brocot_parents: infinite slope");
    const BigInt& p = a.numerator();
    const BigInt& q = a.denominator();
    if (q == 1) {
        if (p > 0)
            return {Fraction(p - 1), Fraction::infinity()};
        if (p < 0)
            return {Fraction(p + 1), Fraction::infinity()};
        return {Fraction(-1), Fraction::infinity()};
    }
    // Solve p*s - q*r = +-1 with 0 < s < q; the two solutions are the parents.
    BigInt s1 = mod_inverse(p, q);
    BigInt r1 = (p * s1 - 1) / q;
    BigInt s2 = q - s1;
    BigInt r2 = (p * s2 + 1) / q;
    return {Fraction(r1, s1), Fraction(r2, s2)};
}

}  // namespace montesinos
