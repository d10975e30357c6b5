#include "supell/exact.hpp"

#include <cstdlib>
#include <sstream>

namespace supell {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("malformed rational '" + text + "'");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational '" + text + "'");
        }
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

bool is_square_free(long d) {
    if (d == 0) return false;
    long v = std::labs(d);
    for (long p = 2; p * p <= v; ++p) {
        if (v % (p * p) == 0) return false;
    }
    return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_square_free(d)) throw std::invalid_argument("radicand " + std::to_string(d) + " is not square-free");
    if (d == 1) {
        // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
    }
}

long QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b_ == 0) return y.b_ == 0 ? (x.d_ != 1 ? x.d_ : y.d_) : y.d_;
    if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
    throw RadicandMismatch("mixed radicands " + std::to_string(x.d_) + " and " + std::to_string(y.d_));
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.d_ = QuadExt::common_radicand(x, y);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    QuadExt r;
    r.d_ = QuadExt::common_radicand(x, y);
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * r.d_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return r;
}

QuadExt QuadExt::inverse() const {
    // (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - d b^2); the norm vanishes only at 0
    // because d is square-free and not 1 whenever b != 0.
    Rational norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0) throw std::domain_error("division by zero in Q(sqrt d)");
    QuadExt r;
    r.d_ = d_;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return x.b_ == 0 || x.d_ == y.d_;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return supell::to_string(a_);
    std::string rad = "sqrt(" + std::to_string(d_) + ")";
    std::string bpart;
    if (b_ == 1) {
        bpart = rad;
    } else if (b_ == -1) {
        bpart = "-" + rad;
    } else {
        bpart = supell::to_string(b_) + rad;
    }
    if (a_ == 0) return bpart;
    return supell::to_string(a_) + (b_ > 0 ? "+" : "") + bpart;
}

Poly::Poly(std::map<unsigned, QuadExt> coefficients) {
    for (auto& [e, c] : coefficients) add_term(e, c);
}

Poly Poly::constant(const QuadExt& c) { return monomial(0, c); }

Poly Poly::monomial(unsigned exponent, const QuadExt& c) {
    Poly p;
    p.add_term(exponent, c);
    return p;
}

void Poly::add_term(unsigned exponent, const QuadExt& c) {
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(exponent, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

bool Poly::is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

unsigned Poly::degree() const {
    if (coeffs_.empty()) throw std::domain_error("the zero polynomial has no degree");
    return coeffs_.rbegin()->first;
}

std::optional<unsigned> Poly::degree_if_nonzero() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

QuadExt Poly::coefficient(unsigned exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? QuadExt() : it->second;
}

QuadExt Poly::leading_coefficient() const {
    if (coeffs_.empty()) throw std::domain_error("the zero polynomial has no leading coefficient");
    return coeffs_.rbegin()->second;
}

Poly Poly::monic() const {
    if (coeffs_.empty()) return *this;
    const QuadExt inv = leading_coefficient().inverse();
    Poly r;
    for (const auto& [e, c] : coeffs_) r.add_term(e, c * inv);
    return r;
}

Poly operator+(const Poly& p, const Poly& q) {
    Poly r = p;
    for (const auto& [e, c] : q.coeffs_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : coeffs_) r.add_term(e, -c);
    return r;
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [e1, c1] : p.coeffs_) {
        for (const auto& [e2, c2] : q.coeffs_) r.add_term(e1 + e2, c1 * c2);
    }
    return r;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        bool compound = !c.is_rational() && c.rational_part() != 0;
        if (compound) cs = "(" + cs + ")";
        bool negative = !compound && cs.front() == '-';
        if (!first) out << (negative ? "-" : "+");
        else if (negative) out << "-";
        if (negative) cs.erase(0, 1);
        if (e == 0) {
            out << cs;
        } else {
            if (cs != "1") out << cs;
            out << "x";
            if (e > 1) out << "^" << e;
        }
        first = false;
    }
    return out.str();
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const unsigned dd = divisor.degree();
    const QuadExt lead_inv = divisor.leading_coefficient().inverse();
    Poly quotient;
    Poly remainder = dividend;
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const unsigned shift = remainder.degree() - dd;
        Poly step = Poly::monomial(shift, remainder.leading_coefficient() * lead_inv);
        quotient = quotient + step;
        remainder = remainder - step * divisor;
    }
    return {quotient, remainder};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    Poly a = p;
    Poly b = q;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        // monic remainders keep coefficient growth in check
        b = r.monic();
    }
    return a.monic();
}

Poly derivative(const Poly& p) {
    std::map<unsigned, QuadExt> out;
    for (const auto& [e, c] : p.coefficients()) {
        if (e > 0) out.emplace(e - 1, c * QuadExt(static_cast<long>(e)));
    }
    return Poly(std::move(out));
}

bool is_separable(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("separability of the zero polynomial");
    if (p.is_constant()) throw std::domain_error("separability of a constant polynomial");
    return poly_gcd(p, derivative(p)).is_constant();
}

}  // namespace supell
