#pragma once

// Exact arithmetic over Q and Q(sqrt d), plus univariate polynomials over
// those fields. Nothing in here touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace supell {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" (optional leading '-') into a reduced rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// True if d is a square-free integer (1 and -1 included, 0 excluded).
bool is_square_free(long d);

class RadicandMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An element a + b*sqrt(d) of Q(sqrt d).
///
/// The radicand d is square-free; d == 1 denotes plain Q and forces b == 0.
/// Binary operations require matching radicands, except that an element with
/// b == 0 is a rational and adopts the radicand of the other operand.
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, long d);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExt operator-() const;
    QuadExt inverse() const;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    /// Values compare equal when both components agree; the radicand only
    /// matters when the radical part is nonzero.
    friend bool operator==(const QuadExt& x, const QuadExt& y);

    /// "3", "-1/2", "2sqrt(-3)", "1+2sqrt(-3)".
    std::string to_string() const;

  private:
    static long common_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_{0};
    Rational b_{0};
    long d_ = 1;
};

/// Sparse univariate polynomial with QuadExt coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has no degree.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::map<unsigned, QuadExt> coefficients);

    static Poly constant(const QuadExt& c);
    static Poly monomial(unsigned exponent, const QuadExt& c = QuadExt(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    /// Throws std::domain_error for the zero polynomial.
    unsigned degree() const;
    std::optional<unsigned> degree_if_nonzero() const;
    QuadExt coefficient(unsigned exponent) const;
    QuadExt leading_coefficient() const;
    const std::map<unsigned, QuadExt>& coefficients() const { return coeffs_; }

    Poly monic() const;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly operator-() const;
    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

    std::string to_string() const;

  private:
    void add_term(unsigned exponent, const QuadExt& c);

    std::map<unsigned, QuadExt> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const Poly& dividend, const Poly& divisor);

/// Monic gcd. gcd(p, 0) is the monic scaling of p; both zero is an error.
Poly poly_gcd(const Poly& p, const Poly& q);

Poly derivative(const Poly& p);

/// True iff gcd(p, p') is constant. Rejects zero and constant input.
bool is_separable(const Poly& p);

}  // namespace supell
