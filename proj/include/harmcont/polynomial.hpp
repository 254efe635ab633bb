#pragma once

#include <string>
#include <vector>

#include "harmcont/scalar.hpp"

namespace harmcont {

// Univariate polynomial over the exact rationals. coeff(i) is the
// coefficient of x^i; the zero polynomial has no stored coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    static Polynomial x_power(int k, const Rational& scale = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sgn(eval(x)); }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& s) const;
    bool operator==(const Polynomial&) const = default;

    Polynomial derivative() const;
    Polynomial monic() const;

    // Euclidean division; remainder has degree < divisor degree.
    static void divrem(const Polynomial& num, const Polynomial& den, Polynomial& quot,
                       Polynomial& rem);
    Polynomial divided_exactly_by(const Polynomial& den) const;

    std::string to_text() const;  // human form, highest degree first

private:
    void normalize();
    std::vector<Rational> c_;
};

Polynomial gcd_monic(Polynomial a, Polynomial b);

// Square-free factor with its multiplicity in the original polynomial.
struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree, degree >= 1
    int multiplicity = 0;
};

// Yun's algorithm; the product of factor^multiplicity rebuilds the monic
// version of the input.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

// Closed interval with rational endpoints; lo == hi denotes an exactly known
// root.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& squarefree);
    int variations(const Rational& x) const;
    // number of roots in the half-open interval (a, b]
    int count_roots(const Rational& a, const Rational& b) const;

private:
    std::vector<Polynomial> seq_;
};

Rational cauchy_root_bound(const Polynomial& p);

// Disjoint isolating intervals (or exact points) for all real roots of a
// squarefree polynomial, each refined to width <= `width`, sorted ascending.
std::vector<RootInterval> isolate_real_roots(const Polynomial& squarefree,
                                             const Rational& width);

}  // namespace harmcont
