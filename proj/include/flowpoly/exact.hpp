#pragma once

// Exact arithmetic primitives shared by every other module: arbitrary-precision
// integers/rationals (GMP-backed), combinatorial numbers, univariate polynomials
// over Q with exact interpolation, and small exact linear algebra.
//
// There is no floating point anywhere in this library.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flowpoly {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when two independent computation routes disagree. This always means
// a bug, never bad input; the CLI maps it to exit code 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// C(n, k). Zero for k < 0, n < 0, or k > n; the generalized (negative upper
// argument) binomial is deliberately not used.
Int binomial(const Int& n, const Int& k);

// total! / prod(parts[i]!). Throws std::invalid_argument if any part is
// negative or the parts do not sum to total.
Int multinomial(const Int& total, const std::vector<Int>& parts);

Int factorial(unsigned long n);

// i-th Catalan number C(2i, i)/(i+1).
Int catalan(unsigned long i);

// b^e for e >= 0.
Int pow_int(const Int& base, unsigned long exp);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

// "p/q" with q > 0 reduced, or plain "p" when q == 1. Parser accepts both.
std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

// Univariate polynomial over Q, coefficients stored ascending by degree.
// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    static Polynomial constant(const Rat& c);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of t^i (zero beyond the stored degree).
    const Rat& coefficient(std::size_t i) const;
    Rat leading_coefficient() const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat eval(const Rat& x) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    std::vector<std::string> to_strings() const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Unique polynomial of degree <= points.size()-1 through the given points.
// Throws std::invalid_argument on duplicate abscissae.
Polynomial interpolate(const std::vector<std::pair<Int, Int>>& points);

// Rank of a rational matrix (Gaussian elimination, exact).
int matrix_rank(std::vector<std::vector<Rat>> rows);

// Dimension of the affine hull of a point set.
int affine_rank(const std::vector<std::vector<Rat>>& points);

}  // namespace flowpoly
