#pragma once

#include <span>
#include <vector>

namespace softmotion {

// Dense polynomial, coefficients in ascending order of degree: c[0] + c[1] x + ...
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coefficients) : c_(coefficients) {}
    explicit Polynomial(std::vector<double> coefficients) : c_(std::move(coefficients)) {}

    static Polynomial constant(double value) { return Polynomial{value}; }
    static Polynomial identity() { return Polynomial{0.0, 1.0}; }

    [[nodiscard]] const std::vector<double>& coefficients() const { return c_; }
    [[nodiscard]] int degree() const;  // -1 for the zero polynomial
    [[nodiscard]] double operator()(double x) const;
    [[nodiscard]] Polynomial derivative() const;

    // Drops leading coefficients whose magnitude is at most `relative` times the largest one.
    [[nodiscard]] Polynomial trimmed(double relative = 0.0) const;

    friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(double scale, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p) { return -1.0 * p; }

   private:
    std::vector<double> c_;
};

// All real roots of `p` in ascending order. Roots of even multiplicity are reported once.
//
// Critical points (roots of p', found recursively) split the line into monotone pieces;
// each piece with a sign change is bracketed and refined by bisection with a final Newton
// polish. Throws std::invalid_argument for the zero polynomial.
std::vector<double> solve_real_roots(const Polynomial& p);

// Same, restricted to [lo, hi].
std::vector<double> solve_real_roots(const Polynomial& p, double lo, double hi);

}  // namespace softmotion
