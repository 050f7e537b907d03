#include "softmotion/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace softmotion {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Magnitude of the rounding error expected when evaluating p at x with Horner's scheme.
double rounding_scale(const std::vector<double>& c, double x) {
    double scale = 0.0;
    const double ax = std::abs(x);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        scale = scale * ax + std::abs(*it);
    }
    return 32.0 * kEps * scale;
}

double refine_bracketed(const Polynomial& p, double lo, double hi, double p_lo) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double p_mid = p(mid);
        if (p_mid == 0.0) {
            return mid;
        }
        if ((p_mid < 0.0) == (p_lo < 0.0)) {
            lo = mid;
            p_lo = p_mid;
        } else {
            hi = mid;
        }
    }
    // Newton polish, kept only while it stays inside the bracket and improves the residual.
    const Polynomial dp = p.derivative();
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 3; ++iter) {
        const double slope = dp(x);
        if (slope == 0.0) {
            break;
        }
        const double next = x - p(x) / slope;
        if (!(next >= lo && next <= hi) || std::abs(p(next)) >= std::abs(p(x))) {
            break;
        }
        x = next;
    }
    return x;
}

std::vector<double> roots_in(const Polynomial& p, double lo, double hi) {
    const int degree = p.degree();
    if (degree <= 0) {
        return {};
    }
    const auto& c = p.coefficients();
    if (degree == 1) {
        const double root = -c[0] / c[1];
        if (root >= lo && root <= hi) {
            return {root};
        }
        return {};
    }

    std::vector<double> points{lo};
    for (double critical : roots_in(p.derivative(), lo, hi)) {
        if (critical > points.back()) {
            points.push_back(critical);
        }
    }
    if (hi > points.back()) {
        points.push_back(hi);
    }

    std::vector<double> values(points.size());
    std::vector<bool> zero(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        values[i] = p(points[i]);
        zero[i] = std::abs(values[i]) <= rounding_scale(c, points[i]);
    }

    std::vector<double> roots;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (zero[i]) {
            roots.push_back(points[i]);
        }
        if (i + 1 < points.size() && !zero[i] && !zero[i + 1] &&
            (values[i] < 0.0) != (values[i + 1] < 0.0)) {
            roots.push_back(refine_bracketed(p, points[i], points[i + 1], values[i]));
        }
    }
    return roots;
}

}  // namespace

int Polynomial::degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[static_cast<std::size_t>(i)] != 0.0) {
            return i;
        }
    }
    return -1;
}

double Polynomial::operator()(double x) const {
    double value = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        value = value * x + *it;
    }
    return value;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) {
        return Polynomial{};
    }
    std::vector<double> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d[i - 1] = static_cast<double>(i) * c_[i];
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::trimmed(double relative) const {
    double largest = 0.0;
    for (double value : c_) {
        largest = std::max(largest, std::abs(value));
    }
    std::vector<double> kept = c_;
    while (!kept.empty() && std::abs(kept.back()) <= relative * largest) {
        kept.pop_back();
    }
    return Polynomial(std::move(kept));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<double> out(std::max(lhs.c_.size(), rhs.c_.size()), 0.0);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) out[i] += lhs.c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-1.0) * rhs; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.c_.empty() || rhs.c_.empty()) {
        return Polynomial{};
    }
    std::vector<double> out(lhs.c_.size() + rhs.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            out[i + j] += lhs.c_[i] * rhs.c_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(double scale, const Polynomial& p) {
    std::vector<double> out = p.c_;
    for (double& value : out) value *= scale;
    return Polynomial(std::move(out));
}

std::vector<double> solve_real_roots(const Polynomial& p) {
    const Polynomial q = p.trimmed();
    const int degree = q.degree();
    if (degree < 0) {
        throw std::invalid_argument("solve_real_roots: zero polynomial");
    }
    if (degree == 0) {
        return {};
    }
    // Cauchy bound on root magnitude.
    const auto& c = q.coefficients();
    double bound = 0.0;
    for (int i = 0; i < degree; ++i) {
        bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
    }
    bound += 1.0;
    return roots_in(q, -bound, bound);
}

std::vector<double> solve_real_roots(const Polynomial& p, double lo, double hi) {
    const Polynomial q = p.trimmed();
    if (q.degree() < 0) {
        throw std::invalid_argument("solve_real_roots: zero polynomial");
    }
    if (!(lo <= hi)) {
        return {};
    }
    return roots_in(q, lo, hi);
}

}  // namespace softmotion
