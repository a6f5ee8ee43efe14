#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace hypmet {

/// Euclidean point/vector in R^n, 2 <= n <= kMaxDim, value semantics,
/// no heap allocation. Mixed-dimension arithmetic throws.
class Point {
public:
    static constexpr int kMaxDim = 8;

    Point() = default;
    Point(double x, double y) : n_(2) { c_[0] = x; c_[1] = y; }
    Point(double x, double y, double z) : n_(3) { c_[0] = x; c_[1] = y; c_[2] = z; }

    Point(std::initializer_list<double> coords) {
        if (coords.size() < 2 || coords.size() > kMaxDim)
            throw std::invalid_argument("Point: dimension must be in [2,8]");
        n_ = static_cast<int>(coords.size());
        int i = 0;
        for (double v : coords) c_[i++] = v;
    }

    static Point from_vector(const std::vector<double>& coords) {
        if (coords.size() < 2 || coords.size() > kMaxDim)
            throw std::invalid_argument("Point: dimension must be in [2,8]");
        Point p;
        p.n_ = static_cast<int>(coords.size());
        for (int i = 0; i < p.n_; ++i) p.c_[i] = coords[i];
        return p;
    }

    static Point zero(int n) {
        if (n < 2 || n > kMaxDim) throw std::invalid_argument("Point: dimension must be in [2,8]");
        Point p;
        p.n_ = n;
        return p;
    }

    int dim() const { return n_; }
    double operator[](int i) const { return c_[i]; }
    double& operator[](int i) { return c_[i]; }
    double last() const { return c_[n_ - 1]; }

    bool finite() const {
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(c_[i])) return false;
        return true;
    }

    double norm_sq() const {
        double s = 0;
        for (int i = 0; i < n_; ++i) s += c_[i] * c_[i];
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        os << '(';
        for (int i = 0; i < p.n_; ++i) os << (i ? "," : "") << p.c_[i];
        return os << ')';
    }

private:
    std::array<double, kMaxDim> c_{};
    int n_ = 0;
};

inline void check_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

inline Point operator+(const Point& a, const Point& b) {
    check_same_dim(a, b);
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
    return r;
}

inline Point operator-(const Point& a, const Point& b) {
    check_same_dim(a, b);
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
    return r;
}

inline Point operator*(double s, const Point& a) {
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] *= s;
    return r;
}

inline Point operator-(const Point& a) { return -1.0 * a; }

inline double dot(const Point& a, const Point& b) {
    check_same_dim(a, b);
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double dist_sq(const Point& a, const Point& b) {
    check_same_dim(a, b);
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist_sq(a, b)); }

inline Point normalized(const Point& a, double eps = 0.0) {
    double n = a.norm();
    if (n <= eps) throw std::invalid_argument("normalized: zero vector");
    return (1.0 / n) * a;
}

/// Angle at z in the triangle (x,z,y), in [0,pi]. Kahan's two-argument
/// arctangent form; stable near 0 and pi, unlike acos of the dot product.
inline double angle_at(const Point& x, const Point& z, const Point& y) {
    check_same_dim(x, z);
    check_same_dim(y, z);
    Point u = x - z;
    Point v = y - z;
    double nu = u.norm();
    double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("angle_at: vertex coincides with endpoint");
    Point a = nv * u - nu * v;
    Point b = nv * u + nu * v;
    return 2.0 * std::atan2(a.norm(), b.norm());
}

} // namespace hypmet
