#include "octavia/uhp.hpp"

#include <cmath>

#include "octavia/error.hpp"

namespace octavia::uhp {

using algebra::conj;
using algebra::inner;
using algebra::norm_sq;
using hyperweyl::TokenKind;

namespace {

FloatElem real_elem(int dim, double x) {
    FloatElem e(dim);
    e.c[0] = x;
    return e;
}

}  // namespace

UhpPoint UhpPoint::make(const std::vector<double>& u, double v) {
    require(algebra::valid_dim(static_cast<int>(u.size())), Status::DimensionMismatch, "u must have dim 1, 2, 4, 8 or 16");
    require(v > 0 && std::isfinite(v), Status::DomainError, "v must be positive");
    return {FloatElem::from_vector(u), v};
}

Hyperboloid embed(const UhpPoint& z) {
    require(z.v > 0, Status::DomainError, "v must be positive");
    return {z.v + norm_sq(z.u) / z.v, 1.0 / z.v, (1.0 / z.v) * z.u};
}

UhpPoint unembed(const Hyperboloid& h) {
    require(h.xm > 0, Status::DomainError, "x- must be positive");
    return {(1.0 / h.xm) * h.x, 1.0 / h.xm};
}

double hyperboloid_residual(const Hyperboloid& h) { return -h.xp * h.xm + norm_sq(h.x) + 1.0; }

double distance(const UhpPoint& z1, const UhpPoint& z2) {
    double du = norm_sq(z1.u - z2.u);
    double d = std::sqrt(du + (z1.v - z2.v) * (z1.v - z2.v));
    double ds = std::sqrt(du + (z1.v + z2.v) * (z1.v + z2.v));
    return 2.0 * std::log((ds + d) / (2.0 * std::sqrt(z1.v * z2.v)));
}

double distance_arcosh(const UhpPoint& z1, const UhpPoint& z2) {
    double d2 = norm_sq(z1.u - z2.u) + (z1.v - z2.v) * (z1.v - z2.v);
    return std::acosh(1.0 + d2 / (2.0 * z1.v * z2.v));
}

double lambda(const UhpPoint& z1, const UhpPoint& z2) {
    return (norm_sq(z1.u - z2.u) + (z1.v - z2.v) * (z1.v - z2.v)) / (4.0 * z1.v * z2.v);
}

double volume_density(const UhpPoint& z) { return std::pow(z.v, -(z.dim() + 1)); }

UhpPoint act_token(const hyperweyl::Token& t, const UhpPoint& z) {
    switch (t.kind) {
        case TokenKind::Inv: {
            double d = norm_sq(z.u) + z.v * z.v;
            return {(-1.0 / d) * conj(z.u), z.v / d};
        }
        case TokenKind::Trans:
            require(t.elem.dim() == z.dim(), Status::DimensionMismatch, "token and point differ in dimension");
            return {z.u + FloatElem::from(t.elem), z.v};
        case TokenKind::Rot: {
            require(t.elem.dim() == z.dim(), Status::DimensionMismatch, "token and point differ in dimension");
            FloatElem e = FloatElem::from(t.elem);
            double n = norm_sq(e);
            return {(1.0 / n) * ((e * z.u) * e), z.v / n};
        }
    }
    fail(Status::Internal, "unknown token");
}

UhpPoint act_word(const hyperweyl::GroupWord& w, const UhpPoint& z) {
    UhpPoint y = z;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) y = act_token(*it, y);
    return y;
}

UhpPoint act_word_hyperboloid(const hyperweyl::GroupWord& w, const UhpPoint& z) {
    Hyperboloid h = embed(z);
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        const auto& t = *it;
        switch (t.kind) {
            case TokenKind::Inv: h = {h.xm, h.xp, -conj(h.x)}; break;
            case TokenKind::Trans: {
                FloatElem y = FloatElem::from(t.elem);
                h = {h.xp + 2.0 * inner(h.x, y) + h.xm * norm_sq(y), h.xm, h.x + h.xm * y};
                break;
            }
            case TokenKind::Rot: {
                FloatElem e = FloatElem::from(t.elem);
                double n = norm_sq(e);
                h = {n * h.xp, n * h.xm, (e * h.x) * e};
                break;
            }
        }
    }
    return unembed(h);
}

namespace {

using Mat = std::vector<std::vector<double>>;

Mat matmul(const Mat& a, const Mat& b) {
    const size_t n = a.size();
    Mat c(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Mat token_jacobian(const hyperweyl::Token& t, const UhpPoint& z) {
    const int n = z.dim();
    Mat j(n + 1, std::vector<double>(n + 1, 0.0));
    switch (t.kind) {
        case TokenKind::Trans:
            for (int i = 0; i <= n; ++i) j[i][i] = 1.0;
            break;
        case TokenKind::Rot: {
            FloatElem e = FloatElem::from(t.elem);
            double s = 1.0 / norm_sq(e);
            for (int k = 0; k < n; ++k) {
                FloatElem b(n);
                b.c[k] = 1.0;
                FloatElem img = (e * b) * e;
                for (int i = 0; i < n; ++i) j[i][k] = s * img.c[i];
            }
            j[n][n] = s;
            break;
        }
        case TokenKind::Inv: {
            const FloatElem& u = z.u;
            const double v = z.v;
            const double d = norm_sq(u) + v * v;
            FloatElem ub = conj(u);
            for (int k = 0; k < n; ++k) {
                FloatElem ek(n);
                ek.c[k] = 1.0;
                FloatElem col = (-1.0 / d) * conj(ek) + (2.0 * u.c[k] / (d * d)) * ub;
                for (int i = 0; i < n; ++i) j[i][k] = col.c[i];
                j[n][k] = -2.0 * v * u.c[k] / (d * d);
            }
            for (int i = 0; i < n; ++i) j[i][n] = 2.0 * v * ub.c[i] / (d * d);
            j[n][n] = 1.0 / d - 2.0 * v * v / (d * d);
            break;
        }
    }
    return j;
}

}  // namespace

std::vector<std::vector<double>> jacobian(const hyperweyl::GroupWord& w, const UhpPoint& z) {
    const int n = z.dim();
    Mat j(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) j[i][i] = 1.0;
    UhpPoint y = z;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        j = matmul(token_jacobian(*it, y), j);
        y = act_token(*it, y);
    }
    return j;
}

double metric_pullback_defect(const hyperweyl::GroupWord& w, const UhpPoint& z) {
    auto j = jacobian(w, z);
    UhpPoint y = act_word(w, z);
    const double k = (y.v / z.v) * (y.v / z.v);
    const size_t m = j.size();
    double defect = 0.0;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            double s = 0.0;
            for (size_t i = 0; i < m; ++i) s += j[i][a] * j[i][b];
            defect = std::max(defect, std::fabs(s - (a == b ? k : 0.0)) / k);
        }
    return defect;
}

// ---------------------------------------------------------------- matrices

FMat2 FMat2::from(const hyperweyl::Mat2& m) {
    return {FloatElem::from(m.a), FloatElem::from(m.b), FloatElem::from(m.c), FloatElem::from(m.d)};
}

FMat2 operator*(const FMat2& x, const FMat2& y) {
    require(x.a.dim <= 4, Status::DomainError, "2x2 matrices need an associative algebra");
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

double det_ss_dagger(const FMat2& s) {
    return norm_sq(s.a) * norm_sq(s.d) + norm_sq(s.b) * norm_sq(s.c) - 2.0 * (s.a * conj(s.c) * s.d * conj(s.b)).c[0];
}

FMat2 inverse(const FMat2& s) {
    double det = det_ss_dagger(s);
    require(det != 0.0, Status::DomainError, "matrix is singular");
    double k = 1.0 / det;
    const FloatElem &a = s.a, &b = s.b, &c = s.c, &d = s.d;
    return {k * (norm_sq(d) * conj(a) - conj(c) * d * conj(b)), k * (norm_sq(b) * conj(c) - conj(a) * b * conj(d)),
            k * (norm_sq(c) * conj(b) - conj(d) * c * conj(a)), k * (norm_sq(a) * conj(d) - conj(b) * a * conj(c))};
}

double re_trace(const FMat2& s) { return s.a.c[0] + s.d.c[0]; }

UhpPoint act_matrix_quaternion(const FMat2& s, const UhpPoint& z) {
    require(z.dim() <= 4, Status::DomainError, "closed-form matrix action fails for octonions (non-associative)");
    require(s.a.dim == z.dim(), Status::DimensionMismatch, "matrix and point differ in dimension");
    const FloatElem& u = z.u;
    const double v = z.v;
    double den = norm_sq(s.c * u + s.d) + norm_sq(s.c) * v * v;
    FloatElem num = (s.a * u + s.b) * (conj(u) * conj(s.c) + conj(s.d)) + (v * v) * (s.a * conj(s.c));
    return {(1.0 / den) * num, v / den};
}

double laplace_beltrami_numeric(const Function& f, const UhpPoint& z, double h, int order) {
    require(order == 2 || order == 4 || order == 6, Status::InvalidArgument, "finite-difference order must be 2, 4 or 6");
    require(h > 0 && (order / 2) * h < z.v, Status::InvalidArgument, "stencil leaves the upper half plane");
    const int n = z.dim();
    const double f0 = f(z);
    auto shifted = [&](int coord, double dx) {
        UhpPoint y = z;
        if (coord == n)
            y.v += dx;
        else
            y.u.c[coord] += dx;
        return f(y);
    };
    auto second = [&](int coord) {
        if (order == 2) return (shifted(coord, h) - 2.0 * f0 + shifted(coord, -h)) / (h * h);
        if (order == 6)
            return (2.0 * (shifted(coord, 3 * h) + shifted(coord, -3 * h)) -
                    27.0 * (shifted(coord, 2 * h) + shifted(coord, -2 * h)) +
                    270.0 * (shifted(coord, h) + shifted(coord, -h)) - 490.0 * f0) /
                   (180.0 * h * h);
        return (-shifted(coord, 2 * h) + 16.0 * shifted(coord, h) - 30.0 * f0 + 16.0 * shifted(coord, -h) -
                shifted(coord, -2 * h)) /
               (12.0 * h * h);
    };
    auto first = [&](int coord) {
        if (order == 2) return (shifted(coord, h) - shifted(coord, -h)) / (2.0 * h);
        if (order == 6)
            return (shifted(coord, 3 * h) - shifted(coord, -3 * h) - 9.0 * (shifted(coord, 2 * h) - shifted(coord, -2 * h)) +
                    45.0 * (shifted(coord, h) - shifted(coord, -h))) /
                   (60.0 * h);
        return (-shifted(coord, 2 * h) + 8.0 * shifted(coord, h) - 8.0 * shifted(coord, -h) + shifted(coord, -2 * h)) /
               (12.0 * h);
    };
    double lap_u = 0.0;
    for (int i = 0; i < n; ++i) lap_u += second(i);
    const double v = z.v;
    return v * v * (second(n) + lap_u) + (1.0 - n) * v * first(n);
}

UhpPoint geodesic_point(const FloatElem& u1, const FloatElem& u2, double t) {
    require(t > 0, Status::DomainError, "geodesic parameter must be positive");
    double r = std::sqrt(norm_sq(u1 - u2));
    require(r > 0, Status::DomainError, "geodesic endpoints coincide");
    double k = 1.0 / (1.0 + t * t);
    return {k * (u1 + (t * t) * u2), k * t * r};
}

FMat2 cayley_matrix(const FloatElem& u1, const FloatElem& u2) {
    double r = std::sqrt(norm_sq(u1 - u2));
    require(r > 0, Status::DomainError, "geodesic endpoints coincide");
    double k = 1.0 / std::sqrt(r);
    const FloatElem one = real_elem(u1.dim, k);
    return {k * u2, k * u1, one, one};
}

FMat2 hyperbolic_element(const FloatElem& u1, const FloatElem& u2, double t) {
    require(t > 0, Status::DomainError, "dilation parameter must be positive");
    FMat2 c = cayley_matrix(u1, u2);
    const int dim = u1.dim;
    FMat2 d{real_elem(dim, std::sqrt(t)), FloatElem(dim), FloatElem(dim), real_elem(dim, 1.0 / std::sqrt(t))};
    return c * d * inverse(c);
}

double geodesic_circle_residual(const FloatElem& u1, const FloatElem& u2, const UhpPoint& z) {
    return ((z.u - u1) * (conj(z.u) - conj(u2))).c[0] + z.v * z.v;
}

double periodic_orbit_length(const hyperweyl::Mat2& m) {
    require(hyperweyl::psl_det(m) == Rational(1), Status::DomainError, "det(M M^dagger) must be 1");
    Rational tr = algebra::real_part(m.a) + algebra::real_part(m.d);
    double t = std::fabs(tr.to_double());
    require(t > 2.0, Status::DomainError, "|Re Tr M| <= 2: not hyperbolic");
    return 2.0 * std::acosh(t / 2.0);
}

}  // namespace octavia::uhp
