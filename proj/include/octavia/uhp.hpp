#pragma once

// The generalized upper half plane H(A) = {u + iv : u in A, v > 0} in double precision.

#include <functional>
#include <vector>

#include "octavia/algebra.hpp"
#include "octavia/hyperweyl.hpp"

namespace octavia::uhp {

using algebra::FloatElem;

struct UhpPoint {
    FloatElem u;
    double v = 1.0;

    int dim() const { return u.dim; }
    static UhpPoint make(const std::vector<double>& u, double v);
};

/// Point on the unit hyperboloid -x+ x- + |x|^2 = -1.
struct Hyperboloid {
    double xp = 0, xm = 0;
    FloatElem x;
};

Hyperboloid embed(const UhpPoint& z);
UhpPoint unembed(const Hyperboloid& h);
double hyperboloid_residual(const Hyperboloid& h);

/// 2 artanh(|z1 - z2| / |z1 - z2*|), evaluated as 2 log((D* + D) / (2 sqrt(v1 v2))).
double distance(const UhpPoint& z1, const UhpPoint& z2);
/// arcosh(1 + |z1 - z2|^2 / (2 v1 v2)).
double distance_arcosh(const UhpPoint& z1, const UhpPoint& z2);
/// (|u1 - u2|^2 + (v1 - v2)^2) / (4 v1 v2).
double lambda(const UhpPoint& z1, const UhpPoint& z2);
/// Riemannian volume density v^-(n+1).
double volume_density(const UhpPoint& z);

UhpPoint act_token(const hyperweyl::Token& t, const UhpPoint& z);
/// Tokens act right to left, like apply_word.
UhpPoint act_word(const hyperweyl::GroupWord& w, const UhpPoint& z);
/// embed -> token formulas on (x+, x-, x) -> unembed.
UhpPoint act_word_hyperboloid(const hyperweyl::GroupWord& w, const UhpPoint& z);

/// (n+1) x (n+1) Jacobian of z -> w(z) in coordinates (u_0..u_{n-1}, v), by the chain rule.
std::vector<std::vector<double>> jacobian(const hyperweyl::GroupWord& w, const UhpPoint& z);
/// max |J^T J - (v'/v)^2 I|: zero for an isometry.
double metric_pullback_defect(const hyperweyl::GroupWord& w, const UhpPoint& z);

struct FMat2 {
    FloatElem a, b, c, d;
    static FMat2 from(const hyperweyl::Mat2& m);
    friend FMat2 operator*(const FMat2& x, const FMat2& y);
};

double det_ss_dagger(const FMat2& s);
FMat2 inverse(const FMat2& s);
double re_trace(const FMat2& s);

/// z' = [(au + b)(conj u conj c + conj d) + a conj(c) v^2 + iv] / |cz + d|^2 (dim <= 4).
UhpPoint act_matrix_quaternion(const FMat2& s, const UhpPoint& z);

using Function = std::function<double(const UhpPoint&)>;
/// v^2 f_vv + (1 - n) v f_v + v^2 sum f_{u_i u_i} by central differences of order 2, 4 or 6.
double laplace_beltrami_numeric(const Function& f, const UhpPoint& z, double h, int order = 2);

/// (u1 + u2 t^2 + i t |u1 - u2|) / (1 + t^2).
UhpPoint geodesic_point(const FloatElem& u1, const FloatElem& u2, double t);
/// |u1 - u2|^{-1/2} [[u2, u1], [1, 1]].
FMat2 cayley_matrix(const FloatElem& u1, const FloatElem& u2);
/// C diag(t^{1/2}, t^{-1/2}) C^{-1}.
FMat2 hyperbolic_element(const FloatElem& u1, const FloatElem& u2, double t);
/// (u - u1)(conj u - conj u2) + v^2, real part; zero on the geodesic.
double geodesic_circle_residual(const FloatElem& u1, const FloatElem& u2, const UhpPoint& z);

/// 2 arcosh(|Re Tr M| / 2) for det(M M^dagger) = 1 and |Re Tr M| > 2.
double periodic_orbit_length(const hyperweyl::Mat2& m);

}  // namespace octavia::uhp
