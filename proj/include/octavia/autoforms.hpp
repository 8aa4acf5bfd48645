#pragma once

// Truncated Eisenstein and Poincare series, the Dedekind zeta factor, Fourier coefficients,
// K-Bessel functions and the free-space Green function on H(A).

#include <complex>
#include <cstdint>
#include <vector>

#include "octavia/rings.hpp"
#include "octavia/uhp.hpp"

namespace octavia::autoforms {

using cplx = std::complex<double>;
using rings::AlgElem;
using rings::RingId;
using uhp::UhpPoint;

struct SeriesParams {
    RingId ring = RingId::Hurwitz;
    cplx s{5.0, 0.0};
    int64_t radius = 4;  // (c, d) with |c|^2 <= radius and |d|^2 <= radius
    UhpPoint z;
};

/// Re s > n: the double sum over the 2n-dimensional lattice converges absolutely.
bool convergence_certified(const SeriesParams& p);

/// sum over (c, d) != 0 of v^s / |cz + d|^{2s}, shell-major order, compensated.
cplx eisenstein_truncated(const SeriesParams& p);

/// (1/N) sum over left coprime (c, d) of v^s / |cz + d|^{2s}, N = number of units.
cplx poincare_truncated(const SeriesParams& p);
/// Same sum evaluated as (1/N) sum of Im(w(z))^s over the words w~_{c,d}.
cplx poincare_via_words(const SeriesParams& p);

/// #{x : |x|^2 = k}: 2 or 0, 24 sum_{d | k, d odd} d, 240 sigma_3(k).
uint64_t shell_count(RingId r, uint64_t k);
/// sum_{k <= n_max} shell_count(k) k^-s.
cplx zeta_partial(RingId r, cplx s, uint64_t n_max);

struct ZetaRelation {
    cplx eisenstein, zeta, poincare;
    double residual = 0;  // |E - zeta P| / |E|
};
ZetaRelation zeta_relation_check(const SeriesParams& p, uint64_t zeta_terms);

struct FourierOptions {
    int64_t c_radius = 1;   // c ranges over |c|^2 <= c_radius; d over the whole ring
    int grid = 6;           // trapezoid points per basis direction
    double window = 4.0;    // d window radius in units of |c| v
    double min_window = 4.0;
    bool include_c0 = true;  // the c = 0 term zeta(s) v^s (mu = 0 only)
};

struct FourierDatum {
    AlgElem mu;
    double v = 0;
    cplx coefficient;
    double error = 0;  // difference from the same integral on a coarser grid
};

/// mu must pair integrally with the ring: (mu, x) in Z for every x.
bool in_dual_lattice(RingId r, const AlgElem& mu);

/// Coefficients a_mu(v) = (1/vol) int_cell E^(C)(u + iv) e^{-2 pi i (mu, u)} du, where E^(C) is
/// the Eisenstein sum with c truncated and d complete. Real s > n/2.
std::vector<FourierDatum> fourier_coefficients(RingId r, const std::vector<AlgElem>& mus, double v, double s,
                                               const FourierOptions& opt = {});

struct ConstantTermFit {
    double exponent_c0 = 0;    // log-slope of the c = 0 part; s in theory
    double exponent_rest = 0;  // log-slope of the c != 0 constant term; n - s in theory
    double a_estimate = 0;     // ratio of the two coefficients at v = 1 (exploratory)
};
ConstantTermFit fit_constant_term(RingId r, double s, double v1, double v2, const FourierOptions& opt = {});

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, x > 0.
cplx bessel_k(cplx nu, double x);

/// int_0^1 [xi (1 - xi)]^{s - (n+1)/2} (xi + lambda)^{-s} d xi, s > (n - 1)/2.
double green_function(double lambda, double s, int n);

/// |(Delta + s(n - s)) G(lambda(z, w))| / |G| with the sixth-order stencil at step
/// h v min(1, 2 sqrt(lambda)), shrinking near the source.
double green_pde_residual(const UhpPoint& z, const UhpPoint& w, double s, double h = 1e-2);

/// log-log slope of G between lambda1 and lambda2.
double green_slope(double s, int n, double lambda1, double lambda2);

/// Overlap int_{v0}^{v0 e^L} v^{s} conj(v^{s'}) v^{-n-1} dv for s = n/2 + ir, s' = n/2 + ir'.
/// Exploratory: grows like L for r = r', bounded otherwise.
struct OverlapPoint {
    double length = 0;
    cplx overlap;
};
std::vector<OverlapPoint> critical_line_overlap(int n, double r, double r2, double v0,
                                                const std::vector<double>& lengths);

}  // namespace octavia::autoforms
