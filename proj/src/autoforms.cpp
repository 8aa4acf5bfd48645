#include "octavia/autoforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "octavia/error.hpp"
#include "octavia/hyperweyl.hpp"
#include "octavia/linalg.hpp"
#include "octavia/parallel.hpp"
#include "octavia/quadrature.hpp"

namespace octavia::autoforms {

using algebra::FloatElem;
using parallel::Accumulator;

namespace {

struct CAcc {
    Accumulator re, im;
    void add(cplx x) {
        re.add(x.real());
        im.add(x.imag());
    }
    void add(const CAcc& o) {
        re.add(o.re);
        im.add(o.im);
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// v^s / D^s for D > 0.
inline cplx power_term(cplx s, double log_ratio) {
    if (s.imag() == 0.0) return std::exp(s.real() * log_ratio);
    return std::exp(s * log_ratio);
}

struct FloatBall {
    std::vector<FloatElem> pts;
    std::vector<double> norms;
};

FloatBall float_ball(RingId r, int64_t max_norm) {
    FloatBall b;
    for (const auto& x : rings::ball(r, max_norm)) {
        b.pts.push_back(FloatElem::from(x));
        b.norms.push_back(algebra::norm_sq(x).to_double());
    }
    return b;
}

void check_params(const SeriesParams& p) {
    require(p.radius >= 1, Status::InvalidArgument, "truncation radius must be >= 1");
    require(p.z.v > 0, Status::DomainError, "point must lie in the upper half space");
    if (p.z.dim() != rings::ring_dim(p.ring)) fail(Status::DimensionMismatch, "point dimension does not match ring");
}

// sum over pairs of ball points, restricted by keep(ci, di); chunked over c.
template <typename Keep>
cplx pair_sum(const SeriesParams& p, const FloatBall& b, Keep keep) {
    const int n = p.z.dim();
    const double lv = std::log(p.z.v), v2 = p.z.v * p.z.v;
    const size_t m = b.pts.size();
    const size_t chunk = 8;
    const size_t chunks = (m + chunk - 1) / chunk;
    std::vector<CAcc> parts(chunks);
    parallel::for_chunks(m, chunk, [&](size_t k, size_t lo, size_t hi) {
        CAcc acc;
        for (size_t ci = lo; ci < hi; ++ci) {
            FloatElem cu = b.pts[ci] * p.z.u;
            const double cv2 = b.norms[ci] * v2;
            for (size_t di = 0; di < m; ++di) {
                if (ci == 0 && di == 0) continue;  // ball()[0] is zero
                if (!keep(ci, di)) continue;
                double d = cv2;
                const auto& dd = b.pts[di].c;
                for (int i = 0; i < n; ++i) {
                    double t = cu.c[i] + dd[i];
                    d += t * t;
                }
                acc.add(power_term(p.s, lv - std::log(d)));
            }
        }
        parts[k] = acc;
    });
    CAcc total;
    for (const auto& a : parts) total.add(a);
    return total.value();
}

// Hurwitz is associative, so cH + dH = r_n H for the last Euclid remainder and left
// coprimality is index 1 of that right ideal. Coprime norms settle it without the lattice.
bool hurwitz_left_coprime(const AlgElem& c, const AlgElem& d, int64_t nc, int64_t nd) {
    if (c.is_zero()) return nd == 1;
    if (d.is_zero()) return nc == 1;
    if (std::gcd(nc, nd) == 1) return true;
    linalg::ZMatrix rows;
    for (const auto& b : rings::integral_basis(RingId::Hurwitz)) {
        rows.push_back(rings::basis_coordinates(RingId::Hurwitz, c * b));
        rows.push_back(rings::basis_coordinates(RingId::Hurwitz, d * b));
    }
    auto h = linalg::hermite_rows(rows);
    int64_t index = 1;
    for (size_t i = 0; i < h.size(); ++i) index *= h[i][i];
    return index == 1;
}

// Left coprimality flags for all pairs of ball points, row-major.
std::vector<uint8_t> coprime_flags(RingId r, const std::vector<AlgElem>& pts) {
    const size_t m = pts.size();
    std::vector<int64_t> norms(m);
    for (size_t i = 0; i < m; ++i) norms[i] = algebra::norm_sq(pts[i]).num();
    std::vector<uint8_t> flags(m * m, 0);
    parallel::for_chunks(m, 4, [&](size_t, size_t lo, size_t hi) {
        for (size_t ci = lo; ci < hi; ++ci)
            for (size_t di = 0; di < m; ++di) {
                if (pts[ci].is_zero() && pts[di].is_zero()) continue;
                bool ok = r == RingId::Hurwitz ? hurwitz_left_coprime(pts[ci], pts[di], norms[ci], norms[di])
                                               : rings::is_left_coprime(r, pts[di], pts[ci]);
                flags[ci * m + di] = ok ? 1 : 0;
            }
    });
    return flags;
}

}  // namespace

bool convergence_certified(const SeriesParams& p) { return p.s.real() > rings::ring_dim(p.ring); }

cplx eisenstein_truncated(const SeriesParams& p) {
    check_params(p);
    FloatBall b = float_ball(p.ring, p.radius);
    return pair_sum(p, b, [](size_t, size_t) { return true; });
}

cplx poincare_truncated(const SeriesParams& p) {
    check_params(p);
    auto pts = rings::ball(p.ring, p.radius);
    FloatBall b = float_ball(p.ring, p.radius);
    auto flags = coprime_flags(p.ring, pts);
    const size_t m = pts.size();
    cplx sum = pair_sum(p, b, [&](size_t ci, size_t di) { return flags[ci * m + di] != 0; });
    return sum / static_cast<double>(rings::unit_count(p.ring));
}

cplx poincare_via_words(const SeriesParams& p) {
    check_params(p);
    auto pts = rings::ball(p.ring, p.radius);
    const size_t m = pts.size();
    const size_t chunk = 4;
    std::vector<CAcc> parts((m + chunk - 1) / chunk);
    parallel::for_chunks(m, chunk, [&](size_t k, size_t lo, size_t hi) {
        CAcc acc;
        for (size_t ci = lo; ci < hi; ++ci)
            for (size_t di = 0; di < m; ++di) {
                if (pts[ci].is_zero() && pts[di].is_zero()) continue;
                if (!rings::is_left_coprime(p.ring, pts[di], pts[ci])) continue;
                auto w = hyperweyl::build_w_tilde_cd(p.ring, pts[ci], pts[di]);
                double v = uhp::act_word(w, p.z).v;
                acc.add(power_term(p.s, std::log(v)));
            }
        parts[k] = acc;
    });
    CAcc total;
    for (const auto& a : parts) total.add(a);
    return total.value() / static_cast<double>(rings::unit_count(p.ring));
}

uint64_t shell_count(RingId r, uint64_t k) {
    require(k >= 1, Status::InvalidArgument, "shell index must be >= 1");
    switch (r) {
    case RingId::Z: {
        auto q = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(k))));
        return q * q == k ? 2 : 0;
    }
    case RingId::Hurwitz: {
        uint64_t s = 0;
        for (uint64_t d = 1; d * d <= k; ++d) {
            if (k % d) continue;
            uint64_t e = k / d;
            if (d & 1) s += d;
            if (e != d && (e & 1)) s += e;
        }
        return 24 * s;
    }
    case RingId::Octavian: {
        uint64_t s = 0;
        for (uint64_t d = 1; d * d <= k; ++d) {
            if (k % d) continue;
            uint64_t e = k / d;
            s += d * d * d;
            if (e != d) s += e * e * e;
        }
        return 240 * s;
    }
    }
    fail(Status::InvalidArgument, "unknown ring");
}

cplx zeta_partial(RingId r, cplx s, uint64_t n_max) {
    require(n_max >= 1 && n_max <= 100000000ULL, Status::InvalidArgument, "n_max must be in [1, 1e8]");
    // divisor sums by sieve
    std::vector<double> sigma(n_max + 1, 0.0);
    if (r == RingId::Z) {
        for (uint64_t q = 1; q * q <= n_max; ++q) sigma[q * q] = 2;
    } else {
        for (uint64_t d = 1; d <= n_max; ++d) {
            double w;
            if (r == RingId::Hurwitz) {
                if (!(d & 1)) continue;
                w = static_cast<double>(d);
            } else {
                w = static_cast<double>(d) * static_cast<double>(d) * static_cast<double>(d);
            }
            for (uint64_t k = d; k <= n_max; k += d) sigma[k] += w;
        }
        const double f = r == RingId::Hurwitz ? 24.0 : 240.0;
        for (auto& x : sigma) x *= f;
    }
    CAcc acc;
    for (uint64_t k = 1; k <= n_max; ++k)
        if (sigma[k] != 0.0) acc.add(sigma[k] * power_term(s, -std::log(static_cast<double>(k))));
    return acc.value();
}

ZetaRelation zeta_relation_check(const SeriesParams& p, uint64_t zeta_terms) {
    ZetaRelation out;
    out.eisenstein = eisenstein_truncated(p);
    out.poincare = poincare_truncated(p);
    out.zeta = zeta_partial(p.ring, p.s, zeta_terms);
    out.residual = std::abs(out.eisenstein - out.zeta * out.poincare) / std::abs(out.eisenstein);
    return out;
}

// ---------------------------------------------------------------- Fourier

bool in_dual_lattice(RingId r, const AlgElem& mu) {
    if (mu.dim() != rings::ring_dim(r)) return false;
    for (const auto& e : rings::integral_basis(r))
        if (!algebra::inner(mu, e).is_integer()) return false;
    return true;
}

namespace {

struct CTerm {
    FloatElem c;
    double norm;
    size_t window;  // prefix of the d ball
};

// Samples of the c != 0 part of E^(C) on the m^n grid of the basis cell.
std::vector<double> cell_samples(RingId r, double v, double s, const FourierOptions& opt, int m,
                                 const std::vector<CTerm>& cs, const FloatBall& win) {
    const int n = rings::ring_dim(r);
    const auto& basis = rings::integral_basis(r);
    std::vector<FloatElem> e;
    for (const auto& b : basis) e.push_back(FloatElem::from(b));
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<size_t>(m);
    std::vector<double> out(total, 0.0);
    const double v2 = v * v, lv = std::log(v);
    (void)opt;
    parallel::for_chunks(total, 16, [&](size_t, size_t lo, size_t hi) {
        for (size_t g = lo; g < hi; ++g) {
            FloatElem u(n);
            size_t rem = g;
            for (int j = 0; j < n; ++j) {
                double t = static_cast<double>(rem % m) / m;
                rem /= m;
                for (int i = 0; i < n; ++i) u.c[i] += t * e[j].c[i];
            }
            Accumulator acc;
            for (const auto& ct : cs) {
                FloatElem x = ct.c * u;
                for (int i = 0; i < n; ++i) x.c[i] -= std::nearbyint(x.c[i]);
                const double a2 = ct.norm * v2;
                for (size_t di = 0; di < ct.window; ++di) {
                    double d = a2;
                    const auto& dd = win.pts[di].c;
                    for (int i = 0; i < n; ++i) {
                        double t = x.c[i] + dd[i];
                        d += t * t;
                    }
                    acc.add(std::exp(s * (lv - std::log(d))));
                }
            }
            out[g] = acc.value();
        }
    });
    return out;
}

std::vector<cplx> project(RingId r, const std::vector<double>& samples, int m, const std::vector<AlgElem>& mus) {
    const int n = rings::ring_dim(r);
    const auto& basis = rings::integral_basis(r);
    std::vector<cplx> out;
    for (const auto& mu : mus) {
        std::vector<int64_t> k(n);
        for (int j = 0; j < n; ++j) k[j] = algebra::inner(mu, basis[j]).num();
        CAcc acc;
        for (size_t g = 0; g < samples.size(); ++g) {
            size_t rem = g;
            int64_t phase = 0;  // in units of 2 pi / m
            for (int j = 0; j < n; ++j) {
                phase += static_cast<int64_t>(rem % m) * k[j];
                rem /= m;
            }
            phase %= m;
            double ang = -2.0 * M_PI * static_cast<double>(phase) / m;
            acc.add(samples[g] * cplx(std::cos(ang), std::sin(ang)));
        }
        out.push_back(acc.value() / static_cast<double>(samples.size()));
    }
    return out;
}

}  // namespace

std::vector<FourierDatum> fourier_coefficients(RingId r, const std::vector<AlgElem>& mus, double v, double s,
                                               const FourierOptions& opt) {
    const int n = rings::ring_dim(r);
    require(v > 0, Status::DomainError, "v must be positive");
    require(s > 0.5 * n, Status::DomainError, "d-complete sums need s > n/2");
    require(opt.grid >= 2 && opt.grid <= 64, Status::InvalidArgument, "grid must be in [2, 64]");
    require(opt.c_radius >= 1, Status::InvalidArgument, "c radius must be >= 1");
    for (const auto& mu : mus)
        if (!in_dual_lattice(r, mu)) fail(Status::DomainError, "mu is not in the dual lattice: " + algebra::format(mu));

    std::vector<CTerm> cs;
    double max_rho = 0;
    for (const auto& c : rings::ball(r, opt.c_radius)) {
        if (c.is_zero()) continue;
        double nc = algebra::norm_sq(c).to_double();
        double rho = std::max(opt.window * std::sqrt(nc) * v, opt.min_window) + 0.5 * std::sqrt(static_cast<double>(n));
        cs.push_back({FloatElem::from(c), nc, 0});
        max_rho = std::max(max_rho, rho);
        cs.back().window = static_cast<size_t>(rho * rho);  // temporarily the norm bound
    }
    FloatBall win = float_ball(r, static_cast<int64_t>(std::ceil(max_rho * max_rho)));
    for (auto& ct : cs) {
        double bound = static_cast<double>(ct.window) + 1.0;
        ct.window = static_cast<size_t>(std::upper_bound(win.norms.begin(), win.norms.end(), bound) - win.norms.begin());
    }

    auto fine = project(r, cell_samples(r, v, s, opt, opt.grid, cs, win), opt.grid, mus);
    auto coarse = project(r, cell_samples(r, v, s, opt, opt.grid - 1, cs, win), opt.grid - 1, mus);
    const double c0 = opt.include_c0 ? zeta_partial(r, s, 200000).real() * std::pow(v, s) : 0.0;

    std::vector<FourierDatum> out;
    for (size_t i = 0; i < mus.size(); ++i) {
        FourierDatum d;
        d.mu = mus[i];
        d.v = v;
        d.coefficient = fine[i];
        if (mus[i].is_zero()) d.coefficient += c0;
        d.error = std::abs(fine[i] - coarse[i]);
        out.push_back(d);
    }
    return out;
}

ConstantTermFit fit_constant_term(RingId r, double s, double v1, double v2, const FourierOptions& opt) {
    require(v1 > 0 && v2 > 0 && v1 != v2, Status::InvalidArgument, "need two distinct positive heights");
    const int n = rings::ring_dim(r);
    FourierOptions o = opt;
    o.include_c0 = false;
    std::vector<AlgElem> zero{AlgElem::zero(n)};
    double a1 = fourier_coefficients(r, zero, v1, s, o)[0].coefficient.real();
    double a2 = fourier_coefficients(r, zero, v2, s, o)[0].coefficient.real();
    const double zeta = zeta_partial(r, s, 200000).real();
    const double c1 = zeta * std::pow(v1, s), c2 = zeta * std::pow(v2, s);
    ConstantTermFit f;
    const double lr = std::log(v1 / v2);
    f.exponent_c0 = std::log(c1 / c2) / lr;
    f.exponent_rest = std::log(a1 / a2) / lr;
    f.a_estimate = (a1 / std::pow(v1, n - s)) / zeta;
    return f;
}

// ---------------------------------------------------------------- special functions

cplx bessel_k(cplx nu, double x) {
    require(x > 0, Status::DomainError, "K-Bessel needs x > 0");
    const double re = std::fabs(nu.real()), im = std::fabs(nu.imag());
    // integrand relative to its t = 0 value drops below e^-45 beyond T
    double T = 0.5;
    while (x * (std::cosh(T) - 1.0) - re * T < 45.0) T += 0.25;
    double h = std::min({0.05, 0.5 / std::sqrt(x), 0.25 / (1.0 + im)});
    const long steps = static_cast<long>(std::ceil(T / h));
    h = T / steps;
    CAcc acc;
    for (long i = 0; i <= steps; ++i) {
        double t = i * h;
        double w = (i == 0) ? 0.5 : 1.0;
        acc.add(w * std::exp(-x * std::cosh(t)) * std::cosh(nu * t));
    }
    return acc.value() * h;
}

double green_function(double lambda, double s, int n) {
    require(lambda > 0, Status::DomainError, "lambda must be positive");
    require(s > 0.5 * (n - 1), Status::DomainError, "need s > (n - 1)/2");
    const double a = s - 0.5 * (n + 1);
    auto near0 = [&](double, double ca, double cb) {
        double xi = ca, one_minus = 1.0 - xi;
        (void)cb;
        return std::pow(xi * one_minus, a) * std::pow(xi + lambda, -s);
    };
    auto near1 = [&](double x, double, double cb) {
        return std::pow(x * cb, a) * std::pow(x + lambda, -s);
    };
    auto smooth = [&](double xi) { return std::pow(xi * (1.0 - xi), a) * std::pow(xi + lambda, -s); };

    Accumulator acc;
    const double split = std::min(lambda, 0.5);
    acc.add(quadrature::tanh_sinh(near0, 0.0, split, 1e-14));
    for (double lo = split; lo < 0.5;) {
        double hi = std::min(2.0 * lo, 0.5);
        acc.add(quadrature::gauss_legendre(smooth, lo, hi, 30));
        lo = hi;
    }
    acc.add(quadrature::tanh_sinh(near1, 0.5, 1.0, 1e-14));
    return acc.value();
}

double green_pde_residual(const UhpPoint& z, const UhpPoint& w, double s, double h) {
    require(z.dim() == w.dim(), Status::DimensionMismatch, "points of different dimension");
    const int n = z.dim();
    auto f = [&](const UhpPoint& p) { return green_function(uhp::lambda(p, w), s, n); };
    double g = f(z);
    // G varies on the scale d(z, w) ~ 2 sqrt(lambda) near the source
    const double scale = std::min(1.0, 2.0 * std::sqrt(uhp::lambda(z, w)));
    double lap = uhp::laplace_beltrami_numeric(f, z, h * z.v * scale, 6);
    return std::fabs(lap + s * (n - s) * g) / std::fabs(g);
}

double green_slope(double s, int n, double lambda1, double lambda2) {
    return std::log(green_function(lambda1, s, n) / green_function(lambda2, s, n)) / std::log(lambda1 / lambda2);
}

std::vector<OverlapPoint> critical_line_overlap(int n, double r, double r2, double v0,
                                                const std::vector<double>& lengths) {
    require(v0 > 0, Status::DomainError, "v0 must be positive");
    const cplx s(0.5 * n, r), s2(0.5 * n, r2);
    std::vector<OverlapPoint> out;
    for (double L : lengths) {
        require(L > 0, Status::InvalidArgument, "window length must be positive");
        // xi = log v; integrand v^{s + conj(s2) - n} on unit-length panels
        CAcc acc;
        const double x0 = std::log(v0);
        const int panels = std::max(1, static_cast<int>(std::ceil(L * (1.0 + std::fabs(r - r2)))));
        const double hw = L / panels;
        const auto& rule = quadrature::gauss_legendre(20);
        for (int p = 0; p < panels; ++p) {
            double c = x0 + (p + 0.5) * hw;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                double xi = c + 0.5 * hw * rule.nodes[i];
                acc.add(rule.weights[i] * 0.5 * hw * std::exp((s + std::conj(s2) - static_cast<double>(n)) * xi));
            }
        }
        out.push_back({L, acc.value()});
    }
    return out;
}

}  // namespace octavia::autoforms
