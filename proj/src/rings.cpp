#include "octavia/rings.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "octavia/linalg.hpp"

namespace octavia::rings {

using algebra::invert;
using algebra::norm_sq;
using linalg::QMatrix;

int ring_dim(RingId r) {
    switch (r) {
        case RingId::Z: return 1;
        case RingId::Hurwitz: return 4;
        case RingId::Octavian: return 8;
    }
    return 0;
}

int unit_count(RingId r) {
    switch (r) {
        case RingId::Z: return 2;
        case RingId::Hurwitz: return 24;
        case RingId::Octavian: return 240;
    }
    return 0;
}

std::string ring_name(RingId r) {
    switch (r) {
        case RingId::Z: return "z";
        case RingId::Hurwitz: return "hurwitz";
        case RingId::Octavian: return "octavian";
    }
    return "?";
}

RingId ring_from_name(std::string_view name) {
    if (name == "z" || name == "int" || name == "integers" || name == "real") return RingId::Z;
    if (name == "hurwitz" || name == "h" || name == "quat") return RingId::Hurwitz;
    if (name == "octavian" || name == "octavians" || name == "o" || name == "oct") return RingId::Octavian;
    fail(Status::InvalidArgument, "unknown ring '" + std::string(name) + "'");
}

RingId ring_for_dim(int dim) {
    switch (dim) {
        case 1: return RingId::Z;
        case 4: return RingId::Hurwitz;
        case 8: return RingId::Octavian;
        default: fail(Status::DimensionMismatch, "no integer ring of dimension " + std::to_string(dim));
    }
}

namespace {

void check_dim(RingId r, const AlgElem& x) {
    if (x.dim() != ring_dim(r)) fail(Status::DimensionMismatch, "element dimension does not match ring " + ring_name(r));
}

AlgElem c2(int dim, std::vector<int64_t> v) { return AlgElem::from_coords2(dim, v); }

std::vector<AlgElem> make_basis(RingId r) {
    switch (r) {
        case RingId::Z: return {AlgElem::one(1)};
        case RingId::Hurwitz:
            return {c2(4, {0, 2, 0, 0}), c2(4, {1, -1, -1, -1}), c2(4, {0, 0, 2, 0}), c2(4, {0, 0, 0, 2})};
        case RingId::Octavian:
            return {
                c2(8, {1, -1, 0, 0, 0, -1, -1, 0}),  c2(8, {0, 2, 0, 0, 0, 0, 0, 0}),
                c2(8, {0, -1, -1, 0, 0, 0, 1, 1}),   c2(8, {0, 0, 2, 0, 0, 0, 0, 0}),
                c2(8, {0, 0, -1, -1, -1, 0, 0, -1}), c2(8, {0, 0, 0, 2, 0, 0, 0, 0}),
                c2(8, {0, 0, 0, -1, 0, 1, -1, 1}),   c2(8, {0, 0, 0, 0, 2, 0, 0, 0}),
            };
    }
    return {};
}

// Linear data attached to one ring: basis matrix and its inverse, plus the decoding frame.
struct RingData {
    int dim = 0;
    std::vector<AlgElem> basis;
    QMatrix binv;                      // coordinates -> basis coefficients
    std::vector<std::vector<int64_t>> binv_num;  // binv * common_den
    int64_t binv_den = 1;
    QMatrix to_frame, from_frame;      // orthonormal decoding frame (scaled)
    bool half_coset = false;
    bool even_parity = false;
};

QMatrix columns_of(const std::vector<AlgElem>& vs) {
    const int n = vs[0].dim();
    QMatrix m(n, std::vector<Rational>(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j)
        for (int i = 0; i < n; ++i) m[i][j] = vs[j].coord(i);
    return m;
}

// Standard E8 simple roots (norm 2) in the order matching our Dynkin labels:
// chain 1-2-3-4-5-6-7 with 8 attached to 5.
QMatrix standard_e8_columns() {
    auto e = [](int i, int j, int si, int sj) {
        std::vector<Rational> v(8, 0);
        v[i] = si;
        v[j] = sj;
        return v;
    };
    std::vector<std::vector<Rational>> beta = {
        e(5, 6, -1, 1), e(4, 5, -1, 1), e(3, 4, -1, 1), e(2, 3, -1, 1), e(1, 2, -1, 1), e(0, 1, -1, 1),
        {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2),
         Rational(-1, 2), Rational(1, 2)},
        e(0, 1, 1, 1),
    };
    QMatrix m(8, std::vector<Rational>(8));
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) m[i][j] = beta[j][i];
    return m;
}

RingData build(RingId r) {
    RingData d;
    d.dim = ring_dim(r);
    d.basis = make_basis(r);
    QMatrix b = columns_of(d.basis);
    auto inv = linalg::inverse(b);
    if (!inv) fail(Status::Internal, "integral basis is singular");
    d.binv = *inv;
    for (auto& row : d.binv)
        for (auto& q : row) d.binv_den = std::lcm(d.binv_den, q.den());
    for (auto& row : d.binv) {
        d.binv_num.emplace_back();
        for (auto& q : row) d.binv_num.back().push_back(q.num() * (d.binv_den / q.den()));
    }
    if (r == RingId::Octavian) {
        d.to_frame = linalg::multiply(standard_e8_columns(), d.binv);
        QMatrix gram = linalg::multiply(linalg::transpose(d.to_frame), d.to_frame);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (gram[i][j] != Rational(i == j ? 2 : 0)) fail(Status::Internal, "E8 frame map is not a similarity");
        d.from_frame = linalg::transpose(d.to_frame);
        for (auto& row : d.from_frame)
            for (auto& q : row) q = q * Rational(1, 2);
        d.half_coset = true;
        d.even_parity = true;
    } else {
        d.to_frame = linalg::identity(d.dim);
        d.from_frame = linalg::identity(d.dim);
        d.half_coset = r == RingId::Hurwitz;
    }
    return d;
}

const RingData& data(RingId r) {
    static const RingData z = build(RingId::Z);
    static const RingData h = build(RingId::Hurwitz);
    static const RingData o = build(RingId::Octavian);
    switch (r) {
        case RingId::Z: return z;
        case RingId::Hurwitz: return h;
        case RingId::Octavian: return o;
    }
    return z;
}

// Membership from doubled integer coordinates.
bool member2(RingId r, const int64_t* c2v) {
    const RingData& d = data(r);
    if (r == RingId::Z) return c2v[0] % 2 == 0;
    if (r == RingId::Hurwitz) {
        int p = static_cast<int>(c2v[0] & 1);
        for (int i = 1; i < 4; ++i)
            if (static_cast<int>(c2v[i] & 1) != p) return false;
        return true;
    }
    const int64_t m = 2 * d.binv_den;
    for (int i = 0; i < d.dim; ++i) {
        int64_t s = 0;
        for (int j = 0; j < d.dim; ++j) s += d.binv_num[i][j] * c2v[j];
        if (s % m != 0) return false;
    }
    return true;
}

}  // namespace

const std::vector<AlgElem>& integral_basis(RingId r) { return data(r).basis; }

const OctavianUnitClasses& octavian_unit_classes() {
    static const OctavianUnitClasses classes = [] {
        OctavianUnitClasses c;
        c.real = {AlgElem::one(8), -AlgElem::one(8)};
        const int brandt[7][3] = {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 6}, {2, 5, 7}, {3, 4, 5}, {4, 6, 7}};
        const int imag[7][4] = {{3, 5, 6, 7}, {2, 4, 5, 6}, {2, 3, 4, 7}, {1, 4, 5, 7},
                                {1, 3, 4, 6}, {1, 2, 6, 7}, {1, 2, 3, 5}};
        for (auto& t : brandt)
            for (int s = 0; s < 16; ++s) {
                std::vector<int64_t> v(8, 0);
                v[0] = (s & 1) ? -1 : 1;
                for (int k = 0; k < 3; ++k) v[t[k]] = (s >> (k + 1)) & 1 ? -1 : 1;
                c.brandt.push_back(c2(8, v));
            }
        for (auto& q : imag)
            for (int s = 0; s < 16; ++s) {
                std::vector<int64_t> v(8, 0);
                for (int k = 0; k < 4; ++k) v[q[k]] = (s >> k) & 1 ? -1 : 1;
                c.imaginary.push_back(c2(8, v));
            }
        for (int r = 1; r < 8; ++r) {
            c.imaginary.push_back(AlgElem::basis(8, r));
            c.imaginary.push_back(AlgElem::basis(8, r, -1));
        }
        std::sort(c.brandt.begin(), c.brandt.end());
        std::sort(c.imaginary.begin(), c.imaginary.end());
        return c;
    }();
    return classes;
}

const std::vector<AlgElem>& units(RingId r) {
    static const std::vector<AlgElem> uz = {-AlgElem::one(1), AlgElem::one(1)};
    static const std::vector<AlgElem> uh = [] {
        std::vector<AlgElem> u;
        for (const auto& x : ball(RingId::Hurwitz, 1))
            if (!x.is_zero()) u.push_back(x);
        std::sort(u.begin(), u.end());
        return u;
    }();
    static const std::vector<AlgElem> uo = [] {
        const auto& c = octavian_unit_classes();
        std::vector<AlgElem> u = c.real;
        u.insert(u.end(), c.brandt.begin(), c.brandt.end());
        u.insert(u.end(), c.imaginary.begin(), c.imaginary.end());
        std::sort(u.begin(), u.end());
        return u;
    }();
    switch (r) {
        case RingId::Z: return uz;
        case RingId::Hurwitz: return uh;
        case RingId::Octavian: return uo;
    }
    return uz;
}

bool is_unit(RingId r, const AlgElem& x) { return is_member(r, x) && norm_sq(x) == Rational(1); }

bool is_member(RingId r, const AlgElem& x) {
    check_dim(r, x);
    if (!x.is_half_integral()) return false;
    auto v = x.coords2();
    return member2(r, v.data());
}

std::vector<int64_t> basis_coordinates(RingId r, const AlgElem& x) {
    check_dim(r, x);
    std::vector<Rational> xv;
    for (int i = 0; i < x.dim(); ++i) xv.push_back(x.coord(i));
    auto n = linalg::apply(data(r).binv, xv);
    std::vector<int64_t> out;
    for (auto& q : n) {
        if (!q.is_integer()) fail(Status::DomainError, "element is not in the ring " + ring_name(r));
        out.push_back(q.num());
    }
    return out;
}

// ---------------------------------------------------------------- decoding

namespace {

// All points of (2Z)^n or (2Z+1)^n (doubled frame coordinates) minimizing sum (2Y_i - v_i D)^2,
// optionally constrained to an even sum of k_i = floor(v_i / 2).
void decode_coset(const std::vector<int64_t>& Y, int64_t D, bool odd, bool parity, i128& best_cost,
                  std::vector<std::vector<int64_t>>& best) {
    const size_t n = Y.size();
    struct Cand {
        int64_t v;
        i128 cost;
        int par;
    };
    std::vector<std::vector<Cand>> cands(n);
    for (size_t i = 0; i < n; ++i) {
        int64_t fl = floor_div(Y[i], D);
        for (int64_t v = 2 * fl - 2; v <= 2 * fl + 4; ++v) {
            if (((v % 2) != 0) != odd) continue;
            i128 diff = i128(2) * Y[i] - i128(v) * D;
            int64_t k = floor_div(v, 2);
            cands[i].push_back({v, diff * diff, static_cast<int>(k & 1)});
        }
    }
    const i128 inf = std::numeric_limits<i128>::max() / 4;
    // suffix[i][p]: min cost over coordinates i.. with parity p of their k-sum.
    std::vector<std::array<i128, 2>> suffix(n + 1, {inf, inf});
    suffix[n] = {0, parity ? inf : 0};
    if (!parity) suffix[n] = {0, 0};
    for (size_t i = n; i-- > 0;) {
        for (int p = 0; p < 2; ++p) {
            i128 m = inf;
            for (const auto& c : cands[i]) {
                int rest = parity ? (p ^ c.par) : 0;
                if (suffix[i + 1][rest] >= inf) continue;
                m = std::min(m, c.cost + suffix[i + 1][rest]);
            }
            suffix[i][p] = m;
        }
    }
    i128 total = suffix[0][0];
    if (total > best_cost) return;
    if (total < best_cost) {
        best_cost = total;
        best.clear();
    }
    std::vector<int64_t> cur(n);
    std::function<void(size_t, int, i128)> walk = [&](size_t i, int p, i128 budget) {
        if (i == n) {
            if (budget == 0) best.push_back(cur);
            return;
        }
        for (const auto& c : cands[i]) {
            int rest = parity ? (p ^ c.par) : 0;
            if (suffix[i + 1][rest] >= inf) continue;
            if (c.cost + suffix[i + 1][rest] != budget) continue;
            cur[i] = c.v;
            walk(i + 1, rest, budget - c.cost);
        }
    };
    walk(0, 0, total);
}

Rational rationalize(double x) {
    if (!std::isfinite(x)) fail(Status::InvalidArgument, "non-finite coordinate");
    // continued fraction convergents with denominator <= 1e6
    double a = x;
    int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(a);
        if (std::fabs(fl) > 1e12) break;
        int64_t ai = static_cast<int64_t>(fl);
        int64_t h2 = ai * h0 + h1, k2 = ai * k0 + k1;
        if (k2 > 1000000) break;
        h1 = h0; h0 = h2; k1 = k0; k0 = k2;
        double frac = a - fl;
        if (frac < 1e-15 || std::fabs(static_cast<double>(h0) / k0 - x) < 1e-15 * std::max(1.0, std::fabs(x))) break;
        a = 1.0 / frac;
    }
    return Rational(h0, k0);
}

}  // namespace

std::vector<AlgElem> nearest(RingId r, const AlgElem& x) {
    check_dim(r, x);
    const RingData& d = data(r);
    std::vector<Rational> xv;
    for (int i = 0; i < d.dim; ++i) xv.push_back(x.coord(i));
    auto y = linalg::apply(d.to_frame, xv);
    int64_t D = 1;
    for (auto& q : y) D = std::lcm(D, q.den());
    std::vector<int64_t> Y;
    for (auto& q : y) Y.push_back(narrow(i128(q.num()) * (D / q.den())));

    i128 best_cost = std::numeric_limits<i128>::max();
    std::vector<std::vector<int64_t>> best;
    decode_coset(Y, D, false, d.even_parity, best_cost, best);
    if (d.half_coset) decode_coset(Y, D, true, d.even_parity, best_cost, best);

    std::vector<AlgElem> out;
    for (auto& v : best) {
        std::vector<Rational> fv;
        for (int64_t t : v) fv.emplace_back(t, 2);
        auto back = linalg::apply(d.from_frame, fv);
        int64_t den = 1;
        for (auto& q : back) den = std::lcm(den, q.den());
        std::vector<int64_t> num;
        for (auto& q : back) num.push_back(q.num() * (den / q.den()));
        AlgElem p = AlgElem::from_rational(d.dim, num, den);
        if (!is_member(r, p)) fail(Status::Internal, "decoder produced a non-lattice point");
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<AlgElem> nearest(RingId r, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != ring_dim(r)) fail(Status::DimensionMismatch, "coordinate count does not match ring");
    int64_t den = 1;
    std::vector<Rational> q;
    for (double v : x) {
        q.push_back(rationalize(v));
        den = std::lcm(den, q.back().den());
    }
    std::vector<int64_t> num;
    for (auto& v : q) num.push_back(v.num() * (den / v.den()));
    return nearest(r, AlgElem::from_rational(ring_dim(r), num, den));
}

// ---------------------------------------------------------------- enumeration

std::vector<AlgElem> ball(RingId r, int64_t max_norm) {
    if (max_norm < 0) return {};
    const int n = ring_dim(r);
    const int64_t lim = 4 * max_norm;  // sum of coords2^2
    const auto bound = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(lim)) + 1e-9));
    std::vector<std::pair<int64_t, std::vector<int64_t>>> pts;
    std::vector<int64_t> cur(n);
    std::function<void(int, int64_t)> rec = [&](int i, int64_t left) {
        if (i == n) {
            if (member2(r, cur.data())) pts.emplace_back(lim - left, cur);
            return;
        }
        if (r == RingId::Hurwitz && i > 0) {
            // parity of later coordinates is forced by the first
            int64_t b = static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(left)) + 1e-9));
            for (int64_t v = -b; v <= b; ++v) {
                if (((v ^ cur[0]) & 1) != 0) continue;
                cur[i] = v;
                rec(i + 1, left - v * v);
            }
            return;
        }
        int64_t b = std::min(bound, static_cast<int64_t>(std::floor(std::sqrt(static_cast<double>(left)) + 1e-9)));
        for (int64_t v = -b; v <= b; ++v) {
            if (r == RingId::Z && (v & 1)) continue;
            cur[i] = v;
            rec(i + 1, left - v * v);
        }
    };
    rec(0, lim);
    std::sort(pts.begin(), pts.end());
    std::vector<AlgElem> out;
    out.reserve(pts.size());
    for (auto& [nrm, v] : pts) out.push_back(AlgElem::from_coords2(n, v));
    return out;
}

std::vector<uint64_t> shell_counts(RingId r, int n_max) {
    if (n_max < 1) fail(Status::InvalidArgument, "n_max must be >= 1");
    std::vector<uint64_t> sigma(n_max, 0);
    for (const auto& x : ball(r, n_max)) {
        Rational q = norm_sq(x);
        if (!q.is_integer()) fail(Status::Internal, "non-integral norm in ring");
        if (q.num() >= 1) ++sigma[q.num() - 1];
    }
    return sigma;
}

// ---------------------------------------------------------------- Euclid

namespace {

void check_member(RingId r, const AlgElem& x) {
    if (!is_member(r, x)) fail(Status::DomainError, "input is not an element of ring " + ring_name(r));
}

AlgElem target(Side s, const AlgElem& x, const AlgElem& y) { return s == Side::Right ? x * invert(y) : invert(y) * x; }

AlgElem remainder(Side s, const AlgElem& q, const AlgElem& x, const AlgElem& y) {
    return s == Side::Right ? q * y - x : y * q - x;
}

// Strictly decreasing quotient choices; the tie set first, then the next shell if it stalls.
std::vector<AlgElem> quotient_choices(RingId r, Side s, const AlgElem& x, const AlgElem& y) {
    const Rational ny = norm_sq(y);
    std::vector<AlgElem> ok;
    for (const auto& q : nearest(r, target(s, x, y)))
        if (norm_sq(remainder(s, q, x, y)) < ny) ok.push_back(q);
    if (!ok.empty()) return ok;
    // Every nearest point stalls: try lattice neighbours of the nearest points.
    std::set<AlgElem> seen;
    for (const auto& q0 : nearest(r, target(s, x, y)))
        for (const auto& u : ball(r, 2)) {
            AlgElem q = q0 + u;
            if (seen.insert(q).second && norm_sq(remainder(s, q, x, y)) < ny) ok.push_back(q);
        }
    return ok;
}

EuclTrace run(RingId r, Side s, const AlgElem& x0, const AlgElem& c) {
    check_dim(r, x0);
    check_dim(r, c);
    if (c.is_zero()) fail(Status::InvalidArgument, "Euclidean algorithm needs a nonzero divisor c");
    check_member(r, x0);
    check_member(r, c);
    EuclTrace t{r, s, x0, c, {}, {}};
    AlgElem x = x0, y = c;
    while (true) {
        auto qs = quotient_choices(r, s, x, y);
        if (qs.empty())
            fail(Status::SearchFailed, "no strictly decreasing Euclidean step for (" + algebra::format(x) + ", " +
                                           algebra::format(y) + ")");
        AlgElem rem = remainder(s, qs.front(), x, y);
        t.quotients.push_back(qs.front());
        if (rem.is_zero()) break;
        t.remainders.push_back(rem);
        x = y;
        y = rem;
    }
    return t;
}

struct Search {
    RingId r{};
    Side s{};
    long budget = 20000;
    std::vector<AlgElem> qs, rs;

    bool dfs(const AlgElem& x, const AlgElem& y) {
        if (--budget < 0) return false;
        for (const auto& q : quotient_choices(r, s, x, y)) {
            AlgElem rem = remainder(s, q, x, y);
            qs.push_back(q);
            if (rem.is_zero()) {
                if (norm_sq(y) == Rational(1)) return true;
            } else {
                rs.push_back(rem);
                if (dfs(y, rem)) return true;
                rs.pop_back();
            }
            qs.pop_back();
        }
        return false;
    }
};

}  // namespace

bool EuclTrace::ends_in_unit() const { return norm_sq(last_remainder()) == Rational(1); }

bool EuclTrace::replays() const {
    if (quotients.size() != remainders.size() + 1) return false;
    // r_{-1} = first, r_0 = second, then remainders
    std::vector<AlgElem> rr{first, second};
    rr.insert(rr.end(), remainders.begin(), remainders.end());
    for (size_t k = 0; k < quotients.size(); ++k) {
        const AlgElem& prev = rr[k];
        const AlgElem& div = rr[k + 1];
        AlgElem next = k + 2 < rr.size() ? rr[k + 2] : AlgElem::zero(first.dim());
        AlgElem rhs = side == Side::Right ? quotients[k] * div - next : div * quotients[k] - next;
        if (rhs != prev) return false;
        if (k + 2 < rr.size() && !(norm_sq(next) < norm_sq(div))) return false;
        if (!is_member(ring, quotients[k])) return false;
    }
    return true;
}

EuclTrace right_euclid(RingId r, const AlgElem& a, const AlgElem& c) { return run(r, Side::Right, a, c); }

EuclTrace left_euclid(RingId r, const AlgElem& d, const AlgElem& c) { return run(r, Side::Left, d, c); }

EuclTrace coprime_trace(RingId r, Side s, const AlgElem& x, const AlgElem& c) {
    EuclTrace t = run(r, s, x, c);
    if (t.ends_in_unit()) return t;
    Search sr;
    sr.r = r;
    sr.s = s;
    if (sr.dfs(x, c)) {
        t.quotients = sr.qs;
        t.remainders = sr.rs;
    }
    return t;
}

namespace {
bool coprime(RingId r, Side s, const AlgElem& x, const AlgElem& c) {
    check_dim(r, x);
    check_dim(r, c);
    if (x.is_zero() && c.is_zero()) fail(Status::InvalidArgument, "coprimality of (0, 0) is undefined");
    if (c.is_zero()) return is_unit(r, x);
    return coprime_trace(r, s, x, c).ends_in_unit();
}

std::vector<AlgElem> divisors(RingId r, const AlgElem& x, const AlgElem& y, int64_t max_norm, bool right) {
    std::vector<AlgElem> out;
    for (const auto& g : ball(r, max_norm)) {
        if (norm_sq(g) <= Rational(1)) continue;
        AlgElem gi = invert(g);
        AlgElem xq = right ? x * gi : gi * x;
        AlgElem yq = right ? y * gi : gi * y;
        if (is_member(r, xq) && is_member(r, yq)) out.push_back(g);
    }
    return out;
}
}  // namespace

bool is_right_coprime(RingId r, const AlgElem& a, const AlgElem& c) { return coprime(r, Side::Right, a, c); }

bool is_left_coprime(RingId r, const AlgElem& d, const AlgElem& c) { return coprime(r, Side::Left, d, c); }

std::vector<AlgElem> common_right_divisors(RingId r, const AlgElem& x, const AlgElem& y, int64_t max_norm) {
    return divisors(r, x, y, max_norm, true);
}

std::vector<AlgElem> common_left_divisors(RingId r, const AlgElem& x, const AlgElem& y, int64_t max_norm) {
    return divisors(r, x, y, max_norm, false);
}

// ---------------------------------------------------------------- commutator ideal

const CommutatorIdeal& commutator_ideal() {
    static const CommutatorIdeal ci = [] {
        const auto& b = integral_basis(RingId::Hurwitz);
        linalg::ZMatrix rows;
        for (const auto& h1 : b)
            for (const auto& h2 : b)
                for (const auto& h3 : b)
                    for (const auto& h4 : b) rows.push_back((h1 * algebra::commutator(h2, h3) * h4).coords2());
        auto hnf = linalg::hermite_rows(rows);
        if (hnf.size() != 4) fail(Status::Internal, "commutator ideal does not have full rank");
        CommutatorIdeal out;
        for (auto& row : hnf) out.basis.push_back(AlgElem::from_coords2(4, row));
        linalg::ZMatrix hb;
        for (const auto& h : b) hb.push_back(h.coords2());
        Rational ratio = linalg::determinant(linalg::to_q(hnf)) / linalg::determinant(linalg::to_q(hb));
        if (!ratio.is_integer()) fail(Status::Internal, "non-integral sublattice index");
        out.index = ratio.num() < 0 ? -ratio.num() : ratio.num();
        return out;
    }();
    return ci;
}

bool is_in_C(const AlgElem& x) {
    if (x.dim() != 4) fail(Status::DimensionMismatch, "the commutator ideal lives in the Hurwitz ring");
    if (!is_member(RingId::Hurwitz, x)) return false;
    static const QMatrix inv = [] {
        linalg::ZMatrix rows;
        for (const auto& c : commutator_ideal().basis) rows.push_back(c.coords2());
        // columns = basis vectors
        return *linalg::inverse(linalg::transpose(linalg::to_q(rows)));
    }();
    std::vector<Rational> v;
    for (int64_t t : x.coords2()) v.emplace_back(t);
    for (auto& q : linalg::apply(inv, v))
        if (!q.is_integer()) return false;
    return true;
}

const std::vector<AlgElem>& q_units() {
    static const std::vector<AlgElem> q = [] {
        std::vector<AlgElem> out;
        for (int k : {0, 1, 2, 3})
            for (int s : {1, -1}) out.push_back(AlgElem::basis(4, k, s));
        std::sort(out.begin(), out.end());
        return out;
    }();
    return q;
}

bool in_q(const AlgElem& x) {
    const auto& q = q_units();
    return std::find(q.begin(), q.end(), x) != q.end();
}

}  // namespace octavia::rings
