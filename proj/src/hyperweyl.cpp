#include "octavia/hyperweyl.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "octavia/error.hpp"
#include "octavia/linalg.hpp"
#include "octavia/rootsys.hpp"

namespace octavia::hyperweyl {

using algebra::conj;
using algebra::inner;
using algebra::norm_sq;

HermMat HermMat::minus_delta(int dim) { return {Rational(1), Rational(0), AlgElem::zero(dim)}; }

HermMat operator+(const HermMat& a, const HermMat& b) { return {a.xp + b.xp, a.xm + b.xm, a.x + b.x}; }

Rational norm(const HermMat& m) { return -(m.xp * m.xm) + norm_sq(m.x); }

Rational bilinear(const HermMat& a, const HermMat& b) {
    require(a.x.dim() == b.x.dim(), Status::DimensionMismatch, "bilinear: dimension mismatch");
    return Rational(-1, 2) * (a.xp * b.xm + a.xm * b.xp) + inner(a.x, b.x);
}

std::string to_string(const GroupWord& w) {
    std::string s;
    for (const auto& t : w.tokens) {
        if (!s.empty()) s += " ";
        switch (t.kind) {
            case TokenKind::Inv: s += "inv"; break;
            case TokenKind::Trans: s += "trans(" + algebra::pretty(t.elem) + ")"; break;
            case TokenKind::Rot: s += "rot(" + algebra::pretty(t.elem) + ")"; break;
        }
    }
    return s.empty() ? "id" : s;
}

HermMat apply_token(const Token& t, const HermMat& m) {
    switch (t.kind) {
        case TokenKind::Inv: return {m.xm, m.xp, -conj(m.x)};
        case TokenKind::Trans:
            require(t.elem.dim() == m.x.dim(), Status::DimensionMismatch, "token and matrix differ in dimension");
            return {m.xp + Rational(2) * inner(m.x, t.elem) + m.xm * norm_sq(t.elem), m.xm, m.x + m.xm * t.elem};
        case TokenKind::Rot: {
            require(t.elem.dim() == m.x.dim(), Status::DimensionMismatch, "token and matrix differ in dimension");
            Rational n = norm_sq(t.elem);
            return {n * m.xp, n * m.xm, (t.elem * m.x) * t.elem};
        }
    }
    fail(Status::Internal, "unknown token");
}

HermMat apply_word(const GroupWord& w, const HermMat& x) {
    require(w.dim == x.x.dim(), Status::DimensionMismatch, "word and matrix differ in dimension");
    HermMat y = x;
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) y = apply_token(*it, y);
    return y;
}

std::vector<HermMat> simple_roots(int dim) {
    require(dim == 4 || dim == 8, Status::DimensionMismatch, "simple roots are defined for dim 4 and 8");
    std::vector<HermMat> out;
    out.push_back({Rational(1), Rational(-1), AlgElem::zero(dim)});
    out.push_back({Rational(-1), Rational(0), -AlgElem::one(dim)});
    for (const auto& e : rings::integral_basis(rings::ring_for_dim(dim))) out.push_back({Rational(0), Rational(0), e});
    return out;
}

std::vector<std::vector<int>> over_extended_cartan(int dim) {
    auto roots = simple_roots(dim);
    std::vector<std::vector<int>> a(roots.size(), std::vector<int>(roots.size()));
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = 0; j < roots.size(); ++j) {
            Rational v = Rational(2) * bilinear(roots[i], roots[j]);
            require(v.is_integer(), Status::Internal, "non-integral Cartan entry");
            a[i][j] = static_cast<int>(v.num());
        }
    return a;
}

namespace {

void check_ring(RingId r, const AlgElem& x) {
    require(x.dim() == rings::ring_dim(r), Status::DimensionMismatch, "element does not match the ring dimension");
    require(rings::is_member(r, x), Status::InvalidArgument, "element is not in the ring");
}

}  // namespace

GroupWord build_w_ac(RingId r, const AlgElem& a, const AlgElem& c) {
    check_ring(r, a);
    check_ring(r, c);
    const int dim = a.dim();
    GroupWord w{dim, {}};
    if (c.is_zero()) {
        require(rings::is_unit(r, a), Status::NotCoprime, "(a, 0) is right coprime only for a unit a");
        w.tokens.push_back(Token::rot(a));
    } else {
        auto t = rings::coprime_trace(r, rings::Side::Right, a, c);
        require(t.ends_in_unit(), Status::NotCoprime, "a and c are not right coprime");
        for (const auto& q : t.quotients) {
            w.tokens.push_back(Token::trans(q));
            w.tokens.push_back(Token::inv(dim));
        }
        w.tokens.push_back(Token::rot(t.last_remainder()));
    }
    HermMat img = apply_word(w, HermMat::minus_delta(dim));
    require(img == HermMat{norm_sq(a), norm_sq(c), a * conj(c)}, Status::Internal,
            "w_ac does not map -delta to the orbit matrix");
    return w;
}

GroupWord build_w_tilde_cd(RingId r, const AlgElem& c, const AlgElem& d) {
    check_ring(r, c);
    check_ring(r, d);
    const int dim = c.dim();
    GroupWord w{dim, {}};
    if (c.is_zero()) {
        require(rings::is_unit(r, d), Status::NotCoprime, "(0, d) is left coprime only for a unit d");
        w.tokens.push_back(Token::rot(conj(d)));
    } else {
        auto t = rings::coprime_trace(r, rings::Side::Left, d, c);
        require(t.ends_in_unit(), Status::NotCoprime, "c and d are not left coprime");
        w.tokens.push_back(Token::rot(conj(t.last_remainder())));
        for (auto it = t.quotients.rbegin(); it != t.quotients.rend(); ++it) {
            w.tokens.push_back(Token::inv(dim));
            w.tokens.push_back(Token::trans(*it));
        }
    }
    Row img = row_act({AlgElem::zero(dim), AlgElem::one(dim)}, w);
    require(img == Row{c, d}, Status::Internal, "(0,1) w~_cd differs from (c, d)");
    return w;
}

Row row_act(const Row& row, const GroupWord& w) {
    require(row.a1.dim() == w.dim && row.a2.dim() == w.dim, Status::DimensionMismatch,
            "row and word differ in dimension");
    Row r = row;
    for (const auto& t : w.tokens) {
        switch (t.kind) {
            case TokenKind::Inv: r = {r.a2, -r.a1}; break;
            case TokenKind::Trans: r = {r.a1, r.a1 * t.elem + r.a2}; break;
            case TokenKind::Rot: r = {r.a1 * t.elem, r.a2 * conj(t.elem)}; break;
        }
    }
    return r;
}

bool rows_equivalent(const Row& x, const Row& y) { return x == y || x == Row{-y.a1, -y.a2}; }

// ---------------------------------------------------------------- matrices

namespace {

void check_assoc(int dim) {
    require(dim <= 4, Status::DomainError, "2x2 matrix form requires an associative algebra (dim <= 4)");
}

}  // namespace

Mat2 Mat2::identity(int dim) {
    return {AlgElem::one(dim), AlgElem::zero(dim), AlgElem::zero(dim), AlgElem::one(dim)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    check_assoc(x.a.dim());
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 dagger(const Mat2& s) { return {conj(s.a), conj(s.c), conj(s.b), conj(s.d)}; }

Mat2 token_matrix(const Token& t) {
    const int dim = t.elem.dim();
    const AlgElem one = AlgElem::one(dim), zero = AlgElem::zero(dim);
    switch (t.kind) {
        case TokenKind::Inv: return {zero, -one, one, zero};
        case TokenKind::Trans: return {one, t.elem, zero, one};
        case TokenKind::Rot: return {t.elem, zero, zero, conj(t.elem)};
    }
    fail(Status::Internal, "unknown token");
}

std::optional<Mat2> matrix_form(const GroupWord& w) {
    if (w.dim > 4) return std::nullopt;
    Mat2 m = Mat2::identity(w.dim);
    for (const auto& t : w.tokens) m = m * token_matrix(t);
    return m;
}

HermMat apply_matrix(const Mat2& s, const HermMat& m) {
    check_assoc(s.a.dim());
    const AlgElem& x = m.x;
    const AlgElem xb = conj(x);
    const AlgElem& a = s.a;
    const AlgElem& b = s.b;
    const AlgElem& c = s.c;
    const AlgElem& d = s.d;
    AlgElem xp = m.xp * norm_sq(a) * AlgElem::one(x.dim()) + m.xm * norm_sq(b) * AlgElem::one(x.dim()) +
                 a * x * conj(b) + b * xb * conj(a);
    AlgElem xm = m.xp * norm_sq(c) * AlgElem::one(x.dim()) + m.xm * norm_sq(d) * AlgElem::one(x.dim()) +
                 c * x * conj(d) + d * xb * conj(c);
    AlgElem nx = m.xp * (a * conj(c)) + m.xm * (b * conj(d)) + a * x * conj(d) + b * xb * conj(c);
    require(xp.is_real() && xm.is_real(), Status::Internal, "diagonal entries are not real");
    return {xp.coord(0), xm.coord(0), nx};
}

Rational psl_det(const Mat2& s) {
    check_assoc(s.a.dim());
    return norm_sq(s.a) * norm_sq(s.d) + norm_sq(s.b) * norm_sq(s.c) -
           Rational(2) * algebra::real_part(s.a * conj(s.c) * s.d * conj(s.b));
}

Rational psl_det_commutator(const Mat2& s) {
    check_assoc(s.a.dim());
    return norm_sq(s.a * s.d - s.b * s.c) -
           Rational(2) * algebra::real_part(s.a * algebra::commutator(conj(s.c), s.d) * conj(s.b));
}

Rational real_determinant(const Mat2& s) {
    check_assoc(s.a.dim());
    const int n = s.a.dim();
    linalg::QMatrix m(2 * n, std::vector<Rational>(2 * n));
    for (int k = 0; k < n; ++k) {
        AlgElem e = AlgElem::basis(n, k);
        AlgElem cols[2][2] = {{s.a * e, s.c * e}, {s.b * e, s.d * e}};
        for (int slot = 0; slot < 2; ++slot)
            for (int i = 0; i < n; ++i) {
                m[i][slot * n + k] = cols[slot][0].coord(i);
                m[n + i][slot * n + k] = cols[slot][1].coord(i);
            }
    }
    return linalg::determinant(m);
}

Mat2 psl_inverse(const Mat2& s) {
    Rational det = psl_det(s);
    require(!det.is_zero(), Status::DomainError, "matrix is singular");
    const AlgElem &a = s.a, &b = s.b, &c = s.c, &d = s.d;
    Rational k = Rational(1) / det;
    Mat2 inv{k * (norm_sq(d) * conj(a) - conj(c) * d * conj(b)), k * (norm_sq(b) * conj(c) - conj(a) * b * conj(d)),
             k * (norm_sq(c) * conj(b) - conj(d) * c * conj(a)), k * (norm_sq(a) * conj(d) - conj(b) * a * conj(c))};
    const Mat2 id = Mat2::identity(a.dim());
    require(s * inv == id && inv * s == id, Status::Internal, "closed-form inverse failed the multiply-back check");
    return inv;
}

bool psl0_membership(const Mat2& s) {
    if (s.a.dim() != 4) return false;
    for (const auto* x : {&s.a, &s.b, &s.c, &s.d})
        if (!rings::is_member(RingId::Hurwitz, *x)) return false;
    if (psl_det(s) != Rational(1)) return false;
    return rings::is_in_C(s.a * s.d - s.b * s.c - AlgElem::one(4));
}

// ---------------------------------------------------------------- cosets

namespace {

bool row_less(const Row& x, const Row& y) {
    if (x.a1 != y.a1) return x.a1 < y.a1;
    return x.a2 < y.a2;
}

}  // namespace

std::vector<Row> coset_class(RingId r, const AlgElem& c, const AlgElem& d) {
    check_ring(r, c);
    check_ring(r, d);
    require(rings::is_left_coprime(r, d, c), Status::NotCoprime, "c and d are not left coprime");
    const auto& units = rings::units(r);
    std::vector<Row> out;
    if (c.is_zero()) {
        for (const auto& e : units) out.push_back({c, e});
    } else {
        auto t = rings::coprime_trace(r, rings::Side::Left, d, c);
        const size_t n = t.remainders.size();
        const auto& q = t.quotients;  // q_1 .. q_{n+1}
        // R[k + 1] holds r_k for k = -1..n+1 (r_{-1} = d, r_0 = c, r_{n+1} = 0).
        for (const auto& e : units) {
            std::vector<AlgElem> R(n + 3, AlgElem::zero(c.dim()));
            R[n + 1] = e;
            for (size_t k = n + 1; k-- > 0;) R[k] = R[k + 1] * q[k] - R[k + 2];
            out.push_back({R[1], R[0]});
        }
    }
    std::sort(out.begin(), out.end(), row_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Row canonical_pair(RingId r, const AlgElem& c, const AlgElem& d) { return coset_class(r, c, d).front(); }

std::vector<Row> coset_reps(RingId r, int64_t bound) {
    require(bound >= 1, Status::InvalidArgument, "norm bound must be >= 1");
    auto elems = rings::ball(r, bound);
    std::unordered_set<std::string> seen;
    auto key = [](const Row& x) { return algebra::format(x.a1) + "|" + algebra::format(x.a2); };
    std::vector<Row> reps;
    for (const auto& c : elems)
        for (const auto& d : elems) {
            if (c.is_zero() && d.is_zero()) continue;
            if (seen.count(key({c, d}))) continue;
            if (!rings::is_left_coprime(r, d, c)) continue;
            auto cls = coset_class(r, c, d);
            for (const auto& x : cls) seen.insert(key(x));
            reps.push_back(cls.front());
        }
    std::sort(reps.begin(), reps.end(), row_less);
    return reps;
}

// ---------------------------------------------------------------- membership

GroupWord inverse(const GroupWord& w) {
    GroupWord out{w.dim, {}};
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) {
        switch (it->kind) {
        case TokenKind::Inv: out.tokens.push_back(*it); break;
        case TokenKind::Trans: out.tokens.push_back(Token::trans(-it->elem)); break;
        case TokenKind::Rot: out.tokens.push_back(Token::rot(invert(it->elem))); break;
        }
    }
    return out;
}

GroupWord compose(const GroupWord& a, const GroupWord& b) {
    require(a.dim == b.dim, Status::DimensionMismatch, "words of different dimension");
    GroupWord out = a;
    out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
    return out;
}

namespace {

bool in_finite_even_weyl(RingId r, const GroupWord& lin, std::string& reason) {
    const int dim = lin.dim;
    auto phi = [&](const AlgElem& x) {
        HermMat img = apply_word(lin, HermMat{Rational(0), Rational(0), x});
        if (img.xp != Rational(0) || img.xm != Rational(0)) fail(Status::DomainError, "not linear");
        return img.x;
    };
    if (r == RingId::Z) {
        bool ok = phi(AlgElem::one(1)) == AlgElem::one(1);
        if (!ok) reason = "finite part is not the identity";
        return ok;
    }
    rootsys::LinMap m;
    try {
        m = rootsys::linmap_from(dim, phi);
    } catch (const Error&) {
        reason = "finite part does not preserve the lattice";
        return false;
    }
    if (!rootsys::is_lattice_isometry(m) || rootsys::determinant(m) != 1) {
        reason = "finite part is not an even lattice isometry";
        return false;
    }
    if (r == RingId::Hurwitz) {
        static const auto group = [] {
            auto els = rootsys::closure(rootsys::even_generators(rootsys::Algebra::D4));
            return std::unordered_set<rootsys::LinMap, rootsys::LinMapHash>(els.begin(), els.end());
        }();
        if (!group.count(m)) {
            reason = "finite part lies outside W+(D4)";
            return false;
        }
        return true;
    }
    auto parts = rootsys::e8_decompose(m);
    if (rootsys::e8_element(parts.e, parts.f, parts.b, parts.phi) != m) {
        reason = "e8_decompose does not reproduce the finite part";
        return false;
    }
    return true;
}

}  // namespace

Membership w_plus_membership(RingId r, const GroupWord& w) {
    const int dim = rings::ring_dim(r);
    require(w.dim == dim, Status::DimensionMismatch, "word dimension does not match ring");
    Membership out;
    HermMat x = apply_word(w, HermMat::minus_delta(dim));
    if (!x.xp.is_integer() || !x.xm.is_integer() || !rings::is_member(r, x.x) || norm(x) != Rational(0)) {
        out.reason = "w(-delta) is not an integral null vector";
        return out;
    }
    // (a, c) with |a|^2 = x+, |c|^2 = x-, a conj(c) = x
    bool found = false;
    if (x.xp == Rational(0)) {
        if (x.xm == Rational(1) && x.x.is_zero()) {
            out.a = AlgElem::zero(dim);
            out.c = AlgElem::one(dim);
            found = true;
        }
    } else {
        for (const auto& a : rings::ball(r, x.xp.num())) {
            if (norm_sq(a) != x.xp) continue;
            AlgElem c = conj(invert(a) * x.x);
            if (!rings::is_member(r, c) || norm_sq(c) != x.xm) continue;
            if (!c.is_zero() && !rings::is_right_coprime(r, a, c)) continue;
            if (c.is_zero() && !rings::is_unit(r, a)) continue;
            out.a = a;
            out.c = c;
            found = true;
            break;
        }
    }
    if (!found) {
        out.reason = "no right coprime (a, c) matches w(-delta)";
        return out;
    }
    GroupWord stab = compose(inverse(build_w_ac(r, out.a, out.c)), w);
    if (!(apply_word(stab, HermMat::minus_delta(dim)) == HermMat::minus_delta(dim))) {
        out.reason = "remainder does not fix -delta";
        return out;
    }
    HermMat far = apply_word(stab, HermMat{Rational(0), Rational(1), AlgElem::zero(dim)});
    out.y = far.x;
    if (!rings::is_member(r, out.y)) {
        out.reason = "translation part is not integral";
        return out;
    }
    GroupWord lin = compose(GroupWord{dim, {Token::trans(-out.y)}}, stab);
    out.member = in_finite_even_weyl(r, lin, out.reason);
    return out;
}

}  // namespace octavia::hyperweyl
