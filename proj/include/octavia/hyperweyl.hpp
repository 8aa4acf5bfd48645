#pragma once

// Hermitian 2x2 matrices over A with the Lorentzian norm, even hyperbolic Weyl group words,
// coset representatives, PSL(0)(2,H) and the row representation.

#include <optional>
#include <string>
#include <vector>

#include "octavia/algebra.hpp"
#include "octavia/rings.hpp"

namespace octavia::hyperweyl {

using algebra::AlgElem;
using rings::RingId;

/// [[x+, x], [conj x, x-]].
struct HermMat {
    Rational xp, xm;
    AlgElem x;

    static HermMat make(const Rational& xp, const Rational& xm, const AlgElem& x) { return {xp, xm, x}; }
    /// -delta = [[1, 0], [0, 0]].
    static HermMat minus_delta(int dim);
    friend HermMat operator+(const HermMat& a, const HermMat& b);
    friend bool operator==(const HermMat& a, const HermMat& b) { return a.xp == b.xp && a.xm == b.xm && a.x == b.x; }
};

/// -x+ x- + |x|^2.
Rational norm(const HermMat& m);
Rational bilinear(const HermMat& a, const HermMat& b);

enum class TokenKind { Inv, Trans, Rot };

struct Token {
    TokenKind kind;
    AlgElem elem;  // unused for Inv

    static Token inv(int dim) { return {TokenKind::Inv, AlgElem::zero(dim)}; }
    static Token trans(const AlgElem& y) { return {TokenKind::Trans, y}; }
    static Token rot(const AlgElem& e) { return {TokenKind::Rot, e}; }
};

/// Tokens in written order; as maps they compose right to left (the last token acts first).
struct GroupWord {
    int dim = 0;
    std::vector<Token> tokens;
};

std::string to_string(const GroupWord& w);

HermMat apply_token(const Token& t, const HermMat& x);
HermMat apply_word(const GroupWord& w, const HermMat& x);

/// Simple roots alpha_{-1}, alpha_0, alpha_1..alpha_r for the D4 (dim 4) or E8 (dim 8) basis.
std::vector<HermMat> simple_roots(int dim);
/// 2 (alpha_I, alpha_J), rows ordered -1, 0, 1..r.
std::vector<std::vector<int>> over_extended_cartan(int dim);

/// Word built from the right Euclidean algorithm on (a, c).
GroupWord build_w_ac(RingId r, const AlgElem& a, const AlgElem& c);
/// Word built from the left Euclidean algorithm on (d, c).
GroupWord build_w_tilde_cd(RingId r, const AlgElem& c, const AlgElem& d);

struct Row {
    AlgElem a1, a2;
    friend bool operator==(const Row& x, const Row& y) { return x.a1 == y.a1 && x.a2 == y.a2; }
};

/// Right action, tokens processed in written order: Inv (a1,a2)->(a2,-a1),
/// Trans y (a1, a1 y + a2), Rot e (a1 e, a2 conj e).
Row row_act(const Row& row, const GroupWord& w);
/// Equal up to a global sign.
bool rows_equivalent(const Row& x, const Row& y);

// ---- 2x2 matrices over an associative algebra (dim <= 4)

struct Mat2 {
    AlgElem a, b, c, d;

    static Mat2 identity(int dim);
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

Mat2 dagger(const Mat2& s);
Mat2 token_matrix(const Token& t);
/// Product of the token matrices; nullopt for octonions.
std::optional<Mat2> matrix_form(const GroupWord& w);
/// X -> S X S^dagger using the entrywise closed form.
HermMat apply_matrix(const Mat2& s, const HermMat& x);

/// |a|^2|d|^2 + |b|^2|c|^2 - 2 Re(a conj(c) d conj(b)).
Rational psl_det(const Mat2& s);
/// |ad - bc|^2 - 2 Re(a [conj c, d] conj b).
Rational psl_det_commutator(const Mat2& s);
/// Determinant of the 8x8 real matrix of (x1, x2) -> S (x1, x2)^T.
Rational real_determinant(const Mat2& s);
/// Closed-form inverse (divided by det(S S^dagger)); verified by multiplication.
Mat2 psl_inverse(const Mat2& s);
/// Hurwitz entries, det(S S^dagger) = 1 and ad - bc - 1 in the commutator ideal.
bool psl0_membership(const Mat2& s);

// ---- cosets

/// Canonical representative of the coset of a left-coprime pair.
Row canonical_pair(RingId r, const AlgElem& c, const AlgElem& d);
/// All pairs obtained by replaying the left Euclidean trace of (c, d) with every unit as r_n.
std::vector<Row> coset_class(RingId r, const AlgElem& c, const AlgElem& d);
/// Canonical left-coprime pairs with max(|c|^2, |d|^2) <= bound, sorted.
std::vector<Row> coset_reps(RingId r, int64_t bound);

// ---- membership of arbitrary words (tokens may carry any rational data)

GroupWord inverse(const GroupWord& w);
/// a after b.
GroupWord compose(const GroupWord& a, const GroupWord& b);

struct Membership {
    bool member = false;
    AlgElem a, c;  // w(-delta) = w_{a,c}(-delta)
    AlgElem y;     // translation part of w_{a,c}^-1 w
    std::string reason;
};

/// Normalizes against the coset construction: reads (a, c) off w(-delta), divides off w_{a,c},
/// extracts the translation y and checks that the remaining linear map lies in the finite
/// even Weyl group (W+(D4) by table, W+(E8) by lattice isometry with det 1 and e8_decompose).
Membership w_plus_membership(RingId r, const GroupWord& w);

}  // namespace octavia::hyperweyl
