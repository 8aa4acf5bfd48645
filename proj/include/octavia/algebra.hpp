#pragma once

// Cayley-Dickson algebras of dimension 1, 2, 4, 8, 16 with exact coordinates.
//
// Basis labels: dim 4 stores (1, e1, e5, e6); dim 8 stores (1, e1, ..., e7) in the
// octonion convention e1 e5 = e6 with the index rules i -> i+1 and i -> 2i (mod 7);
// dim 16 is the double of that octonion algebra, index 8 + k meaning i * e_k.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octavia/rational.hpp"

namespace octavia::algebra {

constexpr int kMaxDim = 16;

bool valid_dim(int dim);

struct MulEntry {
    int8_t sign;
    uint8_t index;
};

/// e_i e_j = sign * e_index for the labeled basis of one algebra.
class MulTable {
public:
    MulTable() = default;
    explicit MulTable(int dim) : dim_(dim) {}
    int dim() const { return dim_; }
    const MulEntry& at(int i, int j) const { return cells_[i * kMaxDim + j]; }
    MulEntry& at(int i, int j) { return cells_[i * kMaxDim + j]; }

private:
    int dim_ = 0;
    std::array<MulEntry, kMaxDim * kMaxDim> cells_{};
};

const MulTable& table(int dim);

/// 7x7 octonion table built only from the seed e1 e5 = e6 and the index rules.
/// Entry [i][j] (1-based, i != j) is +-k encoding e_i e_j = +-e_k.
std::array<std::array<int, 8>, 8> rule_generated_octonion_table();

/// Index of quaternion basis slot q (0..3) inside the octonion basis.
constexpr std::array<int, 4> kQuatInOct{0, 1, 5, 6};

/// Exact element: coordinates num[i] / den with a single positive denominator.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(int dim);

    static AlgElem zero(int dim) { return AlgElem(dim); }
    static AlgElem one(int dim);
    static AlgElem basis(int dim, int k, int64_t sign = 1);
    static AlgElem from_coords2(int dim, const std::vector<int64_t>& coords2);
    static AlgElem from_rational(int dim, const std::vector<int64_t>& num, int64_t den);
    static AlgElem from_scalar(int dim, const Rational& r);

    int dim() const { return dim_; }
    int64_t num(int i) const { return num_[i]; }
    int64_t den() const { return den_; }
    Rational coord(int i) const { return Rational(num_[i], den_); }
    double coord_double(int i) const { return static_cast<double>(num_[i]) / static_cast<double>(den_); }

    bool is_zero() const;
    bool is_real() const;
    bool is_imaginary() const { return num_[0] == 0; }
    bool is_half_integral() const { return den_ == 1 || den_ == 2; }
    /// Doubled integer coordinates; throws DomainError unless half-integral.
    std::vector<int64_t> coords2() const;

    AlgElem operator-() const;
    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator*(const Rational& r, const AlgElem& a);
    friend bool operator==(const AlgElem& a, const AlgElem& b);
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }
    /// Lexicographic order on doubled coordinates (then dim); deterministic tie breaking.
    friend bool operator<(const AlgElem& a, const AlgElem& b);

    size_t hash() const;

private:
    friend AlgElem make_normalized(int dim, const std::array<i128, kMaxDim>& num, i128 den);
    void normalize();

    int dim_ = 0;
    std::array<int64_t, kMaxDim> num_{};
    int64_t den_ = 1;
};

struct AlgElemHash {
    size_t operator()(const AlgElem& a) const { return a.hash(); }
};

AlgElem cd_multiply(const AlgElem& a, const AlgElem& b);
AlgElem conj(const AlgElem& a);
Rational real_part(const AlgElem& a);
AlgElem imag_part(const AlgElem& a);
Rational inner(const AlgElem& a, const AlgElem& b);
Rational norm_sq(const AlgElem& a);
AlgElem invert(const AlgElem& a);
AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c);
AlgElem commutator(const AlgElem& a, const AlgElem& b);

/// Embed a quaternion (1, e1, e5, e6 slots) into the octonions.
AlgElem quat_to_oct(const AlgElem& q);
/// Split a sedenion into octonion halves (a, b) with x = a + i b, and back.
std::pair<AlgElem, AlgElem> split_double(const AlgElem& x);
AlgElem join_double(const AlgElem& a, const AlgElem& b);

/// Text format "<alg>:c0,c1,..." with doubled integer coordinates.
std::string format(const AlgElem& a);
AlgElem parse(std::string_view text);
std::string alg_name(int dim);
int dim_from_name(std::string_view name);
/// Human readable form, e.g. "1/2(1 + e1 - e5)".
std::string pretty(const AlgElem& a);

struct ZeroDivisorWitness {
    AlgElem p;
    AlgElem q;
    Rational norm_p;
    Rational norm_q;
    Rational norm_pq;
};

/// Exhaustive search over pairs (e_a +- e_b, e_c +- e_d), a < b, c < d, in the algebra of
/// the given dimension; first hit in deterministic order.
std::optional<ZeroDivisorWitness> find_zero_divisors(int dim);
inline std::optional<ZeroDivisorWitness> find_sedenion_zero_divisors() { return find_zero_divisors(16); }

/// Floating shadow of AlgElem for geometry and series.
struct FloatElem {
    int dim = 0;
    std::array<double, kMaxDim> c{};

    FloatElem() = default;
    explicit FloatElem(int d) : dim(d) {}
    static FloatElem from(const AlgElem& a);
    static FloatElem from_vector(const std::vector<double>& v);
    std::vector<double> to_vector() const { return {c.begin(), c.begin() + dim}; }

    FloatElem operator-() const;
    friend FloatElem operator+(const FloatElem& a, const FloatElem& b);
    friend FloatElem operator-(const FloatElem& a, const FloatElem& b);
    friend FloatElem operator*(const FloatElem& a, const FloatElem& b);
    friend FloatElem operator*(double s, const FloatElem& a);
};

FloatElem conj(const FloatElem& a);
double inner(const FloatElem& a, const FloatElem& b);
double norm_sq(const FloatElem& a);

}  // namespace octavia::algebra
