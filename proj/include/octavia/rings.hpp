#pragma once

// Integer rings: rational integers, Hurwitz quaternions, octavians.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octavia/algebra.hpp"

namespace octavia::rings {

using algebra::AlgElem;

enum class RingId { Z, Hurwitz, Octavian };

int ring_dim(RingId r);
int unit_count(RingId r);
std::string ring_name(RingId r);
RingId ring_from_name(std::string_view name);
RingId ring_for_dim(int dim);

/// Integral basis: 1 for Z, the D4 simple roots for Hurwitz, the E8 simple roots for octavians.
const std::vector<AlgElem>& integral_basis(RingId r);

/// All units, sorted. For octavians: 2 real + 112 Brandt + 126 imaginary.
const std::vector<AlgElem>& units(RingId r);

struct OctavianUnitClasses {
    std::vector<AlgElem> real;
    std::vector<AlgElem> brandt;
    std::vector<AlgElem> imaginary;
};
/// Octavian units generated from the index lists (not from the lattice).
const OctavianUnitClasses& octavian_unit_classes();

bool is_unit(RingId r, const AlgElem& x);
bool is_member(RingId r, const AlgElem& x);
/// Integer coordinates in integral_basis(r); throws DomainError for non-members.
std::vector<int64_t> basis_coordinates(RingId r, const AlgElem& x);

/// Every ring element at minimal distance from x, sorted.
std::vector<AlgElem> nearest(RingId r, const AlgElem& x);
/// Floating input is first rationalized (continued fractions, denominators <= 10^6).
std::vector<AlgElem> nearest(RingId r, const std::vector<double>& x);

/// Ring elements with |x|^2 <= max_norm, ordered by norm then doubled coordinates.
std::vector<AlgElem> ball(RingId r, int64_t max_norm);

/// sigma(k) = #{x : |x|^2 = k} for k = 1..n_max by enumeration.
std::vector<uint64_t> shell_counts(RingId r, int n_max);

enum class Side { Left, Right };

/// Right: a = q1 c - r1, c = q2 r1 - r2, ..., r_{n-1} = q_{n+1} r_n.
/// Left:  d = c q1 - r1, c = r1 q2 - r2, ..., r_{n-1} = r_n q_{n+1}.
struct EuclTrace {
    RingId ring;
    Side side;
    AlgElem first;   // a (right) or d (left)
    AlgElem second;  // c
    std::vector<AlgElem> quotients;
    std::vector<AlgElem> remainders;

    /// r_n, or c when the first division is exact.
    AlgElem last_remainder() const { return remainders.empty() ? second : remainders.back(); }
    bool ends_in_unit() const;
    /// Re-substitutes every line; true iff all hold exactly and norms strictly decrease.
    bool replays() const;
};

EuclTrace right_euclid(RingId r, const AlgElem& a, const AlgElem& c);
EuclTrace left_euclid(RingId r, const AlgElem& d, const AlgElem& c);

/// Coprime iff some trace (depth-first over quotient ties) ends with a unit.
bool is_right_coprime(RingId r, const AlgElem& a, const AlgElem& c);
bool is_left_coprime(RingId r, const AlgElem& d, const AlgElem& c);

/// A trace ending in a unit if one exists (tie search), else the deterministic trace.
EuclTrace coprime_trace(RingId r, Side side, const AlgElem& x, const AlgElem& c);

/// Diagnostic only: g with 1 < |g|^2 <= max_norm and x g^-1, y g^-1 both integral.
std::vector<AlgElem> common_right_divisors(RingId r, const AlgElem& x, const AlgElem& y, int64_t max_norm);
/// Diagnostic only: g with 1 < |g|^2 <= max_norm and g^-1 x, g^-1 y both integral.
std::vector<AlgElem> common_left_divisors(RingId r, const AlgElem& x, const AlgElem& y, int64_t max_norm);

/// Hurwitz commutator ideal H[H,H]H.
struct CommutatorIdeal {
    std::vector<AlgElem> basis;
    int64_t index;
};
const CommutatorIdeal& commutator_ideal();
bool is_in_C(const AlgElem& x);

/// The subgroup {+-1, +-e1, +-e5, +-e6} of Hurwitz units.
const std::vector<AlgElem>& q_units();
bool in_q(const AlgElem& x);

}  // namespace octavia::rings
