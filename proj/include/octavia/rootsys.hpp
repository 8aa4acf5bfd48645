#pragma once

// Finite root systems D4, E7, E8 realized on Hurwitz units and octavian units; even Weyl
// group elements as integer matrices in the simple-root basis.

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "octavia/algebra.hpp"
#include "octavia/rings.hpp"

namespace octavia::rootsys {

using algebra::AlgElem;

enum class Algebra { D4, E7, E8 };

Algebra algebra_from_name(std::string_view name);
std::string algebra_name(Algebra a);

struct RootBasis {
    Algebra algebra;
    int dim;                        // 4 or 8
    std::vector<AlgElem> simple;    // epsilon_i
    std::vector<int> marks;         // highest-root coefficients
    AlgElem theta;                  // sum marks_i epsilon_i
};

const RootBasis& root_basis(Algebra a);

/// 2 (eps_i, eps_j) computed from the realization.
std::vector<std::vector<int>> cartan_matrix(const RootBasis& b);
/// Cartan matrix written down from the Dynkin diagram edges.
std::vector<std::vector<int>> dynkin_cartan(Algebra a);

/// x -> -a conj(x) a / |a|^2.
AlgElem reflect(const AlgElem& x, const AlgElem& a);
/// Closure of the simple roots under simple reflections, sorted.
std::vector<AlgElem> all_roots(const RootBasis& b);

/// Integer matrix in the simple-root basis of D4 (rank 4) or E8 (rank 8); column j is the
/// image of eps_j. Composition a * b applies b first.
struct LinMap {
    int rank = 0;
    std::array<int8_t, 64> m{};

    int8_t at(int i, int j) const { return m[i * 8 + j]; }
    int8_t& at(int i, int j) { return m[i * 8 + j]; }
    static LinMap identity(int rank);
    friend LinMap operator*(const LinMap& a, const LinMap& b);
    friend bool operator==(const LinMap& a, const LinMap& b) { return a.rank == b.rank && a.m == b.m; }
    size_t hash() const;
};

struct LinMapHash {
    size_t operator()(const LinMap& a) const { return a.hash(); }
};

/// Matrix of a real-linear map given as a function on algebra elements (dim 4 or 8).
LinMap linmap_from(int dim, const std::function<AlgElem(const AlgElem&)>& f);
AlgElem apply(const LinMap& m, const AlgElem& x);
int64_t determinant(const LinMap& m);
/// Permutes the roots and preserves the inner product.
bool is_lattice_isometry(const LinMap& m);
/// Octonion (rank 8) map multiplicative on all basis pairs e_i e_j.
bool is_automorphism(const LinMap& m);

/// x -> a x conj(b), the action of diag(a, b), for Hurwitz units with ab in {+-1, +-e1, +-e5, +-e6}.
LinMap d4_even_element(const AlgElem& a, const AlgElem& b);
/// x -> g x g as a rank 8 matrix (g an imaginary unit octavian).
LinMap sandwich(const AlgElem& g);
/// x -> x b.
LinMap right_mult(const AlgElem& b);
/// Product of reflections w_a w_b.
LinMap reflection_pair(int dim, const AlgElem& a, const AlgElem& b);

struct ClosureOptions {
    size_t limit = 4000000;
    std::string checkpoint;  // file path; empty disables checkpointing
    size_t checkpoint_every = 200000;
    std::function<void(size_t done, size_t total)> progress;
};

/// Breadth-first closure of the group generated by gens (identity included).
std::vector<LinMap> closure(const std::vector<LinMap>& gens, const ClosureOptions& opt = {});

// ---- automorphism criteria for x -> a1(a2(...(ak x ak^-1)...)a2^-1)a1^-1

AlgElem apply_bimult(const std::vector<AlgElem>& a, const AlgElem& x);
/// b_k = a_k^2(...(a_2^2 a_1^3 a_2)...)a_k.
AlgElem bimult_invariant(const std::vector<AlgElem>& a);
bool is_automorphism_bimult(const std::vector<AlgElem>& a);
/// For real or imaginary units: (((a1 a2) a3) ... ak) == +-1.
bool corollary_criterion(const std::vector<AlgElem>& a);
/// Direct check of phi(e_i e_j) = phi(e_i) phi(e_j) over all basis pairs.
bool brute_force_automorphism(const std::vector<AlgElem>& a);

// ---- G2(2), W+(E7), W+(E8)

/// Closure of the conjugations by the 112 Brandt units; computed once and cached.
const std::vector<LinMap>& g2_2();
std::vector<LinMap> generate_G2_2();
bool in_g2_2(const LinMap& m);

std::pair<AlgElem, AlgElem> factor_into_imaginaries(const AlgElem& b);

LinMap e7_element(const AlgElem& g, const AlgElem& h, const LinMap& phi);

struct E7Normal {
    AlgElem b;   // canonical sign of g h
    LinMap phi;  // automorphism with m = (g0_B h0_B) phi, (g0, h0) = factor(b)
    friend bool operator==(const E7Normal& x, const E7Normal& y) { return x.b == y.b && x.phi == y.phi; }
};

/// Normal form of an element of W+(E7) (a rank 8 matrix fixing 1).
E7Normal e7_normal_form(const LinMap& m);
E7Normal e7_compose(const LinMap& m1, const LinMap& m2);
LinMap e7_from_normal(const E7Normal& n);
/// The 120 canonical units b (one per +-pair).
const std::vector<AlgElem>& e7_classes();

LinMap e8_element(const AlgElem& e, const AlgElem& f, const AlgElem& b, const LinMap& phi);

struct E8Parts {
    AlgElem e, f, b;
    LinMap phi;
};
E8Parts e8_decompose(const LinMap& m);

/// Simple-root generators w_i w_j of the even Weyl groups.
std::vector<LinMap> even_generators(Algebra a);

struct OrderCertificate {
    uint64_t g2_order = 0;
    uint64_t e7_classes = 0;          // distinct cosets g_B h_B G2(2)
    bool e7_cosets_distinct = false;
    bool e7_closed_under_generators = false;
    bool g2_rotations = false;        // every element has determinant +1
    uint64_t e7_order = 0;
    uint64_t e8_orbit = 0;            // orbit of 1 under W+(E8)
    uint64_t e8_order = 0;
};

/// Orders of W+(E7) and W+(E8) from the normal form and orbit-stabilizer, without enumeration.
OrderCertificate certify_orders();

}  // namespace octavia::rootsys
