#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "octavia/autoforms.hpp"
#include "octavia/error.hpp"
#include "octavia/hyperweyl.hpp"
#include "octavia/rings.hpp"
#include "octavia/rootsys.hpp"
#include "octavia/uhp.hpp"

namespace octavia::verify {

using jsonio::json;
using algebra::AlgElem;
using rings::RingId;
namespace hw = hyperweyl;
namespace rs = rootsys;

namespace {

struct Outcome {
    json value, expected;
    bool pass;
};

class Suite {
public:
    explicit Suite(json& checks) : checks_(checks) {}

    // provenance: "reference-value" (published number), "computed-oracle" (independent
    // computation), "definition" (holds by construction)
    void add(const std::string& name, const std::string& op, const std::string& anchor, const std::string& provenance,
             const std::function<Outcome()>& fn, bool exploratory = false) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {json{{"error", e.what()}}, nullptr, false};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        checks_.push_back(json{{"name", name},
                               {"op", op},
                               {"anchor", anchor},
                               {"provenance", provenance},
                               {"value", o.value},
                               {"expected", o.expected},
                               {"pass", o.pass},
                               {"exploratory", exploratory},
                               {"seconds", std::round(secs * 1000.0) / 1000.0}});
    }

private:
    json& checks_;
};

AlgElem oct(std::vector<int64_t> c2) { return AlgElem::from_coords2(8, c2); }

hw::GroupWord random_word(RingId r, int len, std::mt19937_64& rng) {
    const int dim = rings::ring_dim(r);
    const auto& units = rings::units(r);
    hw::GroupWord w{dim, {}};
    for (int k = 0; k < len; ++k) {
        switch (rng() % 3) {
        case 0: w.tokens.push_back(hw::Token::inv(dim)); break;
        case 1: w.tokens.push_back(hw::Token::trans(jsonio::random_element(r, 2, rng))); break;
        default: w.tokens.push_back(hw::Token::rot(units[rng() % units.size()])); break;
        }
    }
    return w;
}

uhp::UhpPoint random_point(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5), v(0.6, 1.6);
    std::vector<double> x(dim);
    for (auto& c : x) c = u(rng);
    return uhp::UhpPoint::make(x, v(rng));
}

// ---------------------------------------------------------------- suites

void algebra_suite(Suite& s, std::mt19937_64& rng) {
    s.add("octonion table from the seed e1 e5 = e6 and index rules", "algebra.table", "octonion multiplication",
          "computed-oracle", [] {
              auto gen = algebra::rule_generated_octonion_table();
              const auto& t = algebra::table(8);
              int bad = 0;
              for (int i = 1; i < 8; ++i)
                  for (int j = 1; j < 8; ++j) {
                      if (i == j) continue;
                      const auto& e = t.at(i, j);
                      if (gen[i][j] != e.sign * e.index) ++bad;
                  }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("norm composition on 1000 random octavian pairs", "algebra.norm_sq", "normed division algebra",
          "definition", [&] {
              int bad = 0;
              for (int k = 0; k < 1000; ++k) {
                  AlgElem a = jsonio::random_element(RingId::Octavian, 2, rng);
                  AlgElem b = jsonio::random_element(RingId::Octavian, 2, rng);
                  if (algebra::norm_sq(a * b) != algebra::norm_sq(a) * algebra::norm_sq(b)) ++bad;
              }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("alternativity on 1000 random octavian pairs", "algebra.associator", "alternative algebra", "definition",
          [&] {
              int bad = 0;
              for (int k = 0; k < 1000; ++k) {
                  AlgElem a = jsonio::random_element(RingId::Octavian, 2, rng);
                  AlgElem b = jsonio::random_element(RingId::Octavian, 2, rng);
                  if (!algebra::associator(a, a, b).is_zero() || !algebra::associator(a, b, b).is_zero()) ++bad;
              }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("sedenion zero divisors violate norm composition", "algebra.find_zero_divisors", "sedenion failure",
          "computed-oracle", [] {
              auto w = algebra::find_sedenion_zero_divisors();
              if (!w) return Outcome{nullptr, "witness", false};
              json v{{"p", jsonio::elem(w->p)}, {"q", jsonio::elem(w->q)}, {"norm_pq", w->norm_pq.str()}};
              return Outcome{v, "norm_pq = 0", w->norm_pq == Rational(0) && w->norm_p != Rational(0)};
          });
    s.add("no octonion zero divisors in the same search space", "algebra.find_zero_divisors", "division algebra",
          "computed-oracle", [] {
              bool none = !algebra::find_zero_divisors(8).has_value();
              return Outcome{none ? "none" : "found", "none", none};
          });
}

void rings_suite(Suite& s, std::mt19937_64& rng) {
    s.add("unit counts", "rings.units", "unit groups of the integral rings", "reference-value", [] {
        const auto& c = rings::octavian_unit_classes();
        json v{{"hurwitz", rings::units(RingId::Hurwitz).size()},
               {"octavian", rings::units(RingId::Octavian).size()},
               {"octavian_split", {c.real.size(), c.brandt.size(), c.imaginary.size()}}};
        json e{{"hurwitz", 24}, {"octavian", 240}, {"octavian_split", {2, 112, 126}}};
        return Outcome{v, e, v == e};
    });
    s.add("ring closure of the integral bases", "rings.is_member", "integral rings", "definition", [] {
        int bad = 0;
        for (auto r : {RingId::Hurwitz, RingId::Octavian})
            for (const auto& a : rings::integral_basis(r))
                for (const auto& b : rings::integral_basis(r))
                    if (!rings::is_member(r, a * b)) ++bad;
        return Outcome{bad, 0, bad == 0};
    });
    s.add("shell counts", "rings.shell_counts", "lattice theta series", "computed-oracle", [] {
        auto h = rings::shell_counts(RingId::Hurwitz, 5);
        auto o = rings::shell_counts(RingId::Octavian, 2);
        json v{{"hurwitz", h}, {"octavian", o}};
        json e{{"hurwitz", {24, 24, 96, 24, 144}}, {"octavian", {240, 2160}}};
        return Outcome{v, e, v == e};
    });
    s.add("Euclid traces replay (1000 Hurwitz, 100 octavian pairs)", "rings.right_euclid", "Euclidean algorithm",
          "definition", [&] {
              int bad = 0;
              for (auto [r, n, bound] : {std::tuple{RingId::Hurwitz, 1000, int64_t{50}},
                                         std::tuple{RingId::Octavian, 100, int64_t{2}}})
                  for (int k = 0; k < n; ++k) {
                      AlgElem a = jsonio::random_element(r, bound, rng), c = jsonio::random_element(r, bound, rng);
                      if (c.is_zero()) continue;
                      if (!rings::right_euclid(r, a, c).replays() || !rings::left_euclid(r, a, c).replays()) ++bad;
                  }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("right coprime pair e1+e2, e1+e3 with common right divisor 1+e1", "rings.is_right_coprime",
          "octavian coprimality example", "reference-value", [] {
              AlgElem a = oct({0, 2, 2, 0, 0, 0, 0, 0}), c = oct({0, 2, 0, 2, 0, 0, 0, 0});
              AlgElem q1 = oct({2, 1, 0, 0, 1, -1, 0, -1});
              AlgElem r1 = q1 * c - a;
              AlgElem g = oct({2, 2, 0, 0, 0, 0, 0, 0});
              bool divides = rings::is_member(RingId::Octavian, a * algebra::invert(g)) &&
                             rings::is_member(RingId::Octavian, c * algebra::invert(g));
              json v{{"norm_r1", algebra::norm_sq(r1).str()},
                     {"right_coprime", rings::is_right_coprime(RingId::Octavian, a, c)},
                     {"divisor_1_plus_e1", divides}};
              json e{{"norm_r1", "1"}, {"right_coprime", true}, {"divisor_1_plus_e1", true}};
              return Outcome{v, e, v == e};
          });
    s.add("commutator ideal index", "rings.commutator_ideal", "commutator ideal", "reference-value", [] {
        auto i = rings::commutator_ideal().index;
        return Outcome{i, 4, i == 4};
    });
}

void roots_suite(Suite& s) {
    s.add("root counts", "rootsys.all_roots", "root systems on units", "reference-value", [] {
        json v{{"D4", rs::all_roots(rs::root_basis(rs::Algebra::D4)).size()},
               {"E7", rs::all_roots(rs::root_basis(rs::Algebra::E7)).size()},
               {"E8", rs::all_roots(rs::root_basis(rs::Algebra::E8)).size()}};
        json e{{"D4", 24}, {"E7", 126}, {"E8", 240}};
        return Outcome{v, e, v == e};
    });
    s.add("Cartan matrices from the realization", "rootsys.cartan_matrix", "simple roots", "reference-value", [] {
        bool ok = true;
        json v;
        for (auto a : {rs::Algebra::D4, rs::Algebra::E7, rs::Algebra::E8}) {
            const auto& b = rs::root_basis(a);
            bool m = rs::cartan_matrix(b) == rs::dynkin_cartan(a);
            v[rs::algebra_name(a)] = m;
            ok = ok && m;
        }
        return Outcome{v, "all match", ok};
    });
    s.add("highest root is 1 in the D4 and E8 bases", "rootsys.root_basis", "highest root", "reference-value", [] {
        bool d4 = rs::root_basis(rs::Algebra::D4).theta == AlgElem::one(4);
        bool e8 = rs::root_basis(rs::Algebra::E8).theta == AlgElem::one(8);
        return Outcome{json{{"D4", d4}, {"E8", e8}}, json{{"D4", true}, {"E8", true}}, d4 && e8};
    });
    s.add("W+(D4) order = 96", "rootsys.closure", "even Weyl group of D4", "reference-value", [] {
        auto n = rs::closure(rs::even_generators(rs::Algebra::D4)).size();
        return Outcome{n, 96, n == 96};
    });
    s.add("diagonal PSL(0) pairs of units, mod sign", "hyperweyl.psl0_membership", "even Weyl group of D4",
          "computed-oracle", [] {
              const auto& u = rings::units(RingId::Hurwitz);
              int count = 0;
              for (const auto& a : u)
                  for (const auto& b : u)
                      if (hw::psl0_membership(hw::Mat2{a, AlgElem::zero(4), AlgElem::zero(4), b})) ++count;
              return Outcome{count / 2, 96, count == 192};
          });
}

void groups_suite(Suite& s, std::mt19937_64& rng, bool heavy) {
    s.add("G2(2) order = 12096, all elements automorphisms", "rootsys.generate_G2_2", "automorphisms of the octavians",
          "reference-value", [] {
              const auto& g = rs::g2_2();
              size_t bad = 0;
              for (const auto& m : g)
                  if (!rs::is_automorphism(m) || !rs::is_lattice_isometry(m)) ++bad;
              return Outcome{json{{"order", g.size()}, {"non_automorphisms", bad}},
                             json{{"order", 12096}, {"non_automorphisms", 0}}, g.size() == 12096 && bad == 0};
          });
    s.add("closure of the Brandt conjugations alone", "rootsys.closure", "automorphisms of the octavians",
          "computed-oracle", [] {
              std::vector<rs::LinMap> gens;
              for (const auto& b : rings::octavian_unit_classes().brandt)
                  gens.push_back(rs::linmap_from(8, [&](const AlgElem& x) { return (b * x) * algebra::invert(b); }));
              auto n = rs::closure(gens).size();
              return Outcome{n, 6048, n == 6048};
          }, true);
    s.add("W+(E7) and W+(E8) orders by orbit-stabilizer", "rootsys.certify_orders", "even Weyl groups of E7, E8",
          "reference-value", [] {
              auto c = rs::certify_orders();
              json v{{"e7", c.e7_order}, {"e8_orbit", c.e8_orbit}, {"e8", c.e8_order},
                     {"cosets_distinct", c.e7_cosets_distinct}, {"closed", c.e7_closed_under_generators}};
              json e{{"e7", 1451520}, {"e8_orbit", 240}, {"e8", 348364800}, {"cosets_distinct", true}, {"closed", true}};
              return Outcome{v, e, v == e};
          });
    s.add("e8_decompose round trip on 200 random elements", "rootsys.e8_decompose", "W+(E8) factorization",
          "definition", [&] {
              auto gens = rs::even_generators(rs::Algebra::E8);
              int bad = 0;
              for (int k = 0; k < 200; ++k) {
                  rs::LinMap m = rs::LinMap::identity(8);
                  for (int j = 0; j < 24; ++j) m = gens[rng() % gens.size()] * m;
                  auto p = rs::e8_decompose(m);
                  if (!(rs::e8_element(p.e, p.f, p.b, p.phi) == m)) ++bad;
              }
              return Outcome{bad, 0, bad == 0};
          });
    if (heavy)
        s.add("W+(E7) order by full matrix closure", "rootsys.closure", "even Weyl group of E7", "reference-value", [] {
            auto n = rs::closure(rs::even_generators(rs::Algebra::E7)).size();
            return Outcome{n, 1451520, n == 1451520};
        });
}

void hyperbolic_suite(Suite& s, std::mt19937_64& rng) {
    s.add("over-extended Cartan matrices", "hyperweyl.simple_roots", "over-extended root systems", "computed-oracle",
          [] {
              bool ok = true;
              for (auto [dim, a, hook] : {std::tuple{4, rs::Algebra::D4, 2}, std::tuple{8, rs::Algebra::E8, 1}}) {
                  auto fin = rs::dynkin_cartan(a);
                  const int r = static_cast<int>(fin.size());
                  std::vector<std::vector<int>> e(r + 2, std::vector<int>(r + 2, 0));
                  for (int i = 0; i < r; ++i)
                      for (int j = 0; j < r; ++j) e[i + 2][j + 2] = fin[i][j];
                  e[0][0] = e[1][1] = 2;
                  e[0][1] = e[1][0] = -1;
                  e[1][hook + 1] = e[hook + 1][1] = -1;
                  ok = ok && hw::over_extended_cartan(dim) == e;
              }
              return Outcome{ok, true, ok};
          });
    s.add("w_{a,c}(-delta) = [[|a|^2, a conj c], [c conj a, |c|^2]] (100 pairs per ring)", "hyperweyl.build_w_ac",
          "orbit of the null root", "reference-value", [&] {
              int bad = 0;
              for (auto r : {RingId::Hurwitz, RingId::Octavian})
                  for (int k = 0; k < 100; ++k) {
                      AlgElem a = jsonio::random_element(r, r == RingId::Hurwitz ? 30 : 2, rng);
                      AlgElem c = jsonio::random_element(r, r == RingId::Hurwitz ? 30 : 2, rng);
                      if (c.is_zero() || !rings::is_right_coprime(r, a, c)) continue;
                      auto w = hw::build_w_ac(r, a, c);
                      auto img = hw::apply_word(w, hw::HermMat::minus_delta(a.dim()));
                      if (!(img == hw::HermMat{algebra::norm_sq(a), algebra::norm_sq(c), a * algebra::conj(c)})) ++bad;
                  }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("(0,1) w~_{c,d} = (c,d) (100 pairs per ring)", "hyperweyl.build_w_tilde_cd", "coset representatives",
          "reference-value", [&] {
              int bad = 0;
              for (auto r : {RingId::Hurwitz, RingId::Octavian})
                  for (int k = 0; k < 100; ++k) {
                      AlgElem c = jsonio::random_element(r, r == RingId::Hurwitz ? 30 : 2, rng);
                      AlgElem d = jsonio::random_element(r, r == RingId::Hurwitz ? 30 : 2, rng);
                      if (c.is_zero() || !rings::is_left_coprime(r, d, c)) continue;
                      auto w = hw::build_w_tilde_cd(r, c, d);
                      auto row = hw::row_act(hw::Row{AlgElem::zero(c.dim()), AlgElem::one(c.dim())}, w);
                      if (!(row == hw::Row{c, d})) ++bad;
                  }
              return Outcome{bad, 0, bad == 0};
          });
    s.add("PSL(0) membership of generators; triality element excluded", "hyperweyl.psl0_membership",
          "PSL(0)(2,H)", "reference-value", [] {
              bool gens = true;
              std::vector<hw::Token> toks{hw::Token::inv(4), hw::Token::trans(AlgElem::one(4))};
              for (const auto& e : rs::root_basis(rs::Algebra::D4).simple) toks.push_back(hw::Token::trans(e));
              for (const auto& t : toks) gens = gens && hw::psl0_membership(hw::token_matrix(t));
              AlgElem a = AlgElem::from_coords2(4, {1, 1, 1, 1});
              bool tri = hw::psl0_membership(hw::Mat2{a, AlgElem::zero(4), AlgElem::zero(4), AlgElem::one(4)});
              json v{{"generators", gens}, {"triality_member", tri}};
              json e{{"generators", true}, {"triality_member", false}};
              return Outcome{v, e, v == e};
          });
    s.add("Hurwitz coset count at bound 1 equals pairs / 24", "hyperweyl.coset_reps", "coset representatives",
          "computed-oracle", [] {
              auto reps = hw::coset_reps(RingId::Hurwitz, 1);
              auto pts = rings::ball(RingId::Hurwitz, 1);
              size_t pairs = 0;
              for (const auto& c : pts)
                  for (const auto& d : pts)
                      if (!(c.is_zero() && d.is_zero()) && rings::is_left_coprime(RingId::Hurwitz, d, c)) ++pairs;
              return Outcome{reps.size(), pairs / 24, reps.size() * 24 == pairs};
          });
    s.add("random token words are W+ members; bad tokens rejected", "hyperweyl.w_plus_membership",
          "cosets of the hyperbolic Weyl group", "definition", [&] {
              int bad = 0;
              for (auto r : {RingId::Hurwitz, RingId::Octavian}) {
                  const int dim = rings::ring_dim(r);
                  for (int k = 0; k < 30; ++k)
                      if (!hw::w_plus_membership(r, random_word(r, 6, rng)).member) ++bad;
                  AlgElem half = Rational(1, 2) * AlgElem::one(dim);
                  if (hw::w_plus_membership(r, hw::GroupWord{dim, {hw::Token::trans(half)}}).member) ++bad;
              }
              return Outcome{bad, 0, bad == 0};
          });
}

void uhp_suite(Suite& s, std::mt19937_64& rng) {
    s.add("distance invariance under 100 random words per ring", "uhp.distance", "isometries of H(A)",
          "definition", [&] {
              double worst = 0;
              for (auto r : {RingId::Hurwitz, RingId::Octavian})
                  for (int k = 0; k < 100; ++k) {
                      auto w = random_word(r, 5, rng);
                      auto z1 = random_point(rings::ring_dim(r), rng), z2 = random_point(rings::ring_dim(r), rng);
                      double d0 = uhp::distance(z1, z2);
                      double d1 = uhp::distance(uhp::act_word(w, z1), uhp::act_word(w, z2));
                      worst = std::max(worst, std::fabs(d1 - d0) / std::max(1.0, d0));
                  }
              return Outcome{worst, "< 1e-9", worst < 1e-9};
          });
    s.add("Laplacian of lambda(w z, p) equals (n+1)(1/2 + lambda) (10 words per ring)",
          "uhp.laplace_beltrami_numeric", "Laplace-Beltrami operator", "computed-oracle", [&] {
              double worst = 0;
              for (auto r : {RingId::Hurwitz, RingId::Octavian})
                  for (int k = 0; k < 10; ++k) {
                      const int n = rings::ring_dim(r);
                      auto w = random_word(r, 4, rng);
                      auto z = random_point(n, rng), p = random_point(n, rng);
                      auto f = [&](const uhp::UhpPoint& q) { return uhp::lambda(uhp::act_word(w, q), p); };
                      double lap = uhp::laplace_beltrami_numeric(f, z, 1e-2 * z.v, 6);
                      double want = (n + 1) * (0.5 + f(z));
                      worst = std::max(worst, std::fabs(lap - want) / std::fabs(want));
                  }
              return Outcome{worst, "< 1e-9", worst < 1e-9};
          });
    s.add("hyperboloid embedding residual", "uhp.embed", "hyperboloid model", "definition", [&] {
        double worst = 0;
        for (int n : {4, 8})
            for (int k = 0; k < 100; ++k) worst = std::max(worst, std::fabs(uhp::hyperboloid_residual(uhp::embed(random_point(n, rng)))));
        return Outcome{worst, "< 1e-12", worst < 1e-12};
    });
    s.add("d(i, 2i) = log 2", "uhp.distance", "hyperbolic distance", "definition", [] {
        double d = uhp::distance(uhp::UhpPoint::make({0, 0, 0, 0}, 1), uhp::UhpPoint::make({0, 0, 0, 0}, 2));
        return Outcome{d, std::log(2.0), std::fabs(d - std::log(2.0)) < 1e-14};
    });
    s.add("orbit length of [[2,1],[1,1]]", "uhp.periodic_orbit_length", "periodic geodesics", "reference-value", [] {
        hw::Mat2 m{AlgElem::from_coords2(4, {4, 0, 0, 0}), AlgElem::one(4), AlgElem::one(4), AlgElem::one(4)};
        double l = uhp::periodic_orbit_length(m);
        double t0 = std::pow((3.0 + std::sqrt(5.0)) / 2.0, 2);
        return Outcome{l, std::log(t0), std::fabs(l - std::log(t0)) < 1e-12};
    });
}

void autoforms_suite(Suite& s) {
    namespace af = autoforms;
    const auto z = uhp::UhpPoint::make({0.13, -0.21, 0.07, 0.3}, 0.83);
    s.add("Eisenstein sum invariant under Inv, Rot and u -> -conj u (R = 4, s = 4)", "autoforms.eisenstein_truncated",
          "Eisenstein series", "definition", [&] {
              af::SeriesParams p{RingId::Hurwitz, {4.0, 0.0}, 4, z};
              auto e = af::eisenstein_truncated(p);
              auto at = [&](const uhp::UhpPoint& q) {
                  auto pp = p;
                  pp.z = q;
                  return std::abs(af::eisenstein_truncated(pp) - e) / std::abs(e);
              };
              auto zc = z;
              zc.u = -algebra::conj(z.u);
              double worst = std::max({at(uhp::act_token(hw::Token::inv(4), z)),
                                       at(uhp::act_token(hw::Token::rot(rings::units(RingId::Hurwitz)[5]), z)), at(zc)});
              return Outcome{worst, "<= 1e-13", worst <= 1e-13};
          });
    s.add("Trans residual decreases over R = 4, 9, 16 (z = i, s = 4)", "autoforms.eisenstein_truncated",
          "Eisenstein series", "computed-oracle", [] {
              auto i = uhp::UhpPoint::make({0, 0, 0, 0}, 1.0);
              std::vector<double> res;
              for (int R : {4, 9, 16}) {
                  af::SeriesParams p{RingId::Hurwitz, {4.0, 0.0}, R, i};
                  auto e = af::eisenstein_truncated(p);
                  p.z = uhp::act_token(hw::Token::trans(AlgElem::one(4)), i);
                  res.push_back(std::abs(af::eisenstein_truncated(p) - e) / std::abs(e));
              }
              return Outcome{res, "decreasing", res[1] < res[0] && res[2] < res[1]};
          });
    s.add("E = zeta P residual decreases over R = 4, 9 (s = 5)", "autoforms.zeta_relation_check",
          "zeta factorization", "computed-oracle", [&] {
              std::vector<double> res;
              for (int R : {4, 9}) res.push_back(af::zeta_relation_check({RingId::Hurwitz, {5.0, 0.0}, R, z}, 1000000).residual);
              return Outcome{res, "decreasing", res[1] < res[0]};
          });
    s.add("Poincare sum by coprime filter and by coset words agree (R = 4)", "autoforms.poincare_via_words",
          "Poincare series", "computed-oracle", [&] {
              af::SeriesParams p{RingId::Hurwitz, {5.0, 0.0}, 4, z};
              double d = std::abs(af::poincare_truncated(p) - af::poincare_via_words(p)) / std::abs(af::poincare_truncated(p));
              return Outcome{d, "< 1e-12", d < 1e-12};
          });
    s.add("shell count formulas match enumeration", "autoforms.shell_count", "zeta coefficients", "computed-oracle",
          [] {
              int bad = 0;
              auto h = rings::shell_counts(RingId::Hurwitz, 32);
              for (size_t k = 0; k < h.size(); ++k) bad += h[k] != af::shell_count(RingId::Hurwitz, k + 1);
              auto o = rings::shell_counts(RingId::Octavian, 3);
              for (size_t k = 0; k < o.size(); ++k) bad += o[k] != af::shell_count(RingId::Octavian, k + 1);
              return Outcome{bad, 0, bad == 0};
          });
    s.add("K_{1/2}(x) = sqrt(pi / 2x) e^-x at x = 1, 5", "autoforms.bessel_k", "K-Bessel function",
          "computed-oracle", [] {
              double worst = 0;
              for (double x : {1.0, 5.0}) {
                  double k = af::bessel_k({0.5, 0.0}, x).real(), e = std::sqrt(M_PI / (2 * x)) * std::exp(-x);
                  worst = std::max(worst, std::fabs(k - e) / e);
              }
              return Outcome{worst, "< 1e-9", worst < 1e-9};
          });
    s.add("Green function PDE residual (n = 4, s = 4)", "autoforms.green_pde_residual", "Green function",
          "definition", [] {
              double r = af::green_pde_residual(uhp::UhpPoint::make({0.1, 0.2, -0.3, 0.05}, 1.1),
                                                uhp::UhpPoint::make({-0.2, 0.1, 0.0, 0.3}, 0.7), 4.0);
              return Outcome{r, "< 1e-6", r < 1e-6};
          });
    s.add("Green function small-lambda slope -(n-1)/2", "autoforms.green_slope", "Green function singularity",
          "reference-value", [] {
              double sl = af::green_slope(4.0, 4, 1e-7, 1e-8);
              return Outcome{sl, -1.5, std::fabs(sl + 1.5) < 0.02};
          });
    s.add("Fourier coefficient ratio follows v^{n/2} K_{s-n/2}(2 pi |mu| v)", "autoforms.fourier_coefficients",
          "Fourier expansion", "computed-oracle", [] {
              af::FourierOptions o;
              o.grid = 5;
              std::vector<AlgElem> mu{AlgElem::from_coords2(4, {2, 2, 0, 0})};
              const double s = 8.0, m = std::sqrt(2.0);
              auto a1 = af::fourier_coefficients(RingId::Hurwitz, mu, 0.8, s, o)[0].coefficient;
              auto a2 = af::fourier_coefficients(RingId::Hurwitz, mu, 1.0, s, o)[0].coefficient;
              double pred = 0.64 * af::bessel_k({s - 2, 0}, 2 * M_PI * m * 0.8).real() /
                            af::bessel_k({s - 2, 0}, 2 * M_PI * m * 1.0).real();
              double ratio = (a1 / a2).real();
              return Outcome{ratio, pred, std::fabs(ratio / pred - 1) < 0.01};
          });
    s.add("critical-line overlap: linear growth at r = r', bounded otherwise", "autoforms.critical_line_overlap",
          "critical line", "computed-oracle", [] {
              auto same = af::critical_line_overlap(4, 3.0, 3.0, 1.0, {10, 20, 40});
              auto diff = af::critical_line_overlap(4, 3.0, 1.0, 1.0, {10, 20, 40});
              json v{{"same", {std::abs(same[0].overlap), std::abs(same[1].overlap), std::abs(same[2].overlap)}},
                     {"different", {std::abs(diff[0].overlap), std::abs(diff[1].overlap), std::abs(diff[2].overlap)}}};
              bool ok = std::fabs(std::abs(same[2].overlap) - 40) < 1e-9 && std::abs(diff[2].overlap) <= 1.0 + 1e-12;
              return Outcome{v, "same = L, different <= 2/|r - r'|", ok};
          }, true);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"algebra", "rings", "roots", "groups", "hyperbolic", "uhp", "autoforms", "all"};
    return names;
}

json run(const std::string& suite, bool heavy, uint64_t seed) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) fail(Status::InvalidArgument, "unknown suite " + suite);
    json checks = json::array();
    Suite s(checks);
    std::mt19937_64 rng(seed);
    auto want = [&](const char* n) { return suite == "all" || suite == n; };
    if (want("algebra")) algebra_suite(s, rng);
    if (want("rings")) rings_suite(s, rng);
    if (want("roots")) roots_suite(s);
    if (want("groups")) groups_suite(s, rng, heavy);
    if (want("hyperbolic")) hyperbolic_suite(s, rng);
    if (want("uhp")) uhp_suite(s, rng);
    if (want("autoforms")) autoforms_suite(s);
    int passed = 0, failed = 0, exploratory = 0;
    for (const auto& c : checks) {
        if (c["exploratory"].get<bool>()) ++exploratory;
        else if (c["pass"].get<bool>()) ++passed;
        else ++failed;
    }
    return json{{"suite", suite}, {"seed", seed},        {"heavy", heavy},
                {"checks", checks}, {"passed", passed}, {"failed", failed},
                {"exploratory", exploratory}, {"ok", failed == 0}};
}

}  // namespace octavia::verify
