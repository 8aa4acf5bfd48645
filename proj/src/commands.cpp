#include "octavia/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "jsonio.hpp"
#include "octavia/autoforms.hpp"
#include "octavia/error.hpp"
#include "octavia/hyperweyl.hpp"
#include "octavia/rings.hpp"
#include "octavia/rootsys.hpp"
#include "octavia/uhp.hpp"
#include "verify.hpp"

namespace octavia::commands {

using jsonio::json;
using algebra::AlgElem;
using rings::RingId;
namespace hw = hyperweyl;
namespace rs = rootsys;
namespace af = autoforms;

namespace {

json units_doc(const json& a) {
    RingId r = jsonio::ring_from(a);
    const auto& u = rings::units(r);
    json out{{"ring", rings::ring_name(r)}, {"count", u.size()}};
    if (r == RingId::Octavian) {
        const auto& c = rings::octavian_unit_classes();
        out["classes"] = json{{"real", c.real.size()}, {"brandt", c.brandt.size()}, {"imaginary", c.imaginary.size()}};
    }
    out["units"] = jsonio::elems(u);
    return out;
}

json roots_doc(const json& a) {
    auto alg = rs::algebra_from_name(jsonio::get_or<std::string>(a, "algebra", "E8"));
    const auto& b = rs::root_basis(alg);
    auto roots = rs::all_roots(b);
    return json{{"algebra", rs::algebra_name(alg)}, {"count", roots.size()},  {"simple", jsonio::elems(b.simple)},
                {"marks", b.marks},               {"theta", jsonio::elem(b.theta)}, {"cartan", rs::cartan_matrix(b)},
                {"roots", jsonio::elems(roots)}};
}

json group_doc(const json& a) {
    std::string name = jsonio::get_or<std::string>(a, "name", "g2");
    if (name == "g2") return json{{"name", "G2(2)"}, {"order", rs::g2_2().size()}};
    if (name == "wd4")
        return json{{"name", "W+(D4)"}, {"order", rs::closure(rs::even_generators(rs::Algebra::D4)).size()}};
    if (name == "certificate") {
        auto c = rs::certify_orders();
        return json{{"name", "orders"},
                    {"g2", c.g2_order},
                    {"e7_classes", c.e7_classes},
                    {"e7_cosets_distinct", c.e7_cosets_distinct},
                    {"e7_closed_under_generators", c.e7_closed_under_generators},
                    {"e7", c.e7_order},
                    {"e8_orbit", c.e8_orbit},
                    {"e8", c.e8_order}};
    }
    if (name == "e7-closure") {
        rs::ClosureOptions opt;
        opt.checkpoint = jsonio::get_or<std::string>(a, "checkpoint", "");
        if (jsonio::get_or<bool>(a, "progress", false))
            opt.progress = [](size_t done, size_t total) {
                std::fprintf(stderr, "closure: %zu elements, frontier %zu\n", total, total - done);
            };
        auto els = rs::closure(rs::even_generators(rs::Algebra::E7), opt);
        return json{{"name", "W+(E7)"}, {"order", els.size()}};
    }
    fail(Status::InvalidArgument, "unknown group " + name + " (g2, wd4, certificate, e7-closure)");
}

json euclid_doc(const json& a) {
    RingId r = jsonio::ring_from(a);
    std::string side = jsonio::get_or<std::string>(a, "side", "right");
    AlgElem x = jsonio::elem_from(a.at("x")), c = jsonio::elem_from(a.at("c"));
    rings::Side sd = side == "left" ? rings::Side::Left : rings::Side::Right;
    if (side != "left" && side != "right") fail(Status::InvalidArgument, "side must be left or right");
    auto t = rings::coprime_trace(r, sd, x, c);
    json norms = json::array();
    for (const auto& rem : t.remainders) norms.push_back(algebra::norm_sq(rem).str());
    return json{{"ring", rings::ring_name(r)},
                {"side", side},
                {"x", jsonio::elem(x)},
                {"c", jsonio::elem(c)},
                {"quotients", jsonio::elems(t.quotients)},
                {"remainders", jsonio::elems(t.remainders)},
                {"remainder_norms", norms},
                {"replays", t.replays()},
                {"coprime", t.ends_in_unit()}};
}

json coset_doc(const json& a) {
    RingId r = jsonio::ring_from(a, "octavian");
    auto bound = jsonio::get_or<int64_t>(a, "bound", 1);
    auto reps = hw::coset_reps(r, bound);
    json list = json::array();
    for (const auto& p : reps)
        list.push_back(json{{"c", jsonio::elem(p.a1)},
                            {"d", jsonio::elem(p.a2)},
                            {"word", jsonio::word(hw::build_w_tilde_cd(r, p.a1, p.a2))}});
    return json{{"ring", rings::ring_name(r)}, {"bound", bound}, {"count", reps.size()}, {"reps", list}};
}

af::SeriesParams series_params(const json& a) {
    af::SeriesParams p;
    p.ring = jsonio::ring_from(a);
    p.s = a.contains("s") ? jsonio::cplx_from(a.at("s")) : af::cplx{5.0, 0.0};
    p.radius = jsonio::get_or<int64_t>(a, "radius", 4);
    p.z = a.contains("z") ? jsonio::point_from(a.at("z"), rings::ring_dim(p.ring))
                          : uhp::UhpPoint::make(std::vector<double>(rings::ring_dim(p.ring), 0.0), 1.0);
    return p;
}

json eisenstein_doc(const json& a) {
    auto p = series_params(a);
    auto e = af::eisenstein_truncated(p);
    json out{{"ring", rings::ring_name(p.ring)}, {"s", jsonio::cplx(p.s)}, {"radius", p.radius},
             {"z", jsonio::point(p.z)},          {"value", jsonio::cplx(e)}, {"certified", af::convergence_certified(p)}};
    if (jsonio::get_or<bool>(a, "symmetry", true)) {
        const int dim = p.z.dim();
        auto resid = [&](const uhp::UhpPoint& q) {
            auto pp = p;
            pp.z = q;
            return std::abs(af::eisenstein_truncated(pp) - e) / std::abs(e);
        };
        out["residuals"] = json{{"inv", resid(uhp::act_token(hw::Token::inv(dim), p.z))},
                                {"rot", resid(uhp::act_token(hw::Token::rot(rings::units(p.ring).back()), p.z))},
                                {"trans", resid(uhp::act_token(hw::Token::trans(AlgElem::one(dim)), p.z))}};
    }
    if (jsonio::get_or<bool>(a, "poincare", false)) out["poincare"] = jsonio::cplx(af::poincare_truncated(p));
    return out;
}

json fourier_doc(const json& a) {
    RingId r = jsonio::ring_from(a);
    std::vector<AlgElem> mus;
    if (a.contains("mu")) {
        if (a.at("mu").is_array())
            for (const auto& m : a.at("mu")) mus.push_back(jsonio::elem_from(m));
        else
            mus.push_back(jsonio::elem_from(a.at("mu")));
    } else {
        mus.push_back(AlgElem::zero(rings::ring_dim(r)));
    }
    af::FourierOptions o;
    o.c_radius = jsonio::get_or<int64_t>(a, "c_radius", o.c_radius);
    o.grid = jsonio::get_or<int>(a, "grid", o.grid);
    o.window = jsonio::get_or<double>(a, "window", o.window);
    double v = jsonio::get_or<double>(a, "v", 1.0), s = jsonio::get_or<double>(a, "s", 8.0);
    json list = json::array();
    for (const auto& d : af::fourier_coefficients(r, mus, v, s, o))
        list.push_back(json{{"mu", jsonio::elem(d.mu)}, {"v", d.v}, {"coefficient", jsonio::cplx(d.coefficient)},
                            {"error", d.error}});
    return json{{"ring", rings::ring_name(r)}, {"s", s}, {"v", v}, {"grid", o.grid}, {"c_radius", o.c_radius},
                {"coefficients", list}};
}

json green_doc(const json& a) {
    double s = jsonio::get_or<double>(a, "s", 4.0);
    if (a.contains("z") && a.contains("w")) {
        int n = jsonio::get_or<int>(a, "n", 4);
        auto z = jsonio::point_from(a.at("z"), n), w = jsonio::point_from(a.at("w"), n);
        double lam = uhp::lambda(z, w);
        return json{{"s", s}, {"n", n}, {"lambda", lam}, {"value", af::green_function(lam, s, n)},
                    {"pde_residual", af::green_pde_residual(z, w, s)}};
    }
    int n = jsonio::get_or<int>(a, "n", 4);
    double lam = jsonio::get_or<double>(a, "lambda", 1.0);
    return json{{"s", s}, {"n", n}, {"lambda", lam}, {"value", af::green_function(lam, s, n)}};
}

algebra::FloatElem float_vec(const json& j) { return algebra::FloatElem::from_vector(j.get<std::vector<double>>()); }

json geodesic_doc(const json& a) {
    if (a.contains("z1") && a.contains("z2")) {
        int n = jsonio::get_or<int>(a, "n", 4);
        auto z1 = jsonio::point_from(a.at("z1"), n), z2 = jsonio::point_from(a.at("z2"), n);
        return json{{"distance", uhp::distance(z1, z2)}, {"lambda", uhp::lambda(z1, z2)}};
    }
    auto u1 = float_vec(a.at("u1")), u2 = float_vec(a.at("u2"));
    if (u1.dim != u2.dim) fail(Status::DimensionMismatch, "endpoints of different dimension");
    double t = jsonio::get_or<double>(a, "t", 1.0);
    auto p = uhp::geodesic_point(u1, u2, t);
    return json{{"t", t}, {"point", jsonio::point(p)}, {"circle_residual", uhp::geodesic_circle_residual(u1, u2, p)}};
}

hw::Mat2 mat_from(const json& j) {
    if (!j.is_array() || j.size() != 4) fail(Status::InvalidArgument, "matrix must be [a, b, c, d]");
    return hw::Mat2{jsonio::elem_from(j[0]), jsonio::elem_from(j[1]), jsonio::elem_from(j[2]), jsonio::elem_from(j[3])};
}

json orbit_doc(const hw::Mat2& m) {
    double tr = uhp::re_trace(uhp::FMat2::from(m));
    double l = uhp::periodic_orbit_length(m);
    return json{{"matrix", {jsonio::elem(m.a), jsonio::elem(m.b), jsonio::elem(m.c), jsonio::elem(m.d)}},
                {"re_trace", tr},
                {"length", l},
                {"two_cosh_half_length", 2 * std::cosh(l / 2)}};
}

json orbit_length_doc(const json& a) {
    json m = a.contains("matrix") ? a.at("matrix") : json::array({"quat:4,0,0,0", "quat:2,0,0,0", "quat:2,0,0,0", "quat:2,0,0,0"});
    return orbit_doc(mat_from(m));
}

json verify_doc(const json& a) {
    return verify::run(jsonio::get_or<std::string>(a, "suite", "all"), jsonio::get_or<bool>(a, "heavy", false),
                       jsonio::get_or<uint64_t>(a, "seed", 20240601));
}

// ---------------------------------------------------------------- export

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string series_grid_csv(const json& a, size_t& rows) {
    auto p = series_params(a);
    std::vector<double> re = jsonio::get_or<std::vector<double>>(a, "s_re", {5.0, 6.0, 7.0});
    std::vector<double> im = jsonio::get_or<std::vector<double>>(a, "s_im", {0.0});
    std::vector<double> vs = jsonio::get_or<std::vector<double>>(a, "v_values", {p.z.v});
    std::ostringstream out;
    out.precision(17);
    out << "re_s,im_s,v,re_E,im_E,radius\n";
    rows = 0;
    for (double sr : re)
        for (double si : im)
            for (double v : vs) {
                auto q = p;
                q.s = {sr, si};
                q.z.v = v;
                auto e = af::eisenstein_truncated(q);
                out << sr << ',' << si << ',' << v << ',' << e.real() << ',' << e.imag() << ',' << q.radius << '\n';
                ++rows;
            }
    return out.str();
}

json default_orbits() {
    // products of translation and inversion matrices: [[q1 q2 - 1, q1], [q2, 1]] for small integers
    json list = json::array();
    for (int q1 = 1; q1 <= 5; ++q1)
        for (int q2 = 1; q2 <= 4; ++q2) {
            auto e = [](int k) { return "quat:" + std::to_string(2 * k) + ",0,0,0"; };
            list.push_back(json::array({e(q1 * q2 + 1), e(q1), e(q2), e(1)}));
        }
    return list;
}

json export_doc(const json& a) {
    std::string kind = a.at("kind").get<std::string>();
    std::string out = jsonio::get_or<std::string>(a, "out", "");
    json params = a.contains("params") ? a.at("params") : json::object();
    if (out.empty()) {
        std::string ext = kind == "series-grid" ? ".csv" : ".json";
        out = jsonio::get_or<std::string>(a, "dir", ".") + "/" + kind + ext;
    }
    size_t rows = 0;
    std::string content;
    if (kind == "units") {
        json d = units_doc(params);
        rows = d["units"].size();
        content = dump(d);
    } else if (kind == "roots") {
        json d = roots_doc(params);
        rows = d["roots"].size();
        content = dump(d);
    } else if (kind == "cosets") {
        json d = coset_doc(params);
        rows = d["reps"].size();
        content = dump(d);
    } else if (kind == "fourier") {
        json d = fourier_doc(params);
        rows = d["coefficients"].size();
        content = dump(d);
    } else if (kind == "orbits") {
        json list = json::array();
        for (const auto& m : params.contains("matrices") ? params.at("matrices") : default_orbits())
            list.push_back(orbit_doc(mat_from(m)));
        rows = list.size();
        content = dump(json{{"orbits", list}});
    } else if (kind == "series-grid") {
        content = series_grid_csv(params, rows);
    } else {
        fail(Status::InvalidArgument, "unknown export kind " + kind + " (units, roots, cosets, series-grid, fourier, orbits)");
    }
    write_atomic(out, content);
    return json{{"kind", kind}, {"path", out}, {"rows", rows}};
}

using Handler = std::function<json(const json&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"units", units_doc},         {"roots", roots_doc},       {"group", group_doc},
        {"euclid", euclid_doc},       {"coset", coset_doc},       {"eisenstein", eisenstein_doc},
        {"fourier", fourier_doc},     {"green", green_doc},       {"geodesic", geodesic_doc},
        {"orbit-length", orbit_length_doc}, {"verify", verify_doc}, {"export", export_doc},
    };
    return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : handlers()) v.push_back(k);
        return v;
    }();
    return names;
}

std::string run(const std::string& command, const std::string& args_json) {
    auto it = handlers().find(command);
    if (it == handlers().end()) fail(Status::InvalidArgument, "unknown command " + command);
    json args;
    try {
        args = args_json.empty() ? json::object() : json::parse(args_json);
    } catch (const json::exception& e) {
        fail(Status::InvalidArgument, std::string("bad JSON arguments: ") + e.what());
    }
    if (!args.is_object()) fail(Status::InvalidArgument, "arguments must be a JSON object");
    try {
        return it->second(args).dump() + "\n";
    } catch (const json::exception& e) {
        fail(Status::InvalidArgument, std::string("bad argument: ") + e.what());
    }
}

int verify_status(const std::string& report_json) {
    json r = json::parse(report_json);
    return r.value("ok", false) ? 0 : 1;
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) fail(Status::IoError, "cannot open " + tmp);
        f << content;
        f.flush();
        if (!f) fail(Status::IoError, "cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        fail(Status::IoError, "cannot rename " + tmp + " to " + path);
    }
}

}  // namespace octavia::commands
