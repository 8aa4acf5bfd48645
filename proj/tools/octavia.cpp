// octavia command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "octavia/octavia.h"

using json = nlohmann::ordered_json;

namespace {

struct Global {
    unsigned threads = 0;
    bool compact = false;
    uint64_t seed = 20240601;
    std::string out_dir = ".";
};

int call(octavia_session* s, const Global& g, const std::string& cmd, const json& args, bool verify = false) {
    char* out = nullptr;
    int rc = octavia_run(s, cmd.c_str(), args.dump().c_str(), &out);
    if (rc != OCTAVIA_OK) {
        std::fprintf(stderr, "octavia %s: %s\n", cmd.c_str(), octavia_last_error());
        return rc;
    }
    std::string text(out);
    octavia_string_free(out);
    if (g.compact)
        std::cout << text;
    else
        std::cout << json::parse(text).dump(2) << "\n";
    return verify ? octavia_verify_status(text.c_str()) : 0;
}

json elem_list(const std::vector<std::string>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"octavia: integer octonions, hyperbolic Weyl groups and automorphic sums"};
    app.set_config("--config", "", "flat key=value file; flags on the command line win");
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--threads", g.threads, "worker threads (default: OCTAVIA_THREADS or all cores)");
    app.add_flag("--json", g.compact, "compact single-line JSON output");
    app.add_option("--seed", g.seed, "random seed for verify");
    app.add_option("--out-dir", g.out_dir, "directory for exports");

    json args = json::object();
    std::string cmd;
    bool is_verify = false;

    // units
    std::string ring = "hurwitz";
    auto* units = app.add_subcommand("units", "list the units of a ring");
    units->add_option("--ring", ring, "z, hurwitz or octavian");

    std::string algebra = "E8";
    auto* roots = app.add_subcommand("roots", "root system data");
    roots->add_option("--algebra", algebra, "D4, E7 or E8");

    std::string group = "g2", checkpoint;
    bool progress = false;
    auto* grp = app.add_subcommand("group", "group orders");
    grp->add_option("--name", group, "g2, wd4, certificate or e7-closure");
    grp->add_option("--checkpoint", checkpoint, "checkpoint file for e7-closure");
    grp->add_flag("--progress", progress, "progress on stderr");

    std::string side = "right", ex, ec;
    auto* euclid = app.add_subcommand("euclid", "Euclidean algorithm trace");
    euclid->add_option("--ring", ring);
    euclid->add_option("--side", side, "right (a = q c - r) or left (d = c q - r)");
    euclid->add_option("--x", ex, "first argument, e.g. oct:0,2,2,0,0,0,0,0")->required();
    euclid->add_option("--c", ec, "second argument")->required();

    int64_t bound = 1;
    auto* coset = app.add_subcommand("coset", "canonical left-coprime pairs and their words");
    coset->add_option("--ring", ring);
    coset->add_option("--bound", bound, "max(|c|^2, |d|^2)");

    std::string z, s = "5", w;
    int64_t radius = 4;
    bool poincare = false;
    auto* eis = app.add_subcommand("eisenstein", "truncated Eisenstein sum");
    eis->add_option("--ring", ring);
    eis->add_option("--z", z, "\"u0,u1,...;v\"");
    eis->add_option("--s", s, "complex exponent, e.g. 5+0i");
    eis->add_option("--radius", radius, "truncation |c|^2, |d|^2 <= radius");
    eis->add_flag("--poincare", poincare, "also the Poincare sum");

    std::vector<std::string> mus;
    double v = 1.0, sreal = 8.0;
    int grid = 6;
    int64_t c_radius = 1;
    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients of the c-truncated sum");
    fourier->add_option("--ring", ring);
    fourier->add_option("--mu", mus, "dual lattice vectors");
    fourier->add_option("--v", v);
    fourier->add_option("--s", sreal);
    fourier->add_option("--grid", grid, "trapezoid points per direction");
    fourier->add_option("--c-radius", c_radius);

    double lambda = 1.0;
    int n = 4;
    auto* green = app.add_subcommand("green", "free-space Green function");
    green->add_option("--s", sreal);
    green->add_option("--n", n, "dimension of u");
    green->add_option("--lambda", lambda);
    green->add_option("--z", z);
    green->add_option("--w", w);

    std::vector<double> u1, u2;
    double t = 1.0;
    std::string z1, z2;
    auto* geo = app.add_subcommand("geodesic", "geodesic points and distances");
    geo->add_option("--u1", u1);
    geo->add_option("--u2", u2);
    geo->add_option("--t", t);
    geo->add_option("--z1", z1);
    geo->add_option("--z2", z2);
    geo->add_option("--n", n);

    std::vector<std::string> matrix;
    auto* orbit = app.add_subcommand("orbit-length", "length of the closed geodesic of a hyperbolic matrix");
    orbit->add_option("--matrix", matrix, "a b c d")->expected(4);

    std::string suite = "all", report;
    bool heavy = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "algebra, rings, roots, groups, hyperbolic, uhp, autoforms or all");
    verify->add_flag("--heavy", heavy, "include the full W+(E7) closure");
    verify->add_option("--report", report, "also write the report to this file");

    std::string kind, out, params = "{}";
    auto* exp = app.add_subcommand("export", "write JSON/CSV data files");
    exp->add_option("kind", kind, "units, roots, cosets, series-grid, fourier, orbits")->required();
    exp->add_option("--out", out, "output path (default <out-dir>/<kind>.json|csv)");
    exp->add_option("--params", params, "JSON object with the command parameters");

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    cmd = sub->get_name();
    if (sub == units) {
        args = {{"ring", ring}};
    } else if (sub == roots) {
        args = {{"algebra", algebra}};
    } else if (sub == grp) {
        args = {{"name", group}, {"progress", progress}};
        if (!checkpoint.empty()) args["checkpoint"] = checkpoint;
    } else if (sub == euclid) {
        args = {{"ring", ring}, {"side", side}, {"x", ex}, {"c", ec}};
    } else if (sub == coset) {
        args = {{"ring", ring}, {"bound", bound}};
    } else if (sub == eis) {
        args = {{"ring", ring}, {"s", s}, {"radius", radius}, {"poincare", poincare}};
        if (!z.empty()) args["z"] = z;
    } else if (sub == fourier) {
        args = {{"ring", ring}, {"v", v}, {"s", sreal}, {"grid", grid}, {"c_radius", c_radius}};
        if (!mus.empty()) args["mu"] = elem_list(mus);
    } else if (sub == green) {
        args = {{"s", sreal}, {"n", n}, {"lambda", lambda}};
        if (!z.empty() && !w.empty()) {
            args["z"] = z;
            args["w"] = w;
        }
    } else if (sub == geo) {
        if (!z1.empty() && !z2.empty())
            args = {{"z1", z1}, {"z2", z2}, {"n", n}};
        else
            args = {{"u1", u1}, {"u2", u2}, {"t", t}};
    } else if (sub == orbit) {
        if (!matrix.empty()) args = {{"matrix", elem_list(matrix)}};
    } else if (sub == verify) {
        args = {{"suite", suite}, {"heavy", heavy}, {"seed", g.seed}};
        is_verify = true;
    } else if (sub == exp) {
        json p;
        try {
            p = json::parse(params);
        } catch (const json::exception& e) {
            std::fprintf(stderr, "octavia export: --params is not JSON: %s\n", e.what());
            return OCTAVIA_ERR_INVALID_ARGUMENT;
        }
        args = {{"kind", kind}, {"params", p}, {"dir", g.out_dir}};
        if (!out.empty()) args["out"] = out;
    }

    octavia_session* session = nullptr;
    if (octavia_session_new(&session) != OCTAVIA_OK) return OCTAVIA_ERR_INTERNAL;
    if (g.threads) octavia_session_set_threads(session, g.threads);

    int rc;
    if (is_verify && !report.empty()) {
        char* text = nullptr;
        rc = octavia_run(session, "verify", args.dump().c_str(), &text);
        if (rc == OCTAVIA_OK) {
            std::string r(text);
            octavia_string_free(text);
            json j = json::parse(r);
            std::FILE* f = std::fopen(report.c_str(), "w");
            if (!f) {
                std::fprintf(stderr, "octavia verify: cannot write %s\n", report.c_str());
                rc = OCTAVIA_ERR_IO;
            } else {
                std::fputs((j.dump(2) + "\n").c_str(), f);
                std::fclose(f);
                std::cout << (g.compact ? j.dump() : j.dump(2)) << "\n";
                rc = octavia_verify_status(r.c_str());
            }
        } else {
            std::fprintf(stderr, "octavia verify: %s\n", octavia_last_error());
        }
    } else {
        rc = call(session, g, cmd, args, is_verify);
    }
    octavia_session_free(session);
    return rc;
}
