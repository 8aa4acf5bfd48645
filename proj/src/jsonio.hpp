#pragma once

// JSON encodings shared by the command layer.

#include <json.hpp>

#include <complex>
#include <random>

#include "octavia/algebra.hpp"
#include "octavia/hyperweyl.hpp"
#include "octavia/rings.hpp"
#include "octavia/uhp.hpp"

namespace octavia::jsonio {

using json = nlohmann::ordered_json;
using algebra::AlgElem;

inline json elem(const AlgElem& a) { return json{{"coords2", algebra::format(a)}}; }

inline json elems(const std::vector<AlgElem>& v) {
    json out = json::array();
    for (const auto& a : v) out.push_back(elem(a));
    return out;
}

/// "oct:1,1,..." or {"coords2": "oct:..."}.
AlgElem elem_from(const json& j);

inline json cplx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }
/// [re, im], a number, or "re+imi".
std::complex<double> cplx_from(const json& j);

json point(const uhp::UhpPoint& z);
/// {"u": [...], "v": x} or "u0,u1,...;v".
uhp::UhpPoint point_from(const json& j, int dim);

/// ["inv", {"trans": <elem>}, {"rot": <elem>}].
json word(const hyperweyl::GroupWord& w);
hyperweyl::GroupWord word_from(const json& j, int dim);

rings::RingId ring_from(const json& args, const char* fallback = "hurwitz");

template <typename T>
T get_or(const json& args, const char* key, T fallback) {
    return args.contains(key) ? args.at(key).get<T>() : fallback;
}

/// Uniform element of the ring with |x|^2 <= max_norm.
AlgElem random_element(rings::RingId r, int64_t max_norm, std::mt19937_64& rng);

}  // namespace octavia::jsonio
