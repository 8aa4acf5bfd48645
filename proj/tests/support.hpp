#pragma once

#include <map>
#include <random>
#include <vector>

#include "octavia/algebra.hpp"
#include "octavia/hyperweyl.hpp"
#include "octavia/rings.hpp"
#include "octavia/uhp.hpp"

namespace support {

using octavia::algebra::AlgElem;
using octavia::rings::RingId;

inline constexpr uint64_t kSeed = 20240601;

inline const std::vector<AlgElem>& cached_ball(RingId r, int64_t n) {
    static std::map<std::pair<int, int64_t>, std::vector<AlgElem>> cache;
    auto key = std::make_pair(static_cast<int>(r), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, octavia::rings::ball(r, n)).first;
    return it->second;
}

inline AlgElem pick(const std::vector<AlgElem>& v, std::mt19937_64& rng) {
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

inline AlgElem random_element(RingId r, int64_t max_norm, std::mt19937_64& rng) { return pick(cached_ball(r, max_norm), rng); }

/// Element with rational coordinates num / den, num uniform in [-k, k].
inline AlgElem random_rational(int dim, int64_t k, int64_t den, std::mt19937_64& rng) {
    std::uniform_int_distribution<int64_t> d(-k, k);
    std::vector<int64_t> n(dim);
    for (auto& x : n) x = d(rng);
    return AlgElem::from_rational(dim, n, den);
}

inline octavia::hyperweyl::GroupWord random_word(RingId r, int len, std::mt19937_64& rng) {
    namespace hw = octavia::hyperweyl;
    const int dim = octavia::rings::ring_dim(r);
    const auto& units = octavia::rings::units(r);
    hw::GroupWord w{dim, {}};
    for (int k = 0; k < len; ++k) {
        switch (rng() % 3) {
        case 0: w.tokens.push_back(hw::Token::inv(dim)); break;
        case 1: w.tokens.push_back(hw::Token::trans(random_element(r, 2, rng))); break;
        default: w.tokens.push_back(hw::Token::rot(pick(units, rng))); break;
        }
    }
    return w;
}

inline octavia::uhp::UhpPoint random_point(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.5, 0.5), v(0.6, 1.6);
    std::vector<double> x(dim);
    for (auto& c : x) c = u(rng);
    return octavia::uhp::UhpPoint::make(x, v(rng));
}

}  // namespace support
