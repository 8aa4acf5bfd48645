#include "jsonio.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "octavia/error.hpp"

namespace octavia::jsonio {

AlgElem elem_from(const json& j) {
    if (j.is_string()) return algebra::parse(j.get<std::string>());
    if (j.is_object() && j.contains("coords2")) return algebra::parse(j.at("coords2").get<std::string>());
    fail(Status::InvalidArgument, "element must be \"<alg>:c0,c1,...\" or {\"coords2\": ...}");
}

std::complex<double> cplx_from(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (!s.empty() && s.back() == 'i') {
            // split at the last sign that is not an exponent sign
            for (size_t k = s.size() - 1; k > 0; --k) {
                if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
                    return {std::stod(s.substr(0, k)), std::stod(s.substr(k, s.size() - k - 1))};
            }
            return {0.0, std::stod(s.substr(0, s.size() - 1))};
        }
        return {std::stod(s), 0.0};
    }
    fail(Status::InvalidArgument, "complex value must be a number, [re, im] or \"re+imi\"");
}

json point(const uhp::UhpPoint& z) { return json{{"u", z.u.to_vector()}, {"v", z.v}}; }

uhp::UhpPoint point_from(const json& j, int dim) {
    std::vector<double> u;
    double v = 0;
    if (j.is_object()) {
        u = j.at("u").get<std::vector<double>>();
        v = j.at("v").get<double>();
    } else if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto semi = s.find(';');
        if (semi == std::string::npos) fail(Status::InvalidArgument, "point must be \"u0,u1,...;v\"");
        std::stringstream us(s.substr(0, semi));
        for (std::string item; std::getline(us, item, ',');)
            if (!item.empty()) u.push_back(std::stod(item));
        v = std::stod(s.substr(semi + 1));
    } else {
        fail(Status::InvalidArgument, "point must be an object or a string");
    }
    if (u.empty()) u.assign(dim, 0.0);
    if (static_cast<int>(u.size()) != dim) fail(Status::DimensionMismatch, "point has the wrong number of coordinates");
    if (!(v > 0)) fail(Status::DomainError, "v must be positive");
    return uhp::UhpPoint::make(u, v);
}

json word(const hyperweyl::GroupWord& w) {
    json out = json::array();
    for (const auto& t : w.tokens) {
        switch (t.kind) {
        case hyperweyl::TokenKind::Inv: out.push_back("inv"); break;
        case hyperweyl::TokenKind::Trans: out.push_back(json{{"trans", elem(t.elem)}}); break;
        case hyperweyl::TokenKind::Rot: out.push_back(json{{"rot", elem(t.elem)}}); break;
        }
    }
    return out;
}

hyperweyl::GroupWord word_from(const json& j, int dim) {
    hyperweyl::GroupWord w{dim, {}};
    if (!j.is_array()) fail(Status::InvalidArgument, "word must be a token list");
    for (const auto& t : j) {
        if (t.is_string() && t.get<std::string>() == "inv") {
            w.tokens.push_back(hyperweyl::Token::inv(dim));
        } else if (t.is_object() && t.contains("trans")) {
            w.tokens.push_back(hyperweyl::Token::trans(elem_from(t.at("trans"))));
        } else if (t.is_object() && t.contains("rot")) {
            w.tokens.push_back(hyperweyl::Token::rot(elem_from(t.at("rot"))));
        } else {
            fail(Status::InvalidArgument, "unknown token " + t.dump());
        }
        if (w.tokens.back().elem.dim() != dim) fail(Status::DimensionMismatch, "token dimension does not match ring");
    }
    return w;
}

rings::RingId ring_from(const json& args, const char* fallback) {
    return rings::ring_from_name(args.contains("ring") ? args.at("ring").get<std::string>() : std::string(fallback));
}

AlgElem random_element(rings::RingId r, int64_t max_norm, std::mt19937_64& rng) {
    static std::mutex m;
    static std::map<std::pair<int, int64_t>, std::vector<AlgElem>> cache;
    const std::vector<AlgElem>* pts;
    {
        std::lock_guard<std::mutex> lock(m);
        auto key = std::make_pair(static_cast<int>(r), max_norm);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, rings::ball(r, max_norm)).first;
        pts = &it->second;
    }
    return (*pts)[std::uniform_int_distribution<size_t>(0, pts->size() - 1)(rng)];
}

}  // namespace octavia::jsonio
