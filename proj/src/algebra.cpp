#include "octavia/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace octavia::algebra {

bool valid_dim(int dim) { return dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 16; }

namespace {

using Dense = std::vector<int>;

Dense dense_mul(const MulTable& t, const Dense& a, const Dense& b) {
    const int n = t.dim();
    Dense out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const MulEntry& e = t.at(i, j);
            out[e.index] += e.sign * a[i] * b[j];
        }
    }
    return out;
}

Dense dense_conj(Dense a) {
    for (size_t i = 1; i < a.size(); ++i) a[i] = -a[i];
    return a;
}

// (a + ib)(c + id) = (ac - d conj(b)) + i(cb + conj(a) d)
MulTable double_table(const MulTable& t) {
    const int m = t.dim();
    MulTable out(2 * m);
    for (int j = 0; j < 2 * m; ++j) {
        for (int k = 0; k < 2 * m; ++k) {
            Dense a(m, 0), b(m, 0), c(m, 0), d(m, 0);
            (j < m ? a[j] : b[j - m]) = 1;
            (k < m ? c[k] : d[k - m]) = 1;
            Dense re = dense_mul(t, a, c);
            Dense t2 = dense_mul(t, d, dense_conj(b));
            Dense im = dense_mul(t, c, b);
            Dense t4 = dense_mul(t, dense_conj(a), d);
            int hits = 0;
            for (int i = 0; i < m; ++i) {
                int x = re[i] - t2[i];
                int y = im[i] + t4[i];
                if (x != 0) { out.at(j, k) = {static_cast<int8_t>(x), static_cast<uint8_t>(i)}; ++hits; }
                if (y != 0) { out.at(j, k) = {static_cast<int8_t>(y), static_cast<uint8_t>(i + m)}; ++hits; }
            }
            if (hits != 1) fail(Status::Internal, "doubling of a basis product is not a signed unit");
        }
    }
    return out;
}

// Relabel: labeled slot p is sign[p] * raw basis element raw[p].
MulTable relabel(const MulTable& raw, const std::vector<int>& rawidx, const std::vector<int>& sign) {
    const int n = raw.dim();
    std::vector<int> back(n), backsign(n);
    for (int p = 0; p < n; ++p) {
        back[rawidx[p]] = p;
        backsign[rawidx[p]] = sign[p];
    }
    MulTable out(n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const MulEntry& e = raw.at(rawidx[p], rawidx[q]);
            int s = sign[p] * sign[q] * e.sign * backsign[e.index];
            out.at(p, q) = {static_cast<int8_t>(s), static_cast<uint8_t>(back[e.index])};
        }
    }
    return out;
}

bool matches_rules(const MulTable& t, const std::array<std::array<int, 8>, 8>& rules) {
    for (int i = 1; i < 8; ++i) {
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            const MulEntry& e = t.at(i, j);
            if (e.index * e.sign != rules[i][j]) return false;
        }
    }
    return true;
}

struct Tables {
    std::array<MulTable, 5> by_log;

    Tables() {
        MulTable t1(1);
        t1.at(0, 0) = {1, 0};
        MulTable t2 = double_table(t1);
        MulTable q_raw = double_table(t2);
        // In the raw quaternion double, e1 * i = -(i e1); label e5 := i and e6 := -(i e1).
        MulTable t4 = relabel(q_raw, {0, 1, 2, 3}, {1, 1, 1, -1});
        if (t4.at(1, 2).index != 3 || t4.at(1, 2).sign != 1) fail(Status::Internal, "quaternion labeling");

        MulTable o_raw = double_table(t4);
        auto rules = rule_generated_octonion_table();
        // Quaternion slots (1, e1, e5, e6) are raw 0..3; search e2, e3, e4, e7 over raw 4..7 with signs.
        std::array<int, 4> perm{4, 5, 6, 7};
        bool found = false;
        MulTable t8;
        do {
            for (int signs = 0; signs < 16 && !found; ++signs) {
                std::vector<int> rawidx(8), sign(8, 1);
                rawidx[0] = 0; rawidx[1] = 1; rawidx[5] = 2; rawidx[6] = 3;
                const int free_slots[4] = {2, 3, 4, 7};
                for (int k = 0; k < 4; ++k) {
                    rawidx[free_slots[k]] = perm[k];
                    sign[free_slots[k]] = (signs >> k) & 1 ? -1 : 1;
                }
                MulTable cand = relabel(o_raw, rawidx, sign);
                if (matches_rules(cand, rules)) { t8 = cand; found = true; }
            }
        } while (!found && std::next_permutation(perm.begin(), perm.end()));
        if (!found) fail(Status::Internal, "no relabeling of the doubled table matches the octonion rules");

        by_log = {t1, t2, t4, t8, double_table(t8)};
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

int log2dim(int dim) {
    switch (dim) {
        case 1: return 0;
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        case 16: return 4;
        default: fail(Status::DimensionMismatch, "unsupported algebra dimension " + std::to_string(dim));
    }
}

void same_dim(const AlgElem& a, const AlgElem& b) {
    if (a.dim() != b.dim()) fail(Status::DimensionMismatch, "dimension mismatch");
}

}  // namespace

const MulTable& table(int dim) { return tables().by_log[log2dim(dim)]; }

std::array<std::array<int, 8>, 8> rule_generated_octonion_table() {
    std::array<std::array<int, 8>, 8> t{};
    auto wrap = [](int i) { return ((i - 1) % 7 + 7) % 7 + 1; };
    std::vector<std::array<int, 3>> todo{{1, 5, 6}};
    auto put = [&](int i, int j, int k) {
        if (t[i][j] != 0 && t[i][j] != k) fail(Status::Internal, "octonion index rules are inconsistent");
        bool fresh = t[i][j] == 0;
        t[i][j] = k;
        return fresh;
    };
    while (!todo.empty()) {
        auto [i, j, k] = todo.back();
        todo.pop_back();
        bool fresh = put(i, j, k);
        put(j, k, i);
        put(k, i, j);
        put(j, i, -k);
        put(k, j, -i);
        put(i, k, -j);
        if (!fresh) continue;
        todo.push_back({wrap(i + 1), wrap(j + 1), wrap(k + 1)});
        todo.push_back({wrap(2 * i), wrap(2 * j), wrap(2 * k)});
    }
    return t;
}

// ---------------------------------------------------------------- AlgElem

AlgElem::AlgElem(int dim) : dim_(dim) {
    if (!valid_dim(dim)) fail(Status::DimensionMismatch, "unsupported algebra dimension " + std::to_string(dim));
}

AlgElem AlgElem::one(int dim) { return basis(dim, 0); }

AlgElem AlgElem::basis(int dim, int k, int64_t sign) {
    AlgElem r(dim);
    if (k < 0 || k >= dim) fail(Status::InvalidArgument, "basis index out of range");
    r.num_[k] = sign;
    return r;
}

AlgElem AlgElem::from_coords2(int dim, const std::vector<int64_t>& coords2) {
    return from_rational(dim, coords2, 2);
}

AlgElem AlgElem::from_rational(int dim, const std::vector<int64_t>& num, int64_t den) {
    AlgElem r(dim);
    if (static_cast<int>(num.size()) != dim) fail(Status::DimensionMismatch, "coordinate count does not match dimension");
    if (den == 0) fail(Status::DomainError, "zero denominator");
    for (int i = 0; i < dim; ++i) r.num_[i] = num[i];
    r.den_ = den;
    r.normalize();
    return r;
}

AlgElem AlgElem::from_scalar(int dim, const Rational& q) {
    AlgElem r(dim);
    r.num_[0] = q.num();
    r.den_ = q.den();
    return r;
}

void AlgElem::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (int i = 0; i < dim_; ++i) num_[i] = -num_[i];
    }
    int64_t g = den_;
    for (int i = 0; i < dim_ && g != 1; ++i) g = std::gcd(g, num_[i]);
    if (g > 1) {
        den_ /= g;
        for (int i = 0; i < dim_; ++i) num_[i] /= g;
    }
}

AlgElem make_normalized(int dim, const std::array<i128, kMaxDim>& num, i128 den) {
    i128 g = den;
    for (int i = 0; i < dim && g != 1; ++i) g = gcd128(g, num[i]);
    AlgElem r(dim);
    if (g < 0) g = -g;
    for (int i = 0; i < dim; ++i) r.num_[i] = narrow(num[i] / g);
    r.den_ = narrow(den / g);
    r.normalize();
    return r;
}

bool AlgElem::is_zero() const {
    for (int i = 0; i < dim_; ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool AlgElem::is_real() const {
    for (int i = 1; i < dim_; ++i)
        if (num_[i] != 0) return false;
    return true;
}

std::vector<int64_t> AlgElem::coords2() const {
    if (!is_half_integral()) fail(Status::DomainError, "element is not half-integral");
    std::vector<int64_t> out(dim_);
    for (int i = 0; i < dim_; ++i) out[i] = den_ == 1 ? 2 * num_[i] : num_[i];
    return out;
}

AlgElem AlgElem::operator-() const {
    AlgElem r = *this;
    for (int i = 0; i < dim_; ++i) r.num_[i] = -r.num_[i];
    return r;
}

namespace {
template <typename F>
AlgElem combine(const AlgElem& a, const AlgElem& b, F f) {
    same_dim(a, b);
    std::array<i128, kMaxDim> n{};
    i128 den = i128(a.den()) * b.den();
    if (a.den() == b.den()) den = a.den();
    for (int i = 0; i < a.dim(); ++i) {
        i128 x = a.den() == b.den() ? i128(a.num(i)) : i128(a.num(i)) * b.den();
        i128 y = a.den() == b.den() ? i128(b.num(i)) : i128(b.num(i)) * a.den();
        n[i] = f(x, y);
    }
    return make_normalized(a.dim(), n, den);
}
}  // namespace

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    return combine(a, b, [](i128 x, i128 y) { return x + y; });
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    return combine(a, b, [](i128 x, i128 y) { return x - y; });
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    same_dim(a, b);
    const int n = a.dim();
    const MulTable& t = table(n);
    std::array<i128, kMaxDim> acc{};
    for (int i = 0; i < n; ++i) {
        if (a.num(i) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.num(j) == 0) continue;
            const MulEntry& e = t.at(i, j);
            acc[e.index] += i128(e.sign) * a.num(i) * b.num(j);
        }
    }
    return make_normalized(n, acc, i128(a.den()) * b.den());
}

AlgElem operator*(const Rational& r, const AlgElem& a) {
    std::array<i128, kMaxDim> acc{};
    for (int i = 0; i < a.dim(); ++i) acc[i] = i128(r.num()) * a.num(i);
    return make_normalized(a.dim(), acc, i128(r.den()) * a.den());
}

bool operator==(const AlgElem& a, const AlgElem& b) {
    if (a.dim_ != b.dim_ || a.den_ != b.den_) return false;
    for (int i = 0; i < a.dim_; ++i)
        if (a.num_[i] != b.num_[i]) return false;
    return true;
}

bool operator<(const AlgElem& a, const AlgElem& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    for (int i = 0; i < a.dim_; ++i) {
        i128 x = i128(a.num_[i]) * b.den_;
        i128 y = i128(b.num_[i]) * a.den_;
        if (x != y) return x < y;
    }
    return false;
}

size_t AlgElem::hash() const {
    size_t h = std::hash<int64_t>{}(den_) ^ (static_cast<size_t>(dim_) << 1);
    for (int i = 0; i < dim_; ++i) h = h * 1000003u ^ std::hash<int64_t>{}(num_[i]);
    return h;
}

AlgElem cd_multiply(const AlgElem& a, const AlgElem& b) { return a * b; }

AlgElem conj(const AlgElem& a) {
    AlgElem r = -a;
    return r + AlgElem::from_scalar(a.dim(), 2 * real_part(a));
}

Rational real_part(const AlgElem& a) { return a.coord(0); }

AlgElem imag_part(const AlgElem& a) { return a - AlgElem::from_scalar(a.dim(), real_part(a)); }

Rational inner(const AlgElem& a, const AlgElem& b) {
    same_dim(a, b);
    i128 s = 0;
    for (int i = 0; i < a.dim(); ++i) s += i128(a.num(i)) * b.num(i);
    return Rational::from_wide(s, i128(a.den()) * b.den());
}

Rational norm_sq(const AlgElem& a) { return inner(a, a); }

AlgElem invert(const AlgElem& a) {
    if (a.dim() > 8) fail(Status::DomainError, "no inverse in the 16-dimensional double");
    if (a.is_zero()) fail(Status::DomainError, "cannot invert zero");
    Rational n = norm_sq(a);
    return Rational(n.den(), n.num()) * conj(a);
}

AlgElem associator(const AlgElem& a, const AlgElem& b, const AlgElem& c) { return a * (b * c) - (a * b) * c; }

AlgElem commutator(const AlgElem& a, const AlgElem& b) { return a * b - b * a; }

AlgElem quat_to_oct(const AlgElem& q) {
    if (q.dim() != 4) fail(Status::DimensionMismatch, "quat_to_oct expects a quaternion");
    std::vector<int64_t> n(8, 0);
    for (int k = 0; k < 4; ++k) n[kQuatInOct[k]] = q.num(k);
    return AlgElem::from_rational(8, n, q.den());
}

std::pair<AlgElem, AlgElem> split_double(const AlgElem& x) {
    const int m = x.dim() / 2;
    if (m < 1) fail(Status::DimensionMismatch, "cannot split a real element");
    std::vector<int64_t> a(m), b(m);
    for (int i = 0; i < m; ++i) {
        a[i] = x.num(i);
        b[i] = x.num(i + m);
    }
    return {AlgElem::from_rational(m, a, x.den()), AlgElem::from_rational(m, b, x.den())};
}

AlgElem join_double(const AlgElem& a, const AlgElem& b) {
    same_dim(a, b);
    const int m = a.dim();
    int64_t den = std::lcm(a.den(), b.den());
    std::vector<int64_t> n(2 * m);
    for (int i = 0; i < m; ++i) {
        n[i] = a.num(i) * (den / a.den());
        n[i + m] = b.num(i) * (den / b.den());
    }
    return AlgElem::from_rational(2 * m, n, den);
}

// ---------------------------------------------------------------- text

std::string alg_name(int dim) {
    switch (dim) {
        case 1: return "real";
        case 2: return "cplx";
        case 4: return "quat";
        case 8: return "oct";
        case 16: return "sed";
        default: fail(Status::DimensionMismatch, "unsupported algebra dimension");
    }
}

int dim_from_name(std::string_view name) {
    static const std::pair<std::string_view, int> names[] = {
        {"real", 1}, {"z", 1}, {"int", 1}, {"cplx", 2}, {"c", 2}, {"quat", 4}, {"h", 4}, {"hurwitz", 4},
        {"oct", 8}, {"o", 8}, {"octavian", 8}, {"sed", 16},
    };
    for (auto& [n, d] : names)
        if (n == name) return d;
    fail(Status::InvalidArgument, "unknown algebra name '" + std::string(name) + "'");
}

std::string format(const AlgElem& a) {
    std::string out = alg_name(a.dim()) + ":";
    auto c = a.coords2();
    for (int i = 0; i < a.dim(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

AlgElem parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) fail(Status::InvalidArgument, "element text needs '<alg>:c0,c1,...'");
    int dim = dim_from_name(text.substr(0, colon));
    std::vector<int64_t> c;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        int64_t v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size())
            fail(Status::InvalidArgument, "bad coordinate '" + std::string(tok) + "'");
        c.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (static_cast<int>(c.size()) != dim)
        fail(Status::DimensionMismatch, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(c.size()));
    return AlgElem::from_coords2(dim, c);
}

std::string pretty(const AlgElem& a) {
    static const char* quat_labels[] = {"1", "e1", "e5", "e6"};
    std::ostringstream os;
    bool first = true;
    if (a.den() != 1) os << "1/" << a.den() << "(";
    for (int i = 0; i < a.dim(); ++i) {
        int64_t v = a.num(i);
        if (v == 0) continue;
        std::string label = a.dim() == 4 ? quat_labels[i] : (i == 0 ? "1" : "e" + std::to_string(i));
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        int64_t m = v < 0 ? -v : v;
        if (m != 1) os << m << (label == "1" ? "" : "*" + label);
        else os << label;
        first = false;
    }
    if (first) os << "0";
    if (a.den() != 1) os << ")";
    return os.str();
}

std::optional<ZeroDivisorWitness> find_zero_divisors(int dim) {
    if (!valid_dim(dim)) fail(Status::DimensionMismatch, "unsupported algebra dimension");
    std::vector<AlgElem> cands;
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
            for (int s : {1, -1}) cands.push_back(AlgElem::basis(dim, a) + AlgElem::basis(dim, b, s));
    for (const auto& p : cands) {
        for (const auto& q : cands) {
            if ((p * q).is_zero()) return ZeroDivisorWitness{p, q, norm_sq(p), norm_sq(q), norm_sq(p * q)};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- FloatElem

FloatElem FloatElem::from(const AlgElem& a) {
    FloatElem f(a.dim());
    for (int i = 0; i < a.dim(); ++i) f.c[i] = a.coord_double(i);
    return f;
}

FloatElem FloatElem::from_vector(const std::vector<double>& v) {
    int d = static_cast<int>(v.size());
    if (!valid_dim(d)) fail(Status::DimensionMismatch, "vector length is not an algebra dimension");
    FloatElem f(d);
    std::copy(v.begin(), v.end(), f.c.begin());
    return f;
}

FloatElem FloatElem::operator-() const {
    FloatElem r = *this;
    for (int i = 0; i < dim; ++i) r.c[i] = -r.c[i];
    return r;
}

FloatElem operator+(const FloatElem& a, const FloatElem& b) {
    FloatElem r(a.dim);
    for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

FloatElem operator-(const FloatElem& a, const FloatElem& b) {
    FloatElem r(a.dim);
    for (int i = 0; i < a.dim; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

FloatElem operator*(const FloatElem& a, const FloatElem& b) {
    if (a.dim != b.dim) fail(Status::DimensionMismatch, "dimension mismatch");
    const MulTable& t = table(a.dim);
    FloatElem r(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        if (a.c[i] == 0.0) continue;
        for (int j = 0; j < a.dim; ++j) {
            const MulEntry& e = t.at(i, j);
            r.c[e.index] += e.sign * a.c[i] * b.c[j];
        }
    }
    return r;
}

FloatElem operator*(double s, const FloatElem& a) {
    FloatElem r = a;
    for (int i = 0; i < a.dim; ++i) r.c[i] *= s;
    return r;
}

FloatElem conj(const FloatElem& a) {
    FloatElem r = -a;
    r.c[0] = a.c[0];
    return r;
}

double inner(const FloatElem& a, const FloatElem& b) {
    double s = 0;
    for (int i = 0; i < a.dim; ++i) s += a.c[i] * b.c[i];
    return s;
}

double norm_sq(const FloatElem& a) { return inner(a, a); }

}  // namespace octavia::algebra
