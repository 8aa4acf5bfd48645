#include "octavia/rootsys.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <unordered_map>
#include <unordered_set>

#include "octavia/error.hpp"
#include "octavia/linalg.hpp"

namespace octavia::rootsys {

using algebra::conj;
using algebra::invert;
using algebra::norm_sq;
using rings::RingId;

Algebra algebra_from_name(std::string_view name) {
    if (name == "d4" || name == "D4") return Algebra::D4;
    if (name == "e7" || name == "E7") return Algebra::E7;
    if (name == "e8" || name == "E8") return Algebra::E8;
    fail(Status::InvalidArgument, "unknown root system '" + std::string(name) + "' (d4, e7, e8)");
}

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::D4: return "d4";
        case Algebra::E7: return "e7";
        case Algebra::E8: return "e8";
    }
    return "?";
}

namespace {

AlgElem combine(const std::vector<AlgElem>& v, const std::vector<int>& k) {
    AlgElem s = AlgElem::zero(v[0].dim());
    for (size_t i = 0; i < v.size(); ++i) s = s + Rational(k[i]) * v[i];
    return s;
}

RootBasis make_basis(Algebra a) {
    RootBasis b;
    b.algebra = a;
    if (a == Algebra::D4) {
        b.dim = 4;
        b.simple = rings::integral_basis(RingId::Hurwitz);
        b.marks = {1, 2, 1, 1};
        b.theta = combine(b.simple, b.marks);
        return b;
    }
    b.dim = 8;
    const auto& e8 = rings::integral_basis(RingId::Octavian);
    if (a == Algebra::E8) {
        b.simple = e8;
        b.marks = {2, 3, 4, 5, 6, 4, 2, 3};
    } else {
        b.simple.assign(e8.begin() + 1, e8.end());
        b.marks = {1, 2, 3, 4, 3, 2, 2};
    }
    b.theta = combine(b.simple, b.marks);
    return b;
}

}  // namespace

const RootBasis& root_basis(Algebra a) {
    static const RootBasis d4 = make_basis(Algebra::D4);
    static const RootBasis e7 = make_basis(Algebra::E7);
    static const RootBasis e8 = make_basis(Algebra::E8);
    switch (a) {
        case Algebra::D4: return d4;
        case Algebra::E7: return e7;
        case Algebra::E8: return e8;
    }
    fail(Status::InvalidArgument, "unknown root system");
}

std::vector<std::vector<int>> cartan_matrix(const RootBasis& b) {
    const size_t n = b.simple.size();
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational v = Rational(2) * algebra::inner(b.simple[i], b.simple[j]);
            require(v.is_integer(), Status::Internal, "non-integral Cartan entry");
            a[i][j] = static_cast<int>(v.num());
        }
    return a;
}

std::vector<std::vector<int>> dynkin_cartan(Algebra a) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    switch (a) {
        case Algebra::D4:
            n = 4;
            edges = {{1, 2}, {2, 3}, {2, 4}};
            break;
        case Algebra::E8:
            n = 8;
            edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
            break;
        case Algebra::E7:
            n = 7;
            edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};  // E8 nodes 2..8, renumbered
            break;
    }
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    for (auto [i, j] : edges) m[i - 1][j - 1] = m[j - 1][i - 1] = -1;
    return m;
}

AlgElem reflect(const AlgElem& x, const AlgElem& a) {
    require(!a.is_zero(), Status::DomainError, "reflection in the zero vector");
    require(x.dim() == a.dim(), Status::DimensionMismatch, "reflect: dimension mismatch");
    Rational n = norm_sq(a);
    return (Rational(-1) / n) * ((a * conj(x)) * a);
}

std::vector<AlgElem> all_roots(const RootBasis& b) {
    std::unordered_set<AlgElem, algebra::AlgElemHash> seen(b.simple.begin(), b.simple.end());
    std::vector<AlgElem> todo(b.simple.begin(), b.simple.end());
    while (!todo.empty()) {
        AlgElem x = todo.back();
        todo.pop_back();
        for (const auto& s : b.simple) {
            AlgElem y = reflect(x, s);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    std::vector<AlgElem> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- LinMap

LinMap LinMap::identity(int rank) {
    LinMap m;
    m.rank = rank;
    for (int i = 0; i < rank; ++i) m.at(i, i) = 1;
    return m;
}

LinMap operator*(const LinMap& a, const LinMap& b) {
    require(a.rank == b.rank, Status::DimensionMismatch, "composing maps of different rank");
    LinMap c;
    c.rank = a.rank;
    const int n = a.rank;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += a.m[i * 8 + k] * b.m[k * 8 + j];
            if (s > 127 || s < -128) fail(Status::Overflow, "matrix entry exceeds int8 range");
            c.m[i * 8 + j] = static_cast<int8_t>(s);
        }
    return c;
}

size_t LinMap::hash() const {
    uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(rank);
    for (int8_t v : m) {
        h ^= static_cast<uint8_t>(v);
        h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
}

namespace {

RingId ring_of_dim(int dim) {
    require(dim == 4 || dim == 8, Status::DimensionMismatch, "root lattice maps need dim 4 or 8");
    return dim == 4 ? RingId::Hurwitz : RingId::Octavian;
}

// Integer data for fast evaluation: doubled coordinates of the simple roots and root
// coordinates of the basis units e_i.
struct Frame {
    int dim = 0;
    std::vector<std::vector<int64_t>> simple2;  // [j] -> coords2 of eps_j
    std::vector<std::vector<int64_t>> unit_rc;  // [i] -> root coords of e_i
    linalg::QMatrix binv;                       // algebra coords -> root coords
};

const Frame& frame(int dim) {
    static const auto build = [](int d) {
        Frame f;
        f.dim = d;
        RingId r = ring_of_dim(d);
        const auto& b = rings::integral_basis(r);
        for (const auto& e : b) f.simple2.push_back(e.coords2());
        for (int i = 0; i < d; ++i) f.unit_rc.push_back(rings::basis_coordinates(r, AlgElem::basis(d, i)));
        linalg::QMatrix bm(d, std::vector<Rational>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) bm[i][j] = b[j].coord(i);
        f.binv = *linalg::inverse(bm);
        return f;
    };
    static const Frame f4 = build(4);
    static const Frame f8 = build(8);
    return dim == 4 ? f4 : f8;
}

// coords2 of the image of e_i.
void image2(const LinMap& m, const Frame& f, int i, int64_t* out) {
    const int n = m.rank;
    for (int a = 0; a < f.dim; ++a) out[a] = 0;
    for (int r = 0; r < n; ++r) {
        int64_t y = 0;
        for (int k = 0; k < n; ++k) y += m.at(r, k) * f.unit_rc[i][k];
        if (y == 0) continue;
        for (int a = 0; a < f.dim; ++a) out[a] += y * f.simple2[r][a];
    }
}

}  // namespace

LinMap linmap_from(int dim, const std::function<AlgElem(const AlgElem&)>& f) {
    RingId r = ring_of_dim(dim);
    const auto& b = rings::integral_basis(r);
    LinMap m;
    m.rank = dim;
    for (int j = 0; j < dim; ++j) {
        AlgElem y = f(b[j]);
        require(y.dim() == dim, Status::DimensionMismatch, "map changes dimension");
        auto c = rings::basis_coordinates(r, y);
        for (int i = 0; i < dim; ++i) {
            require(c[i] >= -128 && c[i] <= 127, Status::Overflow, "matrix entry exceeds int8 range");
            m.at(i, j) = static_cast<int8_t>(c[i]);
        }
    }
    return m;
}

AlgElem apply(const LinMap& m, const AlgElem& x) {
    require(x.dim() == m.rank, Status::DimensionMismatch, "apply: dimension mismatch");
    const Frame& f = frame(m.rank);
    std::vector<Rational> xv;
    for (int i = 0; i < x.dim(); ++i) xv.push_back(x.coord(i));
    auto c = linalg::apply(f.binv, xv);
    const auto& b = rings::integral_basis(ring_of_dim(m.rank));
    AlgElem out = AlgElem::zero(m.rank);
    for (int i = 0; i < m.rank; ++i) {
        Rational y = 0;
        for (int k = 0; k < m.rank; ++k)
            if (m.at(i, k) != 0) y += Rational(m.at(i, k)) * c[k];
        if (!y.is_zero()) out = out + y * b[i];
    }
    return out;
}

int64_t determinant(const LinMap& m) {
    linalg::ZMatrix z(m.rank, std::vector<int64_t>(m.rank));
    for (int i = 0; i < m.rank; ++i)
        for (int j = 0; j < m.rank; ++j) z[i][j] = m.at(i, j);
    Rational d = linalg::determinant(linalg::to_q(z));
    return d.num();
}

bool is_lattice_isometry(const LinMap& m) {
    if (m.rank != 4 && m.rank != 8) return false;
    const Algebra a = m.rank == 4 ? Algebra::D4 : Algebra::E8;
    const auto g = cartan_matrix(root_basis(a));
    const int n = m.rank;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += m.at(k, i) * g[k][l] * m.at(l, j);
            if (s != g[i][j]) return false;
        }
    return true;
}

bool is_automorphism(const LinMap& m) {
    if (m.rank != 8) return false;
    const Frame& f = frame(8);
    const auto& t = algebra::table(8);
    int64_t img[8][8];
    for (int i = 0; i < 8; ++i) image2(m, f, i, img[i]);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            int64_t prod[8] = {0};
            for (int a = 0; a < 8; ++a) {
                if (img[i][a] == 0) continue;
                for (int b = 0; b < 8; ++b) {
                    if (img[j][b] == 0) continue;
                    auto e = t.at(a, b);
                    prod[e.index] += e.sign * img[i][a] * img[j][b];
                }
            }
            auto e = t.at(i, j);
            for (int a = 0; a < 8; ++a)
                if (prod[a] != 2 * e.sign * img[e.index][a]) return false;
        }
    return true;
}

LinMap d4_even_element(const AlgElem& a, const AlgElem& b) {
    require(a.dim() == 4 && b.dim() == 4, Status::DimensionMismatch, "d4_even_element needs quaternions");
    require(rings::is_unit(RingId::Hurwitz, a) && rings::is_unit(RingId::Hurwitz, b), Status::InvalidArgument,
            "d4_even_element needs Hurwitz units");
    require(rings::in_q(a * b), Status::InvalidArgument,
            "ab is not in {+-1, +-e1, +-e5, +-e6}: diag(a, b) would be a triality element, not in W+(D4)");
    // diag(a, b) acts on the boundary as x -> a x conj(b)
    const AlgElem bb = algebra::conj(b);
    return linmap_from(4, [&](const AlgElem& x) { return (a * x) * bb; });
}

LinMap sandwich(const AlgElem& g) {
    return linmap_from(8, [&](const AlgElem& x) { return (g * x) * g; });
}

LinMap right_mult(const AlgElem& b) {
    return linmap_from(8, [&](const AlgElem& x) { return x * b; });
}

LinMap reflection_pair(int dim, const AlgElem& a, const AlgElem& b) {
    return linmap_from(dim, [&](const AlgElem& x) { return reflect(reflect(x, b), a); });
}

// ---------------------------------------------------------------- closure

namespace {

constexpr char kMagic[8] = {'O', 'C', 'T', 'C', 'L', 'O', 'S', '1'};

uint64_t gens_digest(const std::vector<LinMap>& gens) {
    uint64_t h = 14695981039346656037ULL;
    for (const auto& g : gens) {
        h ^= g.hash();
        h *= 1099511628211ULL;
    }
    return h;
}

void write_checkpoint(const std::string& path, const std::vector<LinMap>& elems, size_t frontier,
                      uint64_t digest) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Status::IoError, "cannot write checkpoint " + tmp);
        uint64_t hdr[4] = {static_cast<uint64_t>(elems.empty() ? 0 : elems[0].rank), elems.size(), frontier,
                           digest};
        out.write(kMagic, sizeof kMagic);
        out.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
        for (const auto& e : elems) out.write(reinterpret_cast<const char*>(e.m.data()), 64);
        require(static_cast<bool>(out), Status::IoError, "checkpoint write failed");
    }
    std::filesystem::rename(tmp, path);
}

bool read_checkpoint(const std::string& path, uint64_t digest, std::vector<LinMap>& elems, size_t& frontier) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    uint64_t hdr[4];
    in.read(magic, sizeof magic);
    in.read(reinterpret_cast<char*>(hdr), sizeof hdr);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0 || hdr[3] != digest) return false;
    elems.assign(hdr[1], LinMap{});
    for (auto& e : elems) {
        e.rank = static_cast<int>(hdr[0]);
        in.read(reinterpret_cast<char*>(e.m.data()), 64);
    }
    if (!in) return false;
    frontier = hdr[2];
    return true;
}

}  // namespace

std::vector<LinMap> closure(const std::vector<LinMap>& gens, const ClosureOptions& opt) {
    require(!gens.empty(), Status::InvalidArgument, "closure needs at least one generator");
    const int rank = gens[0].rank;
    std::vector<LinMap> elems;
    size_t frontier = 0;
    const uint64_t digest = gens_digest(gens);
    if (opt.checkpoint.empty() || !read_checkpoint(opt.checkpoint, digest, elems, frontier)) {
        elems = {LinMap::identity(rank)};
        frontier = 0;
    }

    struct IdxHash {
        const std::vector<LinMap>* v;
        size_t operator()(uint32_t i) const { return (*v)[i].hash(); }
    };
    struct IdxEq {
        const std::vector<LinMap>* v;
        bool operator()(uint32_t a, uint32_t b) const { return (*v)[a] == (*v)[b]; }
    };
    std::unordered_set<uint32_t, IdxHash, IdxEq> index(16, IdxHash{&elems}, IdxEq{&elems});
    index.reserve(elems.size() * 2);
    for (uint32_t i = 0; i < elems.size(); ++i) index.insert(i);

    size_t since_save = 0;
    while (frontier < elems.size()) {
        for (const auto& g : gens) {
            elems.push_back(g * elems[frontier]);
            if (!index.insert(static_cast<uint32_t>(elems.size() - 1)).second) elems.pop_back();
            if (elems.size() > opt.limit)
                fail(Status::SearchFailed, "group closure exceeded " + std::to_string(opt.limit) + " elements");
        }
        ++frontier;
        if (opt.progress && frontier % 65536 == 0) opt.progress(frontier, elems.size());
        if (!opt.checkpoint.empty() && ++since_save >= opt.checkpoint_every) {
            write_checkpoint(opt.checkpoint, elems, frontier, digest);
            since_save = 0;
        }
    }
    if (!opt.checkpoint.empty()) write_checkpoint(opt.checkpoint, elems, frontier, digest);
    if (opt.progress) opt.progress(frontier, elems.size());
    return elems;
}

// ---------------------------------------------------------------- automorphism criteria

namespace {

void require_nonzero(const std::vector<AlgElem>& a) {
    require(!a.empty(), Status::InvalidArgument, "empty factor list");
    for (const auto& x : a) {
        require(!x.is_zero(), Status::DomainError, "zero factor");
        require(x.dim() == a[0].dim(), Status::DimensionMismatch, "factors of different dimension");
    }
}

using I8 = std::array<int64_t, 8>;

// Doubled coordinates of a product of octavians.
I8 mul2(const I8& x, const I8& y) {
    const auto& t = algebra::table(8);
    I8 p{};
    for (int a = 0; a < 8; ++a) {
        if (x[a] == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (y[b] == 0) continue;
            auto e = t.at(a, b);
            p[e.index] += e.sign * x[a] * y[b];
        }
    }
    for (auto& v : p) v /= 2;
    return p;
}

I8 conj2(I8 x) {
    for (int a = 1; a < 8; ++a) x[a] = -x[a];
    return x;
}

I8 to_i8(const AlgElem& x) {
    auto c = x.coords2();
    I8 o{};
    std::copy(c.begin(), c.end(), o.begin());
    return o;
}

// Brute force over octavian units in doubled coordinates (inverse = conjugate).
bool brute_force_units(const std::vector<AlgElem>& a) {
    std::vector<I8> u, ub;
    for (const auto& x : a) {
        u.push_back(to_i8(x));
        ub.push_back(conj2(u.back()));
    }
    const auto& t = algebra::table(8);
    std::array<I8, 8> img;
    std::array<bool, 8> have{};
    auto image = [&](int i) -> const I8& {
        if (!have[i]) {
            I8 y{};
            y[i] = 2;
            for (size_t k = a.size(); k-- > 0;) y = mul2(mul2(u[k], y), ub[k]);
            img[i] = y;
            have[i] = true;
        }
        return img[i];
    };
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j) {
            auto e = t.at(i, j);
            I8 p = mul2(image(i), image(j));
            const I8& q = image(e.index);
            for (int c = 0; c < 8; ++c)
                if (p[c] != e.sign * q[c]) return false;
        }
    return true;
}

}  // namespace

AlgElem apply_bimult(const std::vector<AlgElem>& a, const AlgElem& x) {
    require_nonzero(a);
    AlgElem y = x;
    for (size_t k = a.size(); k-- > 0;) y = (a[k] * y) * invert(a[k]);
    return y;
}

AlgElem bimult_invariant(const std::vector<AlgElem>& a) {
    require_nonzero(a);
    AlgElem b = (a[0] * a[0]) * a[0];
    for (size_t k = 1; k < a.size(); ++k) b = ((a[k] * a[k]) * b) * a[k];
    return b;
}

bool is_automorphism_bimult(const std::vector<AlgElem>& a) { return bimult_invariant(a).is_real(); }

bool corollary_criterion(const std::vector<AlgElem>& a) {
    require_nonzero(a);
    AlgElem p = AlgElem::one(a[0].dim());
    for (const auto& x : a) {
        require(norm_sq(x) == Rational(1) && (x.is_real() || x.is_imaginary()), Status::InvalidArgument,
                "corollary criterion needs real or imaginary units");
        p = p * x;
    }
    return p == AlgElem::one(p.dim()) || p == -AlgElem::one(p.dim());
}

bool brute_force_automorphism(const std::vector<AlgElem>& a) {
    require_nonzero(a);
    const int dim = a[0].dim();
    require(dim <= 8, Status::DimensionMismatch, "automorphism check needs dim <= 8");
    if (dim == 8 && std::all_of(a.begin(), a.end(), [](const AlgElem& x) {
            return rings::is_unit(RingId::Octavian, x);
        }))
        return brute_force_units(a);
    std::vector<AlgElem> img;
    for (int i = 0; i < dim; ++i) img.push_back(apply_bimult(a, AlgElem::basis(dim, i)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (img[i] * img[j] != apply_bimult(a, AlgElem::basis(dim, i) * AlgElem::basis(dim, j))) return false;
    return true;
}

// ---------------------------------------------------------------- G2(2)

namespace {

// Signed permutations of e1..e7 that preserve the multiplication table and the octavian
// lattice, in lexicographic search order.
std::vector<LinMap> permutation_automorphisms() {
    const auto& t = algebra::table(8);
    std::vector<LinMap> out;
    std::array<int, 7> p{1, 2, 3, 4, 5, 6, 7};
    do {
        for (int s = 0; s < 128; ++s) {
            auto sign = [&](int i) { return i == 0 ? 1 : ((s >> (i - 1)) & 1 ? -1 : 1); };
            auto idx = [&](int i) { return i == 0 ? 0 : p[i - 1]; };
            bool ok = true;
            for (int i = 1; i < 8 && ok; ++i)
                for (int j = 1; j < 8 && ok; ++j) {
                    auto e = t.at(i, j);
                    auto f = t.at(idx(i), idx(j));
                    ok = f.index == idx(e.index) && f.sign * sign(i) * sign(j) == e.sign * sign(e.index);
                }
            if (!ok) continue;
            auto img = [&](const AlgElem& x) {
                AlgElem y = AlgElem::zero(8);
                for (int i = 0; i < 8; ++i)
                    if (x.num(i) != 0) y = y + x.coord(i) * AlgElem::basis(8, idx(i), sign(i));
                return y;
            };
            bool lattice = true;
            for (const auto& b : rings::integral_basis(RingId::Octavian))
                lattice = lattice && rings::is_member(RingId::Octavian, img(b));
            if (lattice) out.push_back(linmap_from(8, img));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

std::vector<LinMap> generate_G2_2() {
    // Brandt conjugations have order 3 and only reach the index-2 subgroup (order 6048);
    // one table-preserving signed permutation outside it completes the group.
    std::vector<LinMap> gens;
    std::unordered_set<LinMap, LinMapHash> seen;
    for (const auto& a : rings::octavian_unit_classes().brandt) {
        AlgElem ai = conj(a);
        LinMap g = linmap_from(8, [&](const AlgElem& x) { return (a * x) * ai; });
        if (seen.insert(g).second) gens.push_back(g);
    }
    ClosureOptions opt;
    opt.limit = 20000;
    auto inner = closure(gens, opt);
    std::unordered_set<LinMap, LinMapHash> inner_set(inner.begin(), inner.end());
    for (const auto& p : permutation_automorphisms())
        if (!inner_set.count(p)) {
            gens.push_back(p);
            break;
        }
    return closure(gens, opt);
}

namespace {

struct G2Data {
    std::vector<LinMap> elems;
    std::unordered_set<LinMap, LinMapHash> set;
};

const G2Data& g2_data() {
    static const G2Data d = [] {
        G2Data g;
        g.elems = generate_G2_2();
        g.set.insert(g.elems.begin(), g.elems.end());
        return g;
    }();
    return d;
}

AlgElem canonical_sign(const AlgElem& b) {
    for (int i = 0; i < b.dim(); ++i)
        if (b.num(i) != 0) return b.num(i) > 0 ? b : -b;
    return b;
}

struct E7Data {
    std::vector<AlgElem> classes;
    std::vector<std::pair<AlgElem, AlgElem>> factors;
    std::vector<LinMap> rep;      // g_B h_B
    std::vector<LinMap> rep_inv;  // h_B g_B
    std::unordered_map<AlgElem, size_t, algebra::AlgElemHash> where;
};

const E7Data& e7_data() {
    static const E7Data d = [] {
        E7Data e;
        for (const auto& u : rings::units(RingId::Octavian)) {
            AlgElem c = canonical_sign(u);
            if (e.where.count(c)) continue;
            e.where[c] = e.classes.size();
            e.classes.push_back(c);
        }
        for (const auto& c : e.classes) {
            auto gh = factor_into_imaginaries(c);
            e.factors.push_back(gh);
            LinMap g = sandwich(gh.first), h = sandwich(gh.second);
            e.rep.push_back(g * h);
            e.rep_inv.push_back(h * g);
        }
        return e;
    }();
    return d;
}

}  // namespace

const std::vector<LinMap>& g2_2() { return g2_data().elems; }

bool in_g2_2(const LinMap& m) { return m.rank == 8 && g2_data().set.count(m) > 0; }

std::pair<AlgElem, AlgElem> factor_into_imaginaries(const AlgElem& b) {
    require(rings::is_unit(RingId::Octavian, b), Status::InvalidArgument, "factor_into_imaginaries needs a unit octavian");
    for (const auto& g : rings::octavian_unit_classes().imaginary) {
        AlgElem h = (-g) * b;
        if (h.is_imaginary() && rings::is_unit(RingId::Octavian, h)) return {g, h};
    }
    fail(Status::Internal, "no factorization into imaginary units");
}

const std::vector<AlgElem>& e7_classes() { return e7_data().classes; }

LinMap e7_element(const AlgElem& g, const AlgElem& h, const LinMap& phi) {
    for (const auto* x : {&g, &h})
        require(x->dim() == 8 && x->is_imaginary() && rings::is_unit(RingId::Octavian, *x), Status::InvalidArgument,
                "e7_element needs imaginary unit octavians");
    require(in_g2_2(phi), Status::InvalidArgument, "phi is not an automorphism of the octavians");
    return sandwich(g) * sandwich(h) * phi;
}

E7Normal e7_normal_form(const LinMap& m) {
    require(m.rank == 8, Status::DimensionMismatch, "W+(E7) elements are rank 8 maps");
    const auto& d = e7_data();
    for (size_t i = 0; i < d.classes.size(); ++i) {
        LinMap psi = d.rep_inv[i] * m;
        if (in_g2_2(psi)) return {d.classes[i], psi};
    }
    fail(Status::InvalidArgument, "map is not in W+(E7)");
}

E7Normal e7_compose(const LinMap& m1, const LinMap& m2) { return e7_normal_form(m1 * m2); }

LinMap e7_from_normal(const E7Normal& n) {
    const auto& d = e7_data();
    auto it = d.where.find(n.b);
    require(it != d.where.end(), Status::InvalidArgument, "not a canonical class unit");
    return d.rep[it->second] * n.phi;
}

LinMap e8_element(const AlgElem& e, const AlgElem& f, const AlgElem& b, const LinMap& phi) {
    for (const auto* x : {&e, &f})
        require(x->dim() == 8 && (x->is_imaginary() || x->is_real()) && rings::is_unit(RingId::Octavian, *x),
                Status::InvalidArgument, "e8_element needs imaginary or real unit octavians e, f");
    require(rings::is_unit(RingId::Octavian, b), Status::InvalidArgument, "e8_element needs a unit b");
    require(in_g2_2(phi), Status::InvalidArgument, "phi is not an automorphism of the octavians");
    return right_mult(b) * sandwich(f) * sandwich(e) * phi;
}

E8Parts e8_decompose(const LinMap& m) {
    require(m.rank == 8 && is_lattice_isometry(m) && determinant(m) == 1, Status::InvalidArgument,
            "e8_decompose needs an even isometry of the E8 lattice");
    E8Parts p;
    p.b = apply(m, AlgElem::one(8));
    LinMap stab = right_mult(conj(p.b)) * m;
    E7Normal n = e7_normal_form(stab);
    const auto& d = e7_data();
    const auto& gh = d.factors[d.where.at(n.b)];
    p.f = gh.first;
    p.e = gh.second;
    p.phi = n.phi;
    return p;
}

std::vector<LinMap> even_generators(Algebra a) {
    const auto& b = root_basis(a);
    std::vector<LinMap> gens;
    for (size_t j = 1; j < b.simple.size(); ++j) gens.push_back(reflection_pair(b.dim, b.simple[0], b.simple[j]));
    return gens;
}

OrderCertificate certify_orders() {
    OrderCertificate c;
    const auto& g2 = g2_2();
    c.g2_order = g2.size();
    c.g2_rotations = std::all_of(g2.begin(), g2.end(), [](const LinMap& m) { return determinant(m) == 1; });

    const auto& d = e7_data();
    c.e7_classes = d.classes.size();
    c.e7_cosets_distinct = true;
    for (size_t i = 0; i < d.classes.size() && c.e7_cosets_distinct; ++i)
        for (size_t j = 0; j < d.classes.size(); ++j)
            if (i != j && in_g2_2(d.rep_inv[i] * d.rep[j])) {
                c.e7_cosets_distinct = false;
                break;
            }
    c.e7_closed_under_generators = true;
    try {
        for (const auto& g : even_generators(Algebra::E7))
            for (const auto& r : d.rep) e7_normal_form(g * r);
    } catch (const Error&) {
        c.e7_closed_under_generators = false;
    }
    if (c.e7_cosets_distinct && c.e7_closed_under_generators && c.g2_rotations)
        c.e7_order = c.e7_classes * c.g2_order;

    std::unordered_set<AlgElem, algebra::AlgElemHash> orbit{AlgElem::one(8)};
    std::vector<AlgElem> todo{AlgElem::one(8)};
    const auto gens = even_generators(Algebra::E8);
    while (!todo.empty()) {
        AlgElem x = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            AlgElem y = apply(g, x);
            if (orbit.insert(y).second) todo.push_back(y);
        }
    }
    c.e8_orbit = orbit.size();
    c.e8_order = c.e8_orbit * c.e7_order;
    return c;
}

}  // namespace octavia::rootsys
