#include "hecke/group.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace hecke {

namespace {

// Action on w-coordinates as integer 2x2 matrices (rows give the image of (p,q)).
struct Mat {
    std::int64_t a, b, c, d;  // (p,q) -> (a p + b q, c p + d q)
};

constexpr Mat kMat[6] = {
    {1, 0, 0, 1},    // e
    {-1, 0, 1, 1},   // s1
    {1, 1, 0, -1},   // s2
    {-1, -1, 1, 0},  // s12
    {0, 1, -1, -1},  // s21
    {0, -1, -1, 0},  // s121
};

constexpr const char* kNames[6] = {"e", "s1", "s2", "s12", "s21", "s121"};
constexpr int kLen[6] = {0, 1, 1, 2, 2, 3};

Fin from_mat(const Mat& m) {
    for (Fin f : kAllFin) {
        const Mat& x = kMat[static_cast<int>(f)];
        if (x.a == m.a && x.b == m.b && x.c == m.c && x.d == m.d) return f;
    }
    throw std::logic_error("not a Weyl group matrix");
}

struct FinTables {
    Fin mul[6][6];
    Fin inv[6];
    FinTables() {
        for (Fin x : kAllFin) {
            for (Fin y : kAllFin) {
                const Mat& a = kMat[static_cast<int>(x)];
                const Mat& b = kMat[static_cast<int>(y)];
                Mat c{a.a * b.a + a.b * b.c, a.a * b.b + a.b * b.d, a.c * b.a + a.d * b.c, a.c * b.b + a.d * b.d};
                mul[static_cast<int>(x)][static_cast<int>(y)] = from_mat(c);
            }
        }
        for (Fin x : kAllFin)
            for (Fin y : kAllFin)
                if (mul[static_cast<int>(x)][static_cast<int>(y)] == Fin::e) inv[static_cast<int>(x)] = y;
    }
};

const FinTables& tables() {
    static const FinTables t;
    return t;
}

// Positive roots in w-coordinates: a1, a2, theta.
constexpr Coweight kPosRoots[3] = {{2, -1}, {-1, 2}, {1, 1}};

bool root_positive(Coweight r) {
    // alpha coordinates of a root; roots are either all >= 0 or all <= 0
    return 2 * r.p + r.q > 0 || r.p + 2 * r.q > 0;
}

std::int64_t pairing(Coweight lam, int root_index) {
    switch (root_index) {
        case 0: return lam.p;
        case 1: return lam.q;
        default: return lam.p + lam.q;
    }
}

}  // namespace

Fin fin_mul(Fin a, Fin b) { return tables().mul[static_cast<int>(a)][static_cast<int>(b)]; }
Fin fin_inv(Fin a) { return tables().inv[static_cast<int>(a)]; }
int fin_length(Fin a) { return kLen[static_cast<int>(a)]; }
const char* fin_name(Fin a) { return kNames[static_cast<int>(a)]; }

Fin fin_delta(Fin a) {
    switch (a) {
        case Fin::s1: return Fin::s2;
        case Fin::s2: return Fin::s1;
        case Fin::s12: return Fin::s21;
        case Fin::s21: return Fin::s12;
        default: return a;
    }
}

bool fin_from_name(const std::string& s, Fin& out) {
    for (Fin f : kAllFin) {
        if (s == kNames[static_cast<int>(f)]) {
            out = f;
            return true;
        }
    }
    return false;
}

Coweight fin_apply(Fin w, Coweight x) {
    const Mat& m = kMat[static_cast<int>(w)];
    return {m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q};
}

Coweight operator+(Coweight a, Coweight b) { return {a.p + b.p, a.q + b.q}; }
Coweight operator-(Coweight a, Coweight b) { return {a.p - b.p, a.q - b.q}; }
Coweight operator-(Coweight a) { return {-a.p, -a.q}; }

Coweight from_alpha(AlphaCoords a) { return {2 * a.m - a.n, 2 * a.n - a.m}; }

bool in_coroot_lattice(Coweight c) { return ((c.p - c.q) % 3 + 3) % 3 == 0; }

AlphaCoords to_alpha(Coweight c) {
    if (!in_coroot_lattice(c)) throw PreconditionError("coweight not in the coroot lattice");
    return {(2 * c.p + c.q) / 3, (c.p + 2 * c.q) / 3};
}

bool is_dominant(Coweight c) { return c.p >= 0 && c.q >= 0; }

Coweight dominant(Coweight c) {
    for (Fin f : kAllFin) {
        Coweight d = fin_apply(f, c);
        if (is_dominant(d)) return d;
    }
    throw std::logic_error("no dominant conjugate");
}

Element identity() { return {}; }
Element translation(Coweight c) { return {c, Fin::e}; }
Element translation(AlphaCoords a) { return {from_alpha(a), Fin::e}; }
Element fin(Fin w) { return {{0, 0}, w}; }

Element simple(int i) {
    switch (i) {
        case 0: return {{1, 1}, Fin::s121};
        case 1: return fin(Fin::s1);
        case 2: return fin(Fin::s2);
        default: throw PreconditionError("simple reflection index must be 0, 1 or 2");
    }
}

Element tau() { return {{1, 0}, Fin::s12}; }

Element tau_pow(int k) {
    k = ((k % 3) + 3) % 3;
    Element r = identity();
    for (int i = 0; i < k; ++i) r = multiply(r, tau());
    return r;
}

Element multiply(const Element& a, const Element& b) {
    return {a.lam + fin_apply(a.w, b.lam), fin_mul(a.w, b.w)};
}

Element invert(const Element& a) {
    Fin wi = fin_inv(a.w);
    return {-fin_apply(wi, a.lam), wi};
}

Element conj(const Element& x, const Element& a) { return multiply(multiply(x, a), invert(x)); }

int length(const Element& a) {
    Fin wi = fin_inv(a.w);
    std::int64_t total = 0;
    for (int r = 0; r < 3; ++r) {
        std::int64_t v = pairing(a.lam, r);
        if (root_positive(fin_apply(wi, kPosRoots[r])))
            total += v < 0 ? -v : v;
        else
            total += v - 1 < 0 ? 1 - v : v - 1;
    }
    return static_cast<int>(total);
}

Element apply_delta(const Element& a) { return {{a.lam.q, a.lam.p}, fin_delta(a.w)}; }

int kappa(const Element& a) { return static_cast<int>(((a.lam.p - a.lam.q) % 3 + 3) % 3); }

Decomposed decompose(const Element& a) {
    int k = kappa(a);
    Element x = multiply(a, tau_pow(-k));
    return {to_alpha(x.lam), x.w, k};
}

Element compose(const Decomposed& d) { return multiply(Element{from_alpha(d.t), d.w}, tau_pow(d.k)); }

Element make(std::int64_t m, std::int64_t n, Fin w, int k) { return compose({{m, n}, w, k}); }

std::string format_element(const Element& a) {
    Decomposed d = decompose(a);
    std::ostringstream os;
    os << "t[" << d.t.m << ',' << d.t.n << "]." << fin_name(d.w) << ".tau^" << d.k;
    return os.str();
}

Element parse_element(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto fail = [&]() -> Element { throw ParseError("malformed element: '" + text + "'"); };
    if (s.size() < 4 || s.compare(0, 2, "t[") != 0) return fail();
    std::size_t close = s.find(']');
    if (close == std::string::npos) return fail();
    std::string coords = s.substr(2, close - 2);
    std::size_t comma = coords.find(',');
    if (comma == std::string::npos) return fail();
    auto to_int = [&](const std::string& x) -> std::int64_t {
        if (x.empty()) fail();
        char* end = nullptr;
        long long v = std::strtoll(x.c_str(), &end, 10);
        if (*end != '\0') fail();
        return v;
    };
    std::int64_t m = to_int(coords.substr(0, comma));
    std::int64_t n = to_int(coords.substr(comma + 1));
    std::string rest = s.substr(close + 1);
    if (rest.empty() || rest[0] != '.') return fail();
    rest = rest.substr(1);
    std::size_t dot = rest.find('.');
    if (dot == std::string::npos) return fail();
    Fin w;
    if (!fin_from_name(rest.substr(0, dot), w)) return fail();
    std::string tail = rest.substr(dot + 1);
    if (tail.size() != 5 || tail.compare(0, 4, "tau^") != 0) return fail();
    int k = tail[4] - '0';
    if (k < 0 || k > 2) return fail();
    return make(m, n, w, k);
}

std::tuple<int, std::int64_t, std::int64_t, int> order_key(const Element& a) {
    Decomposed d = decompose(a);
    return {d.k, d.t.m, d.t.n, static_cast<int>(d.w)};
}

bool element_less(const Element& a, const Element& b) { return order_key(a) < order_key(b); }

}  // namespace hecke
