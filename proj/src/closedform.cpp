#include "hecke/closedform.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

namespace hecke {

namespace cf {

bool dominance_less(AlphaCoords a, AlphaCoords b) {
    const auto dm = b.m - a.m, dn = b.n - a.n;
    return dm >= 0 && dn >= 0 && (dm > 0 || dn > 0);
}

bool dominant(AlphaCoords a) { return 2 * a.m - a.n >= 0 && 2 * a.n - a.m >= 0; }

bool in_q_sh(AlphaCoords a) {
    if (a.n == 2 * a.m) return false;   // k(a1+2a2)
    if (a.m == 2 * a.n) return false;   // k(2a1+a2)
    if (a.m == -a.n) return false;      // k(a1-a2)
    return true;
}

namespace {

// Dominant elements of Q inside the box [0,m]x[0,n].
template <class Pred>
std::vector<AlphaCoords> scan_box(std::int64_t m, std::int64_t n, Pred keep) {
    std::vector<AlphaCoords> out;
    for (std::int64_t i = 0; i <= m; ++i)
        for (std::int64_t j = 0; j <= n; ++j) {
            AlphaCoords x{i, j};
            if (dominant(x) && in_q_sh(x) && keep(x)) out.push_back(x);
        }
    return out;
}

}  // namespace

std::vector<AlphaCoords> q_below(AlphaCoords alpha) {
    return scan_box(alpha.m, alpha.n, [&](AlphaCoords x) { return dominance_less(x, alpha); });
}

std::vector<AlphaCoords> d_set(AlphaCoords lam) {
    const AlphaCoords top{lam.m - 1, lam.n};
    return scan_box(top.m, top.n, [&](AlphaCoords x) { return dominance_less(x, top) && x.n != lam.n; });
}

std::vector<AlphaCoords> d_prime_set(AlphaCoords lam) {
    const AlphaCoords top{lam.m, lam.n - 1};
    return scan_box(top.m, top.n, [&](AlphaCoords x) { return dominance_less(x, top) && x.m != lam.m; });
}

std::vector<AlphaCoords> e_set(AlphaCoords lam) {
    std::vector<AlphaCoords> out;
    for (std::int64_t i = 1; i <= lam.m; ++i) {
        AlphaCoords x{lam.m - i, lam.n};
        if (dominant(x) && in_q_sh(x)) out.push_back(x);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<AlphaCoords> e_prime_set(AlphaCoords lam) {
    std::vector<AlphaCoords> out;
    for (std::int64_t i = 1; i <= lam.n; ++i) {
        AlphaCoords x{lam.m, lam.n - i};
        if (dominant(x) && in_q_sh(x)) out.push_back(x);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<AlphaCoords> e_tau(AlphaCoords lam) {
    std::vector<AlphaCoords> out;
    for (std::int64_t k = floor_div(lam.n, 2) + 1; k <= lam.m - 1; ++k) out.push_back({k, lam.n});
    return out;
}

std::vector<AlphaCoords> e_prime_tau(AlphaCoords lam) {
    std::vector<AlphaCoords> out;
    for (std::int64_t k = floor_div(lam.m + 1, 2) + 1; k <= lam.n; ++k) out.push_back({lam.m, k});
    return out;
}

static std::vector<ConjClassId> c_family_up_to(int len, bool prime) {
    std::vector<ConjClassId> out;
    for (std::int64_t i = 1;; ++i) {
        ConjClassId c = prime ? ConjClassId::cp(i) : ConjClassId::c(i);
        if (min_length(c) > len) break;
        out.push_back(c);
    }
    return out;
}

std::vector<ConjClassId> o_le(AlphaCoords lam) {
    return c_family_up_to(min_length(classify(make(lam.m, lam.n, Fin::s1), Mode::Split)), false);
}

std::vector<ConjClassId> o_le_prime(AlphaCoords lam) {
    return c_family_up_to(min_length(classify(make(lam.m, lam.n, Fin::s2), Mode::Split)), true);
}

}  // namespace cf

namespace {

using cf::floor_div;

struct Acc {
    ClassPolynomial f;
    explicit Acc(Mode m) { f.mode = m; }
    void add(const ConjClassId& c, std::int64_t coeff, int deg) { f.add(c, UPoly::monomial(coeff, deg)); }
    // One table row: the same value on every class of a set.
    void row(const std::vector<ConjClassId>& cs, std::int64_t coeff, int deg) {
        std::set<ConjClassId> seen(cs.begin(), cs.end());
        for (const auto& c : seen) add(c, coeff, deg);
    }
};

std::vector<ConjClassId> lambdas(const std::vector<AlphaCoords>& xs) {
    std::vector<ConjClassId> out;
    for (auto x : xs) out.push_back(ConjClassId::o_lambda(x.m, x.n));
    return out;
}

std::vector<ConjClassId> lambda_taus(const std::vector<AlphaCoords>& xs) {
    std::vector<ConjClassId> out;
    for (auto x : xs) out.push_back(ConjClassId::o_lambdatau(x.m, x.n));
    return out;
}

template <class T>
std::vector<T> cat(std::vector<T> a, const std::vector<T>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Shape shared by every O2 statement: 1 on O2, u on some C/C' classes, u^2 on some O_lambda.
ClassPolynomial o2_shape(const std::vector<AlphaCoords>& sq, AlphaCoords le, AlphaCoords le_prime) {
    Acc r(Mode::Split);
    r.add(ConjClassId::o2(), 1, 0);
    r.row(cat(cf::o_le(le), cf::o_le_prime(le_prime)), 1, 1);
    r.row(lambdas(sq), 1, 2);
    return r.f;
}

ClassPolynomial o2_only() {
    Acc r(Mode::Split);
    r.add(ConjClassId::o2(), 1, 0);
    return r.f;
}

struct Match {
    std::string family;
    std::vector<std::int64_t> params;
    ClassPolynomial poly;
};

using Matcher = std::function<std::optional<Match>(const Decomposed&)>;

std::optional<Match> match_o2(const Decomposed& d) {
    if (d.k != 0 || (d.w != Fin::s12 && d.w != Fin::s21)) return std::nullopt;
    const auto m = d.t.m, n = d.t.n;
    const bool s12 = d.w == Fin::s12;
    auto hit = [&](const char* fam, std::vector<std::int64_t> p, ClassPolynomial f) {
        return std::optional<Match>(Match{fam, std::move(p), std::move(f)});
    };
    // t^{k(a1+2a2)} s2s1 and s1s2
    if (m >= 1 && n == 2 * m) {
        const auto k = m;
        if (!s12) return hit("o2_k12_s21", {k}, o2_shape(cf::q_below({k - 1, 2 * k - 2}), {k, 2 * k - 1}, {k - 1, 2 * k - 2}));
        return hit("o2_k12_s12", {k}, o2_shape(cf::q_below({k, 2 * k}), {k, 2 * k - 1}, {k, 2 * k}));
    }
    // t^{k(2a1+a2)}
    if (n >= 1 && m == 2 * n) {
        const auto k = n;
        if (s12) return hit("o2_k21_s12", {k}, o2_shape(cf::q_below({2 * k - 2, k - 1}), {2 * k - 2, k - 1}, {2 * k - 1, k}));
        return hit("o2_k21_s21", {k}, o2_shape(cf::q_below({2 * k, k}), {2 * k, k}, {2 * k - 1, k}));
    }
    // t^{k a1 + (2k-1) a2}, either order
    if (m >= 1 && n == 2 * m - 1) {
        const auto k = m;
        if (k == 1) return hit("o2_k_2k-1", {k}, o2_only());
        AlphaCoords b{k - 1, 2 * k - 2};
        return hit("o2_k_2k-1", {k}, o2_shape(cf::q_below(b), b, b));
    }
    if (n >= 1 && m == 2 * n - 1) {
        const auto k = n;
        if (k == 1) return hit("o2_2k-1_k", {k}, o2_only());
        AlphaCoords b{2 * k - 2, k - 1};
        return hit("o2_2k-1_k", {k}, o2_shape(cf::q_below(b), b, b));
    }
    const AlphaCoords lam{m, n};
    if (s12 && 2 <= m && m <= n && n < 2 * m - 1)
        return hit("o2_lambda_a_s12", {m, n}, o2_shape(cf::d_set(lam), {m - 1, n - 1}, {m - 1, n}));
    if (!s12 && 2 <= m && m < n && n < 2 * m - 1)
        return hit("o2_lambda_a_s21", {m, n}, o2_shape(cf::d_prime_set(lam), {m, n - 1}, {m - 1, n - 1}));
    if (!s12 && 2 <= n && n <= m && m < 2 * n - 1)
        return hit("o2_lambda_b_s21", {m, n}, o2_shape(cf::d_prime_set(lam), {m, n - 1}, {m - 1, n - 1}));
    if (s12 && 2 <= n && n < m && m < 2 * n - 1)
        return hit("o2_lambda_b_s12", {m, n}, o2_shape(cf::d_set(lam), {m - 1, n - 1}, {m - 1, n}));
    // t^{(2k+1)a1 + k a2}
    if (n >= 0 && m == 2 * n + 1) {
        const auto k = n;
        if (s12) return hit("o2_2k+1_k_s12", {k}, o2_shape(cf::q_below({2 * k, k}), {2 * k, k}, {2 * k, k}));
        return hit("o2_2k+1_k_s21", {k},
                   o2_shape(cat(cf::q_below({2 * k, k}), cf::e_set({2 * k + 1, k + 1})), {2 * k + 1, k + 1}, {2 * k, k}));
    }
    if (m >= 0 && n >= 0 && m - 2 * n > 1) {
        if (s12) return hit("o2_wide_s12", {m, n}, o2_shape(cf::d_prime_set({m, m - n}), {m, m - n - 1}, {m - 1, m - n - 1}));
        return hit("o2_wide_s21", {m, n},
                   o2_shape(cat(cf::d_set({m, m - n}), cf::e_set({m, m - n})), {m, m - n}, {m - 1, m - n}));
    }
    if (n <= 0) {
        const auto nn = -n;
        if (s12 && m >= 1 && nn >= 1 && m - nn > 1)
            return hit("o2_neg_s12", {m, nn}, o2_shape(cf::d_prime_set({m, m + nn}), {m, m + nn - 1}, {m - 1, m + nn - 1}));
        if (!s12 && m >= 0 && nn >= 0 && m - nn > 1)
            return hit("o2_neg_s21", {m, nn},
                       o2_shape(cat(cf::d_set({m, m + nn}), cf::e_set({m, m + nn})), {m, m + nn}, {m - 1, m + nn}));
    }
    return std::nullopt;
}

std::vector<ConjClassId> o_taus(std::int64_t lo, std::int64_t hi) {
    std::vector<ConjClassId> out;
    for (auto i = lo; i <= hi; ++i) out.push_back(ConjClassId::o_tau(i));
    return out;
}

// Union over j of E_{(2j-1)a1 + j a2, tau}.
std::vector<AlphaCoords> e_tau_run(std::int64_t lo, std::int64_t hi) {
    std::vector<AlphaCoords> out;
    for (auto j = lo; j <= hi; ++j) out = cat(out, cf::e_tau({2 * j - 1, j}));
    return out;
}

// Union over j of E'_{j a1 + (2j-1) a2, tau}.
std::vector<AlphaCoords> e_prime_tau_run(std::int64_t lo, std::int64_t hi) {
    std::vector<AlphaCoords> out;
    for (auto j = lo; j <= hi; ++j) out = cat(out, cf::e_prime_tau({j, 2 * j - 1}));
    return out;
}

ClassPolynomial idtau_shape(const std::vector<AlphaCoords>& sq, std::int64_t lo, std::int64_t hi) {
    Acc r(Mode::SplitTau);
    r.add(ConjClassId::o_idtau(), 1, 0);
    r.row(o_taus(lo, hi), 1, 1);
    r.row(lambda_taus(sq), 1, 2);
    return r.f;
}

std::optional<Match> match_idtau(const Decomposed& d) {
    if (d.k != 1 || (d.w != Fin::e && d.w != Fin::s12)) return std::nullopt;
    const auto m = d.t.m, n = d.t.n;
    const bool s12 = d.w == Fin::s12;
    auto hit = [&](const char* fam, std::vector<std::int64_t> p, ClassPolynomial f) {
        return std::optional<Match>(Match{fam, std::move(p), std::move(f)});
    };
    if (!s12) {
        if (m >= 1 && n == 2 * m) {
            const auto k = m;
            return hit("idtau_k_2k", {k}, idtau_shape(e_prime_tau_run(2, k), 1 - k, 2 * k));
        }
        if (m >= 1 && n == 2 * m - 1) {
            const auto k = m;
            return hit("idtau_k_2k-1", {k}, idtau_shape(e_prime_tau_run(2, k), 1 - k, 2 * k - 1));
        }
        if (n >= 1 && m == 2 * n) {
            const auto k = n;
            return hit("idtau_2k_k", {k}, idtau_shape(e_tau_run(2, k), 1 - 2 * k, k));
        }
        if (n >= 1 && m == 2 * n + 1)
            return hit("idtau_2n+1_n", {n}, idtau_shape(e_tau_run(2, n + 1), -2 * n, n + 1));
        if (n >= 1 && m == 2 * n + 2)
            return hit("idtau_2n+2_n", {n}, idtau_shape(e_tau_run(2, n + 2), -1 - 2 * n, n + 2));
        if (m >= 1 && n >= 1 && cf::dominant({m, n}) && cf::in_q_sh({m, n}) && m != 2 * n - 1 && n != 2 * m - 1) {
            const auto h = floor_div(n + 1, 2);
            auto sq = e_prime_tau_run(2, h);
            for (auto j = h + 1; j <= m; ++j) sq = cat(sq, cf::e_prime_tau({j, n}));
            return hit("idtau_lambda", {m, n}, idtau_shape(sq, 1 - m, n));
        }
        if ((n >= 1 && m >= 2 * n + 3) || (n <= 0 && m + n >= 1)) {
            const auto h = floor_div(m + 2, 2);
            auto sq = e_tau_run(2, h);
            for (auto j = h + 1; j <= m - n; ++j) sq = cat(sq, cf::e_tau({m + 1, j}));
            return hit("idtau_wide", {m, n}, idtau_shape(sq, 1 - m, m - n));
        }
        return std::nullopt;
    }
    if (m >= 1 && n == 2 * m - 1) {
        const auto k = m;
        return hit("idtau12_k_2k-1", {k}, idtau_shape(e_prime_tau_run(2, k - 1), 2 - k, 2 * k - 1));
    }
    if (n >= 1 && m == 2 * n) {
        const auto k = n;
        return hit("idtau12_2k_k", {k}, idtau_shape(e_tau_run(2, k), 2 - 2 * k, k));
    }
    if (n >= 2 && m == 2 * n - 1) {
        const auto k = n;
        return hit("idtau12_2k-1_k", {k}, idtau_shape(e_tau_run(2, k), 3 - 2 * k, k));
    }
    if (n >= 1 && m == 2 * n + 1)
        return hit("idtau12_2k+1_k", {n}, idtau_shape(e_tau_run(2, n + 1), 1 - 2 * n, n + 1));
    if (n >= 1 && m == 2 * n + 2)
        return hit("idtau12_2k+2_k", {n},
                   idtau_shape(cat(e_tau_run(2, n + 1), cf::e_tau({2 * n + 2, n + 2})), -2 * n, n + 2));
    if (n <= 0 && m == 2 - n) {
        const auto k = -n;
        return hit("idtau12_k+2_-k", {k}, idtau_shape(e_prime_tau_run(2, k + 1), -k, 2 * k + 2));
    }
    if (m >= 1 && n >= 1 && cf::dominant({m, n}) && cf::in_q_sh({m, n}) && m != 2 * n - 1 && n != 2 * m - 1 &&
        n != 2 * m - 2) {
        const auto h = floor_div(m + 1, 2);
        auto sq = e_tau_run(2, h);
        for (auto j = h + 1; j <= n; ++j) sq = cat(sq, cf::e_tau({m, j}));
        return hit("idtau12_lambda", {m, n}, idtau_shape(sq, 2 - m, n));
    }
    if ((n >= 1 && m >= 2 * n + 3) || (n <= 0 && m + n >= 3)) {
        const auto h = floor_div(m - n, 2);
        auto sq = e_prime_tau_run(2, h);
        for (auto j = h + 1; j <= m - 1; ++j) sq = cat(sq, cf::e_prime_tau({j, m - n - 1}));
        sq = cat(sq, cf::e_tau({m, m - n}));
        return hit("idtau12_wide", {m, n}, idtau_shape(sq, 2 - m, m - n));
    }
    return std::nullopt;
}

std::optional<Match> match_o1prime_table(const Decomposed& d) {
    if (d.k != 0 || d.w != Fin::s121) return std::nullopt;
    const ConjClassId o2 = ConjClassId::o2md(1);
    Acc r(Mode::Twisted);
    r.add(ConjClassId::o1pd(), 1, 0);
    r.add(o2, 1, 3);
    r.add(o2, 2, 1);
    if (d.t == AlphaCoords{2, 1}) {
        r.add(ConjClassId::o1d(), 1, 2);
        return Match{"o1prime_table", {2, 1}, r.f};
    }
    if (d.t == AlphaCoords{1, -1}) {
        r.add(ConjClassId::o1d(), 1, 2);
        r.add(ConjClassId::o2md(3), 1, 1);
        return Match{"o1prime_table", {1, -1}, r.f};
    }
    if (d.t == AlphaCoords{-1, -1}) {
        // The tabulated table has u^3+2u on O_{2,delta}; only 2u^3+2u satisfies the index-character identity.
        r.add(o2, 1, 3);
        r.add(ConjClassId::o1d(), 2, 2);
        r.add(ConjClassId::o2md(2), 1, 3);
        r.add(ConjClassId::o2md(2), 1, 1);
        return Match{"o1prime_table", {-1, -1}, r.f};
    }
    return std::nullopt;
}

// ---- families where the value depends only on the class and the length ----

ClassPolynomial split_o1(int len) {
    Acc r(Mode::Split);
    r.add(ConjClassId::o1(), 1, 0);
    std::int64_t k, top;
    if (len % 4 == 3) {
        k = (len + 1) / 4;
        top = k;
    } else {
        k = (len + 3) / 4;
        top = k - 1;
        if (k - 1 >= 1) r.add(ConjClassId::o_lambda(k - 1, k - 1), 1, 1);
    }
    // top plays the role of k in the 4k-1 table.
    for (std::int64_t i = 1; i <= top - 1; ++i) {
        r.add(ConjClassId::o_lambda(i, i), top - i, 3);
        r.add(ConjClassId::o_lambda(i, i), 1, 1);
        r.add(ConjClassId::c(i), top - i, 2);
        r.add(ConjClassId::cp(i), top - i, 2);
        if (i >= 3) r.row(lambdas(cat(cf::e_set({i, i}), cf::e_prime_set({i, i}))), top - i, 3);
    }
    r.add(ConjClassId::o2(), top, 1);
    return r.f;
}

ClassPolynomial split_c(std::int64_t i, bool prime, int len) {
    Acc r(Mode::Split);
    const ConjClassId self = prime ? ConjClassId::cp(i) : ConjClassId::c(i);
    const int L = min_length(self);
    if (len <= 6 * i + 1) {
        r.add(self, 1, 0);
        if (!prime) {
            for (std::int64_t j = i / 2 + 1; j <= (len - 1) / 2 - i; ++j) r.add(ConjClassId::o_lambda(j, i), 1, 1);
        } else {
            for (std::int64_t j = 1; j <= (len - L) / 2; ++j) r.add(ConjClassId::o_lambda(i, i / 2 + j), 1, 1);
        }
        return r.f;
    }
    // len = 6i-1+4k (second table) or 6i+1+4k (third table)
    const bool third = (len - 6 * i - 1) % 4 == 0;
    const std::int64_t k = third ? (len - 6 * i - 1) / 4 : (len - 6 * i + 1) / 4;
    // base = 2i a1 + i a2 for C_i, i a1 + 2i a2 for C'_i
    const AlphaCoords base = prime ? AlphaCoords{i, 2 * i} : AlphaCoords{2 * i, i};
    const auto edge = prime ? cf::e_prime_set(base) : cf::e_set(base);
    r.add(ConjClassId::o_lambda(base.m, base.n), 1, 1);
    r.add(ConjClassId::o2(), k, 1);
    {
        auto cs = cat(cf::o_le(base), cf::o_le_prime(base));
        cs.erase(std::remove(cs.begin(), cs.end(), self), cs.end());
        r.row(cs, k, 2);
    }
    {
        auto q = cf::q_below(base);
        std::vector<AlphaCoords> rest;
        for (auto x : q)
            if (std::find(edge.begin(), edge.end(), x) == edge.end()) rest.push_back(x);
        r.row(lambdas(rest), k, 3);
        r.row(lambdas(edge), k, 3);
        r.row(lambdas(edge), 1, 1);
    }
    for (std::int64_t j = 1; j <= k - 1; ++j) {
        AlphaCoords c1 = prime ? AlphaCoords{i + j, 2 * i + j} : AlphaCoords{2 * i + j + 1, i + j};
        AlphaCoords c2 = prime ? AlphaCoords{i + j, 2 * i + j + 1} : AlphaCoords{2 * i + j, i + j};
        r.row({classify(make(c1.m, c1.n, Fin::s1), Mode::Split), classify(make(c2.m, c2.n, Fin::s2), Mode::Split)},
              k - j, 2);
        AlphaCoords lam = prime ? AlphaCoords{i + j, 2 * i + j} : AlphaCoords{2 * i + j, i + j};
        r.row(lambdas(cat(cf::e_set(lam), cf::e_prime_set(lam))), k - j, 3);
        r.add(ConjClassId::o_lambda(lam.m, lam.n), k - j, 3);
        r.add(ConjClassId::o_lambda(lam.m, lam.n), 1, 1);
    }
    r.add(self, k, 2);
    r.add(self, 1, 0);
    if (third) {
        AlphaCoords lam = prime ? AlphaCoords{i + k, 2 * i + k} : AlphaCoords{2 * i + k, i + k};
        r.add(ConjClassId::o_lambda(lam.m, lam.n), 1, 1);
    }
    return r.f;
}

// O_{i,tau} for i >= 1.
ClassPolynomial tau_pos(std::int64_t i, int len) {
    Acc r(Mode::SplitTau);
    const ConjClassId self = ConjClassId::o_tau(i);
    const int L = min_length(self);
    if (len <= 6 * i - 5) {
        r.add(self, 1, 0);
        r.row(lambda_taus(cf::e_tau({i / 2 + 1 + (len - L) / 2, i})), 1, 1);
        return r.f;
    }
    const bool third = (len - 6 * i + 1) % 4 == 0;
    const std::int64_t k = third ? (len - 6 * i + 1) / 4 : (len - 6 * i + 3) / 4;
    const std::int64_t K = third ? k + 1 : k;   // the coefficient multiplier
    const std::int64_t jmax = third ? k : k - 1;
    r.row(lambda_taus(e_tau_run(2, i - 1)), K, 3);
    r.row(lambda_taus(cf::e_tau({2 * i - 1, i})), K, 3);
    r.row(lambda_taus(cf::e_tau({2 * i - 1, i})), 1, 1);
    for (std::int64_t j = 1; j <= jmax; ++j) r.row(lambda_taus(cf::e_tau({2 * i - 1 + j, i + j})), K - j, 3);
    for (std::int64_t j = 2; j <= (third ? k - 1 : k - 2); ++j)
        r.row(lambda_taus(cf::e_prime_tau({2 * i + j, i + j})), third ? k - j : k - 1 - j, 3);
    for (std::int64_t j = 1; j <= k; ++j) {
        r.add(ConjClassId::o_lambdatau(2 * i - 1 + j, i + j), K - j, 3);
        r.add(ConjClassId::o_lambdatau(2 * i - 1 + j, i + j), 1, 1);
    }
    r.row(o_taus(2 - 2 * i, i - 1), K, 2);
    r.add(self, K, 2);
    r.add(self, 1, 0);
    for (std::int64_t j = 1; j <= jmax; ++j) {
        r.add(ConjClassId::o_tau(2 - 2 * i - j), K - j, 2);
        r.add(ConjClassId::o_tau(i + j), K - j, 2);
    }
    r.add(ConjClassId::o_idtau(), K, 1);
    r.add(ConjClassId::o_lambdatau(2 * i - 1, i), 1, 1);
    return r.f;
}

// O_{-i,tau} for i >= 0.
ClassPolynomial tau_neg(std::int64_t i, int len) {
    Acc r(Mode::SplitTau);
    const ConjClassId self = ConjClassId::o_tau(-i);
    const int L = min_length(self);
    if (len <= 6 * i + 3) {
        r.add(self, 1, 0);
        // upper index i/2+1+(len-L)/2; the tabulated floor((i+1)/2) drops one term for even i
        r.row(lambda_taus(cf::e_prime_tau({i + 1, i / 2 + 1 + (len - L) / 2})), 1, 1);
        return r.f;
    }
    const bool third = (len - 6 * i - 7) % 4 == 0;
    const std::int64_t k = third ? (len - 6 * i - 7) / 4 : (len - 6 * i - 5) / 4;
    const std::int64_t K = third ? k + 1 : k;
    const std::int64_t jmax = third ? k : k - 1;
    r.row(lambda_taus(e_prime_tau_run(2, i)), K, 3);
    r.row(lambda_taus(cf::e_prime_tau({i + 1, 2 * i + 1})), K, 3);
    r.row(lambda_taus(cf::e_prime_tau({i + 1, 2 * i + 1})), 1, 1);
    for (std::int64_t j = 1; j <= jmax; ++j)
        r.row(lambda_taus(cf::e_prime_tau({i + 1 + j, 2 * i + 1 + j})), K - j, 3);
    for (std::int64_t j = 2; j <= jmax; ++j) r.row(lambda_taus(cf::e_tau({i + 1 + j, 2 * i + 2 + j})), K - j, 3);
    for (std::int64_t j = 1; j <= k; ++j) {
        r.add(ConjClassId::o_lambdatau(i + 1 + j, 2 * i + 2 + j), K - j, 3);
        r.add(ConjClassId::o_lambdatau(i + 1 + j, 2 * i + 2 + j), 1, 1);
    }
    r.row(o_taus(1 - i, 2 * i + 2), K, 2);
    r.add(self, K, 2);
    r.add(self, 1, 0);
    for (std::int64_t j = 1; j <= jmax; ++j) {
        r.add(ConjClassId::o_tau(-i - j), K - j, 2);
        r.add(ConjClassId::o_tau(2 * i + 2 + j), K - j, 2);
    }
    r.add(ConjClassId::o_idtau(), K, 1);
    r.add(ConjClassId::o_lambdatau(i + 1, 2 * i + 2), 1, 1);
    return r.f;
}

ClassPolynomial twisted_o0(int len) {
    Acc r(Mode::Twisted);
    const std::int64_t k = len / 2;
    for (std::int64_t j = 1; j <= k - 1; ++j) r.add(ConjClassId::o2md(j), k - j, 2);
    r.add(ConjClassId::o1d(), k, 1);
    r.add(ConjClassId::o0d(), 1, 0);
    return r.f;
}

ClassPolynomial twisted_o1(int len) {
    Acc r(Mode::Twisted);
    const std::int64_t k = (len - 1) / 2;
    for (std::int64_t j = 1; j <= k; ++j) r.add(ConjClassId::o2md(j), 1, 1);
    r.add(ConjClassId::o1d(), 1, 0);
    return r.f;
}

ClassPolynomial twisted_o2m(std::int64_t m, int len) {
    Acc r(Mode::Twisted);
    const std::int64_t k = (len - 2 * m) / 2;
    for (std::int64_t j = 1; j <= k - 1; ++j) r.add(ConjClassId::o2md(m + j), k - j, 2);
    r.add(ConjClassId::o2md(m), k, 2);
    r.add(ConjClassId::o2md(m), 1, 0);
    for (std::int64_t j = 1; j <= m - 1; ++j) r.add(ConjClassId::o2md(m - j), k, 2);
    r.add(ConjClassId::o1d(), k, 1);
    return r.f;
}

std::optional<ClosedForm> by_orbit(const Element& a, Mode mode, const Matcher& match) {
    for (const Element& x : strong_orbit(a, mode)) {
        if (auto m = match(decompose(x))) return ClosedForm{std::move(m->poly), FamilyTag{m->family, m->params, x}};
    }
    return std::nullopt;
}

}  // namespace

std::vector<Element> strong_orbit(const Element& a, Mode mode) {
    const int len = length(a);
    std::unordered_set<Element, ElementHash> seen{a};
    std::deque<Element> todo{a};
    std::vector<Element> out;
    const Element moves[4] = {simple(0), simple(1), simple(2), tau()};
    while (!todo.empty()) {
        Element x = todo.front();
        todo.pop_front();
        out.push_back(x);
        for (const Element& g : moves) {
            Element y = twisted_conj(g, x, mode);
            if (length(y) == len && seen.insert(y).second) todo.push_back(y);
        }
    }
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

std::optional<ClosedForm> closed_form_tagged(const Element& a, Mode mode) {
    if (mode != Mode::Twisted && kappa(a) != (mode == Mode::Split ? 0 : 1)) return std::nullopt;
    const ConjClassId cls = classify(a, mode);
    const int len = length(a);
    auto plain = [&](const char* fam, std::vector<std::int64_t> p, ClassPolynomial f) {
        f.mode = mode;
        return std::optional<ClosedForm>(ClosedForm{std::move(f), FamilyTag{fam, std::move(p), a}});
    };
    if (len == min_length(cls)) {
        Acc r(mode);
        r.add(cls, 1, 0);
        return plain("minimal", {}, r.f);
    }
    switch (cls.kind) {
        case ClassKind::Id:
        case ClassKind::OLambda:
        case ClassKind::OLambdaTau: {
            Acc r(mode);
            r.add(cls, 1, 0);
            return plain("finite_class", {cls.a, cls.b}, r.f);
        }
        case ClassKind::O1: return plain("o1", {len}, split_o1(len));
        case ClassKind::C: return plain("c", {cls.a, len}, split_c(cls.a, false, len));
        case ClassKind::Cp: return plain("c_prime", {cls.a, len}, split_c(cls.a, true, len));
        case ClassKind::O2: return by_orbit(a, mode, match_o2);
        case ClassKind::OIdTau: return by_orbit(a, mode, match_idtau);
        case ClassKind::OiTau:
            if (cls.a >= 1) return plain("tau_pos", {cls.a, len}, tau_pos(cls.a, len));
            return plain("tau_neg", {-cls.a, len}, tau_neg(-cls.a, len));
        case ClassKind::O0d: return plain("delta0", {len}, twisted_o0(len));
        case ClassKind::O1d: return plain("delta1", {len}, twisted_o1(len));
        case ClassKind::O2md: return plain("delta2m", {cls.a, len}, twisted_o2m(cls.a, len));
        case ClassKind::O1pd: return by_orbit(a, mode, match_o1prime_table);
        case ClassKind::O3d: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<ClassPolynomial> closed_form(const Element& a, Mode mode) {
    auto r = closed_form_tagged(a, mode);
    if (!r) return std::nullopt;
    return std::move(r->poly);
}

bool covered(const Element& a, Mode mode) { return closed_form_tagged(a, mode).has_value(); }

}  // namespace hecke
