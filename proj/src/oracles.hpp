#pragma once

// Closed-form statements: ADLV dimensions and emptiness, tau-class
// point counts and leading coefficients. Independent of the Dimension=Degree computation in
// adlv.cpp: only classify() and min_length() are used, plus the critical-strip pattern for O'_{1,delta}.

#include "hecke/adlv.hpp"
#include "hecke/closedform.hpp"

#include <optional>
#include <vector>

namespace hecke::oracle {


struct Claim {
    enum Kind { None, Empty, Dim } kind = None;
    std::vector<Rational> dims;  // accepted values (more than one only where the statement splits on geometry)
    bool basic = false;          // basic statements assert nonemptiness as well

    static Claim none() { return {}; }
    static Claim empty() { return {Empty, {}, true}; }
    static Claim dim(Rational d, bool basic_stmt = false) { return {Dim, {d}, basic_stmt}; }
};

inline Rational half(std::int64_t x) { return Rational(x, 2); }

// Critical strip of O'_{1,delta}: f = O'_{1,delta} + u * sum_{j<=k} O_{2j,delta}, l = 2k+1.
inline bool critical_strip(const Element& w) {
    const int l = length(w);
    ClassPolynomial g;
    g.mode = Mode::Twisted;
    g.add(ConjClassId::o1pd(), UPoly::constant(1));
    for (int j = 1; j <= (l - 1) / 2; ++j) g.add(ConjClassId::o2md(j), UPoly::u());
    return class_polynomial(w, Mode::Twisted) == g;
}

// Split coset, b of Kottwitz point 0.
inline Claim split_claim(const ConjClassId& b, const Element& w) {
    const ConjClassId c = classify(w, Mode::Split);
    const std::int64_t l = length(w);
    const bool ci = c.kind == ClassKind::C || c.kind == ClassKind::Cp;
    const std::int64_t i = c.a;

    if (b.kind == ClassKind::Id) {
        switch (c.kind) {
            case ClassKind::Id: return Claim::dim(0, true);
            case ClassKind::O1: return Claim::dim(l == 1 ? Rational(1) : half(l + 3), true);
            case ClassKind::O2: return Claim::dim(half(l) + 1, true);
            case ClassKind::C:
            case ClassKind::Cp: return l >= 6 * i + 3 ? Claim::dim(half(l + 3), true) : Claim::empty();
            default: return Claim::empty();
        }
    }

    if (b.kind == ClassKind::OLambda) {
        const std::int64_t m0 = b.a, n0 = b.b;
        const std::int64_t t = 2 * (m0 + n0);
        if (n0 == 2 * m0 || m0 == 2 * n0) {
            // b <-> O_{i0(a1+2a2)} or its mirror
            const std::int64_t i0 = std::min(m0, n0);
            const std::int64_t t0 = 6 * i0;
            if (ci && l <= 6 * i + 1) return Claim::dim(half(l + 6 * i0 + 1) - t0);
            if (c.kind == ClassKind::O2) return Claim::dim(half(l + 6 * i0 + 2) - t0);
            if (c.kind == ClassKind::O1 || ci) return Claim::dim(half(l + 6 * i0 + 3) - t0);
            return Claim::none();
        }
        const std::int64_t L = t;  // translation classes have length <lambda,2rho>
        if (c == b) return Claim::dim(half(l + L) - t);
        if (c.kind == ClassKind::O1) {
            const bool on_diag = (l - 1) % 4 == 0 && m0 == n0 && m0 == (l - 1) / 4;
            return Claim::dim(half(l + L + (on_diag ? 1 : 3)) - t);
        }
        if (ci) return Claim::dim(half(l + L + (l <= 6 * i + 1 ? 1 : 3)) - t);
        if (c.kind == ClassKind::O2) return Claim::dim(half(l + L + 2) - t);
        return Claim::none();
    }

    if (b.kind == ClassKind::C || b.kind == ClassKind::Cp) {
        const std::int64_t i0 = b.a;
        const std::int64_t L = min_length(b);
        const std::int64_t t = 3 * i0;
        if (ci && l <= 6 * i + 1) return Claim::dim(half(l + L) - t);
        if (c.kind == ClassKind::O2) return Claim::dim(half(l + L + 1) - t);
        if (c.kind == ClassKind::O1 || ci) return Claim::dim(half(l + L + 2) - t);
        return Claim::none();
    }
    return Claim::none();
}

// tau coset, b of Kottwitz point 1.
inline Claim tau_claim(const ConjClassId& b, const Element& w) {
    const ConjClassId c = classify(w, Mode::SplitTau);
    const std::int64_t l = length(w);
    const bool pos = c.kind == ClassKind::OiTau && c.a >= 1;  // O_{i,tau}, i >= 1
    const bool neg = c.kind == ClassKind::OiTau && c.a <= 0;  // O_{1-i,tau}, i >= 1
    const std::int64_t i = pos ? c.a : 1 - c.a;
    const bool idt = c.kind == ClassKind::OIdTau;

    if (b.kind == ClassKind::OIdTau) {
        if (idt) return Claim::dim(half(l), true);
        if (pos) return l >= 6 * i - 1 ? Claim::dim(half(l + 1), true) : Claim::empty();
        if (neg) return l >= 6 * i + 1 ? Claim::dim(half(l + 1), true) : Claim::empty();
        return Claim::empty();
    }

    const Rational N = invariant_of_class(b).newton.pairing_2rho();
    auto three = [&](std::int64_t L, bool low, Rational nu) -> Claim {
        if (low) return Claim::dim(half(l + L) - nu);
        if (idt) return Claim::dim(half(l + L + 1) - nu);
        return Claim::dim(half(l + L + 2) - nu);
    };

    if (b.kind == ClassKind::OLambdaTau) {
        const std::int64_t m0 = b.a, n0 = b.b;
        if (n0 == 2 * m0) {
            // b <-> O_{i0(a1+2a2),tau}: l0 = <(i0-1/3)(a1+2a2),2rho>
            const std::int64_t i0 = m0;
            const Rational l0 = Rational(6 * i0) - 2;
            const std::int64_t L = min_length(ConjClassId::o_tau(2 * i0));
            if (!(pos || neg || idt)) return Claim::none();
            return three(L, pos && l <= 6 * i - 3, l0);
        }
        if ((m0 + 1) % 2 == 0 && m0 == 2 * n0 - 1) {
            // b <-> O_{(2i0-1)a1+i0 a2,tau}: l1 = <(i0-2/3)(2a1+a2),2rho>
            const std::int64_t i0 = n0;
            const Rational l1 = Rational(6 * i0) - 4;
            const std::int64_t L = min_length(ConjClassId::o_tau(2 * (1 - i0)));
            if (!(pos || neg || idt)) return Claim::none();
            return three(L, neg && l <= 6 * i - 1, l1);
        }
        const std::int64_t L = min_length(b);
        if (c == b) return Claim::dim(Rational(l) - N);
        if (idt) return Claim::dim(half(l + L + 2) - N);
        if (pos || neg) return Claim::dim(half(l + L + (l <= 6 * i - 3 ? 1 : 3)) - N);
        return Claim::none();
    }

    if (b.kind == ClassKind::OiTau) {
        const std::int64_t L = min_length(b);
        if (!(pos || neg || idt)) return Claim::none();
        if (b.a >= 1) {
            const Rational l2 = Rational(3 * b.a) - 2;  // <(i0/2-1/3)(a1+2a2),2rho>
            return three(L, pos && l <= 6 * i - 3, l2);
        }
        const std::int64_t i0 = 1 - b.a;
        const Rational l3 = Rational(3 * i0) - 1;  // <(i0/2-1/6)(2a1+a2),2rho>
        return three(L, neg && l <= 6 * i - 1, l3);
    }
    return Claim::none();
}

inline Claim u3_claim(const ConjClassId& b, const Element& w) {
    const ConjClassId c = classify(w, Mode::Twisted);
    const std::int64_t l = length(w);
    const bool minimal = l == min_length(c);

    if (b.kind == ClassKind::O0d) {
        if (c.kind == ClassKind::O2md && minimal) return Claim::empty();
        switch (c.kind) {
            case ClassKind::O0d: return Claim::dim(l == 0 ? Rational(0) : half(l + 2), true);
            case ClassKind::O1d: return Claim::dim(half(l + 1), true);
            case ClassKind::O1pd: return Claim::dim(critical_strip(w) ? half(l + 1) : half(l + 3), true);
            case ClassKind::O2md: return Claim::dim(half(l + 2), true);
            case ClassKind::O3d: return Claim::dim(half(l + 3), true);
            default: return Claim::none();
        }
    }

    if (b.kind == ClassKind::O2md) {
        const std::int64_t m0 = b.a;
        if (c == b && l == 2 * m0) return Claim::dim(0);
        if (c.kind == ClassKind::O1d) return Claim::dim(half(l + 1) - m0);
        if ((c.kind == ClassKind::O1pd || c.kind == ClassKind::O3d) && l == 2 * m0 + 1)
            return Claim::dim(half(l + 1) - m0);
        if (c.kind == ClassKind::O1pd) return Claim::dim((critical_strip(w) ? half(l + 1) : half(l + 3)) - m0);
        if (c.kind == ClassKind::O0d || c.kind == ClassKind::O2md) return Claim::dim(half(l + 2) - m0);
        if (c.kind == ClassKind::O3d && l > 2 * m0 + 1) return Claim::dim(half(l + 3) - m0);
        return Claim::none();
    }
    return Claim::none();
}

// Claim for a PGL3 or U3 sigma class; kappa 2 classes are read through the diagram flip.
inline Claim claim(const SigmaClass& b, const Element& w) {
    if (b.group == Group::U3) return u3_claim(b.repr, w);
    const int k = kappa(w);
    const int bk = b.mirrored ? 2 : invariant_of_class(b.repr).kottwitz;
    if (k != bk) return Claim::empty();
    if (k == 0) return split_claim(b.repr, w);
    return tau_claim(b.repr, k == 2 ? apply_delta(w) : w);
}

// Point count of the tau class, as the closed polynomial in q.
inline QPoly tau_points(const Element& w) {
    if (kappa(w) != 1) return QPoly{};
    const ConjClassId c = classify(w, Mode::SplitTau);
    const std::int64_t l = length(w);
    auto ceil4 = [](std::int64_t x) { return x >= 0 ? (x + 3) / 4 : -((-x) / 4); };
    // 3 c q^e (q - 1)
    auto shape = [](std::int64_t c, std::int64_t e) {
        std::vector<BigInt> v(static_cast<std::size_t>(e + 2));
        v[e] = -3 * BigInt(c);
        v[e + 1] = 3 * BigInt(c);
        return QPoly(std::move(v));
    };
    if (c.kind == ClassKind::OIdTau) {
        std::vector<BigInt> v(static_cast<std::size_t>(l / 2 + 1));
        v[l / 2] = 3;
        return QPoly(std::move(v));
    }
    if (c.kind != ClassKind::OiTau) return QPoly{};
    if (c.a >= 1) {
        const std::int64_t i = c.a;
        if (l < 6 * i - 1) return QPoly{};
        return shape(ceil4(l - 6 * i + 3), (l - 1) / 2);
    }
    const std::int64_t i = 1 - c.a;
    if (l < 6 * i + 1) return QPoly{};
    return shape(ceil4(l - 6 * i + 1), (l - 1) / 2);
}

// Leading coefficients of f_{w0 t^lam, O_b}, lam = i0*dir + k0(a1+a2) with dir = (1,2), or
// (2,1) when mirror is set; i0 = 0 is the symmetric family. Offsets are N0 - L.
// tabulated: the row as stated. corrected: C_i (C'_i when mirrored) counted from 2*i0.
struct LeadClaim {
    std::optional<std::int64_t> tabulated, corrected;
};

inline LeadClaim lead_claim(std::int64_t i0, bool mirror, const ConjClassId& b) {
    ClassKind kind = b.kind;
    std::int64_t m = b.a, n = b.b;
    if (mirror) {
        if (kind == ClassKind::C) kind = ClassKind::Cp;
        else if (kind == ClassKind::Cp) kind = ClassKind::C;
        else std::swap(m, n);
    }
    // O_{k a1 + 2k a2} and its mirror are read as C_{2k} and C'_{2k}.
    std::int64_t idx = m;
    if (kind == ClassKind::OLambda && n == 2 * m) kind = ClassKind::C, idx = 2 * m;
    else if (kind == ClassKind::OLambda && m == 2 * n) kind = ClassKind::Cp, idx = 2 * n;
    auto in_row = [&](AlphaCoords top) {
        if (AlphaCoords{m, n} == top) return true;
        for (auto x : cf::e_set(top)) if (x == AlphaCoords{m, n}) return true;
        for (auto x : cf::e_prime_set(top)) if (x == AlphaCoords{m, n}) return true;
        return false;
    };
    LeadClaim r;
    if (i0 == 0) {
        if (kind == ClassKind::C || kind == ClassKind::Cp) r.tabulated = idx;
        else if (kind == ClassKind::OLambda)
            for (std::int64_t i = 1; i <= m + n && !r.tabulated; ++i)
                if (in_row({i, i})) r.tabulated = i;
        r.corrected = r.tabulated;
        return r;
    }
    if (kind == ClassKind::Cp) {
        r.tabulated = r.corrected = std::max<std::int64_t>(0, idx - i0);
    } else if (kind == ClassKind::C) {
        r.tabulated = idx == 2 * i0 ? 0 : std::max<std::int64_t>(0, idx - i0);
        r.corrected = std::max<std::int64_t>(0, idx - 2 * i0);
    } else if (kind == ClassKind::OLambda) {
        for (std::int64_t j = 1; j <= m + n && !r.tabulated; ++j)
            if (in_row({i0 + j, 2 * i0 + j})) r.tabulated = j;
        r.corrected = r.tabulated;
    }
    return r;
}

}  // namespace hecke::oracle
