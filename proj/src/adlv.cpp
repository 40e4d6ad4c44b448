#include "hecke/adlv.hpp"

#include <algorithm>
#include <map>

namespace hecke {

namespace {

std::int64_t mod3(std::int64_t x) { return ((x % 3) + 3) % 3; }

int core_kappa(const SigmaClass& b) { return b.mirrored ? 2 : invariant_of_class(b.repr).kottwitz; }

bool straight(const ConjClassId& c) {
    return invariant_of_class(c).newton.pairing_2rho() == Rational(min_length(c));
}

// Split rank of J_b for PGL3, from the GL3 slope decomposition of a lift of b.
// An isoclinic block of slope r/s and multiplicity k contributes GL_{k/s} over a division algebra.
int pgl3_defect(const NewtonPoint& nu, int kap) {
    const Rational d1 = 2 * nu.m - nu.n;
    const Rational d2 = 2 * nu.n - nu.m;
    const Rational x3 = (Rational(kap) - d1 - 2 * d2) / 3;
    const Rational x2 = x3 + d2;
    const Rational x1 = x2 + d1;
    std::map<Rational, int> mult;
    for (const Rational& x : {x1, x2, x3}) ++mult[x];
    int rank = 0;
    for (const auto& [r, k] : mult) {
        if (k % r.denominator() != 0) throw std::logic_error("non-integral Newton polygon");
        rank += static_cast<int>(k / r.denominator());
    }
    return 3 - rank;
}

struct Core {
    Element x;
    Mode mode;
    bool kappa_ok;
};

Core core_query(Group g, const GroupElt& w, const SigmaClass& b) {
    if (b.group != g) throw PreconditionError("sigma class " + to_string(b) + " does not belong to " + group_name(g));
    if (g == Group::U3) return {w.w, Mode::Twisted, true};
    Element x = w.w;
    if (g == Group::D3X) x = multiply(x, tau());
    if (g == Group::GL3) {
        if (mod3(w.det) != kappa(x)) throw PreconditionError("GL3 determinant does not match the element's Omega part");
        if (w.det != b.det) return {x, Mode::Split, false};
    }
    const int k = kappa(x);
    if (k != core_kappa(b)) return {x, Mode::Split, false};
    if (k == 2) return {apply_delta(x), Mode::SplitTau, true};
    return {x, k == 0 ? Mode::Split : Mode::SplitTau, true};
}

}  // namespace

const char* group_name(Group g) {
    switch (g) {
        case Group::PGL3: return "pgl3";
        case Group::GL3: return "gl3";
        case Group::U3: return "u3";
        case Group::D3X: return "d3x";
    }
    return "?";
}

bool group_from_name(const std::string& s, Group& out) {
    for (Group g : {Group::PGL3, Group::GL3, Group::U3, Group::D3X}) {
        if (s == group_name(g)) {
            out = g;
            return true;
        }
    }
    return false;
}

std::string to_string(const SigmaClass& b) {
    std::string s = hecke::to_string(b.repr);
    if (b.mirrored) s = "delta(" + s + ")";
    if (b.group == Group::GL3) s += "@" + std::to_string(b.det);
    return s;
}

GroupElt group_elt(Group g, const Element& w) {
    GroupElt r{w, 0};
    if (g == Group::GL3) r.det = kappa(w);
    return r;
}

int defect(const SigmaClass& b) {
    // U3 has F-rank 1. The basic class has J_b = U3 and every nonbasic straight class has
    // a regular Newton point, so J_b is the rank-one minimal Levi: all defects vanish.
    if (b.group == Group::U3) return 0;
    // D3X classes are labelled by the PGL3 class of b*tau; only differences of defects enter
    // the dimension identity, so the transferred values are used unchanged.
    // A mirrored class has the same J_b as its core class.
    const InvariantF core = invariant_of_class(b.repr);
    return pgl3_defect(core.newton, core.kottwitz);
}

SigmaClass make_sigma_class(Group g, const ConjClassId& repr, bool mirrored, std::int64_t det) {
    const Mode m = mode_of(repr);
    if ((g == Group::U3) != (m == Mode::Twisted))
        throw PreconditionError("class " + hecke::to_string(repr) + " does not belong to " + group_name(g));
    if (mirrored && m != Mode::SplitTau) throw PreconditionError("only tau-coset classes can be mirrored");
    if (!straight(repr)) throw PreconditionError("class " + hecke::to_string(repr) + " is not straight");
    SigmaClass b;
    b.group = g;
    b.repr = repr;
    b.mirrored = mirrored;
    b.invariant = invariant_of_class(repr);
    const int ck = core_kappa(b);
    if (mirrored) {
        std::swap(b.invariant.newton.m, b.invariant.newton.n);
        b.invariant.kottwitz = 2;
    }
    if (g == Group::GL3) {
        if (mod3(det) != ck) throw PreconditionError("GL3 determinant does not match the class");
        b.det = det;
    }
    if (g == Group::D3X) b.invariant.kottwitz = static_cast<int>(mod3(ck - 1));
    b.defect = defect(b);
    return b;
}

std::vector<SigmaClass> sigma_classes(Group g, int newton_bound) {
    if (newton_bound < 0) throw PreconditionError("newton bound must be non-negative");
    std::vector<SigmaClass> out;
    auto scan = [&](Mode mode) {
        for (const ConjClassId& c : enumerate_classes(mode, newton_bound)) {
            if (!straight(c) || min_length(c) > newton_bound) continue;
            const std::int64_t k = invariant_of_class(c).kottwitz;
            out.push_back(make_sigma_class(g, c, false, k));
            if (mode == Mode::SplitTau) out.push_back(make_sigma_class(g, c, true, 2));
        }
    };
    if (g == Group::U3) {
        scan(Mode::Twisted);
    } else {
        scan(Mode::Split);
        scan(Mode::SplitTau);
    }
    std::stable_sort(out.begin(), out.end(), [](const SigmaClass& a, const SigmaClass& b) {
        auto key = [](const SigmaClass& s) {
            return std::make_tuple(s.invariant.newton.pairing_2rho(), s.invariant.kottwitz, s.mirrored, s.repr);
        };
        return key(a) < key(b);
    });
    return out;
}

SigmaClass basic_class(Group g, std::int64_t k) {
    switch (g) {
        case Group::U3: return make_sigma_class(g, ConjClassId::o0d());
        case Group::PGL3:
        case Group::GL3: {
            const std::int64_t r = mod3(k);
            return make_sigma_class(g, r == 0 ? ConjClassId::id() : ConjClassId::o_idtau(), r == 2, k);
        }
        case Group::D3X: {
            const std::int64_t r = mod3(k + 1);
            return make_sigma_class(g, r == 0 ? ConjClassId::id() : ConjClassId::o_idtau(), r == 2);
        }
    }
    throw PreconditionError("unknown group");
}

std::optional<SigmaClass> parse_sigma_class(Group g, const std::string& text) {
    std::string s = text;
    std::int64_t det = 0;
    bool has_det = false;
    if (auto at = s.find('@'); at != std::string::npos) {
        try {
            det = std::stoll(s.substr(at + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        has_det = true;
        s = s.substr(0, at);
    }
    try {
        if (s == "1" || s == "basic") return basic_class(g, has_det ? det : 0);
        if (s == "tau") return basic_class(g, has_det ? det : 1);
        if (s == "tau2" || s == "tau^2") return basic_class(g, has_det ? det : 2);
        bool mirrored = false;
        if (s.rfind("delta(", 0) == 0 && s.back() == ')') {
            mirrored = true;
            s = s.substr(6, s.size() - 7);
        }
        const ConjClassId c = parse_class_id(s);
        const std::int64_t ck = mirrored ? 2 : invariant_of_class(c).kottwitz;
        return make_sigma_class(g, c, mirrored, has_det ? det : ck);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

DimResult dimension_from(const ClassPolynomial& f, int len, const ConjClassId& b_repr) {
    const InvariantF target = invariant_of_class(b_repr);
    DimResult r;
    int best = -1;
    for (const auto& [cls, p] : f.entries) {
        if (!(invariant_of_class(cls) == target)) continue;
        const int deg = *p.degree();
        const int cand = len + min_length(cls) + deg;
        if (cand > best) {
            best = cand;
            r.witness_class = cls;
            r.degree = deg;
        }
    }
    if (best < 0) return r;
    const Rational twice = Rational(best) - 2 * target.newton.pairing_2rho();
    if (twice.denominator() != 1 || twice.numerator() % 2 != 0 || twice < Rational(0))
        throw std::logic_error("non-integral ADLV dimension");
    r.nonempty = true;
    r.dim = static_cast<int>(twice.numerator() / 2);
    return r;
}

std::pair<Element, Mode> core_element(Group g, const GroupElt& w, const SigmaClass& b, bool& kappa_ok) {
    const Core core = core_query(g, w, b);
    kappa_ok = core.kappa_ok;
    return {core.x, core.mode};
}

DimResult adlv(Group g, const GroupElt& w, const SigmaClass& b, Engine& eng) {
    const Core core = core_query(g, w, b);
    if (!core.kappa_ok) return {};
    return dimension_from(eng.class_polynomial(core.x, core.mode), length(w.w), b.repr);
}

BigInt rational_points(Group g, const GroupElt& w, const SigmaClass& b, const BigInt& q, Engine& eng) {
    if ((g != Group::PGL3 && g != Group::GL3) || !b.basic() || core_kappa(b) == 0)
        throw NotSuperbasic("rational points need a superbasic class of PGL3 or GL3, got " + to_string(b));
    if (q < 2) throw PreconditionError("q must be at least 2");
    const Core core = core_query(g, w, b);
    if (!core.kappa_ok) return 0;
    const UPoly f = eng.class_polynomial(core.x, core.mode).get(b.repr);
    return eval_point_count(f, length(w.w), 3).eval(q);
}

int ghkr_threshold(const SigmaClass& b, int offset) {
    const int pair = static_cast<int>(boost::rational_cast<std::int64_t>(b.invariant.newton.pairing_2rho()));
    // C_i has X_w(1) empty up to length 6i+1 = 2<nu,2rho>+1 while X_w(b) is not.
    return std::max(pair + offset, 2 * pair + 2);
}

bool ghkr_check(Group g, const GroupElt& w, const SigmaClass& b, int offset, Engine& eng) {
    if (b.basic()) throw PreconditionError("GHKR check needs a nonbasic class, got " + to_string(b));
    if (length(w.w) < ghkr_threshold(b, offset))
        throw PreconditionError("length " + std::to_string(length(w.w)) + " is below the GHKR threshold for " +
                                to_string(b));
    return ghkr_identity_holds(g, w, b, eng);
}

bool ghkr_identity_holds(Group g, const GroupElt& w, const SigmaClass& b, Engine& eng) {
    if (b.basic()) throw PreconditionError("GHKR check needs a nonbasic class, got " + to_string(b));
    const Rational pair = b.invariant.newton.pairing_2rho();
    const SigmaClass b0 = basic_class(g, g == Group::GL3 ? b.det : b.invariant.kottwitz);
    const DimResult r = adlv(g, w, b, eng);
    const DimResult r0 = adlv(g, w, b0, eng);
    if (r.nonempty != r0.nonempty) return false;
    if (!r.nonempty) return true;
    return Rational(2 * r.dim) == Rational(2 * r0.dim) - pair + (b0.defect - b.defect);
}

LeadingTable leading_table(AlphaCoords lam, Engine& eng) {
    if (!is_dominant(from_alpha(lam))) throw PreconditionError("leading table needs a dominant coweight");
    const Element w = multiply(fin(Fin::s121), translation(lam));
    const ClassPolynomial f = eng.class_polynomial(w, Mode::Split);
    LeadingTable t;
    t.n0 = f.get(ConjClassId::o2()).leading();
    for (const SigmaClass& b : sigma_classes(Group::PGL3, static_cast<int>(pairing_2rho(lam)))) {
        if (b.invariant.kottwitz != 0) continue;
        const DimResult r = adlv(Group::PGL3, w, b, eng);
        if (!r.nonempty) continue;
        t.rows.emplace_back(b, f.get(r.witness_class).leading());
    }
    return t;
}

bool grassmannian_bound_check(Coweight lam, Fin x, Fin y, const SigmaClass& b, Engine& eng) {
    if (!is_dominant(lam)) throw PreconditionError("grassmannian bound needs a dominant coweight");
    const Fin gens[2] = {Fin::s1, Fin::s2};
    const std::int64_t pairs[2] = {pair_a1(lam), pair_a2(lam)};
    for (int i = 0; i < 2; ++i)
        if (pairs[i] == 0 && fin_length(fin_mul(gens[i], y)) < fin_length(y))
            throw PreconditionError(std::string("y = ") + fin_name(y) + " is not a minimal coset representative");
    const Element tl = translation(lam);
    const Element lhs_w = multiply(multiply(fin(x), tl), fin(y));
    const Element rhs_w = multiply(fin(Fin::s121), tl);
    GroupElt lw = group_elt(b.group, lhs_w), rw = group_elt(b.group, rhs_w);
    if (b.group == Group::GL3 && mod3(b.det) == kappa(lhs_w)) lw.det = rw.det = b.det;
    const DimResult l = adlv(b.group, lw, b, eng);
    if (!l.nonempty) return true;
    const DimResult r = adlv(b.group, rw, b, eng);
    if (!r.nonempty) return false;
    return l.dim <= r.dim - fin_length(Fin::s121) + fin_length(x);
}

nlohmann::json to_json(Group g, const GroupElt& w, const SigmaClass& b, const DimResult& r) {
    nlohmann::json j{{"group", group_name(g)},
                     {"element", format_element(w.w)},
                     {"b", to_string(b)},
                     {"nonempty", r.nonempty}};
    if (g == Group::GL3) j["det"] = w.det;
    if (r.nonempty) {
        j["dim"] = r.dim;
        std::string wc = hecke::to_string(r.witness_class);
        if (b.mirrored) wc = "delta(" + wc + ")";
        j["witness_class"] = wc;
        j["degree"] = r.degree;
    } else {
        j["dim"] = nullptr;
        j["witness_class"] = nullptr;
        j["degree"] = nullptr;
    }
    return j;
}

}  // namespace hecke
