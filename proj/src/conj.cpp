#include "hecke/conj.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace hecke {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

ConjClassId classify_split(const Decomposed& d) {
    const std::int64_t m = d.t.m, n = d.t.n;
    switch (d.w) {
        case Fin::e: {
            if (m == 0 && n == 0) return ConjClassId::id();
            AlphaCoords dom = to_alpha(dominant(from_alpha(d.t)));
            return ConjClassId::o_lambda(dom.m, dom.n);
        }
        case Fin::s12:
        case Fin::s21: return ConjClassId::o2();
        case Fin::s1:
            if (n == 0) return ConjClassId::o1();
            return n > 0 ? ConjClassId::c(n) : ConjClassId::cp(-n);
        case Fin::s2:
            if (m == 0) return ConjClassId::o1();
            return m < 0 ? ConjClassId::c(-m) : ConjClassId::cp(m);
        case Fin::s121:
            if (m == n) return ConjClassId::o1();
            return m > n ? ConjClassId::c(m - n) : ConjClassId::cp(n - m);
    }
    throw std::logic_error("unreachable");
}

ConjClassId classify_tau(const Decomposed& d, const Element& a) {
    const std::int64_t m = d.t.m, n = d.t.n;
    switch (d.w) {
        case Fin::e:
        case Fin::s12: return ConjClassId::o_idtau();
        case Fin::s121: return ConjClassId::o_tau(n);
        case Fin::s2: return ConjClassId::o_tau(m - n + 1);
        case Fin::s1: return ConjClassId::o_tau(1 - m);
        case Fin::s21: {
            // a is the translation t^mu; index by the dominant mu
            Coweight mu = dominant(a.lam);
            return ConjClassId::o_lambdatau((2 * mu.p + mu.q + 1) / 3, (mu.p + 2 * mu.q + 2) / 3);
        }
    }
    throw std::logic_error("unreachable");
}

ConjClassId classify_s21_twisted(std::int64_t a, std::int64_t b) {
    if (b % 2 == 0) {
        std::int64_t k = b / 2;
        if (a == k) return ConjClassId::o0d();
        return ConjClassId::o2md(2 * std::abs(a - k));
    }
    std::int64_t k = floor_div(b - 1, 2);
    if (a <= k) return ConjClassId::o2md(2 * (k - a) + 1);
    return ConjClassId::o2md(2 * (a - k) - 1);
}

ConjClassId classify_twisted(const Element& a) {
    int k = kappa(a);
    Element t = tau_pow(k);
    Decomposed d = decompose(multiply(multiply(t, a), t));
    const std::int64_t m = d.t.m, n = d.t.n;
    switch (d.w) {
        case Fin::e: {
            std::int64_t s = m + n;
            if (s == 0) return ConjClassId::o0d();
            return ConjClassId::o2md(std::abs(s));
        }
        case Fin::s1:
        case Fin::s2: return ConjClassId::o1d();
        case Fin::s121:
            if (m % 2 == 0 && n % 2 == 0) return ConjClassId::o3d();
            return ConjClassId::o1pd();
        case Fin::s21: return classify_s21_twisted(m, n);
        case Fin::s12: return classify_s21_twisted(n, m);
    }
    throw std::logic_error("unreachable");
}

// Least (by order_key) element of W_a with the given length in the given twisted class.
Element scan_twisted_member(const ConjClassId& c, int len) {
    const std::int64_t r = len + 3;
    bool found = false;
    Element best;
    for (std::int64_t m = -r; m <= r; ++m)
        for (std::int64_t n = -r; n <= r; ++n)
            for (Fin w : kAllFin) {
                Element e = make(m, n, w, 0);
                if (length(e) != len || classify_twisted(e) != c) continue;
                if (!found || element_less(e, best)) {
                    best = e;
                    found = true;
                }
            }
    if (!found) throw std::logic_error("no minimal member found for " + to_string(c));
    return best;
}

Element least_twisted_member(const ConjClassId& c, int len) {
    static std::mutex mu;
    static std::map<ConjClassId, Element> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(c);
        if (it != cache.end()) return it->second;
    }
    Element e = scan_twisted_member(c, len);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(c, e);
    return e;
}

NewtonPoint to_newton(Coweight lam, std::int64_t n) {
    Coweight d = dominant(lam);
    return {Rational(2 * d.p + d.q, 3 * n), Rational(d.p + 2 * d.q, 3 * n)};
}

}  // namespace

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Split: return "split";
        case Mode::SplitTau: return "split_tau";
        case Mode::Twisted: return "twisted";
    }
    return "?";
}

bool mode_from_name(const std::string& s, Mode& out) {
    if (s == "split") out = Mode::Split;
    else if (s == "split_tau" || s == "tau") out = Mode::SplitTau;
    else if (s == "twisted") out = Mode::Twisted;
    else return false;
    return true;
}

Mode mode_of(const ConjClassId& c) {
    switch (c.kind) {
        case ClassKind::Id:
        case ClassKind::O1:
        case ClassKind::O2:
        case ClassKind::OLambda:
        case ClassKind::C:
        case ClassKind::Cp: return Mode::Split;
        case ClassKind::OIdTau:
        case ClassKind::OLambdaTau:
        case ClassKind::OiTau: return Mode::SplitTau;
        default: return Mode::Twisted;
    }
}

std::string to_string(const ConjClassId& c) {
    std::ostringstream os;
    switch (c.kind) {
        case ClassKind::Id: return "Id";
        case ClassKind::O1: return "O1";
        case ClassKind::O2: return "O2";
        case ClassKind::OLambda: os << "O_lam[" << c.a << ',' << c.b << ']'; break;
        case ClassKind::C: os << "C[" << c.a << ']'; break;
        case ClassKind::Cp: os << "Cp[" << c.a << ']'; break;
        case ClassKind::OIdTau: return "O_idtau";
        case ClassKind::OLambdaTau: os << "O_lamtau[" << c.a << ',' << c.b << ']'; break;
        case ClassKind::OiTau: os << "O_tau[" << c.a << ']'; break;
        case ClassKind::O0d: return "O0d";
        case ClassKind::O1d: return "O1d";
        case ClassKind::O1pd: return "O1pd";
        case ClassKind::O3d: return "O3d";
        case ClassKind::O2md: os << "O2md[" << c.a << ']'; break;
    }
    return os.str();
}

ConjClassId parse_class_id(const std::string& s) {
    static const std::pair<const char*, ConjClassId> plain[] = {
        {"Id", ConjClassId::id()},     {"O1", ConjClassId::o1()},   {"O2", ConjClassId::o2()},
        {"O_idtau", ConjClassId::o_idtau()}, {"O0d", ConjClassId::o0d()}, {"O1d", ConjClassId::o1d()},
        {"O1pd", ConjClassId::o1pd()}, {"O3d", ConjClassId::o3d()},
    };
    for (const auto& [name, id] : plain)
        if (s == name) return id;
    auto fail = [&]() -> ConjClassId { throw ParseError("malformed class id: '" + s + "'"); };
    std::size_t open = s.find('[');
    if (open == std::string::npos || s.back() != ']') return fail();
    std::string head = s.substr(0, open);
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::int64_t> nums;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        char* end = nullptr;
        long long v = std::strtoll(part.c_str(), &end, 10);
        if (part.empty() || *end != '\0') return fail();
        nums.push_back(v);
    }
    if (nums.size() == 2 && head == "O_lam") return ConjClassId::o_lambda(nums[0], nums[1]);
    if (nums.size() == 2 && head == "O_lamtau") return ConjClassId::o_lambdatau(nums[0], nums[1]);
    if (nums.size() == 1 && head == "C") return ConjClassId::c(nums[0]);
    if (nums.size() == 1 && head == "Cp") return ConjClassId::cp(nums[0]);
    if (nums.size() == 1 && head == "O_tau") return ConjClassId::o_tau(nums[0]);
    if (nums.size() == 1 && head == "O2md") return ConjClassId::o2md(nums[0]);
    return fail();
}

std::string to_string(const NewtonPoint& nu) {
    auto r = [](const Rational& x) {
        std::ostringstream os;
        os << x.numerator();
        if (x.denominator() != 1) os << '/' << x.denominator();
        return os.str();
    };
    return "[" + r(nu.m) + "," + r(nu.n) + "]";
}

void check_mode(const Element& a, Mode mode) {
    int k = kappa(a);
    if (mode == Mode::Split && k != 0)
        throw ModeMismatch("split mode needs an element of W_a, got " + format_element(a));
    if (mode == Mode::SplitTau && k != 1)
        throw ModeMismatch("split_tau mode needs an element of W_a tau, got " + format_element(a));
}

ConjClassId classify(const Element& a, Mode mode) {
    check_mode(a, mode);
    switch (mode) {
        case Mode::Split: return classify_split(decompose(a));
        case Mode::SplitTau: return classify_tau(decompose(a), a);
        case Mode::Twisted: return classify_twisted(a);
    }
    throw std::logic_error("unreachable");
}

Element canonical_rep(const ConjClassId& c) {
    switch (c.kind) {
        case ClassKind::Id:
        case ClassKind::O0d: return identity();
        case ClassKind::O1:
        case ClassKind::O1d: return fin(Fin::s1);
        case ClassKind::O2: return fin(Fin::s12);
        case ClassKind::OLambda: return make(c.a, c.b, Fin::e);
        case ClassKind::C: return make(floor_div(c.a, 2) + 1, c.a, Fin::s1);
        case ClassKind::Cp: return make(c.a, floor_div(c.a, 2) + 1, Fin::s2);
        case ClassKind::OIdTau: return tau();
        case ClassKind::OLambdaTau: return make(c.a, c.b, Fin::s21, 1);
        case ClassKind::OiTau: return make(floor_div(c.a, 2) + 1, c.a, Fin::s121, 1);
        case ClassKind::O1pd: return simple(0);
        case ClassKind::O3d: return least_twisted_member(c, 3);
        case ClassKind::O2md: return least_twisted_member(c, static_cast<int>(2 * c.a));
    }
    throw std::logic_error("unreachable");
}

int min_length(const ConjClassId& c) {
    switch (c.kind) {
        case ClassKind::Id:
        case ClassKind::OIdTau:
        case ClassKind::O0d: return 0;
        case ClassKind::O1:
        case ClassKind::O1d:
        case ClassKind::O1pd: return 1;
        case ClassKind::O2: return 2;
        case ClassKind::O3d: return 3;
        case ClassKind::OLambda: return static_cast<int>(2 * (c.a + c.b));
        case ClassKind::C:
        case ClassKind::Cp: return static_cast<int>(c.a % 2 != 0 ? 3 * c.a : 3 * c.a + 1);
        case ClassKind::O2md: return static_cast<int>(2 * c.a);
        case ClassKind::OLambdaTau:
        case ClassKind::OiTau: return length(canonical_rep(c));
    }
    throw std::logic_error("unreachable");
}

Element mode_delta(const Element& a, Mode mode) { return mode == Mode::Twisted ? apply_delta(a) : a; }

Element twisted_conj(const Element& g, const Element& a, Mode mode) {
    return multiply(multiply(g, a), invert(mode_delta(g, mode)));
}

NewtonPoint newton_point(const Element& a, Mode mode) {
    Element x = identity();
    for (int n = 1; n <= 12; ++n) {
        x = multiply(x, (mode == Mode::Twisted && n % 2 == 0) ? apply_delta(a) : a);
        if (x.w == Fin::e && (mode != Mode::Twisted || n % 2 == 0)) return to_newton(x.lam, n);
    }
    throw std::logic_error("newton point: no period <= 12 for " + format_element(a));
}

int kottwitz(const Element& a, Mode mode) { return mode == Mode::Twisted ? 0 : kappa(a); }

InvariantF invariant_of_class(const ConjClassId& c) {
    Mode mode = mode_of(c);
    Element rep = canonical_rep(c);
    return {newton_point(rep, mode), kottwitz(rep, mode), mode == Mode::Twisted};
}

std::vector<ConjClassId> enumerate_classes(Mode mode, int max_min_length) {
    std::vector<ConjClassId> out;
    const std::int64_t L = max_min_length;
    auto keep = [&](const ConjClassId& c) {
        if (min_length(c) <= L) out.push_back(c);
    };
    switch (mode) {
        case Mode::Split:
            keep(ConjClassId::id());
            keep(ConjClassId::o1());
            keep(ConjClassId::o2());
            for (std::int64_t m = 0; m <= L; ++m)
                for (std::int64_t n = 0; n <= L; ++n)
                    if ((m || n) && 2 * m >= n && 2 * n >= m) keep(ConjClassId::o_lambda(m, n));
            for (std::int64_t i = 1; 3 * i <= L; ++i) {
                keep(ConjClassId::c(i));
                keep(ConjClassId::cp(i));
            }
            break;
        case Mode::SplitTau:
            keep(ConjClassId::o_idtau());
            for (std::int64_t p = 0; p <= L; ++p)
                for (std::int64_t q = 0; q <= L; ++q)
                    if (((p - q) % 3 + 3) % 3 == 1)
                        keep(ConjClassId::o_lambdatau((2 * p + q + 1) / 3, (p + 2 * q + 2) / 3));
            for (std::int64_t i = -L - 2; i <= L + 2; ++i) keep(ConjClassId::o_tau(i));
            break;
        case Mode::Twisted:
            keep(ConjClassId::o0d());
            keep(ConjClassId::o1d());
            keep(ConjClassId::o1pd());
            keep(ConjClassId::o3d());
            for (std::int64_t m = 1; 2 * m <= L; ++m) keep(ConjClassId::o2md(m));
            break;
    }
    std::vector<std::pair<int, ConjClassId>> keyed;
    for (const auto& c : out) keyed.emplace_back(min_length(c), c);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = keyed[i].second;
    return out;
}

std::vector<Element> elements_up_to(Mode mode, int max_len) {
    std::vector<int> cosets;
    if (mode == Mode::Split) cosets = {0};
    else if (mode == Mode::SplitTau) cosets = {1};
    else cosets = {0, 1, 2};
    const std::int64_t r = max_len + 3;
    std::vector<Element> out;
    for (int k : cosets)
        for (std::int64_t m = -r; m <= r; ++m)
            for (std::int64_t n = -r; n <= r; ++n)
                for (Fin w : kAllFin) {
                    Element e = make(m, n, w, k);
                    if (length(e) <= max_len) out.push_back(e);
                }
    std::sort(out.begin(), out.end(), element_less);
    return out;
}

}  // namespace hecke
