#include "hecke/engine.hpp"

#include "hecke/io.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace hecke {

UPoly ClassPolynomial::get(const ConjClassId& c) const {
    auto it = entries.find(c);
    return it == entries.end() ? UPoly{} : it->second;
}

void ClassPolynomial::add(const ConjClassId& c, const UPoly& f) {
    if (f.is_zero()) return;
    UPoly sum = get(c) + f;
    if (sum.is_zero())
        entries.erase(c);
    else
        entries[c] = std::move(sum);
}

ClassPolynomial& ClassPolynomial::operator+=(const ClassPolynomial& o) {
    for (const auto& [c, f] : o.entries) add(c, f);
    return *this;
}

ClassPolynomial ClassPolynomial::times_u() const {
    ClassPolynomial r;
    r.mode = mode;
    for (const auto& [c, f] : entries) r.entries[c] = f.shift(1);
    return r;
}

std::string ClassPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, f] : entries) {
        if (!first) os << ", ";
        first = false;
        os << hecke::to_string(c) << ": " << f.to_string();
    }
    return "{" + os.str() + "}";
}

Element omega_canonical(const Element& a, Mode mode) {
    Element best = a;
    Element t = tau();
    Element x = a;
    for (int j = 1; j < 3; ++j) {
        x = twisted_conj(t, x, mode);
        if (element_less(x, best)) best = x;
    }
    return best;
}

std::string memo_key(const Element& a, Mode mode) {
    return format_element(omega_canonical(a, mode)) + "|" + mode_name(mode);
}

ReductionStep Engine::find_reduction(const Element& a, Mode mode) const {
    const int len = length(a);
    std::unordered_map<Element, Element, ElementHash> parent;
    parent.emplace(a, a);
    std::vector<Element> layer{a};
    std::mt19937_64 rng(seed_ ? (*seed_ ^ ElementHash{}(a)) : 0);
    int gens[3] = {0, 1, 2};
    const Element t = tau();

    auto path_to = [&](Element x) {
        std::vector<Element> p{x};
        while (!(x == a)) {
            x = parent.at(x);
            p.push_back(x);
        }
        std::reverse(p.begin(), p.end());
        return p;
    };

    while (!layer.empty()) {
        if (seed_)
            std::shuffle(layer.begin(), layer.end(), rng);
        else
            std::sort(layer.begin(), layer.end(), element_less);
        for (const Element& x : layer) {
            if (seed_) std::shuffle(std::begin(gens), std::end(gens), rng);
            for (int i : gens) {
                if (length(twisted_conj(simple(i), x, mode)) < len) {
                    ReductionStep step;
                    step.minimal = false;
                    step.witness = x;
                    step.gen = i;
                    step.path = path_to(x);
                    return step;
                }
            }
        }
        std::vector<Element> next;
        for (const Element& x : layer) {
            Element cand[4] = {twisted_conj(simple(0), x, mode), twisted_conj(simple(1), x, mode),
                               twisted_conj(simple(2), x, mode), twisted_conj(t, x, mode)};
            for (const Element& y : cand) {
                if (length(y) != len || parent.count(y)) continue;
                parent.emplace(y, x);
                next.push_back(y);
            }
        }
        layer = std::move(next);
    }
    return {};
}

bool Engine::is_minimal_in_class(const Element& a, Mode mode) const { return find_reduction(a, mode).minimal; }

std::optional<ClassPolynomial> Engine::lookup(const Element& key, Mode mode) const {
    std::shared_lock lock(mu_);
    const Memo& m = memo_[static_cast<int>(mode)];
    auto it = m.find(key);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

void Engine::store(const Element& key, Mode mode, const ClassPolynomial& f) {
    std::unique_lock lock(mu_);
    memo_[static_cast<int>(mode)].emplace(key, f);
}

ClassPolynomial Engine::class_polynomial(const Element& a, Mode mode) {
    check_mode(a, mode);
    return compute(a, mode, length(a));
}

// budget bounds the recursion depth: every step lowers the length.
ClassPolynomial Engine::compute(const Element& a, Mode mode, int budget) {
    const Element key = omega_canonical(a, mode);
    if (auto hit = lookup(key, mode)) return *hit;
    if (budget < 0) throw std::runtime_error("class polynomial recursion exceeded the length bound");

    ReductionStep step = find_reduction(key, mode);
    ClassPolynomial f;
    f.mode = mode;
    if (step.minimal) {
        f.add(classify(key, mode), UPoly::constant(1));
    } else {
        const Element s = simple(step.gen);
        const Element y1 = multiply(s, step.witness);
        const Element y2 = twisted_conj(s, step.witness, mode);
        f = compute(y1, mode, budget - 1).times_u();
        f += compute(y2, mode, budget - 1);
        f.mode = mode;
    }
    store(key, mode, f);
    return f;
}

std::size_t Engine::memo_size() const {
    std::shared_lock lock(mu_);
    return memo_[0].size() + memo_[1].size() + memo_[2].size();
}

void Engine::clear() {
    std::unique_lock lock(mu_);
    for (auto& m : memo_) m.clear();
}

void Engine::save(const std::string& path) const {
    std::vector<std::pair<std::string, const ClassPolynomial*>> rows;
    std::shared_lock lock(mu_);
    for (int mi = 0; mi < 3; ++mi)
        for (const auto& [e, f] : memo_[mi])
            rows.emplace_back(format_element(e) + "|" + mode_name(static_cast<Mode>(mi)), &f);
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::ofstream out(path);
    if (!out) throw CacheError("cannot write cache file " + path);
    out << nlohmann::json{{"format", "hecke-memo"}, {"version", 1}}.dump() << '\n';
    for (const auto& [key, f] : rows) out << nlohmann::json{{"key", key}, {"poly", to_json(*f)}}.dump() << '\n';
}

void Engine::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CacheError("cannot read cache file " + path);
    std::string line;
    if (!std::getline(in, line)) throw CacheError("empty cache file " + path);
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CacheError("bad cache header in " + path + ": " + e.what());
    }
    if (!header.is_object() || header.value("format", "") != "hecke-memo")
        throw CacheError("not a hecke memo file: " + path);
    if (header.value("version", -1) != 1)
        throw CacheError("unsupported cache version " + header.value("version", nlohmann::json(-1)).dump() + " in " + path);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            nlohmann::json rec = nlohmann::json::parse(line);
            std::string key = rec.at("key").get<std::string>();
            std::size_t bar = key.find('|');
            if (bar == std::string::npos) throw ParseError("key without mode");
            Mode mode;
            if (!mode_from_name(key.substr(bar + 1), mode)) throw ParseError("unknown mode in key");
            Element e = parse_element(key.substr(0, bar));
            store(omega_canonical(e, mode), mode, class_polynomial_from_json(rec.at("poly"), mode));
        } catch (const std::exception& ex) {
            throw CacheError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
}

Engine& default_engine() {
    static Engine e;
    return e;
}

ReductionStep find_reduction(const Element& a, Mode mode) { return default_engine().find_reduction(a, mode); }
ClassPolynomial class_polynomial(const Element& a, Mode mode) { return default_engine().class_polynomial(a, mode); }
bool is_minimal_in_class(const Element& a, Mode mode) { return default_engine().is_minimal_in_class(a, mode); }

}  // namespace hecke
