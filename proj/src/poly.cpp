#include "hecke/poly.hpp"

#include <sstream>

namespace hecke {

namespace {

std::string render(const std::vector<BigInt>& c, const char* var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        const BigInt& x = c[i];
        if (x == 0) continue;
        BigInt mag = x < 0 ? BigInt(-x) : x;
        if (first)
            os << (x < 0 ? "-" : "");
        else
            os << (x < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace

UPoly::UPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const BigInt& c) { return UPoly(std::vector<BigInt>{c}); }

UPoly UPoly::monomial(const BigInt& c, int degree) {
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<int> UPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

BigInt UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

BigInt UPoly::leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

bool UPoly::nonnegative() const {
    for (const auto& x : c_)
        if (x < 0) return false;
    return true;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly& UPoly::operator+=(const UPoly& b) {
    *this = *this + b;
    return *this;
}

UPoly UPoly::shift(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(static_cast<std::size_t>(k), BigInt(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
}

std::string UPoly::to_string() const { return render(c_, "u"); }

UPoly upoly_add(const UPoly& f, const UPoly& g) { return f + g; }
UPoly upoly_mul(const UPoly& f, const UPoly& g) { return f * g; }
std::optional<int> upoly_degree(const UPoly& f) { return f.degree(); }

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt QPoly::eval(const BigInt& q) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
}

std::string QPoly::to_string() const { return render(c_, "q"); }

// q^{len/2} u^d = q^{(len-d)/2} (q-1)^d
QPoly eval_point_count(const UPoly& f, int len, long n) {
    QPoly total;
    const QPoly q_minus_1(std::vector<BigInt>{-1, 1});
    for (int d = 0; d < static_cast<int>(f.coeffs().size()); ++d) {
        const BigInt& c = f.coeffs()[d];
        if (c == 0) continue;
        if ((len - d) % 2 != 0 || d > len)
            throw ParityError("point count: length " + std::to_string(len) + " incompatible with u^" +
                              std::to_string(d));
        std::vector<BigInt> mono(static_cast<std::size_t>((len - d) / 2) + 1);
        mono.back() = c * n;
        QPoly term{std::move(mono)};
        for (int j = 0; j < d; ++j) term = term * q_minus_1;
        total = total + term;
    }
    return total;
}

}  // namespace hecke
