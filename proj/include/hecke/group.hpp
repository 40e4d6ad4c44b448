#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hecke {

// Finite Weyl group S3. s12 means s1 composed with s2 (s1 applied last).
enum class Fin : std::uint8_t { e = 0, s1, s2, s12, s21, s121 };

inline constexpr std::array<Fin, 6> kAllFin = {Fin::e, Fin::s1, Fin::s2, Fin::s12, Fin::s21, Fin::s121};

// Coweight in the fundamental-coweight basis: p*w1 + q*w2.
struct Coweight {
    std::int64_t p = 0;
    std::int64_t q = 0;
    friend bool operator==(const Coweight&, const Coweight&) = default;
    friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

// Coordinates with respect to the simple coroots, m*a1 + n*a2.
struct AlphaCoords {
    std::int64_t m = 0;
    std::int64_t n = 0;
    friend bool operator==(const AlphaCoords&, const AlphaCoords&) = default;
    friend auto operator<=>(const AlphaCoords&, const AlphaCoords&) = default;
};

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// t^lam * w acting by x -> lam + w(x).
struct Element {
    Coweight lam;
    Fin w = Fin::e;
    friend bool operator==(const Element&, const Element&) = default;
};

Fin fin_mul(Fin a, Fin b);
Fin fin_inv(Fin a);
int fin_length(Fin a);
Fin fin_delta(Fin a);
const char* fin_name(Fin a);
bool fin_from_name(const std::string& s, Fin& out);
Coweight fin_apply(Fin w, Coweight x);

Coweight operator+(Coweight a, Coweight b);
Coweight operator-(Coweight a, Coweight b);
Coweight operator-(Coweight a);

Coweight from_alpha(AlphaCoords a);
bool in_coroot_lattice(Coweight c);
AlphaCoords to_alpha(Coweight c);  // requires in_coroot_lattice
bool is_dominant(Coweight c);
Coweight dominant(Coweight c);

// Pairings with the simple roots, and with 2*rho.
inline std::int64_t pair_a1(Coweight c) { return c.p; }
inline std::int64_t pair_a2(Coweight c) { return c.q; }
inline std::int64_t pairing_2rho(Coweight c) { return 2 * (c.p + c.q); }
inline std::int64_t pairing_2rho(AlphaCoords a) { return 2 * (a.m + a.n); }

Element identity();
Element translation(Coweight c);
Element translation(AlphaCoords a);
Element fin(Fin w);
Element simple(int i);  // s0, s1, s2
Element tau();
Element tau_pow(int k);

Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);
Element conj(const Element& x, const Element& a);  // x a x^-1
int length(const Element& a);
Element apply_delta(const Element& a);
int kappa(const Element& a);  // Omega exponent in {0,1,2}

// a = (t^{m a1 + n a2} w) tau^k.
struct Decomposed {
    AlphaCoords t;
    Fin w = Fin::e;
    int k = 0;
};
Decomposed decompose(const Element& a);
Element compose(const Decomposed& d);
Element make(std::int64_t m, std::int64_t n, Fin w, int k = 0);

std::string format_element(const Element& a);
Element parse_element(const std::string& text);

// Deterministic total order (k, m, n, w) used for tie-breaking.
std::tuple<int, std::int64_t, std::int64_t, int> order_key(const Element& a);
bool element_less(const Element& a, const Element& b);

struct ElementHash {
    std::size_t operator()(const Element& a) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(a.lam.p) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(a.lam.q) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(a.w) * 0x94D049BB133111EBULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

}  // namespace hecke
