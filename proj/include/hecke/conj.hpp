#pragma once

#include "hecke/group.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <string>
#include <vector>

namespace hecke {

enum class Mode { Split, SplitTau, Twisted };

const char* mode_name(Mode m);
bool mode_from_name(const std::string& s, Mode& out);

class ModeMismatch : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class ClassKind : std::uint8_t {
    Id,
    O1,
    O2,
    OLambda,
    C,
    Cp,
    OIdTau,
    OLambdaTau,
    OiTau,
    O0d,
    O1d,
    O1pd,
    O3d,
    O2md,
};

// a, b carry the family parameters: (m,n) for OLambda/OLambdaTau, i for C/Cp/OiTau, m for O2md.
struct ConjClassId {
    ClassKind kind = ClassKind::Id;
    std::int64_t a = 0;
    std::int64_t b = 0;

    static ConjClassId id() { return {ClassKind::Id}; }
    static ConjClassId o1() { return {ClassKind::O1}; }
    static ConjClassId o2() { return {ClassKind::O2}; }
    static ConjClassId o_lambda(std::int64_t m, std::int64_t n) { return {ClassKind::OLambda, m, n}; }
    static ConjClassId c(std::int64_t i) { return {ClassKind::C, i}; }
    static ConjClassId cp(std::int64_t i) { return {ClassKind::Cp, i}; }
    static ConjClassId o_idtau() { return {ClassKind::OIdTau}; }
    static ConjClassId o_lambdatau(std::int64_t m, std::int64_t n) { return {ClassKind::OLambdaTau, m, n}; }
    static ConjClassId o_tau(std::int64_t i) { return {ClassKind::OiTau, i}; }
    static ConjClassId o0d() { return {ClassKind::O0d}; }
    static ConjClassId o1d() { return {ClassKind::O1d}; }
    static ConjClassId o1pd() { return {ClassKind::O1pd}; }
    static ConjClassId o3d() { return {ClassKind::O3d}; }
    static ConjClassId o2md(std::int64_t m) { return {ClassKind::O2md, m}; }

    friend bool operator==(const ConjClassId&, const ConjClassId&) = default;
    friend auto operator<=>(const ConjClassId&, const ConjClassId&) = default;
};

Mode mode_of(const ConjClassId& c);
std::string to_string(const ConjClassId& c);
ConjClassId parse_class_id(const std::string& s);

using Rational = boost::rational<std::int64_t>;

// Dominant rational vector in alpha-coordinates.
struct NewtonPoint {
    Rational m{0};
    Rational n{0};
    friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
    bool is_zero() const { return m == Rational(0) && n == Rational(0); }
    Rational pairing_2rho() const { return 2 * (m + n); }
};

std::string to_string(const NewtonPoint& nu);

struct InvariantF {
    NewtonPoint newton;
    int kottwitz = 0;  // always 0 in twisted mode (trivial coinvariants)
    bool twisted = false;
    friend bool operator==(const InvariantF&, const InvariantF&) = default;
};

// Raises ModeMismatch unless kappa(a) fits the mode (0 for Split, 1 for SplitTau).
void check_mode(const Element& a, Mode mode);

ConjClassId classify(const Element& a, Mode mode);
int min_length(const ConjClassId& c);
Element canonical_rep(const ConjClassId& c);
NewtonPoint newton_point(const Element& a, Mode mode);
int kottwitz(const Element& a, Mode mode);
InvariantF invariant_of_class(const ConjClassId& c);
std::vector<ConjClassId> enumerate_classes(Mode mode, int max_min_length);

// Twisted-mode helpers: g a delta(g)^-1 (plain conjugation in split modes).
Element twisted_conj(const Element& g, const Element& a, Mode mode);
// Apply delta only in twisted mode.
Element mode_delta(const Element& a, Mode mode);

// All elements of the mode's coset (all of W~ in twisted mode) of length <= max_len, in order_key order.
std::vector<Element> elements_up_to(Mode mode, int max_len);

}  // namespace hecke
