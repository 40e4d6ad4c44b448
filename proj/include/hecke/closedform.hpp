#pragma once

#include "hecke/engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Which closed-form statement produced a value, with its parameters.
struct FamilyTag {
    std::string family;
    std::vector<std::int64_t> params;
    Element rep;  // orbit member the statement was applied to
};

struct ClosedForm {
    ClassPolynomial poly;
    FamilyTag tag;
};

std::optional<ClosedForm> closed_form_tagged(const Element& a, Mode mode);
std::optional<ClassPolynomial> closed_form(const Element& a, Mode mode);
bool covered(const Element& a, Mode mode);

// Equal-length cyclic shifts and Omega-twists of a, sorted.
std::vector<Element> strong_orbit(const Element& a, Mode mode);

namespace cf {

// Strict dominance: b - a is a nonzero sum of simple coroots with nonnegative coefficients.
bool dominance_less(AlphaCoords a, AlphaCoords b);
bool dominant(AlphaCoords a);
// Q minus the lines through alpha1+2alpha2, 2alpha1+alpha2 and alpha1-alpha2.
bool in_q_sh(AlphaCoords a);

std::vector<AlphaCoords> q_below(AlphaCoords alpha);
std::vector<AlphaCoords> d_set(AlphaCoords lam);
std::vector<AlphaCoords> d_prime_set(AlphaCoords lam);
std::vector<AlphaCoords> e_set(AlphaCoords lam);
std::vector<AlphaCoords> e_prime_set(AlphaCoords lam);
std::vector<AlphaCoords> e_tau(AlphaCoords lam);
std::vector<AlphaCoords> e_prime_tau(AlphaCoords lam);

// All C_i (resp. C'_i) no longer than the class of t^lam s1 (resp. t^lam s2).
std::vector<ConjClassId> o_le(AlphaCoords lam);
std::vector<ConjClassId> o_le_prime(AlphaCoords lam);

}  // namespace cf
}  // namespace hecke
