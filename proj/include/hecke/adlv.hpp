#pragma once

#include "hecke/engine.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

enum class Group { PGL3, GL3, U3, D3X };

const char* group_name(Group g);
bool group_from_name(const std::string& s, Group& out);

// A sigma-conjugacy class, stored through its straight class in the core mode.
// mirrored: PGL3-type class with kappa 2, kept as the delta-image of a tau-coset class.
// For D3X the core class is the PGL3 class of b*tau.
// det: the integer Kottwitz point for GL3 (congruent to the core kappa mod 3).
struct SigmaClass {
    Group group = Group::PGL3;
    ConjClassId repr;
    bool mirrored = false;
    std::int64_t det = 0;
    InvariantF invariant;  // in the group's own coordinates
    int defect = 0;

    bool basic() const { return invariant.newton.is_zero(); }
    friend bool operator==(const SigmaClass& a, const SigmaClass& b) {
        return a.group == b.group && a.repr == b.repr && a.mirrored == b.mirrored && a.det == b.det;
    }
};

std::string to_string(const SigmaClass& b);

// Group element; det is only read for GL3, where it is the integer Kottwitz point.
struct GroupElt {
    Element w;
    std::int64_t det = 0;
};

GroupElt group_elt(Group g, const Element& w);  // det = kappa(w) for GL3

struct DimResult {
    bool nonempty = false;
    int dim = 0;
    ConjClassId witness_class;
    int degree = 0;
};

class NotSuperbasic : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::vector<SigmaClass> sigma_classes(Group g, int newton_bound);
SigmaClass make_sigma_class(Group g, const ConjClassId& repr, bool mirrored = false, std::int64_t det = 0);
SigmaClass basic_class(Group g, std::int64_t kappa_or_det);
std::optional<SigmaClass> parse_sigma_class(Group g, const std::string& text);
int defect(const SigmaClass& b);

// Dimension=Degree on a given class polynomial of an element of length len.
DimResult dimension_from(const ClassPolynomial& f, int len, const ConjClassId& b_repr);
// The core-mode element a query is answered with; kappa_ok is false on a Kottwitz mismatch.
std::pair<Element, Mode> core_element(Group g, const GroupElt& w, const SigmaClass& b, bool& kappa_ok);

DimResult adlv(Group g, const GroupElt& w, const SigmaClass& b, Engine& eng = default_engine());
inline DimResult adlv(Group g, const Element& w, const SigmaClass& b, Engine& eng = default_engine()) {
    return adlv(g, group_elt(g, w), b, eng);
}

BigInt rational_points(Group g, const GroupElt& w, const SigmaClass& b, const BigInt& q,
                       Engine& eng = default_engine());

inline constexpr int kDefaultGhkrOffset = 6;
// Least length checked: max(<nu_b,2rho> + offset, 2<nu_b,2rho> + 2).
int ghkr_threshold(const SigmaClass& b, int offset = kDefaultGhkrOffset);
bool ghkr_check(Group g, const GroupElt& w, const SigmaClass& b, int offset = kDefaultGhkrOffset,
                Engine& eng = default_engine());
// The identity itself, with no length threshold.
bool ghkr_identity_holds(Group g, const GroupElt& w, const SigmaClass& b, Engine& eng = default_engine());

struct LeadingTable {
    BigInt n0;
    std::vector<std::pair<SigmaClass, BigInt>> rows;  // sigma classes with a nonzero O_b entry
};
LeadingTable leading_table(AlphaCoords lam, Engine& eng = default_engine());

bool grassmannian_bound_check(Coweight lam, Fin x, Fin y, const SigmaClass& b, Engine& eng = default_engine());

nlohmann::json to_json(Group g, const GroupElt& w, const SigmaClass& b, const DimResult& r);

}  // namespace hecke
