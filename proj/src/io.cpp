#include "hecke/io.hpp"

#include <limits>

namespace hecke {

nlohmann::json to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const UPoly& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return a;
}

nlohmann::json to_json(const QPoly& f) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return a;
}

UPoly upoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
    std::vector<BigInt> c;
    for (const auto& x : j) c.push_back(bigint_from_json(x));
    return UPoly(std::move(c));
}

nlohmann::json to_json(const ClassPolynomial& f) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [cls, p] : f.entries) o[to_string(cls)] = to_json(p);
    return o;
}

ClassPolynomial class_polynomial_from_json(const nlohmann::json& j, Mode mode) {
    if (!j.is_object()) throw ParseError("expected a class polynomial object, got " + j.dump());
    ClassPolynomial f;
    f.mode = mode;
    for (auto it = j.begin(); it != j.end(); ++it) f.add(parse_class_id(it.key()), upoly_from_json(it.value()));
    return f;
}

}  // namespace hecke
