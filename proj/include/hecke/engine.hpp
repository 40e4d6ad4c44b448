#pragma once

#include "hecke/conj.hpp"
#include "hecke/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace hecke {

struct ClassPolynomial {
    Mode mode = Mode::Split;
    std::map<ConjClassId, UPoly> entries;  // absent key means zero

    UPoly get(const ConjClassId& c) const;
    void add(const ConjClassId& c, const UPoly& f);
    ClassPolynomial& operator+=(const ClassPolynomial& o);
    ClassPolynomial times_u() const;
    friend bool operator==(const ClassPolynomial& a, const ClassPolynomial& b) { return a.entries == b.entries; }
    std::string to_string() const;
};

struct ReductionStep {
    bool minimal = true;
    Element witness;             // w1, strongly conjugate to the input
    int gen = -1;                // i with l(s_i w1 s_delta(i)) < l(w1)
    std::vector<Element> path;   // input, ..., witness
};

class CacheError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Engine {
  public:
    Engine() = default;

    // Randomized BFS tie-breaking (testing only); nullopt restores the canonical order.
    void set_shuffle_seed(std::optional<std::uint64_t> seed) { seed_ = seed; }

    ReductionStep find_reduction(const Element& a, Mode mode) const;
    ClassPolynomial class_polynomial(const Element& a, Mode mode);
    bool is_minimal_in_class(const Element& a, Mode mode) const;

    std::size_t memo_size() const;
    void clear();
    void save(const std::string& path) const;
    void load(const std::string& path);

  private:
    using Memo = std::unordered_map<Element, ClassPolynomial, ElementHash>;
    std::optional<ClassPolynomial> lookup(const Element& key, Mode mode) const;
    void store(const Element& key, Mode mode, const ClassPolynomial& f);
    ClassPolynomial compute(const Element& a, Mode mode, int budget);

    std::optional<std::uint64_t> seed_;
    mutable std::shared_mutex mu_;
    Memo memo_[3];
};

// Least element of {tau^j a delta(tau^j)^-1}.
Element omega_canonical(const Element& a, Mode mode);
std::string memo_key(const Element& a, Mode mode);

// Process-wide engine used by the free functions.
Engine& default_engine();
ReductionStep find_reduction(const Element& a, Mode mode);
ClassPolynomial class_polynomial(const Element& a, Mode mode);
bool is_minimal_in_class(const Element& a, Mode mode);

}  // namespace hecke
