#pragma once

#include "hecke/adlv.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hecke {

// Outcome of one verification suite. Every failure line ends with a command that reproduces it.
struct Report {
    std::string suite;
    long cases = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    explicit Report(std::string name = {}) : suite(std::move(name)) {}
    bool ok() const { return failures.empty(); }
    void merge(const Report& o);
};

// closedform, dims, points, ghkr, invariants, plus classification and leading.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
Report run_suite(const std::string& name, int max_len, Engine& eng = default_engine());

// Engine against the closed forms for every element of length <= max_len in one coset.
// Twisted mode also checks the three O'_{1,delta} examples and the long-regime degree pattern.
Report verify_closedform(Mode mode, int max_len, Engine& eng = default_engine());
// Conjugation stability, invariants and minimal lengths of the class taxonomy.
Report verify_classification(int max_len);
// Dimension and emptiness statements for PGL3 and U3, sigma classes with <nu,2rho> <= newton_bound.
Report verify_dims(int max_len, int newton_bound = 8, Engine& eng = default_engine());
// Point counts of the superbasic classes of PGL3 and GL3 against the closed polynomials in q.
Report verify_points(int max_len, Engine& eng = default_engine());
// GHKR identity for all four groups above the threshold; notes carry the least offsets that work.
Report verify_ghkr(int max_len, int newton_bound = 8, int offset = kDefaultGhkrOffset,
                   Engine& eng = default_engine());
// Character identities, u = 0 indicator, positivity, parity and degree bounds.
Report verify_polynomial_properties(int max_len, Engine& eng = default_engine());
// Seeded reduction orders against the default order, lengths <= max_len.
Report verify_path_independence(int max_len, int seeds = 10, Engine& eng = default_engine());
// Length function against breadth-first word length.
Report verify_word_length(int max_len);
// The Grassmannian dimension bound for dominant lam with <lam,2rho> <= pair_bound.
Report verify_grassmannian(int pair_bound, Engine& eng = default_engine());
// Leading coefficients of w0 t^lam for the three families, k0 <= max_k0, i0 <= 3.
Report verify_leading(int max_k0, Engine& eng = default_engine());

std::string format_report(const Report& r);

}  // namespace hecke
