#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in u = v - v^-1; coeffs[i] is the coefficient of u^i, no trailing zeros.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<BigInt> coeffs);
    static UPoly constant(const BigInt& c);
    static UPoly monomial(const BigInt& c, int degree);
    static UPoly u() { return monomial(1, 1); }

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Highest nonzero index, nullopt for the zero polynomial (degree -infinity).
    std::optional<int> degree() const;
    BigInt coeff(int i) const;
    BigInt leading() const;
    BigInt at_zero() const { return coeff(0); }
    bool nonnegative() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator+=(const UPoly& b);
    UPoly shift(int k) const;  // multiply by u^k
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

UPoly upoly_add(const UPoly& f, const UPoly& g);
UPoly upoly_mul(const UPoly& f, const UPoly& g);
std::optional<int> upoly_degree(const UPoly& f);

// Polynomial in q.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<BigInt> coeffs);
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    BigInt eval(const BigInt& q) const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    std::string to_string() const;

  private:
    void trim();
    std::vector<BigInt> c_;
};

class ParityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// n * q^{len/2} * f(sqrt(q) - 1/sqrt(q)) as an exact polynomial in q.
QPoly eval_point_count(const UPoly& f, int len, long n);

}  // namespace hecke
