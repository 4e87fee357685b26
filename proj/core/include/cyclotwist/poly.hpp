#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotwist/f2.hpp"

namespace cyclotwist {

// Element of F2[x]/(x^n + 1), stored as a reduced, sorted exponent set.
class CyclicPoly {
  public:
    CyclicPoly() = default;
    // Exponents are reduced mod n at construction; repeated exponents
    // cancel in pairs (binary coefficients).
    CyclicPoly(int n, const std::vector<int>& exponents);

    static CyclicPoly zero(int n) { return CyclicPoly(n, {}); }
    static CyclicPoly one(int n) { return CyclicPoly(n, {0}); }
    static CyclicPoly monomial(int n, int e) { return CyclicPoly(n, {e}); }

    int modulus() const { return n_; }
    // By value: the poly is often a temporary in range-for expressions.
    std::vector<int> exponents() const { return exps_; }
    std::size_t weight() const { return exps_.size(); }
    bool is_zero() const { return exps_.empty(); }
    bool contains(int e) const;

    CyclicPoly operator+(const CyclicPoly& other) const;
    CyclicPoly operator*(const CyclicPoly& other) const;
    bool operator==(const CyclicPoly& other) const = default;

    // Multiplication by the monomial x^k.
    CyclicPoly shifted(int k) const;

    std::string to_string() const;

  private:
    int n_ = 0;
    std::vector<int> exps_;
};

CyclicPoly poly_mul(const CyclicPoly& a, const CyclicPoly& b);

// Antipodal map: every exponent e maps to (n - e) mod n.
CyclicPoly poly_transpose(const CyclicPoly& a);

// n x n permutation-sum matrix; column j has ones at rows (e + j) mod n
// for each exponent e.
BinMatrix regular_representation(const CyclicPoly& a);

// Plain binary polynomial of unbounded degree, packed bits.
class PlainPoly {
  public:
    PlainPoly() = default;
    explicit PlainPoly(const std::vector<int>& exponents);
    static PlainPoly x_n_plus_1(int n);
    static PlainPoly from_cyclic(const CyclicPoly& a) { return PlainPoly(a.exponents()); }

    bool is_zero() const { return deg_ < 0; }
    int degree() const { return deg_; }
    bool get(int e) const;
    std::vector<int> exponents() const;

    void operator^=(const PlainPoly& other);
    PlainPoly shifted(int k) const;
    bool operator==(const PlainPoly& other) const = default;

  private:
    void normalize();
    int deg_ = -1;
    std::vector<std::uint64_t> w_;
};

// Monic gcd over F2[x]; both inputs zero is an error.
PlainPoly poly_gcd(PlainPoly a, PlainPoly b);

// Remainder of a modulo b.
PlainPoly poly_mod(PlainPoly a, const PlainPoly& b);

// True iff b divides a exactly.
bool poly_divides(const PlainPoly& b, const PlainPoly& a);

}  // namespace cyclotwist
