#pragma once

#include "lodpois/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lodpois {

// Zero-pruning accumulation shared by every sparse term map in the library.
template <class Map, class Key, class Value>
void add_term(Map& m, const Key& key, const Value& value) {
    if (value == Value{}) return;
    auto [it, inserted] = m.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == Value{}) m.erase(it);
    }
}

// ---------------------------------------------------------------------------
// Commutative monomials and polynomials

// Exponent map, variable index -> positive exponent. Zero exponents are
// never stored; the empty map is the constant monomial.
class CommMonomial {
public:
    CommMonomial() = default;
    static CommMonomial variable(std::size_t index, unsigned exponent = 1);

    const std::map<std::size_t, unsigned>& exponents() const { return exp_; }
    unsigned exponent(std::size_t var) const;
    unsigned total_degree() const;
    bool is_constant() const { return exp_.empty(); }

    CommMonomial operator*(const CommMonomial& other) const;
    // Divide by one power of var; exponent must be positive.
    CommMonomial without(std::size_t var) const;

    bool operator==(const CommMonomial& other) const = default;

    // Graded-lexicographic: total degree first, then exponents compared from
    // the lowest variable index, higher exponent first.
    bool operator<(const CommMonomial& other) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::map<std::size_t, unsigned> exp_;
};

class CommPoly {
public:
    CommPoly() = default;
    explicit CommPoly(Rational constant);
    static CommPoly one() { return CommPoly(Rational(1)); }
    static CommPoly variable(std::size_t index);
    static CommPoly monomial(CommMonomial m, Rational coeff = Rational(1));

    const std::map<CommMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const; // 0 for the zero polynomial
    Rational coeff(const CommMonomial& m) const;

    void add(const CommMonomial& m, const Rational& coeff) { add_term(terms_, m, coeff); }

    CommPoly& operator+=(const CommPoly& other);
    CommPoly& operator-=(const CommPoly& other);
    CommPoly& operator*=(const Rational& scalar);
    CommPoly operator*(const CommPoly& other) const;
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const Rational& s, CommPoly p) { return p *= s; }

    bool operator==(const CommPoly& other) const = default;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::map<CommMonomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Exterior monomials and polynomials

// Strictly increasing index list; the stored form is the sign-positive
// representative. Degree = number of indices.
class ExtMonomial {
public:
    ExtMonomial() = default;
    static ExtMonomial variable(std::size_t index);
    // Throws std::invalid_argument unless indices are strictly increasing.
    explicit ExtMonomial(std::vector<std::size_t> indices);

    const std::vector<std::size_t>& indices() const { return idx_; }
    std::size_t degree() const { return idx_.size(); }
    bool is_constant() const { return idx_.empty(); }

    bool operator==(const ExtMonomial& other) const = default;
    bool operator<(const ExtMonomial& other) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::vector<std::size_t> idx_;
};

// Wedge of two monomials: zero if an index repeats, otherwise the merged
// monomial with the parity sign of the merge permutation.
struct SignedExtMonomial {
    ExtMonomial monomial;
    int sign = 0; // 0 encodes the zero result
};
SignedExtMonomial ext_product(const ExtMonomial& a, const ExtMonomial& b);

class ExtPoly {
public:
    ExtPoly() = default;
    explicit ExtPoly(Rational constant);
    static ExtPoly one() { return ExtPoly(Rational(1)); }
    static ExtPoly variable(std::size_t index);
    static ExtPoly monomial(ExtMonomial m, Rational coeff = Rational(1));

    const std::map<ExtMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const ExtMonomial& m, const Rational& coeff) { add_term(terms_, m, coeff); }

    ExtPoly& operator+=(const ExtPoly& other);
    ExtPoly& operator-=(const ExtPoly& other);
    ExtPoly& operator*=(const Rational& scalar);
    ExtPoly operator*(const ExtPoly& other) const; // wedge, bilinear
    friend ExtPoly operator+(ExtPoly a, const ExtPoly& b) { return a += b; }
    friend ExtPoly operator-(ExtPoly a, const ExtPoly& b) { return a -= b; }
    friend ExtPoly operator*(const Rational& s, ExtPoly p) { return p *= s; }

    bool operator==(const ExtPoly& other) const = default;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::map<ExtMonomial, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Polynomials in the formal deformation parameter

// Univariate polynomial in the formal parameter with rational coefficients.
class HbarPoly {
public:
    HbarPoly() = default;
    explicit HbarPoly(Rational constant);
    static HbarPoly one() { return HbarPoly(Rational(1)); }
    static HbarPoly hbar(unsigned power = 1, Rational coeff = Rational(1));

    const std::map<unsigned, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(unsigned power) const;
    Rational at_zero() const { return coeff(0); }
    bool divisible_by_hbar() const { return coeffs_.find(0) == coeffs_.end(); }
    // Quotient by one power of the parameter; requires divisibility.
    HbarPoly shifted_down() const;

    void add(unsigned power, const Rational& coeff) { add_term(coeffs_, power, coeff); }

    HbarPoly& operator+=(const HbarPoly& other);
    HbarPoly& operator-=(const HbarPoly& other);
    HbarPoly& operator*=(const Rational& scalar);
    HbarPoly operator*(const HbarPoly& other) const;
    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
    friend HbarPoly operator*(const Rational& s, HbarPoly p) { return p *= s; }

    Rational evaluate(const Rational& value) const;

    bool operator==(const HbarPoly& other) const = default;

    std::string str() const;

private:
    std::map<unsigned, Rational> coeffs_;
};

// Polynomial in the formal parameter whose coefficients are commutative
// polynomials; the representation of star-product results.
class HPoly {
public:
    HPoly() = default;
    explicit HPoly(CommPoly constant);
    static HPoly monomial(const CommMonomial& m, Rational coeff = Rational(1));

    const std::map<unsigned, CommPoly>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    CommPoly coeff(unsigned power) const;
    CommPoly at_zero() const { return coeff(0); }

    void add(unsigned power, const CommPoly& p);

    HPoly& operator+=(const HPoly& other);
    HPoly& operator-=(const HPoly& other);
    HPoly& operator*=(const Rational& scalar);
    HPoly operator*(const HPoly& other) const;
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const Rational& s, HPoly p) { return p *= s; }

    // Substitute a rational value for the parameter.
    CommPoly evaluate(const Rational& value) const;

    bool operator==(const HPoly& other) const = default;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::map<unsigned, CommPoly> coeffs_;
};

} // namespace lodpois
