#pragma once

#include "lodpois/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lodpois {

// Sparse exact vector. Entries never store zeros; all indices < dim.
class SparseVector {
public:
    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}
    SparseVector(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<std::size_t, Rational>& entries() const { return entries_; }

    Rational operator[](std::size_t i) const;
    void set(std::size_t i, Rational value);
    void add(std::size_t i, const Rational& value);

    SparseVector& operator+=(const SparseVector& other);
    SparseVector& operator-=(const SparseVector& other);
    SparseVector& operator*=(const Rational& scalar);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Rational& s, SparseVector v) { return v *= s; }

    bool operator==(const SparseVector& other) const = default;

    // Smallest index with nonzero entry; dim() when zero.
    std::size_t leading_index() const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    std::size_t dim_ = 0;
    std::map<std::size_t, Rational> entries_;

    void check_index(std::size_t i) const;
};

SparseVector unit_vector(std::size_t dim, std::size_t i);

// Dense exact matrix, row-major. Small dimensions only.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& other) const = default;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    SparseVector apply(const SparseVector& v) const;

    // Kronecker product, row-major index convention (i * other.rows + k).
    Matrix kron(const Matrix& other) const;

    // Horizontal concatenation [*this | right].
    Matrix hcat(const Matrix& right) const;

    bool is_zero() const;

    // Exact inverse via Gauss-Jordan; throws DimensionMismatch if singular
    // or non-square.
    Matrix inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Row-reduced span of vectors in a fixed ambient space. Basis rows are in
// reduced row-echelon form: pivot entries are 1, pivots strictly increase,
// and pivot columns are cleared in every other row.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<SparseVector>& basis() const { return basis_; }

    // Reduce v against the basis; the remainder has no support on pivot
    // columns. Pure.
    SparseVector reduce(const SparseVector& v) const;

    bool contains(const SparseVector& v) const;

    // Insert v, keeping RREF; returns true if the dimension grew.
    bool insert(const SparseVector& v);

    bool operator==(const Subspace& other) const = default;

    std::vector<std::size_t> pivot_columns() const;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVector> basis_;
};

Subspace span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim);
Subspace span(const std::vector<SparseVector>& vectors);
bool contains(const Subspace& s, const SparseVector& v);

// Rank of a list of vectors sharing one ambient dimension.
std::size_t rank(const std::vector<SparseVector>& vectors);

} // namespace lodpois
