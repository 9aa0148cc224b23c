#include "lodpois/linalg.hpp"

#include "lodpois/errors.hpp"

#include <sstream>

namespace lodpois {

SparseVector::SparseVector(std::size_t dim,
                           std::initializer_list<std::pair<std::size_t, Rational>> entries)
    : dim_(dim) {
    for (const auto& [i, v] : entries) add(i, v);
}

void SparseVector::check_index(std::size_t i) const {
    if (i >= dim_)
        throw IndexOutOfRange("vector index " + std::to_string(i) + " out of range for dimension " +
                              std::to_string(dim_));
}

Rational SparseVector::operator[](std::size_t i) const {
    check_index(i);
    auto it = entries_.find(i);
    return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVector::set(std::size_t i, Rational value) {
    check_index(i);
    if (is_zero(value))
        entries_.erase(i);
    else
        entries_[i] = std::move(value);
}

void SparseVector::add(std::size_t i, const Rational& value) {
    check_index(i);
    auto [it, inserted] = entries_.try_emplace(i, value);
    if (!inserted) {
        it->second += value;
        if (lodpois::is_zero(it->second)) entries_.erase(it);
    } else if (lodpois::is_zero(it->second)) {
        entries_.erase(it);
    }
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("vector dimensions differ");
    for (const auto& [i, v] : other.entries_) add(i, v);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("vector dimensions differ");
    for (const auto& [i, v] : other.entries_) add(i, -v);
    return *this;
}

SparseVector& SparseVector::operator*=(const Rational& scalar) {
    if (lodpois::is_zero(scalar)) {
        entries_.clear();
        return *this;
    }
    for (auto& [i, v] : entries_) v *= scalar;
    return *this;
}

std::size_t SparseVector::leading_index() const {
    return entries_.empty() ? dim_ : entries_.begin()->first;
}

std::string SparseVector::str(const std::vector<std::string>& names) const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, v] : entries_) {
        Rational c = v;
        if (first) {
            if (sgn(c) < 0) { out << "-"; c = -c; }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        std::string name = i < names.size() ? names[i] : "e" + std::to_string(i);
        if (c != 1) out << to_string(c) << " ";
        out << name;
        first = false;
    }
    return out.str();
}

SparseVector unit_vector(std::size_t dim, std::size_t i) {
    SparseVector v(dim);
    v.set(i, Rational(1));
    return v;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (lodpois::is_zero(aik)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += aik * other.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
    return r;
}

SparseVector Matrix::apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw DimensionMismatch("matrix/vector shape mismatch");
    SparseVector r(rows_);
    for (const auto& [j, x] : v.entries())
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rational& aij = at(i, j);
            if (!lodpois::is_zero(aij)) r.add(i, aij * x);
        }
    return r;
}

Matrix Matrix::kron(const Matrix& other) const {
    Matrix r(rows_ * other.rows_, cols_ * other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& aij = at(i, j);
            if (lodpois::is_zero(aij)) continue;
            for (std::size_t k = 0; k < other.rows_; ++k)
                for (std::size_t l = 0; l < other.cols_; ++l)
                    r.at(i * other.rows_ + k, j * other.cols_ + l) = aij * other.at(k, l);
        }
    return r;
}

Matrix Matrix::hcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw DimensionMismatch("hcat row mismatch");
    Matrix r(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!lodpois::is_zero(x)) return false;
    return true;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix work = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r)
            if (!lodpois::is_zero(work.at(r, col))) { pivot = r; break; }
        if (pivot == n) throw DimensionMismatch("singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = work.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = work.at(r, col);
            if (lodpois::is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
    if (v.dim() != ambient_) throw DimensionMismatch("ambient dimensions differ");
    SparseVector r = v;
    for (const auto& b : basis_) {
        std::size_t p = b.leading_index();
        Rational c = r[p];
        if (!lodpois::is_zero(c)) r -= c * b;
    }
    return r;
}

bool Subspace::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

bool Subspace::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.is_zero()) return false;
    std::size_t p = r.leading_index();
    r *= Rational(1) / r[p];
    // clear the new pivot column in the existing rows
    for (auto& b : basis_) {
        Rational c = b[p];
        if (!lodpois::is_zero(c)) b -= c * r;
    }
    auto pos = basis_.begin();
    while (pos != basis_.end() && pos->leading_index() < p) ++pos;
    basis_.insert(pos, std::move(r));
    return true;
}

std::vector<std::size_t> Subspace::pivot_columns() const {
    std::vector<std::size_t> cols;
    cols.reserve(basis_.size());
    for (const auto& b : basis_) cols.push_back(b.leading_index());
    return cols;
}

Subspace span(const std::vector<SparseVector>& vectors, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) {
        if (v.dim() != ambient_dim) throw DimensionMismatch("span: mixed ambient dimensions");
        s.insert(v);
    }
    return s;
}

Subspace span(const std::vector<SparseVector>& vectors) {
    if (vectors.empty()) return Subspace(0);
    return span(vectors, vectors.front().dim());
}

bool contains(const Subspace& s, const SparseVector& v) { return s.contains(v); }

std::size_t rank(const std::vector<SparseVector>& vectors) {
    return span(vectors).dim();
}

} // namespace lodpois
