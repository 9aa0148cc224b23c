#pragma once

#include "lodpois/linalg.hpp"
#include "lodpois/poly.hpp"
#include "lodpois/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lodpois {

// Finite-dimensional Loday (Leibniz) algebra presented by structure
// constants [e_i, e_j] = sum_k c_{ij}^k e_k. No symmetry of the bracket is
// assumed; missing entries are zero.
class LodayAlgebra {
public:
    using ConstantTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

    // Validates names and indices and runs the full Leibniz sweep; throws
    // LeibnizViolation / IndexOutOfRange / DuplicateName.
    static LodayAlgebra load(std::vector<std::string> basis_names, ConstantTable constants);

    // Skips the Leibniz sweep. For mutation tests and for the checkers
    // themselves; everything else should go through load().
    static LodayAlgebra unchecked(std::vector<std::string> basis_names, ConstantTable constants);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    std::size_t index_of(const std::string& name) const; // throws UnknownBasisName

    // [e_i, e_j] as a vector; zero when the pair is absent from the table.
    SparseVector basis_bracket(std::size_t i, std::size_t j) const;
    // Bilinear extension.
    SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

    const ConstantTable& constants() const { return c_; }

    std::string vec_str(const SparseVector& v) const { return v.str(names_); }

private:
    LodayAlgebra(std::vector<std::string> names, ConstantTable c)
        : names_(std::move(names)), c_(std::move(c)) {}

    std::vector<std::string> names_;
    ConstantTable c_;
};

// Leibniz defect [x,[y,z]] - [[x,y],z] - [y,[x,z]], zero iff the identity
// holds at (x, y, z).
SparseVector leibniz_defect(const LodayAlgebra& a, const SparseVector& x, const SparseVector& y,
                            const SparseVector& z);

// Sweeps the defect over all dim^3 basis triples; failures carry the triple
// and the residual vector.
CheckReport check_leibniz(const LodayAlgebra& a);

// Span of all symmetric brackets [e_i,e_j] + [e_j,e_i], saturated under
// bracket multiplication by basis elements on both sides until stable.
Subspace ann_ideal(const LodayAlgebra& a);

// The quotient of a Loday algebra by the two-sided ideal of symmetric
// brackets, with its Lie structure and the induced action back on the
// parent. Fields are set once at construction and never mutated.
struct Liezation {
    LodayAlgebra parent;
    Subspace ann;
    std::size_t quotient_dim = 0;

    // quotient coordinate -> parent basis index of its coset representative
    // (the non-pivot columns of the row-reduced ideal basis)
    std::vector<std::size_t> rep;
    std::vector<std::string> quotient_names;

    // quotient_dim x parent dim; column j holds the quotient coordinates of
    // the class of e_j
    Matrix projection;

    // quotient structure constants, quotient_dim-dimensional values
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> lie_c;

    // action of the quotient on the parent: (quotient i, parent j) ->
    // [rep(i), e_j] in parent coordinates
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> action_c;

    Liezation() : parent(LodayAlgebra::unchecked({}, {})) {}

    SparseVector project(const SparseVector& v) const { return projection.apply(v); }

    SparseVector quotient_bracket(const SparseVector& u, const SparseVector& v) const;

    // ad(quotient basis i) applied to a parent vector.
    SparseVector act(std::size_t quotient_i, const SparseVector& parent_v) const;

    // The class of parent basis vector j as a linear polynomial in the
    // quotient variables.
    CommPoly class_poly(std::size_t parent_j) const;
    // Same for a quotient bracket value.
    CommPoly quotient_vec_poly(const SparseVector& quotient_v) const;

    std::string quotient_vec_str(const SparseVector& v) const { return v.str(quotient_names); }
};

using LiezationPtr = std::shared_ptr<const Liezation>;

// Builds the full quotient record and verifies antisymmetry, Jacobi,
// well-definedness of the action and equivariance of the projection;
// failures throw InternalConsistency (they cannot occur for a validated
// Loday algebra).
LiezationPtr liezation(const LodayAlgebra& a);

} // namespace lodpois
