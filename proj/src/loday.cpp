#include "lodpois/loday.hpp"

#include "lodpois/errors.hpp"

#include <set>

namespace lodpois {

LodayAlgebra LodayAlgebra::load(std::vector<std::string> basis_names, ConstantTable constants) {
    std::set<std::string> seen;
    for (const auto& n : basis_names)
        if (!seen.insert(n).second) throw DuplicateName("duplicate basis name '" + n + "'");
    std::size_t n = basis_names.size();
    for (const auto& [ij, v] : constants) {
        if (ij.first >= n || ij.second >= n)
            throw IndexOutOfRange("structure constant index out of range");
        if (v.dim() != n) throw DimensionMismatch("structure constant value has wrong dimension");
    }
    LodayAlgebra a(std::move(basis_names), std::move(constants));
    CheckReport report = check_leibniz(a);
    if (!report.ok()) {
        const Failure& f = report.failures.front();
        // witness format "L(i,j,k)" produced by check_leibniz
        std::size_t i = 0, j = 0, k = 0;
        std::sscanf(f.witness.c_str(), "L(%zu,%zu,%zu)", &i, &j, &k);
        throw LeibnizViolation(i, j, k, f.lhs);
    }
    return a;
}

LodayAlgebra LodayAlgebra::unchecked(std::vector<std::string> basis_names,
                                     ConstantTable constants) {
    return LodayAlgebra(std::move(basis_names), std::move(constants));
}

std::size_t LodayAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw UnknownBasisName("unknown basis name '" + name + "'");
}

SparseVector LodayAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw IndexOutOfRange("basis index out of range");
    auto it = c_.find({i, j});
    return it == c_.end() ? SparseVector(dim()) : it->second;
}

SparseVector LodayAlgebra::bracket(const SparseVector& u, const SparseVector& v) const {
    if (u.dim() != dim() || v.dim() != dim())
        throw DimensionMismatch("bracket operand dimension mismatch");
    SparseVector r(dim());
    for (const auto& [i, a] : u.entries())
        for (const auto& [j, b] : v.entries()) {
            auto it = c_.find({i, j});
            if (it == c_.end()) continue;
            SparseVector term = it->second;
            term *= a * b;
            r += term;
        }
    return r;
}

SparseVector leibniz_defect(const LodayAlgebra& a, const SparseVector& x, const SparseVector& y,
                            const SparseVector& z) {
    return a.bracket(x, a.bracket(y, z)) - a.bracket(a.bracket(x, y), z) -
           a.bracket(y, a.bracket(x, z));
}

CheckReport check_leibniz(const LodayAlgebra& a) {
    CheckReport report;
    report.suite = "loday";
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++report.checked;
                SparseVector d = leibniz_defect(a, unit_vector(n, i), unit_vector(n, j),
                                                unit_vector(n, k));
                if (!d.is_zero() && !report.full())
                    report.record("L(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")",
                                  a.vec_str(d), "0");
            }
    return report;
}

Subspace ann_ideal(const LodayAlgebra& a) {
    std::size_t n = a.dim();
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            s.insert(a.basis_bracket(i, j) + a.basis_bracket(j, i));
    // saturate under bracket multiplication on both sides; one pass suffices
    // for a genuine Loday algebra but the loop guards unchecked input
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<SparseVector> current = s.basis();
        for (const auto& w : current)
            for (std::size_t j = 0; j < n; ++j) {
                SparseVector ej = unit_vector(n, j);
                if (s.insert(a.bracket(w, ej))) grew = true;
                if (s.insert(a.bracket(ej, w))) grew = true;
            }
    }
    return s;
}

SparseVector Liezation::quotient_bracket(const SparseVector& u, const SparseVector& v) const {
    if (u.dim() != quotient_dim || v.dim() != quotient_dim)
        throw DimensionMismatch("quotient bracket operand dimension mismatch");
    SparseVector r(quotient_dim);
    for (const auto& [i, a] : u.entries())
        for (const auto& [j, b] : v.entries()) {
            auto it = lie_c.find({i, j});
            if (it == lie_c.end()) continue;
            SparseVector term = it->second;
            term *= a * b;
            r += term;
        }
    return r;
}

SparseVector Liezation::act(std::size_t quotient_i, const SparseVector& parent_v) const {
    if (parent_v.dim() != parent.dim())
        throw DimensionMismatch("action operand dimension mismatch");
    SparseVector r(parent.dim());
    for (const auto& [j, b] : parent_v.entries()) {
        auto it = action_c.find({quotient_i, j});
        if (it == action_c.end()) continue;
        SparseVector term = it->second;
        term *= b;
        r += term;
    }
    return r;
}

CommPoly Liezation::class_poly(std::size_t parent_j) const {
    SparseVector q = project(unit_vector(parent.dim(), parent_j));
    return quotient_vec_poly(q);
}

CommPoly Liezation::quotient_vec_poly(const SparseVector& quotient_v) const {
    CommPoly p;
    for (const auto& [i, c] : quotient_v.entries()) p.add(CommMonomial::variable(i), c);
    return p;
}

LiezationPtr liezation(const LodayAlgebra& a) {
    auto out = std::make_shared<Liezation>();
    out->parent = a;
    out->ann = ann_ideal(a);
    std::size_t n = a.dim();

    std::vector<std::size_t> pivots = out->ann.pivot_columns();
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot_set.count(j)) {
            out->rep.push_back(j);
            out->quotient_names.push_back(a.basis_names()[j]);
        }
    std::size_t q = out->rep.size();
    out->quotient_dim = q;

    // projection: reduce e_j mod the ideal, read off non-pivot coordinates
    std::map<std::size_t, std::size_t> coord_of; // parent index -> quotient coordinate
    for (std::size_t k = 0; k < q; ++k) coord_of[out->rep[k]] = k;
    out->projection = Matrix(q, n);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVector r = out->ann.reduce(unit_vector(n, j));
        for (const auto& [idx, val] : r.entries()) {
            auto it = coord_of.find(idx);
            if (it == coord_of.end())
                throw InternalConsistency("reduction left support on a pivot column");
            out->projection.at(it->second, j) = val;
        }
    }

    // quotient structure constants from coset representatives
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            SparseVector br =
                a.bracket(unit_vector(n, out->rep[i]), unit_vector(n, out->rep[j]));
            SparseVector qbr = out->projection.apply(br);
            if (!qbr.is_zero()) out->lie_c[{i, j}] = qbr;
        }

    // induced action of the quotient on the parent
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVector v = a.bracket(unit_vector(n, out->rep[i]), unit_vector(n, j));
            if (!v.is_zero()) out->action_c[{i, j}] = v;
        }

    // consistency gate: the theory guarantees all of this for validated
    // input, so any failure is a hard error
    for (const auto& w : out->ann.basis())
        for (std::size_t j = 0; j < n; ++j) {
            if (!a.bracket(w, unit_vector(n, j)).is_zero())
                throw InternalConsistency("left bracket multiplication by the ideal is nonzero");
            if (!out->ann.contains(a.bracket(unit_vector(n, j), w)))
                throw InternalConsistency("ideal is not right-stable");
        }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            SparseVector lhs = out->quotient_bracket(unit_vector(q, i), unit_vector(q, j));
            SparseVector rhs = out->quotient_bracket(unit_vector(q, j), unit_vector(q, i));
            if (!(lhs + rhs).is_zero())
                throw InternalConsistency("quotient bracket is not antisymmetric");
            for (std::size_t k = 0; k < q; ++k) {
                SparseVector x = unit_vector(q, i), y = unit_vector(q, j), z = unit_vector(q, k);
                SparseVector jac = out->quotient_bracket(x, out->quotient_bracket(y, z)) -
                                   out->quotient_bracket(out->quotient_bracket(x, y), z) -
                                   out->quotient_bracket(y, out->quotient_bracket(x, z));
                if (!jac.is_zero())
                    throw InternalConsistency("quotient bracket fails the Jacobi identity");
            }
        }
    // equivariance of the projection
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            SparseVector lhs = out->projection.apply(a.bracket(unit_vector(n, i), unit_vector(n, j)));
            SparseVector rhs = out->quotient_bracket(out->projection.apply(unit_vector(n, i)),
                                                     out->projection.apply(unit_vector(n, j)));
            if (!(lhs - rhs).is_zero())
                throw InternalConsistency("projection is not equivariant");
        }
    return out;
}

} // namespace lodpois
