#include "lodpois/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lodpois {

namespace {

std::string var_name(std::size_t i, const std::vector<std::string>& names) {
    return i < names.size() ? names[i] : "x" + std::to_string(i);
}

// Render (coefficient, body) terms as a signed sum. An empty body stands for
// the constant monomial.
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, body] : terms) {
        Rational c = coeff;
        if (first) {
            if (sgn(c) < 0) { out << "-"; c = -c; }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        if (body.empty())
            out << to_string(c);
        else if (c == 1)
            out << body;
        else
            out << to_string(c) << " " << body;
        first = false;
    }
    return out.str();
}

} // namespace

// ---------------------------------------------------------------------------
// CommMonomial

CommMonomial CommMonomial::variable(std::size_t index, unsigned exponent) {
    CommMonomial m;
    if (exponent > 0) m.exp_[index] = exponent;
    return m;
}

unsigned CommMonomial::exponent(std::size_t var) const {
    auto it = exp_.find(var);
    return it == exp_.end() ? 0u : it->second;
}

unsigned CommMonomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [_, e] : exp_) d += e;
    return d;
}

CommMonomial CommMonomial::operator*(const CommMonomial& other) const {
    CommMonomial r = *this;
    for (const auto& [v, e] : other.exp_) r.exp_[v] += e;
    return r;
}

CommMonomial CommMonomial::without(std::size_t var) const {
    auto it = exp_.find(var);
    if (it == exp_.end()) throw std::invalid_argument("monomial has no such variable");
    CommMonomial r = *this;
    if (it->second == 1)
        r.exp_.erase(var);
    else
        r.exp_[var] -= 1;
    return r;
}

bool CommMonomial::operator<(const CommMonomial& other) const {
    unsigned da = total_degree(), db = other.total_degree();
    if (da != db) return da < db;
    auto a = exp_.begin(), b = other.exp_.begin();
    while (a != exp_.end() && b != other.exp_.end()) {
        if (a->first != b->first) {
            // the side owning the smaller variable index has a positive
            // exponent there, the other side has zero
            return a->first > b->first; // a has less of the smaller variable iff its index is bigger
        }
        if (a->second != b->second) return a->second < b->second;
        ++a; ++b;
    }
    // equal prefixes: a remaining entry means more mass on small indices only
    // if degrees differed, which they do not; maps must both be exhausted
    return false;
}

std::string CommMonomial::str(const std::vector<std::string>& names) const {
    if (exp_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : exp_) {
        if (!first) out << "*";
        out << var_name(v, names);
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// CommPoly

CommPoly::CommPoly(Rational constant) {
    add(CommMonomial(), constant);
}

CommPoly CommPoly::variable(std::size_t index) {
    return monomial(CommMonomial::variable(index));
}

CommPoly CommPoly::monomial(CommMonomial m, Rational coeff) {
    CommPoly p;
    p.add(m, coeff);
    return p;
}

unsigned CommPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rational CommPoly::coeff(const CommMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

CommPoly& CommPoly::operator+=(const CommPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& scalar) {
    if (is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

CommPoly CommPoly::operator*(const CommPoly& other) const {
    CommPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add(ma * mb, ca * cb);
    return r;
}

std::string CommPoly::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [m, c] : terms_)
        parts.emplace_back(c, m.is_constant() ? "" : m.str(names));
    return join_terms(parts);
}

// ---------------------------------------------------------------------------
// ExtMonomial

ExtMonomial ExtMonomial::variable(std::size_t index) {
    ExtMonomial m;
    m.idx_.push_back(index);
    return m;
}

ExtMonomial::ExtMonomial(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 1; i < idx_.size(); ++i)
        if (idx_[i - 1] >= idx_[i])
            throw std::invalid_argument("exterior monomial indices must strictly increase");
}

bool ExtMonomial::operator<(const ExtMonomial& other) const {
    if (idx_.size() != other.idx_.size()) return idx_.size() < other.idx_.size();
    return idx_ < other.idx_;
}

std::string ExtMonomial::str(const std::vector<std::string>& names) const {
    if (idx_.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) out << "^";
        out << var_name(idx_[i], names);
    }
    return out.str();
}

SignedExtMonomial ext_product(const ExtMonomial& a, const ExtMonomial& b) {
    const auto& x = a.indices();
    const auto& y = b.indices();
    std::vector<std::size_t> merged;
    merged.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0, crossings = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return {ExtMonomial(), 0};
        if (x[i] < y[j]) {
            merged.push_back(x[i++]);
        } else {
            // y[j] moves past the remaining letters of x
            crossings += x.size() - i;
            merged.push_back(y[j++]);
        }
    }
    while (i < x.size()) merged.push_back(x[i++]);
    while (j < y.size()) merged.push_back(y[j++]);
    return {ExtMonomial(std::move(merged)), crossings % 2 == 0 ? 1 : -1};
}

// ---------------------------------------------------------------------------
// ExtPoly

ExtPoly::ExtPoly(Rational constant) {
    add(ExtMonomial(), constant);
}

ExtPoly ExtPoly::variable(std::size_t index) {
    return monomial(ExtMonomial::variable(index));
}

ExtPoly ExtPoly::monomial(ExtMonomial m, Rational coeff) {
    ExtPoly p;
    p.add(m, coeff);
    return p;
}

ExtPoly& ExtPoly::operator+=(const ExtPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

ExtPoly& ExtPoly::operator*=(const Rational& scalar) {
    if (is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

ExtPoly ExtPoly::operator*(const ExtPoly& other) const {
    ExtPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            auto w = ext_product(ma, mb);
            if (w.sign != 0) r.add(w.monomial, Rational(w.sign) * ca * cb);
        }
    return r;
}

std::string ExtPoly::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [m, c] : terms_)
        parts.emplace_back(c, m.is_constant() ? "" : m.str(names));
    return join_terms(parts);
}

// ---------------------------------------------------------------------------
// HbarPoly

HbarPoly::HbarPoly(Rational constant) {
    add(0, constant);
}

HbarPoly HbarPoly::hbar(unsigned power, Rational coeff) {
    HbarPoly p;
    p.add(power, coeff);
    return p;
}

Rational HbarPoly::coeff(unsigned power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

HbarPoly HbarPoly::shifted_down() const {
    if (!divisible_by_hbar()) throw std::invalid_argument("not divisible by the parameter");
    HbarPoly r;
    for (const auto& [k, c] : coeffs_) r.add(k - 1, c);
    return r;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add(k, c);
    return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add(k, -c);
    return *this;
}

HbarPoly& HbarPoly::operator*=(const Rational& scalar) {
    if (is_zero(scalar)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, c] : coeffs_) c *= scalar;
    return *this;
}

HbarPoly HbarPoly::operator*(const HbarPoly& other) const {
    HbarPoly r;
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : other.coeffs_) r.add(ka + kb, ca * cb);
    return r;
}

Rational HbarPoly::evaluate(const Rational& value) const {
    Rational r(0), p(1);
    unsigned reached = 0;
    for (const auto& [k, c] : coeffs_) {
        while (reached < k) { p *= value; ++reached; }
        r += c * p;
    }
    return r;
}

std::string HbarPoly::str() const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [k, c] : coeffs_) {
        std::string body;
        if (k == 1) body = "h";
        else if (k > 1) body = "h^" + std::to_string(k);
        parts.emplace_back(c, body);
    }
    return join_terms(parts);
}

// ---------------------------------------------------------------------------
// HPoly

HPoly::HPoly(CommPoly constant) {
    add(0, constant);
}

HPoly HPoly::monomial(const CommMonomial& m, Rational coeff) {
    HPoly p;
    p.add(0, CommPoly::monomial(m, std::move(coeff)));
    return p;
}

CommPoly HPoly::coeff(unsigned power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? CommPoly() : it->second;
}

void HPoly::add(unsigned power, const CommPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(power, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HPoly& HPoly::operator+=(const HPoly& other) {
    for (const auto& [k, p] : other.coeffs_) add(k, p);
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
    for (const auto& [k, p] : other.coeffs_) {
        CommPoly neg = p;
        neg *= Rational(-1);
        add(k, neg);
    }
    return *this;
}

HPoly& HPoly::operator*=(const Rational& scalar) {
    if (is_zero(scalar)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, p] : coeffs_) p *= scalar;
    return *this;
}

HPoly HPoly::operator*(const HPoly& other) const {
    HPoly r;
    for (const auto& [ka, pa] : coeffs_)
        for (const auto& [kb, pb] : other.coeffs_) r.add(ka + kb, pa * pb);
    return r;
}

CommPoly HPoly::evaluate(const Rational& value) const {
    CommPoly r;
    Rational p(1);
    unsigned reached = 0;
    for (const auto& [k, poly] : coeffs_) {
        while (reached < k) { p *= value; ++reached; }
        CommPoly scaled = poly;
        scaled *= p;
        r += scaled;
    }
    return r;
}

std::string HPoly::str(const std::vector<std::string>& names) const {
    std::vector<std::pair<Rational, std::string>> parts;
    for (const auto& [k, poly] : coeffs_)
        for (const auto& [m, c] : poly.terms()) {
            std::string body;
            if (k == 1) body = "h";
            else if (k > 1) body = "h^" + std::to_string(k);
            if (!m.is_constant()) {
                if (!body.empty()) body += "*";
                body += m.str(names);
            }
            parts.emplace_back(c, body);
        }
    return join_terms(parts);
}

} // namespace lodpois
