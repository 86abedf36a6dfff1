#include "eqk/group_algebra.hpp"

namespace eqk {

GAElement::GAElement(const FiniteGroup& g, std::vector<Cyclo> coeffs)
    : group_(g), c_(std::move(coeffs)) {
    require(c_.size() == g.order(), "BadInput", "coefficient count != group order");
}

GAElement GAElement::basis(const FiniteGroup& g, unsigned element) {
    GAElement x(g);
    require(element < g.order(), "BadInput", "element index out of range");
    x.c_[element] = Cyclo::one();
    return x;
}

GAElement GAElement::scalar(const FiniteGroup& g, const Cyclo& c) {
    GAElement x(g);
    x.c_[g.identity()] = c;
    return x;
}

bool GAElement::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool GAElement::is_rational() const {
    for (const auto& c : c_)
        if (!c.is_rational()) return false;
    return true;
}

bool GAElement::is_central() const {
    // z central iff coefficients are constant on conjugacy classes
    for (const auto& cls : group_.conjugacy_classes())
        for (std::size_t i = 1; i < cls.size(); ++i)
            if (c_[cls[i]] != c_[cls[0]]) return false;
    return true;
}

GAElement GAElement::operator+(const GAElement& o) const {
    GAElement r = *this;
    for (unsigned g = 0; g < group_.order(); ++g) r.c_[g] += o.c_[g];
    return r;
}

GAElement GAElement::operator-(const GAElement& o) const {
    GAElement r = *this;
    for (unsigned g = 0; g < group_.order(); ++g) r.c_[g] -= o.c_[g];
    return r;
}

GAElement GAElement::operator-() const {
    GAElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

GAElement GAElement::operator*(const GAElement& o) const {
    GAElement r(group_);
    for (unsigned a = 0; a < group_.order(); ++a) {
        if (c_[a].is_zero()) continue;
        for (unsigned b = 0; b < group_.order(); ++b) {
            if (o.c_[b].is_zero()) continue;
            r.c_[group_.mul(a, b)] += c_[a] * o.c_[b];
        }
    }
    return r;
}

GAElement GAElement::scaled(const Cyclo& c) const {
    GAElement r = *this;
    for (auto& v : r.c_) v *= c;
    return r;
}

bool GAElement::operator==(const GAElement& o) const {
    if (!group_.same_as(o.group_)) return false;
    for (unsigned g = 0; g < group_.order(); ++g)
        if (c_[g] != o.c_[g]) return false;
    return true;
}

GAElement GAElement::involution() const {
    GAElement r(group_);
    for (unsigned g = 0; g < group_.order(); ++g) r.c_[group_.inverse(g)] = c_[g];
    return r;
}

Cyclo GAElement::augmentation() const {
    Cyclo s;
    for (const auto& c : c_) s += c;
    return s;
}

GAElement GAElement::mapped(const GroupHom& pi) const {
    require(pi.source.same_as(group_), "NotAHom", "homomorphism source mismatch");
    GAElement r(pi.target);
    for (unsigned g = 0; g < group_.order(); ++g) r.coeff(pi(g)) += c_[g];
    return r;
}

GAMatrix::GAMatrix(const FiniteGroup& g, unsigned rows, unsigned cols)
    : group_(g), rows_(rows), cols_(cols), e_(rows * cols, GAElement(g)) {}

GAMatrix GAMatrix::identity(const FiniteGroup& g, unsigned n) {
    GAMatrix m(g, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = GAElement::scalar(g, Cyclo::one());
    return m;
}

GAMatrix GAMatrix::operator*(const GAMatrix& o) const {
    require(cols_ == o.rows_, "BadInput", "matrix size mismatch");
    GAMatrix r(group_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (unsigned j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

GAMatrix GAMatrix::operator+(const GAMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "BadInput", "matrix size mismatch");
    GAMatrix r = *this;
    for (unsigned i = 0; i < rows_ * cols_; ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

GAMatrix GAMatrix::transpose() const {
    GAMatrix r(group_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool GAMatrix::operator==(const GAMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (unsigned i = 0; i < rows_ * cols_; ++i)
        if (!(e_[i] == o.e_[i])) return false;
    return true;
}

} // namespace eqk
