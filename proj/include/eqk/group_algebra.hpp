#pragma once

#include <vector>

#include "eqk/cyclotomic.hpp"
#include "eqk/group.hpp"

namespace eqk {

// An element of E[G], E a cyclotomic field: one coefficient per group
// element. Immutable value semantics; the group must outlive the element.
class GAElement {
public:
    GAElement() = default;
    explicit GAElement(const FiniteGroup& g) : group_(g), c_(g.order()) {}
    GAElement(const FiniteGroup& g, std::vector<Cyclo> coeffs);

    static GAElement basis(const FiniteGroup& g, unsigned element);
    static GAElement scalar(const FiniteGroup& g, const Cyclo& c);

    const FiniteGroup& group() const { return group_; }
    const Cyclo& coeff(unsigned g) const { return c_[g]; }
    Cyclo& coeff(unsigned g) { return c_[g]; }
    const std::vector<Cyclo>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_central() const;

    GAElement operator+(const GAElement& o) const;
    GAElement operator-(const GAElement& o) const;
    GAElement operator*(const GAElement& o) const;    // convolution
    GAElement operator-() const;
    GAElement scaled(const Cyclo& c) const;
    bool operator==(const GAElement& o) const;
    bool operator!=(const GAElement& o) const { return !(*this == o); }

    // The involution induced by g -> g^{-1} on group elements.
    GAElement involution() const;
    // Sum of coefficients (the augmentation map).
    Cyclo augmentation() const;
    // Push forward along a group homomorphism (e.g. a quotient projection).
    GAElement mapped(const GroupHom& pi) const;

private:
    FiniteGroup group_;
    std::vector<Cyclo> c_;
};

// A rectangular matrix over the group algebra. Entries share one group.
class GAMatrix {
public:
    GAMatrix() = default;
    GAMatrix(const FiniteGroup& g, unsigned rows, unsigned cols);

    static GAMatrix identity(const FiniteGroup& g, unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FiniteGroup& group() const { return group_; }

    const GAElement& at(unsigned r, unsigned c) const { return e_[r * cols_ + c]; }
    GAElement& at(unsigned r, unsigned c) { return e_[r * cols_ + c]; }

    GAMatrix operator*(const GAMatrix& o) const;
    GAMatrix operator+(const GAMatrix& o) const;
    GAMatrix transpose() const;
    bool operator==(const GAMatrix& o) const;

private:
    FiniteGroup group_;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<GAElement> e_;
};

} // namespace eqk
