#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace orthocolour {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// Element of a FiniteField, stored as the coefficient vector of its
// representative polynomial (length = field degree, low degree first).
// Elements keep their field alive through a shared pointer.
class FieldElement {
public:
    FieldElement() = default;

    const std::vector<int>& coefficients() const { return coeffs_; }
    std::int64_t index() const;  // sum of coeffs_[i] * p^i
    const FiniteField& field() const { return *field_; }
    bool is_zero() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    FieldElement inverse() const;        // throws std::invalid_argument on zero
    FieldElement pow(std::int64_t e) const;

private:
    friend class FiniteField;
    FieldElement(FieldPtr f, std::vector<int> coeffs);

    FieldPtr field_;
    std::vector<int> coeffs_;
};

// GF(p^k) represented as Z_p[X] modulo the canonical irreducible modulus: the
// lexicographically smallest monic irreducible of degree k, coefficients
// compared low degree first.  For k = 1 the modulus is X (elements are plain
// residues mod p).
class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    // Throws std::invalid_argument unless p is prime, k >= 1 and p^k is small
    // enough to enumerate.
    static FieldPtr make(int p, int k);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::int64_t order() const { return q_; }
    // Coefficients c0..ck of the modulus, ck = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement element(std::int64_t index) const;      // 0 <= index < order
    FieldElement from_coefficients(std::vector<int> coeffs) const;
    FieldElement zero() const;
    FieldElement one() const;

    // Smallest element (by index) generating the multiplicative group.
    FieldElement primitive_element() const;
    // Nonzero squares, ascending by index.  Throws for characteristic 2.
    std::vector<FieldElement> quadratic_residues() const;

    bool operator==(const FiniteField& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    FiniteField(int p, int k, std::vector<int> modulus);
    std::vector<int> reduce(std::vector<int> poly) const;

    friend class FieldElement;
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    int p_, k_;
    std::int64_t q_;
    std::vector<int> modulus_;
};

}  // namespace orthocolour
