#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "agc/error.hpp"

namespace agc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of GF(p^e). The canonical representation is the residue
/// polynomial of degree < e over GF(p); an element is addressed by its
/// index in the field's enumeration order, which packs the coefficients
/// as a base-p integer (c0 least significant). Index 0 is the zero
/// element, index 1 is one.
class FieldElement {
public:
    int index() const { return idx_; }
    const Field& field() const { return *field_; }
    bool is_zero() const { return idx_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement inv() const;
    FieldElement pow(long long exponent) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
        return os << a.idx_;
    }

private:
    friend class Field;
    FieldElement(const Field* f, int idx) : field_(f), idx_(idx) {}

    const Field* field_;
    int idx_;
};

/// Immutable description of GF(p^e) with an explicit monic irreducible
/// modulus polynomial. All arithmetic is exact. Construction rejects a
/// non-prime characteristic and a reducible modulus. For q <= 256 the
/// field precomputes full add/mul/inv tables; larger fields fall back to
/// polynomial arithmetic on the residues.
class Field {
public:
    /// modulus is the coefficient list c0..ce of a monic polynomial of
    /// degree e over GF(p), e.g. {1,1,1} for x^2+x+1.
    static FieldPtr make(int p, int e, std::vector<int> modulus);

    /// GF(p) with modulus x.
    static FieldPtr prime(int p);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }

    /// Element by enumeration index; throws IndexOutOfRange.
    FieldElement element(int index) const;

    /// Element from a coefficient list (any length; reduced mod p and mod
    /// the modulus).
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;

    std::vector<int> coeffs(const FieldElement& a) const;

    /// All q elements, zero first, in index order.
    std::vector<FieldElement> elements() const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Index-level arithmetic. Inputs must be valid indices.
    int add_i(int a, int b) const;
    int sub_i(int a, int b) const;
    int mul_i(int a, int b) const;
    int neg_i(int a) const;
    int inv_i(int a) const;  // DivisionByZero on 0

private:
    Field(int p, int e, std::vector<int> modulus);

    std::vector<int> decode(int idx) const;   // index -> residue coefficients
    int encode(const std::vector<int>& c) const;

    int mul_slow(int a, int b) const;

    int p_ = 0;
    int e_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;

    // populated when q <= 256
    std::vector<std::uint16_t> add_table_, mul_table_;
    std::vector<std::uint16_t> neg_table_, inv_table_;
};

}  // namespace agc
