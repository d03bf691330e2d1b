#pragma once

#include <memory>
#include <vector>

#include "projmet/base.hpp"

namespace projmet {

// Finite field F_q with q = p^e, p prime, q <= 2^16.
//
// Elements are canonical integers in [0, q): residues for e = 1, base-p
// digit packing of the polynomial representative for e > 1.  The packing
// fixes a total order on elements that the rest of the library uses for
// tie-breaking.  Immutable after construction and safe to share.
class FiniteField {
public:
    // modulus: coefficients [c0, c1, ..., c_e] of a monic degree-e polynomial
    // over F_p, constant term first.  Required for e > 1 unless a built-in
    // exists (q in {4, 8, 9, 16, 25, 27}); must be empty for e = 1.
    static std::shared_ptr<const FiniteField> make(int p, int e = 1,
                                                   std::vector<int> modulus = {});

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Arithmetic on canonical encodings. div/inv throw Error on zero divisor.
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int div(int a, int b) const;
    int pow(int a, std::uint64_t k) const;

    bool same(const FiniteField& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    FiniteField() = default;
    void build_tables();

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    // log/antilog over a fixed generator, e > 1 only
    std::vector<int> log_, antilog_;
    std::vector<int> inv_; // all q, inv_[0] unused
};

using Field = std::shared_ptr<const FiniteField>;

inline void require_same_field(const Field& a, const Field& b) {
    if (!a || !b || !a->same(*b)) throw Error("field mismatch");
}

// Element with its field attached; checks that operands live in the same
// field.  Inner loops use the raw int API on FiniteField instead.
class FieldElement {
public:
    FieldElement(Field f, int v) : f_(std::move(f)), v_(v) {
        if (v_ < 0 || v_ >= f_->q()) throw Error("element encoding out of range");
    }
    int value() const { return v_; }
    const Field& field() const { return f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.f_, b.f_);
        return {a.f_, a.f_->div(a.v_, b.v_)};
    }
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement inverse() const { return {f_, f_->inv(v_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_->same(*b.f_) && a.v_ == b.v_;
    }

private:
    Field f_;
    int v_;
};

bool is_prime(int n);

} // namespace projmet
