#pragma once

#include <gmpxx.h>

#include <string>

#include "mcm/errors.hpp"

namespace mcm {

// Exact scalar.  Rationals are stored as-is; prime-field elements are stored as
// their canonical representative 0..p-1 (denominator 1).
using Rat = mpq_class;

// The ground field: the rationals or F_p for a prime p.
class FieldSpec {
public:
    FieldSpec() : p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(unsigned long p);

    bool is_rational() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    // Canonical form of a scalar in this field.
    Rat normalize(const Rat& x) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(Rat(a + b)); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(Rat(a - b)); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(Rat(a * b)); }
    Rat neg(const Rat& a) const { return normalize(Rat(-a)); }
    Rat inv(const Rat& a) const;

    // "Q" or "Fp:<p>".
    std::string name() const;
    static FieldSpec from_name(const std::string& name);

private:
    explicit FieldSpec(unsigned long p) : p_(p) {}
    unsigned long p_;  // 0 means Q
};

// Serialization "p/q" with q > 0 and gcd(|p|,q) = 1, integers as "p".
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

}  // namespace mcm
