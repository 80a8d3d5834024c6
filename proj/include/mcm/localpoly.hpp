#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcm/field.hpp"

namespace mcm {

// Degree cap for arithmetic in k[t]; overflowing it is an error, never a
// silent truncation.
inline constexpr std::size_t kDefaultDegreeCap = 64;

// Element of k[t], read as an element of the localization at (t): polynomials
// with nonzero constant term are units.  Coefficients lowest degree first,
// no trailing zeros; the zero polynomial has an empty coefficient sequence.
class LocalPoly {
public:
    explicit LocalPoly(FieldSpec field = FieldSpec::rationals()) : field_(field) {}
    LocalPoly(std::vector<Rat> coeffs, FieldSpec field = FieldSpec::rationals());

    static LocalPoly constant(const Rat& c, FieldSpec field = FieldSpec::rationals());
    // t^e
    static LocalPoly power(std::size_t e, FieldSpec field = FieldSpec::rationals());

    const FieldSpec& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_unit() const { return !coeffs_.empty() && coeffs_[0] != 0; }
    std::size_t degree() const;  // zero polynomial has no degree; throws

    // t-adic valuation; only valid on nonzero polynomials.
    std::size_t valuation() const;

    LocalPoly operator+(const LocalPoly& o) const;
    LocalPoly operator-(const LocalPoly& o) const;
    LocalPoly mul(const LocalPoly& o, std::size_t cap = kDefaultDegreeCap) const;
    LocalPoly negated() const;

    // p / t^v for v <= valuation.
    LocalPoly shifted_down(std::size_t v) const;

    bool operator==(const LocalPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    void trim();
    FieldSpec field_;
    std::vector<Rat> coeffs_;
};

}  // namespace mcm
