#pragma once

#include <compare>
#include <string>

namespace mcm {

// Integer extended by -infinity and +infinity.  Projective dimension and depth
// live here: pd(0) = -inf, depth(0) = +inf.
class ExtInt {
public:
    static ExtInt neg_infinity() { return ExtInt(Kind::NegInf, 0); }
    static ExtInt finite(long v) { return ExtInt(Kind::Finite, v); }
    static ExtInt pos_infinity() { return ExtInt(Kind::PosInf, 0); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInf; }
    bool is_pos_infinity() const { return kind_ == Kind::PosInf; }

    // Only valid on finite values.
    long value() const { return value_; }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        if (a.kind_ == Kind::Finite) return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const ExtInt& a, long v) { return a == finite(v); }

    std::string str() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "+inf";
            default: return std::to_string(value_);
        }
    }

private:
    enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
    ExtInt(Kind k, long v) : kind_(k), value_(v) {}
    Kind kind_;
    long value_;
};

}  // namespace mcm
