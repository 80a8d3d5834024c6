#include "mcm/localpoly.hpp"

#include <sstream>

#include "mcm/errors.hpp"

namespace mcm {

LocalPoly::LocalPoly(std::vector<Rat> coeffs, FieldSpec field) : field_(field) {
    coeffs_.reserve(coeffs.size());
    for (const Rat& c : coeffs) coeffs_.push_back(field_.normalize(c));
    trim();
}

LocalPoly LocalPoly::constant(const Rat& c, FieldSpec field) {
    return LocalPoly({c}, field);
}

LocalPoly LocalPoly::power(std::size_t e, FieldSpec field) {
    std::vector<Rat> c(e + 1, Rat(0));
    c[e] = 1;
    return LocalPoly(std::move(c), field);
}

std::size_t LocalPoly::degree() const {
    if (is_zero()) throw ShapeError("degree of zero polynomial");
    return coeffs_.size() - 1;
}

std::size_t LocalPoly::valuation() const {
    if (is_zero()) throw ShapeError("valuation of zero polynomial");
    std::size_t v = 0;
    while (coeffs_[v] == 0) ++v;
    return v;
}

LocalPoly LocalPoly::operator+(const LocalPoly& o) const {
    if (field_ != o.field_) throw ShapeError("poly add: field mismatch");
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = field_.add(out[i], o.coeffs_[i]);
    return LocalPoly(std::move(out), field_);
}

LocalPoly LocalPoly::operator-(const LocalPoly& o) const { return *this + o.negated(); }

LocalPoly LocalPoly::negated() const {
    std::vector<Rat> out(coeffs_);
    for (Rat& c : out) c = field_.neg(c);
    return LocalPoly(std::move(out), field_);
}

LocalPoly LocalPoly::mul(const LocalPoly& o, std::size_t cap) const {
    if (field_ != o.field_) throw ShapeError("poly mul: field mismatch");
    if (is_zero() || o.is_zero()) return LocalPoly(field_);
    std::size_t deg = degree() + o.degree();
    if (deg > cap)
        throw DegreeCapExceeded("polynomial degree " + std::to_string(deg) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<Rat> out(deg + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
    return LocalPoly(std::move(out), field_);
}

LocalPoly LocalPoly::shifted_down(std::size_t v) const {
    if (is_zero()) return *this;
    if (valuation() < v) throw ShapeError("shifted_down below valuation");
    return LocalPoly(std::vector<Rat>(coeffs_.begin() + static_cast<long>(v), coeffs_.end()),
                     field_);
}

std::string LocalPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << rat_to_string(coeffs_[i]);
        if (i > 0) {
            if (coeffs_[i] != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

void LocalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace mcm
