#include "mcm/field.hpp"

namespace mcm {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned long p) {
    if (!is_prime(p)) throw BadInput("FieldSpec::prime: " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

Rat FieldSpec::normalize(const Rat& x) const {
    if (p_ == 0) return x;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    mpz_class dred = den % p;
    if (dred < 0) dred += p;
    if (dred == 0) throw ShapeError("prime-field scalar with denominator divisible by p");
    if (dred != 1) {
        mpz_class dinv;
        mpz_invert(dinv.get_mpz_t(), dred.get_mpz_t(), p.get_mpz_t());
        num *= dinv;
    }
    mpz_class r = num % p;
    if (r < 0) r += p;
    return Rat(r);
}

Rat FieldSpec::inv(const Rat& a) const {
    if (a == 0) throw ShapeError("inverse of zero");
    if (p_ == 0) return Rat(1 / a);
    Rat c = normalize(a);
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = c.get_num();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ShapeError("inverse of zero in F_p");
    return Rat(r);
}

std::string FieldSpec::name() const {
    if (p_ == 0) return "Q";
    return "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::from_name(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.rfind("Fp:", 0) == 0) {
        try {
            return prime(std::stoul(name.substr(3)));
        } catch (const std::logic_error&) {
            throw BadInput("bad field name: " + name);
        }
    }
    throw BadInput("bad field name: " + name);
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw BadInput("bad rational literal: " + s);
    if (r.get_den() == 0) throw BadInput("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace mcm
