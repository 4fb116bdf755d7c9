#pragma once

#include "xxz/algebra/cyclotomic3.hpp"
#include "xxz/algebra/errors.hpp"
#include "xxz/algebra/generic_q.hpp"
#include "xxz/algebra/rational.hpp"

#include <string>

namespace xxz {

// Uniform access to the scalar rings. Specializations for polynomial rings
// live next to MultiPoly.
template <class T>
struct Ring;

template <>
struct Ring<Rational> {
    static constexpr bool is_field = true;
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational divide(const Rational& x, const Rational& y) {
        if (y == 0) throw DivisionByZero();
        return x / y;
    }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct Ring<Cyclotomic3> {
    static constexpr bool is_field = true;
    static Cyclotomic3 zero() { return 0; }
    static Cyclotomic3 one() { return 1; }
    static bool is_zero(const Cyclotomic3& x) { return x.is_zero(); }
    static Cyclotomic3 divide(const Cyclotomic3& x, const Cyclotomic3& y) { return x / y; }
    static std::string str(const Cyclotomic3& x) { return x.str(); }
};

template <>
struct Ring<GenericQ> {
    static constexpr bool is_field = false;
    static GenericQ zero() { return 0; }
    static GenericQ one() { return 1; }
    static bool is_zero(const GenericQ& x) { return x.is_zero(); }
    static GenericQ divide(const GenericQ& x, const GenericQ& y) { return x / y; }
    static std::string str(const GenericQ& x) { return x.str(); }
};

// Coefficient rings that carry the deformation parameter q.
template <class C>
struct QRing;

template <>
struct QRing<GenericQ> {
    static constexpr const char* name = "generic";
    static GenericQ q() { return GenericQ::q(); }
    static GenericQ q_pow(int k) { return GenericQ::q_pow(k); }
    // (q - q^{-1})^k, k of any sign
    static GenericQ delta_pow(int k) { return GenericQ(Laurent(1), k); }
    static GenericQ star(const GenericQ& x) { return x.star(); }
    static Cyclotomic3 at_omega(const GenericQ& x) { return x.at_omega(); }
    static GenericQ parse(const std::string& s) { return GenericQ::parse(s); }
};

template <>
struct QRing<Cyclotomic3> {
    static constexpr const char* name = "omega";
    static Cyclotomic3 q() { return Cyclotomic3::omega(); }
    static Cyclotomic3 q_pow(int k) { return Cyclotomic3::omega().pow(k); }
    static Cyclotomic3 delta_pow(int k) {
        return (Cyclotomic3::omega() - Cyclotomic3::omega().pow(2)).pow(k);
    }
    static Cyclotomic3 star(const Cyclotomic3& x) { return x.conj(); }
    static Cyclotomic3 at_omega(const Cyclotomic3& x) { return x; }
    static Cyclotomic3 parse(const std::string& s) { return Cyclotomic3::parse(s); }
};

}  // namespace xxz
