#pragma once

// Sparse Laurent polynomials in one and two variables.
//
// Conventions:
//  - A stored exponent e represents the monomial z^e (negative exponents are
//    acausal taps). Signals are X(z) = sum_i x_i z^{+i}, so applying a tap
//    with exponent e to a signal reads sample i - e.
//  - LaurentPoly2 exponent pairs are (k_m, k_n): k_m indexes the horizontal
//    variable z_m (columns), k_n the vertical variable z_n (rows).
//  - No zero coefficients are ever stored; the empty term map is the zero
//    polynomial. Every operation evicts cancelled terms, so tap_count is
//    well-defined for operation counting.
//  - All terms of one polynomial share a coefficient mode (exact or real);
//    arithmetic between polynomials of different modes is rejected.

#include "wavelift/coefficient.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wavelift {

enum class Axis { horizontal, vertical };

class LaurentPoly1 {
public:
    explicit LaurentPoly1(CoeffMode mode = CoeffMode::exact) : mode_(mode) {}

    static LaurentPoly1 zero(CoeffMode mode) { return LaurentPoly1(mode); }
    static LaurentPoly1 constant(const Coeff& c);
    static LaurentPoly1 monomial(const Coeff& c, int exponent);
    // Builds from a list of (exponent, coefficient) pairs.
    static LaurentPoly1 from_terms(CoeffMode mode,
                                   const std::vector<std::pair<int, Coeff>>& terms);

    CoeffMode mode() const { return mode_; }
    const std::map<int, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient at exponent k (zero when the term is absent).
    Coeff at(int k) const;
    void set_term(int k, const Coeff& c);

    int min_exp() const;
    int max_exp() const;
    // max exponent - min exponent; undefined (throws) for the zero polynomial.
    int degree() const;
    int tap_count() const { return static_cast<int>(terms_.size()); }

    LaurentPoly1 operator-() const;
    friend LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b);
    friend LaurentPoly1 operator-(const LaurentPoly1& a, const LaurentPoly1& b);
    friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
    friend bool operator==(const LaurentPoly1& a, const LaurentPoly1& b);
    friend bool operator!=(const LaurentPoly1& a, const LaurentPoly1& b) { return !(a == b); }

    // Splits into (scalar_part, residual): the exponent-0 term and the rest.
    // scalar_part + residual reconstructs the polynomial exactly.
    std::pair<LaurentPoly1, LaurentPoly1> split_scalar() const;

    LaurentPoly1 to_real() const;

    // Debug rendering as a sum of c*z^k terms in descending exponent order.
    std::string str(const std::string& var = "z") const;

private:
    CoeffMode mode_;
    std::map<int, Coeff> terms_;
};

class LaurentPoly2 {
public:
    using Exp = std::pair<int, int>;  // (k_m horizontal, k_n vertical)

    explicit LaurentPoly2(CoeffMode mode = CoeffMode::exact) : mode_(mode) {}

    static LaurentPoly2 zero(CoeffMode mode) { return LaurentPoly2(mode); }
    static LaurentPoly2 constant(const Coeff& c);
    static LaurentPoly2 one(CoeffMode mode) { return constant(Coeff::one(mode)); }
    static LaurentPoly2 monomial(const Coeff& c, int km, int kn);

    CoeffMode mode() const { return mode_; }
    const std::map<Exp, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    Coeff at(int km, int kn) const;
    void set_term(int km, int kn, const Coeff& c);
    int tap_count() const { return static_cast<int>(terms_.size()); }

    LaurentPoly2 operator-() const;
    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    // Swaps the two variables: every term (k_m, k_n) -> (k_n, k_m).
    LaurentPoly2 transpose() const;

    LaurentPoly2 to_real() const;

    // Largest absolute value among all term coefficients (0 for zero poly).
    double max_abs_coeff() const;

    // Debug rendering as a sum of c*z_m^a*z_n^b terms in canonical exponent
    // order (lexicographic, descending).
    std::string str() const;

private:
    CoeffMode mode_;
    std::map<Exp, Coeff> terms_;
};

// Embeds a univariate polynomial along one image axis:
// horizontal maps k -> (k, 0), vertical maps k -> (0, k).
LaurentPoly2 orient(const LaurentPoly1& p, Axis axis);

// Largest absolute coefficient of (a - b); tolerant comparison helper.
double max_abs_diff(const LaurentPoly2& a, const LaurentPoly2& b);

}  // namespace wavelift
