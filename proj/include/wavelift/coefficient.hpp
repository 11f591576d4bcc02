#pragma once

// Coefficient of a Laurent polynomial term: either an exact rational or a
// double-precision float. The mode is chosen per polynomial and is uniform
// within any one arithmetic expression; mixing modes is rejected at runtime.

#include "wavelift/rational.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wavelift {

enum class CoeffMode { exact, real };

inline const char* to_string(CoeffMode m) { return m == CoeffMode::exact ? "exact" : "real"; }

class Coeff {
public:
    Coeff() : mode_(CoeffMode::exact), rat_(0), real_(0.0) {}

    static Coeff exact(Rational r) {
        Coeff c;
        c.mode_ = CoeffMode::exact;
        c.rat_ = std::move(r);
        return c;
    }
    static Coeff exact(long long n, long long d = 1) { return exact(Rational::ratio(n, d)); }
    static Coeff real(double v) {
        Coeff c;
        c.mode_ = CoeffMode::real;
        c.real_ = v;
        return c;
    }
    static Coeff zero(CoeffMode m) { return m == CoeffMode::exact ? exact(0) : real(0.0); }
    static Coeff one(CoeffMode m) { return m == CoeffMode::exact ? exact(1) : real(1.0); }

    CoeffMode mode() const { return mode_; }
    const Rational& rat() const {
        require_mode(CoeffMode::exact);
        return rat_;
    }

    bool is_zero() const { return mode_ == CoeffMode::exact ? rat_.is_zero() : real_ == 0.0; }
    bool is_one() const {
        return mode_ == CoeffMode::exact ? rat_ == Rational(1) : real_ == 1.0;
    }

    double to_double() const { return mode_ == CoeffMode::exact ? rat_.to_double() : real_; }

    Coeff operator-() const {
        return mode_ == CoeffMode::exact ? exact(-rat_) : real(-real_);
    }

    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        check_same_mode(a, b);
        return a.mode_ == CoeffMode::exact ? exact(a.rat_ + b.rat_) : real(a.real_ + b.real_);
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b) {
        check_same_mode(a, b);
        return a.mode_ == CoeffMode::exact ? exact(a.rat_ - b.rat_) : real(a.real_ - b.real_);
    }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        check_same_mode(a, b);
        return a.mode_ == CoeffMode::exact ? exact(a.rat_ * b.rat_) : real(a.real_ * b.real_);
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        check_same_mode(a, b);
        return a.mode_ == CoeffMode::exact ? a.rat_ == b.rat_ : a.real_ == b.real_;
    }
    friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

    // Converts to real mode (identity when already real).
    Coeff to_real() const { return real(to_double()); }

    std::string str() const {
        if (mode_ == CoeffMode::exact) return rat_.str();
        std::ostringstream os;
        os << real_;
        return os.str();
    }

private:
    void require_mode(CoeffMode m) const {
        if (mode_ != m)
            throw std::invalid_argument(std::string("coefficient mode is ") + to_string(mode_) +
                                        ", expected " + to_string(m));
    }
    static void check_same_mode(const Coeff& a, const Coeff& b) {
        if (a.mode_ != b.mode_)
            throw std::invalid_argument("coefficient mode mismatch in arithmetic expression");
    }

    CoeffMode mode_;
    Rational rat_;
    double real_;
};

}  // namespace wavelift
