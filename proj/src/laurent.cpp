#include "wavelift/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wavelift {

namespace {

void check_same_mode(CoeffMode a, CoeffMode b) {
    if (a != b) throw std::invalid_argument("polynomial coefficient mode mismatch");
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly1

LaurentPoly1 LaurentPoly1::constant(const Coeff& c) { return monomial(c, 0); }

LaurentPoly1 LaurentPoly1::monomial(const Coeff& c, int exponent) {
    LaurentPoly1 p(c.mode());
    p.set_term(exponent, c);
    return p;
}

LaurentPoly1 LaurentPoly1::from_terms(CoeffMode mode,
                                      const std::vector<std::pair<int, Coeff>>& terms) {
    LaurentPoly1 p(mode);
    for (const auto& [k, c] : terms) {
        check_same_mode(mode, c.mode());
        p.set_term(k, p.at(k) + c);
    }
    return p;
}

Coeff LaurentPoly1::at(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff::zero(mode_) : it->second;
}

void LaurentPoly1::set_term(int k, const Coeff& c) {
    check_same_mode(mode_, c.mode());
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

int LaurentPoly1::min_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPoly1::max_exp() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

int LaurentPoly1::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
    return max_exp() - min_exp();
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 r(mode_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly1 operator+(const LaurentPoly1& a, const LaurentPoly1& b) {
    check_same_mode(a.mode_, b.mode_);
    LaurentPoly1 r = a;
    for (const auto& [k, c] : b.terms_) r.set_term(k, r.at(k) + c);
    return r;
}

LaurentPoly1 operator-(const LaurentPoly1& a, const LaurentPoly1& b) { return a + (-b); }

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    check_same_mode(a.mode_, b.mode_);
    LaurentPoly1 r(a.mode_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.set_term(ka + kb, r.at(ka + kb) + ca * cb);
    return r;
}

bool operator==(const LaurentPoly1& a, const LaurentPoly1& b) {
    check_same_mode(a.mode_, b.mode_);
    return a.terms_ == b.terms_;
}

std::pair<LaurentPoly1, LaurentPoly1> LaurentPoly1::split_scalar() const {
    LaurentPoly1 scalar(mode_);
    LaurentPoly1 residual(mode_);
    for (const auto& [k, c] : terms_) {
        if (k == 0)
            scalar.terms_.emplace(k, c);
        else
            residual.terms_.emplace(k, c);
    }
    return {scalar, residual};
}

LaurentPoly1 LaurentPoly1::to_real() const {
    LaurentPoly1 r(CoeffMode::real);
    for (const auto& [k, c] : terms_) r.set_term(k, c.to_real());
    return r;
}

std::string LaurentPoly1::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        if (it->first != 0) os << "*" << var << "^" << it->first;
    }
    return os.str();
}

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2 LaurentPoly2::constant(const Coeff& c) { return monomial(c, 0, 0); }

LaurentPoly2 LaurentPoly2::monomial(const Coeff& c, int km, int kn) {
    LaurentPoly2 p(c.mode());
    p.set_term(km, kn, c);
    return p;
}

bool LaurentPoly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{0, 0} &&
           terms_.begin()->second.is_one();
}

Coeff LaurentPoly2::at(int km, int kn) const {
    auto it = terms_.find({km, kn});
    return it == terms_.end() ? Coeff::zero(mode_) : it->second;
}

void LaurentPoly2::set_term(int km, int kn, const Coeff& c) {
    check_same_mode(mode_, c.mode());
    if (c.is_zero())
        terms_.erase({km, kn});
    else
        terms_[{km, kn}] = c;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r(mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
    check_same_mode(a.mode_, b.mode_);
    LaurentPoly2 r = a;
    for (const auto& [e, c] : b.terms_) r.set_term(e.first, e.second, r.at(e.first, e.second) + c);
    return r;
}

LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) { return a + (-b); }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    check_same_mode(a.mode_, b.mode_);
    LaurentPoly2 r(a.mode_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int km = ea.first + eb.first;
            int kn = ea.second + eb.second;
            r.set_term(km, kn, r.at(km, kn) + ca * cb);
        }
    return r;
}

bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    check_same_mode(a.mode_, b.mode_);
    return a.terms_ == b.terms_;
}

LaurentPoly2 LaurentPoly2::transpose() const {
    LaurentPoly2 r(mode_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exp{e.second, e.first}, c);
    return r;
}

LaurentPoly2 LaurentPoly2::to_real() const {
    LaurentPoly2 r(CoeffMode::real);
    for (const auto& [e, c] : terms_) r.set_term(e.first, e.second, c.to_real());
    return r;
}

double LaurentPoly2::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_double()));
    return m;
}

std::string LaurentPoly2::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.str();
        if (it->first.first != 0) os << "*z_m^" << it->first.first;
        if (it->first.second != 0) os << "*z_n^" << it->first.second;
    }
    return os.str();
}

LaurentPoly2 orient(const LaurentPoly1& p, Axis axis) {
    LaurentPoly2 r(p.mode());
    for (const auto& [k, c] : p.terms()) {
        if (axis == Axis::horizontal)
            r.set_term(k, 0, c);
        else
            r.set_term(0, k, c);
    }
    return r;
}

double max_abs_diff(const LaurentPoly2& a, const LaurentPoly2& b) {
    // Works across modes by comparing double values termwise.
    double m = 0.0;
    for (const auto& [e, c] : a.terms()) {
        auto it = b.terms().find(e);
        double other = it == b.terms().end() ? 0.0 : it->second.to_double();
        m = std::max(m, std::abs(c.to_double() - other));
    }
    for (const auto& [e, c] : b.terms()) {
        if (a.terms().find(e) == a.terms().end()) m = std::max(m, std::abs(c.to_double()));
    }
    return m;
}

}  // namespace wavelift
