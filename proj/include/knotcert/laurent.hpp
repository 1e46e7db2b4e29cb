#pragma once

// Exact Laurent polynomials with quarter-integer exponents, used for the
// Kauffman bracket (variable A) and the Jones polynomial (variable t).
// A stored exponent e stands for variable^(e/4), so integer powers of A
// and half-integer powers of t share one integer representation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotcert {

using BigInt = boost::multiprecision::cpp_int;

enum class Var { A, t };

inline const char* var_name(Var v) { return v == Var::A ? "A" : "t"; }

class Laurent {
public:
    // term map: exponent in quarter-units -> nonzero coefficient
    using Terms = std::map<std::int64_t, BigInt>;

    explicit Laurent(Var v) : var_(v) {}

    // c * variable^(exp_quarters/4)
    static Laurent monomial(Var v, BigInt coeff, std::int64_t exp_quarters) {
        Laurent p(v);
        if (coeff != 0) p.terms_[exp_quarters] = std::move(coeff);
        return p;
    }

    static Laurent constant(Var v, BigInt c) { return monomial(v, std::move(c), 0); }
    static Laurent zero(Var v) { return Laurent(v); }
    static Laurent one(Var v) { return constant(v, 1); }

    Var var() const { return var_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Laurent& o) const {
        return var_ == o.var_ && terms_ == o.terms_;
    }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent& operator+=(const Laurent& o) {
        check_var(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }

    Laurent operator-() const {
        Laurent r(var_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        a.check_var(b);
        Laurent r(a.var_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    // Exact division; throws std::domain_error if o is zero or does not
    // divide *this (nonzero remainder, including inexact coefficient steps).
    Laurent div_exact(const Laurent& o) const {
        check_var(o);
        if (o.is_zero()) throw std::domain_error("Laurent: division by zero");
        if (is_zero()) return Laurent(var_);
        // Long division from the top term. In an exact quotient the lowest
        // exponent is lowest(p) - lowest(q); stepping below that floor means
        // the remainder cannot vanish.
        const std::int64_t floor_exp = lowest_exp() - o.lowest_exp();
        const BigInt& qlead = o.terms_.rbegin()->second;
        Laurent rem = *this;
        Laurent quot(var_);
        while (!rem.is_zero()) {
            const std::int64_t base = rem.highest_exp() - o.highest_exp();
            if (base < floor_exp)
                throw std::domain_error("Laurent: inexact division (nonzero remainder)");
            const BigInt& rlead = rem.terms_.rbegin()->second;
            if (rlead % qlead != 0)
                throw std::domain_error("Laurent: inexact division (coefficient)");
            Laurent term = monomial(var_, rlead / qlead, base);
            quot += term;
            rem = rem - term * o;
        }
        return quot;
    }

    std::int64_t lowest_exp() const {
        if (is_zero()) throw std::logic_error("lowest_exp of zero polynomial");
        return terms_.begin()->first;
    }
    std::int64_t highest_exp() const {
        if (is_zero()) throw std::logic_error("highest_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    // A |-> t^(-1/4); only valid for integer powers of A.
    Laurent substitute_A_to_t() const {
        if (var_ != Var::A)
            throw std::invalid_argument("substitute_A_to_t: variable is not A");
        Laurent r(Var::t);
        for (const auto& [e, c] : terms_) {
            if (e % 4 != 0)
                throw std::invalid_argument("substitute_A_to_t: non-integer power of A");
            r.terms_[-e / 4] = c;
        }
        return r;
    }

    // Terms sorted by ascending exponent, exponents printed as reduced
    // fractions over 4, e.g. "-t^(1/2) - t^(5/2)".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                out << mag.str();
            } else {
                if (mag != 1) out << mag.str() << "*";
                out << var_name(var_) << "^(" << exp_fraction(e) << ")";
            }
        }
        return out.str();
    }

private:
    void check_var(const Laurent& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument("Laurent: variable tag mismatch");
    }

    void add_term(std::int64_t e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static std::string exp_fraction(std::int64_t e) {
        std::int64_t g = std::gcd(e < 0 ? -e : e, std::int64_t{4});
        std::int64_t num = e / g, den = 4 / g;
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }

    Var var_;
    Terms terms_;
};

// (-A^3)^k = (-1)^k A^(3k)
inline Laurent neg_cube_A_pow(std::int64_t k) {
    return Laurent::monomial(Var::A, (k % 2 == 0) ? 1 : -1, 12 * k);
}

}  // namespace knotcert
