#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qgp/errors.hpp"

namespace qgp {

/// Arbitrary-precision rational scalar. All arithmetic is exact; values are
/// kept in canonical form (reduced fraction, positive denominator).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw Error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        try {
            mpq_class v(s);
            if (v.get_den() == 0) throw ParseError("Rat: zero denominator in '" + s + "'");
            v.canonicalize();
            return Rat(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("Rat: cannot parse '" + s + "'");
        }
    }

    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return v_ == 0; }

    Rat inv() const {
        if (is_zero()) throw Error("Rat: division by zero");
        return Rat(1 / v_);
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Prime-field scalar F_p. The modulus is a session-wide setting, validated
/// once at session start.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) : v_(reduce(n)) {}  // NOLINT(google-explicit-constructor)

    static void set_modulus(std::int64_t p) {
        if (p < 2 || !is_prime(p)) throw UnsupportedField("Fp: modulus " + std::to_string(p) + " is not prime");
        modulus_ = p;
    }
    static std::int64_t modulus() {
        if (modulus_ == 0) throw UnsupportedField("Fp: modulus not set");
        return modulus_;
    }

    static Fp from_string(const std::string& s) {
        // Accepts decimal integers and "a/b" fractions.
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Fp(std::stoll(s));
            Fp num(std::stoll(s.substr(0, slash)));
            Fp den(std::stoll(s.substr(slash + 1)));
            return num / den;
        } catch (const std::exception&) {
            throw ParseError("Fp: cannot parse '" + s + "'");
        }
    }

    std::string str() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }

    Fp inv() const {
        if (is_zero()) throw Error("Fp: division by zero");
        // extended Euclid
        std::int64_t a = v_, b = modulus(), x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        Fp r; r.v_ = reduce(x0);
        return r;
    }

    Fp operator-() const { Fp r; r.v_ = v_ == 0 ? 0 : modulus() - v_; return r; }
    Fp& operator+=(const Fp& o) { v_ = (v_ + o.v_) % modulus(); return *this; }
    Fp& operator-=(const Fp& o) { v_ = reduce(v_ - o.v_); return *this; }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<std::int64_t>((static_cast<__int128>(v_) * o.v_) % modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

private:
    static std::int64_t reduce(std::int64_t n) {
        std::int64_t p = modulus();
        std::int64_t r = n % p;
        return r < 0 ? r + p : r;
    }
    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    static inline std::int64_t modulus_ = 0;
    std::int64_t v_;
};

template <class F>
bool is_zero(const F& x) { return x.is_zero(); }

}  // namespace qgp
