#pragma once

#include <cstdint>
#include <string>

#include "pinch/errors.hpp"
#include "pinch/rational.hpp"

namespace pinch {

/// Element of GF(p) for an odd prime p < 2^31, stored as the canonical
/// representative in [0, p). The modulus travels with the element so that
/// cross-field arithmetic is caught instead of silently wrong.
class Fp {
public:
    Fp() = default; // sentinel with modulus 0; never enters arithmetic

    Fp(int64_t v, uint32_t p) : p_(p) {
        int64_t m = v % static_cast<int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<uint32_t>(m);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        uint64_t s = static_cast<uint64_t>(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(static_cast<uint32_t>(s), a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        uint64_t s = static_cast<uint64_t>(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(static_cast<uint32_t>(s), a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        uint64_t s = static_cast<uint64_t>(a.v_) * b.v_ % a.p_;
        return Fp::raw(static_cast<uint32_t>(s), a.p_);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inverse() const {
        if (v_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid
        int64_t t = 0, nt = 1;
        int64_t r = p_, nr = v_;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return Fp::raw(static_cast<uint32_t>(t), p_);
    }

    Fp pow(uint64_t e) const {
        Fp acc = Fp::raw(1 % p_, p_);
        Fp base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

private:
    static Fp raw(uint32_t v, uint32_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw RingMismatchError("GF(" + std::to_string(p_) + ") vs GF(" +
                                    std::to_string(o.p_) + ")");
    }

    uint32_t v_ = 0;
    uint32_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp k_zero(const Fp& like) { return Fp(0, like.modulus()); }
inline Fp k_one(const Fp& like) { return Fp(1, like.modulus()); }

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

/// Reduce a canonical rational mod p. Throws if p divides the denominator.
inline Fp reduce_mod(const Rat& r, uint32_t p) {
    unsigned long num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    unsigned long den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    if (den == 0)
        throw Error("denominator divisible by " + std::to_string(p));
    return Fp(static_cast<int64_t>(num), p) / Fp(static_cast<int64_t>(den), p);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace pinch
