#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "pinch/errors.hpp"
#include "pinch/prime_field.hpp"
#include "pinch/rational.hpp"

namespace pinch {

enum class MonomialOrder { kDegRevLex, kLex };

inline const char* order_name(MonomialOrder o) {
    return o == MonomialOrder::kDegRevLex ? "degrevlex" : "lex";
}

// Exponent vectors are fixed-width; rings use at most kMaxVars variables
// (ramification ideals need 2, plus one localization variable).
constexpr int kMaxVars = 6;
using Expo = std::array<uint16_t, kMaxVars>;

inline Expo zero_expo() { return Expo{}; }

inline int total_degree(const Expo& e, int nvars) {
    int d = 0;
    for (int i = 0; i < nvars; ++i) d += e[i];
    return d;
}

inline bool expo_divides(const Expo& a, const Expo& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_lcm(const Expo& a, const Expo& b, int nvars) {
    Expo r{};
    for (int i = 0; i < nvars; ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Expo expo_add(const Expo& a, const Expo& b, int nvars) {
    Expo r{};
    for (int i = 0; i < nvars; ++i) r[i] = static_cast<uint16_t>(a[i] + b[i]);
    return r;
}

/// b - a, assuming a divides b.
inline Expo expo_sub(const Expo& b, const Expo& a, int nvars) {
    Expo r{};
    for (int i = 0; i < nvars; ++i) r[i] = static_cast<uint16_t>(b[i] - a[i]);
    return r;
}

/// Three-way comparison; > 0 means a comes before b (a is the larger
/// monomial). Variable 0 is the highest-ranked variable in both orders.
inline int expo_cmp(const Expo& a, const Expo& b, int nvars, MonomialOrder order) {
    if (order == MonomialOrder::kLex) {
        for (int i = 0; i < nvars; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    int da = total_degree(a, nvars), db = total_degree(b, nvars);
    if (da != db) return da < db ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

/// Ring context for sparse polynomials: variable names, monomial order and,
/// for K = Fp, the modulus. Polynomials refuse to mix contexts.
template <class K>
class PolyRing {
public:
    PolyRing() = default;

    PolyRing(std::vector<std::string> vars, MonomialOrder order, uint32_t modulus = 0)
        : vars_(std::move(vars)), order_(order), modulus_(modulus) {
        if (static_cast<int>(vars_.size()) > kMaxVars)
            throw ContractError("too many variables (max " + std::to_string(kMaxVars) + ")");
        if constexpr (std::is_same_v<K, Fp>) {
            if (modulus_ < 3) throw ContractError("GF(p) ring needs an odd prime modulus");
        } else {
            if (modulus_ != 0) throw ContractError("rational ring takes no modulus");
        }
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
    MonomialOrder order() const { return order_; }
    uint32_t modulus() const { return modulus_; }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars_[static_cast<size_t>(i)] == name) return i;
        return -1;
    }

    K scalar(long v) const {
        if constexpr (std::is_same_v<K, Fp>)
            return Fp(v, modulus_);
        else
            return Rat(static_cast<signed long>(v));
    }

    K scalar(const Rat& v) const {
        if constexpr (std::is_same_v<K, Fp>)
            return reduce_mod(v, modulus_);
        else
            return v;
    }

    int cmp(const Expo& a, const Expo& b) const { return expo_cmp(a, b, nvars(), order_); }

    PolyRing with_order(MonomialOrder o) const {
        PolyRing r = *this;
        r.order_ = o;
        return r;
    }

    bool operator==(const PolyRing& o) const {
        return vars_ == o.vars_ && order_ == o.order_ && modulus_ == o.modulus_;
    }
    bool operator!=(const PolyRing& o) const { return !(*this == o); }

private:
    std::vector<std::string> vars_;
    MonomialOrder order_ = MonomialOrder::kDegRevLex;
    uint32_t modulus_ = 0;
};

} // namespace pinch
