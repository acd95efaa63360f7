#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "pinch/ring.hpp"

namespace pinch {

/// Sparse multivariate polynomial over K (Rat or Fp). Terms are kept sorted
/// descending by the ring's monomial order, with no zero coefficients and no
/// duplicate exponent vectors.
template <class K>
class Poly {
public:
    struct Term {
        Expo mono;
        K coeff;
    };

    Poly() = default;
    explicit Poly(PolyRing<K> ring) : ring_(std::move(ring)) {}

    static Poly constant(const PolyRing<K>& ring, K c) {
        Poly p(ring);
        if (!pinch::is_zero(c)) p.terms_.push_back({zero_expo(), std::move(c)});
        return p;
    }

    static Poly variable(const PolyRing<K>& ring, int var, int exp = 1) {
        if (var < 0 || var >= ring.nvars()) throw ContractError("variable index out of range");
        Poly p(ring);
        if (exp < 0) throw ContractError("negative exponent");
        Expo e{};
        e[static_cast<size_t>(var)] = static_cast<uint16_t>(exp);
        p.terms_.push_back({e, ring.scalar(1)});
        return p;
    }

    static Poly from_terms(const PolyRing<K>& ring, std::vector<Term> terms) {
        Poly p(ring);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const PolyRing<K>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    const Term& leading() const {
        if (terms_.empty()) throw ContractError("leading term of zero polynomial");
        return terms_.front();
    }

    /// Total degree; -1 for the zero polynomial.
    int total_deg() const {
        int d = -1;
        for (const Term& t : terms_) d = std::max(d, total_degree(t.mono, ring_.nvars()));
        return d;
    }

    /// Smallest total degree among terms; used for m-adic membership checks.
    int min_total_deg() const {
        if (terms_.empty()) return -1;
        int d = total_degree(terms_[0].mono, ring_.nvars());
        for (const Term& t : terms_) d = std::min(d, total_degree(t.mono, ring_.nvars()));
        return d;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = a.ring_.cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!pinch::is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        Poly r = *this;
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        const int n = a.ring_.nvars();
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_)
                acc.push_back({expo_add(ta.mono, tb.mono, n), ta.coeff * tb.coeff});
        r.terms_ = std::move(acc);
        r.normalize();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(ring_);
        if (pinch::is_zero(c)) return r;
        r.terms_ = terms_;
        for (Term& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    /// Multiply by a single term c * x^e.
    Poly term_mul(const Expo& e, const K& c) const {
        Poly r(ring_);
        if (pinch::is_zero(c)) return r;
        r.terms_ = terms_;
        const int n = ring_.nvars();
        for (Term& t : r.terms_) {
            t.mono = expo_add(t.mono, e, n);
            t.coeff = t.coeff * c;
        }
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = ring_.scalar(1) / terms_.front().coeff;
        return scaled(inv);
    }

    Poly derivative(int var) const {
        if (var < 0 || var >= ring_.nvars()) throw ContractError("variable index out of range");
        Poly r(ring_);
        for (const Term& t : terms_) {
            uint16_t e = t.mono[static_cast<size_t>(var)];
            if (e == 0) continue;
            K c = t.coeff * ring_.scalar(static_cast<long>(e));
            if (pinch::is_zero(c)) continue;
            Term nt{t.mono, std::move(c)};
            nt.mono[static_cast<size_t>(var)] = static_cast<uint16_t>(e - 1);
            r.terms_.push_back(std::move(nt));
        }
        r.normalize();
        return r;
    }

    K eval(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != ring_.nvars())
            throw ContractError("evaluation point has wrong arity");
        K acc = ring_.scalar(0);
        for (const Term& t : terms_) {
            K v = t.coeff;
            for (int i = 0; i < ring_.nvars(); ++i)
                for (uint16_t k = 0; k < t.mono[static_cast<size_t>(i)]; ++k)
                    v = v * point[static_cast<size_t>(i)];
            acc = acc + v;
        }
        return acc;
    }

    /// Substitute images[i] for variable i, optionally truncating every
    /// intermediate product at total degree `trunc` (-1 = no truncation).
    /// Images may live in a different ring over the same field; all images
    /// must agree on their ring, which becomes the result's ring.
    Poly subst(const std::vector<Poly>& images, int trunc = -1) const {
        if (static_cast<int>(images.size()) != ring_.nvars())
            throw ContractError("substitution needs one image per variable");
        const PolyRing<K>& target = images.empty() ? ring_ : images[0].ring();
        for (const Poly& im : images)
            if (im.ring() != target) throw RingMismatchError("substitution images disagree on ring");
        std::vector<std::vector<Poly>> pows(images.size());
        Poly one = Poly::constant(target, target.scalar(1));
        Poly result(target);
        for (const Term& t : terms_) {
            Poly acc = Poly::constant(target, t.coeff);
            for (size_t i = 0; i < images.size(); ++i) {
                uint16_t e = t.mono[i];
                if (e == 0) continue;
                auto& cache = pows[i];
                if (cache.empty()) cache.push_back(one);
                while (cache.size() <= e) {
                    Poly nxt = cache.back() * images[i];
                    if (trunc >= 0) nxt = nxt.truncated(trunc);
                    cache.push_back(std::move(nxt));
                }
                acc = acc * cache[e];
                if (trunc >= 0) acc = acc.truncated(trunc);
            }
            result += acc;
        }
        if (trunc >= 0) result = result.truncated(trunc);
        return result;
    }

    /// Drop all terms of total degree > maxdeg.
    Poly truncated(int maxdeg) const {
        Poly r(ring_);
        for (const Term& t : terms_)
            if (total_degree(t.mono, ring_.nvars()) <= maxdeg) r.terms_.push_back(t);
        return r;
    }

    bool operator==(const Poly& o) const {
        if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void check_ring(const Poly& o) const {
        if (ring_ != o.ring_) throw RingMismatchError("polynomials from different rings");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
            return ring_.cmp(a.mono, b.mono) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (Term& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && pinch::is_zero(out.back().coeff)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    PolyRing<K> ring_;
    std::vector<Term> terms_;
};

namespace detail {
template <class KOut>
inline KOut convert_scalar(const PolyRing<KOut>& target, const Rat& c) {
    return target.scalar(c);
}
inline Fp convert_scalar(const PolyRing<Fp>& target, const Fp& c) {
    if (c.modulus() != target.modulus())
        throw RingMismatchError("prime-field scalar has wrong modulus for target ring");
    return c;
}
} // namespace detail

/// Re-express a polynomial in another ring, matching variables by name.
/// Handles order changes, embeddings into rings with extra variables, and
/// coefficient reduction Rat -> Fp.
template <class KOut, class KIn>
Poly<KOut> change_ring(const Poly<KIn>& p, const PolyRing<KOut>& target) {
    const int n_in = p.ring().nvars();
    std::vector<int> map(static_cast<size_t>(n_in));
    for (int i = 0; i < n_in; ++i) {
        int j = target.var_index(p.ring().var_name(i));
        map[static_cast<size_t>(i)] = j;
    }
    std::vector<typename Poly<KOut>::Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Expo e{};
        for (int i = 0; i < n_in; ++i) {
            if (t.mono[static_cast<size_t>(i)] == 0) continue;
            int j = map[static_cast<size_t>(i)];
            if (j < 0)
                throw RingMismatchError("variable '" + p.ring().var_name(i) +
                                        "' missing from target ring");
            e[static_cast<size_t>(j)] = t.mono[static_cast<size_t>(i)];
        }
        KOut c = detail::convert_scalar(target, t.coeff);
        if (!is_zero(c)) terms.push_back({e, std::move(c)});
    }
    return Poly<KOut>::from_terms(target, std::move(terms));
}

/// Clear denominators and divide by the integer content, making the leading
/// coefficient positive: the canonical primitive integer representative of a
/// rational polynomial up to scale.
inline Poly<Rat> primitive_integer(const Poly<Rat>& p) {
    if (p.is_zero()) return p;
    Int den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    Int content = 0;
    for (const auto& t : p.terms()) {
        Int scaled = t.coeff.get_num() * (den / t.coeff.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    if (sgn(p.leading().coeff) < 0) content = -content;
    return p.scaled(make_rat(den, content));
}

} // namespace pinch
