#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "pinch/poly.hpp"

namespace pinch {

/// Explicit resource limits for basis computation. Exceeding a limit throws
/// ResourceError; there is no silent fallback.
struct GroebnerBudget {
    long max_pairs = 200000; // S-pairs processed
    int max_degree = 60;     // total degree of any S-pair lcm
};

/// Finitely generated ideal with an optional cached reduced Groebner basis.
/// The basis, when present, was computed under the ring's monomial order and
/// is reduced: generators monic, no leading term divides another, and every
/// tail is in normal form.
template <class K>
class Ideal {
public:
    Ideal(PolyRing<K> ring, std::vector<Poly<K>> gens) : ring_(std::move(ring)) {
        for (Poly<K>& g : gens) {
            if (g.ring() != ring_) throw RingMismatchError("generator from a different ring");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    const PolyRing<K>& ring() const { return ring_; }
    const std::vector<Poly<K>>& generators() const { return gens_; }

    bool has_basis() const { return basis_.has_value(); }
    const std::vector<Poly<K>>& basis() const {
        if (!basis_) throw ContractError("no Groebner basis cached; run buchberger first");
        return *basis_;
    }

    /// Same generators under another monomial order; drops the cached basis.
    Ideal with_order(MonomialOrder order) const {
        PolyRing<K> r = ring_.with_order(order);
        std::vector<Poly<K>> gens;
        gens.reserve(gens_.size());
        for (const Poly<K>& g : gens_) gens.push_back(change_ring(g, r));
        return Ideal(r, std::move(gens));
    }

    void set_basis(std::vector<Poly<K>> b) { basis_ = std::move(b); }

private:
    PolyRing<K> ring_;
    std::vector<Poly<K>> gens_;
    std::optional<std::vector<Poly<K>>> basis_;
};

/// Remainder of f under multivariate division by `basis` (full tail
/// reduction). Independent of basis order only when `basis` is a Groebner
/// basis.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis) {
    const PolyRing<K>& ring = f.ring();
    const int n = ring.nvars();
    Poly<K> h = f;
    Poly<K> rem(ring);
    while (!h.is_zero()) {
        const auto& lt = h.leading();
        bool reduced = false;
        for (const Poly<K>& g : basis) {
            if (g.is_zero()) continue;
            const auto& gl = g.leading();
            if (!expo_divides(gl.mono, lt.mono, n)) continue;
            K c = lt.coeff / gl.coeff;
            h -= g.term_mul(expo_sub(lt.mono, gl.mono, n), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += Poly<K>::from_terms(ring, {{lt.mono, lt.coeff}});
            h -= Poly<K>::from_terms(ring, {{lt.mono, lt.coeff}});
        }
    }
    return rem;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    if (f.ring() != g.ring()) throw RingMismatchError("S-polynomial of mixed rings");
    const int n = f.ring().nvars();
    const auto& lf = f.leading();
    const auto& lg = g.leading();
    Expo l = expo_lcm(lf.mono, lg.mono, n);
    K one = k_one(lf.coeff);
    return f.term_mul(expo_sub(l, lf.mono, n), one / lf.coeff) -
           g.term_mul(expo_sub(l, lg.mono, n), one / lg.coeff);
}

namespace detail {

template <class K>
std::vector<Poly<K>> reduce_basis(std::vector<Poly<K>> basis, const PolyRing<K>& ring) {
    const int n = ring.nvars();
    // minimal set of leading terms
    std::sort(basis.begin(), basis.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ring.cmp(a.leading().mono, b.leading().mono) < 0;
    });
    std::vector<Poly<K>> minimal;
    for (const Poly<K>& g : basis) {
        bool divisible = false;
        for (const Poly<K>& h : minimal)
            if (expo_divides(h.leading().mono, g.leading().mono, n)) {
                divisible = true;
                break;
            }
        if (!divisible) minimal.push_back(g);
    }
    // tail-reduce each against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly<K>> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly<K> r = normal_form(minimal[i], others).monic();
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    return minimal;
}

} // namespace detail

/// Buchberger's algorithm with the normal selection strategy and both
/// classical pair-elimination criteria. Returns the ideal with its reduced
/// basis cached; throws ResourceError when a budget is exceeded.
template <class K>
Ideal<K> buchberger(const Ideal<K>& input, const GroebnerBudget& budget = {}) {
    const PolyRing<K>& ring = input.ring();
    const int n = ring.nvars();

    std::vector<Poly<K>> basis;
    for (const Poly<K>& g : input.generators()) basis.push_back(g.monic());

    Ideal<K> out = input;
    auto finish_unit = [&]() {
        out.set_basis({Poly<K>::constant(ring, ring.scalar(1))});
        return out;
    };
    for (const Poly<K>& g : basis)
        if (total_degree(g.leading().mono, n) == 0) return finish_unit();

    if (basis.empty()) {
        out.set_basis({});
        return out;
    }

    struct Pair {
        size_t i, j;
        Expo lcm;
        int deg;
    };
    std::vector<Pair> pending;
    std::unordered_set<uint64_t> treated;
    auto pair_key = [](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
    };
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Expo l = expo_lcm(basis[i].leading().mono, basis[j].leading().mono, n);
            pending.push_back({i, j, l, total_degree(l, n)});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    auto was_treated = [&](size_t a, size_t b) { return treated.count(pair_key(a, b)) > 0; };

    long processed = 0;
    while (!pending.empty()) {
        // normal strategy: smallest lcm in the ring order
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            int c = ring.cmp(pending[k].lcm, pending[best].lcm);
            if (c < 0 || (c == 0 && (pending[k].i < pending[best].i ||
                                     (pending[k].i == pending[best].i &&
                                      pending[k].j < pending[best].j))))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        treated.insert(pair_key(pr.i, pr.j));

        if (++processed > budget.max_pairs)
            throw ResourceError("S-pair budget exceeded (" + std::to_string(budget.max_pairs) + ")");
        if (pr.deg > budget.max_degree)
            throw ResourceError("degree budget exceeded (lcm degree " + std::to_string(pr.deg) +
                                " > " + std::to_string(budget.max_degree) + ")");

        const Expo& li = basis[pr.i].leading().mono;
        const Expo& lj = basis[pr.j].leading().mono;
        // product criterion: coprime leading monomials
        if (pr.lcm == expo_add(li, lj, n)) continue;
        // chain criterion: some k with lt(k) | lcm and both side pairs treated
        bool skip = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!expo_divides(basis[k].leading().mono, pr.lcm, n)) continue;
            if (was_treated(pr.i, k) && was_treated(pr.j, k)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        Poly<K> s = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (s.is_zero()) continue;
        if (total_degree(s.leading().mono, n) == 0) return finish_unit();
        basis.push_back(s.monic());
        push_pairs(basis.size() - 1);
    }

    out.set_basis(detail::reduce_basis(std::move(basis), ring));
    return out;
}

/// Convenience overload matching the contract "compute under this order".
template <class K>
Ideal<K> buchberger(const Ideal<K>& input, MonomialOrder order,
                    const GroebnerBudget& budget = {}) {
    return buchberger(input.with_order(order), budget);
}

/// True when f lies in the ideal (requires a cached basis).
template <class K>
bool contains(const Ideal<K>& ideal, const Poly<K>& f) {
    return normal_form(f, ideal.basis()).is_zero();
}

/// Krull dimension of the quotient ring, read off the leading-term ideal:
/// the largest coordinate subspace avoiding every leading monomial's support.
/// Returns -1 for the unit ideal (empty scheme).
template <class K>
int quotient_dimension(const Ideal<K>& ideal) {
    const int n = ideal.ring().nvars();
    std::vector<Expo> lts;
    for (const Poly<K>& g : ideal.basis()) {
        if (total_degree(g.leading().mono, n) == 0) return -1;
        lts.push_back(g.leading().mono);
    }
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const Expo& e : lts) {
            bool escapes = false;
            for (int i = 0; i < n; ++i)
                if (e[static_cast<size_t>(i)] > 0 && !(mask & (1u << i))) {
                    escapes = true;
                    break;
                }
            if (!escapes) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace detail {

/// Enumerate the standard monomials of a zero-dimensional leading-term ideal
/// by walking the exponent box bounded by the pure-power generators.
template <class K>
std::vector<Expo> staircase_walk(const Ideal<K>& ideal) {
    const int n = ideal.ring().nvars();
    std::vector<Expo> lts;
    for (const Poly<K>& g : ideal.basis()) lts.push_back(g.leading().mono);
    // zero-dimensional: every variable has a pure-power leading monomial
    std::vector<int> bound(static_cast<size_t>(n), -1);
    for (const Expo& e : lts) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (e[static_cast<size_t>(i)] == 0) continue;
            if (var >= 0) {
                pure = false;
                break;
            }
            var = i;
        }
        if (pure && var >= 0) {
            int ex = e[static_cast<size_t>(var)];
            if (bound[static_cast<size_t>(var)] < 0 || ex < bound[static_cast<size_t>(var)])
                bound[static_cast<size_t>(var)] = ex;
        }
    }
    std::vector<Expo> result;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    while (true) {
        Expo e{};
        for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = static_cast<uint16_t>(cur[static_cast<size_t>(i)]);
        bool standard = true;
        for (const Expo& lt : lts)
            if (expo_divides(lt, e, n)) {
                standard = false;
                break;
            }
        if (standard) result.push_back(e);
        int i = 0;
        while (i < n) {
            ++cur[static_cast<size_t>(i)];
            if (cur[static_cast<size_t>(i)] < bound[static_cast<size_t>(i)]) break;
            cur[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return result;
}

} // namespace detail

/// Vector-space dimension of R/I for a zero-dimensional (or empty) quotient:
/// the number of standard monomials. Rejects positive-dimensional input.
template <class K>
long quotient_length(const Ideal<K>& ideal) {
    int dim = quotient_dimension(ideal);
    if (dim > 0)
        throw ContractError("quotient is " + std::to_string(dim) +
                            "-dimensional; length is defined for finite schemes only");
    if (dim < 0) return 0; // unit ideal, empty scheme
    return static_cast<long>(detail::staircase_walk(ideal).size());
}

/// The standard monomials themselves, sorted ascending in the ring order.
template <class K>
std::vector<Expo> standard_monomials(const Ideal<K>& ideal) {
    int dim = quotient_dimension(ideal);
    if (dim > 0) throw ContractError("infinite staircase");
    if (dim < 0) return {};
    std::vector<Expo> s = detail::staircase_walk(ideal);
    const PolyRing<K>& ring = ideal.ring();
    std::sort(s.begin(), s.end(),
              [&](const Expo& a, const Expo& b) { return ring.cmp(a, b) < 0; });
    return s;
}

/// Ideal of 2x2 minors of the Jacobian of a map A^2 -> A^3 given by three
/// polynomials in two variables. Its vanishing locus is where the map's
/// differential has rank <= 1.
template <class K>
Ideal<K> jacobian_minors(const std::vector<Poly<K>>& f) {
    if (f.size() != 3) throw ContractError("jacobian_minors expects exactly 3 polynomials");
    const PolyRing<K>& ring = f[0].ring();
    if (ring.nvars() != 2) throw ContractError("jacobian_minors expects exactly 2 variables");
    for (const Poly<K>& g : f)
        if (g.ring() != ring) throw RingMismatchError("jacobian_minors: mixed rings");
    std::vector<Poly<K>> ds, dt;
    for (const Poly<K>& g : f) {
        ds.push_back(g.derivative(0));
        dt.push_back(g.derivative(1));
    }
    std::vector<Poly<K>> minors;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            minors.push_back(ds[static_cast<size_t>(i)] * dt[static_cast<size_t>(j)] -
                             ds[static_cast<size_t>(j)] * dt[static_cast<size_t>(i)]);
    return Ideal<K>(ring, std::move(minors));
}

} // namespace pinch
