#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace minpoly::oracle {

/// Upper bound on the number of candidate polynomials examined per query.
struct Budget {
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

template <FieldScalar S>
struct OracleResult {
    Degree min_degree;
    /// Every monic minimal polynomial, sorted by coefficient tuple low-to-high.
    std::vector<Poly<S>> polys;
};

namespace detail {

/// Recurrence check written out independently of the engine's version.
template <Field F>
bool annihilates(const std::vector<scalar_t<F>>& monic_coeffs, const Sequence<F>& s) {
    const std::size_t d = monic_coeffs.size() - 1;
    const auto terms = s.terms();
    for (std::size_t j = d; j < terms.size(); ++j) {
        auto acc = s.field().zero();
        for (std::size_t k = 0; k <= d; ++k)
            acc = acc + monic_coeffs[k] * terms[j - d + k];
        if (!acc.is_zero()) return false;
    }
    return true;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

/// Visits every monic polynomial of degree d in lexicographic order of the
/// low-to-high coefficient tuple. `fn` returns false to stop early.
template <FiniteField F, class Fn>
void for_each_monic(const F& field, std::size_t d, std::uint64_t& spent, const Budget& budget, Fn&& fn) {
    const std::uint64_t q = field.order();
    const std::uint64_t count = checked_pow(q, d, budget.max_candidates);
    if (spent + count > budget.max_candidates)
        throw Error(Errc::budget_exceeded, "degree " + std::to_string(d) + " enumeration exceeds budget of " +
                                               std::to_string(budget.max_candidates) + " candidates");
    spent += count;

    std::vector<std::uint64_t> digits(d, 0);
    std::vector<scalar_t<F>> coeffs(d + 1, field.zero());
    coeffs[d] = field.one();
    for (std::uint64_t n = 0; n < count; ++n) {
        if (!fn(coeffs)) return;
        // increment with coefficient 0 as the most significant digit
        for (std::size_t pos = d; pos-- > 0;) {
            if (++digits[pos] < q) {
                coeffs[pos] = field.element(digits[pos]);
                break;
            }
            digits[pos] = 0;
            coeffs[pos] = field.zero();
        }
    }
}

template <Field F>
void require_finite(const Sequence<F>& s) {
    if constexpr (!FiniteField<F>)
        throw Error(Errc::infinite_field, "brute force needs a finite field, got " +
                                               s.field().descriptor().to_string());
}

} // namespace detail

/// Smallest d such that some monic polynomial of degree d annihilates s.
template <Field F>
Degree brute_force_min_degree(const Sequence<F>& s, Budget budget = {}) {
    detail::require_finite(s);
    if constexpr (FiniteField<F>) {
        std::uint64_t spent = 0;
        for (std::size_t d = 0; d <= s.size(); ++d) {
            bool found = false;
            detail::for_each_monic(s.field(), d, spent, budget, [&](const auto& coeffs) {
                found = detail::annihilates(coeffs, s);
                return !found;
            });
            if (found) return Degree(d);
        }
        throw Error(Errc::invariant_violation, "x^n failed to be a characteristic polynomial");
    }
    return Degree::neg_inf();
}

/// All monic characteristic polynomials of minimal degree.
template <Field F>
OracleResult<scalar_t<F>> enumerate_minimal_polys(const Sequence<F>& s, Budget budget = {}) {
    detail::require_finite(s);
    OracleResult<scalar_t<F>> out;
    if constexpr (FiniteField<F>) {
        out.min_degree = brute_force_min_degree(s, budget);
        std::uint64_t spent = 0;
        detail::for_each_monic(s.field(), out.min_degree.value(), spent, budget, [&](const auto& coeffs) {
            if (detail::annihilates(coeffs, s)) out.polys.emplace_back(coeffs);
            return true;
        });
    }
    return out;
}

/// Membership by binary search in a result's sorted list.
template <FieldScalar S>
bool contains(const OracleResult<S>& r, const Poly<S>& p) {
    return std::binary_search(r.polys.begin(), r.polys.end(), p);
}

} // namespace minpoly::oracle
