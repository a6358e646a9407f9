#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "engine.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace minpoly {

/// Reference construction of C^(1)..C^(n) with explicit history.
///
/// Keeps every earlier candidate C^(j), its degree d_j and discrepancy c_j.
/// For a nonzero discrepancy at step i the update uses the antecedent index
///   a = max { 1 <= j <= i-2 : d_j < d_{i-1} }
/// and the exponent e = 2 d_{i-1} - i:
///   e >= 0:  c_a C^(i-1) - c_{i-1} x^e C^(a)
///   e <  0:  c_a x^{-e} C^(i-1) - c_{i-1} C^(a)
/// When d_{i-1} == d_1 no antecedent exists and
///   C^(i) = x^i                              if s_1 == 0,
///   C^(i) = s_1 x^{i-2} C^(i-1) - c_{i-1}     otherwise.
/// Quadratic memory; meant for cross-checking the engine, not for speed.
template <Field F>
std::vector<Poly<scalar_t<F>>> naive_construct(const Sequence<F>& s) {
    using S = scalar_t<F>;
    using P = Poly<S>;
    const std::size_t n = s.size();
    if (n == 0) throw Error(Errc::empty_sequence, "naive construction needs n >= 1");

    const S one = s.field().one();
    // index 0 unused so that cands[j] is C^(j)
    std::vector<P> cands(1);
    std::vector<std::size_t> deg(1, 0);
    std::vector<S> disc(1, s.field().zero());

    const S& s1 = s.term(1);
    cands.push_back(s1.is_zero() ? P({one}) : P::monomial(one, 1));
    deg.push_back(cands[1].degree().value());

    for (std::size_t i = 2; i <= n; ++i) {
        const P& prev = cands[i - 1];
        const std::size_t d = deg[i - 1];

        S c = s.field().zero();
        for (std::size_t j = 0; j <= d; ++j)
            c = c + prev[j] * s.term(j + i - d);
        disc.push_back(c);  // disc[i-1] = c_{i-1}

        P next;
        if (c.is_zero()) {
            next = prev;
        } else if (d == deg[1]) {
            if (s1.is_zero())
                next = P::monomial(one, i);
            else
                next = linear_combine(s1, shift(prev, i - 2), c, P({one}), 0);
        } else {
            std::optional<std::size_t> a;
            for (std::size_t j = i - 2; j >= 1; --j)
                if (deg[j] < d) {
                    a = j;
                    break;
                }
            if (!a) throw Error(Errc::invariant_violation, "no antecedent index at step " + std::to_string(i));
            const S& ca = disc[*a];
            const std::int64_t e = 2 * static_cast<std::int64_t>(d) - static_cast<std::int64_t>(i);
            if (e >= 0)
                next = linear_combine(ca, prev, c, cands[*a], static_cast<std::size_t>(e));
            else
                next = linear_combine(ca, shift(prev, static_cast<std::size_t>(-e)), c, cands[*a], 0);
        }
        deg.push_back(next.degree().value());
        cands.push_back(std::move(next));
    }
    cands.erase(cands.begin());
    return cands;
}

} // namespace minpoly
