#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace minpoly {

/// A linear recurrence: monic characteristic polynomial C of degree d and
/// the first d terms.
template <Field F>
struct Recurrence {
    Poly<scalar_t<F>> C;
    Sequence<F> seed;
};

/// Seed followed by `count` further terms, each solved from
/// C_0 s_{j-d} + ... + C_{d-1} s_{j-1} + s_j = 0.
template <Field F>
Sequence<F> extend(const Recurrence<F>& r, std::size_t count) {
    if (r.C.is_zero() || !r.C.is_monic())
        throw Error(Errc::not_monic, "recurrence polynomial " + to_string(r.C) + " is not monic");
    const std::size_t d = r.C.degree().value();
    if (r.seed.size() != d)
        throw Error(Errc::invalid_argument, "seed has " + std::to_string(r.seed.size()) + " terms, degree is " +
                                                std::to_string(d));

    const auto& field = r.seed.field();
    std::vector<scalar_t<F>> out(r.seed.terms().begin(), r.seed.terms().end());
    out.reserve(d + count);
    for (std::size_t k = 0; k < count; ++k) {
        auto acc = field.zero();
        const std::size_t base = out.size() - d;
        for (std::size_t m = 0; m < d; ++m)
            acc = acc + r.C[m] * out[base + m];
        out.push_back(-acc);
    }
    return Sequence<F>(field, std::move(out));
}

/// x^{L - deg F} F*: the characteristic polynomial of length L belonging to
/// feedback polynomial F.
template <FieldScalar S>
Poly<S> feedback_to_characteristic(const Poly<S>& feedback, const Degree& L) {
    if (feedback.is_zero()) throw Error(Errc::zero_polynomial, "feedback polynomial is zero");
    const std::size_t fdeg = feedback.degree().value();
    if (L.is_neg_inf() || L.value() < fdeg)
        throw Error(Errc::degree_underflow,
                    "L = " + L.to_string() + " below deg F = " + std::to_string(fdeg));
    return shift(reciprocal(feedback), L.value() - fdeg);
}

} // namespace minpoly
