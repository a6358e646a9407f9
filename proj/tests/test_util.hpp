#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <minpoly/minpoly.hpp>

namespace minpoly::testing {

inline const PrimeField gf2{2};
inline const PrimeField gf3{3};

/// Polynomial from low-to-high integer coefficients.
template <Field F>
Poly<scalar_t<F>> P(const F& field, std::initializer_list<std::int64_t> low_to_high) {
    std::vector<scalar_t<F>> v;
    for (auto c : low_to_high)
        v.push_back(field.from_integer(c));
    return Poly<scalar_t<F>>(std::move(v));
}

template <Field F>
Sequence<F> seq(const F& field, std::initializer_list<std::int64_t> terms) {
    return Sequence<F>::from_integers(field, terms);
}

/// Calls fn on every sequence of length `len` over a small prime field.
template <class Fn>
void for_each_sequence(const PrimeField& field, std::size_t len, Fn&& fn) {
    std::vector<std::uint32_t> digits(len, 0);
    while (true) {
        std::vector<ModP> terms;
        for (auto d : digits)
            terms.emplace_back(d, field.modulus());
        fn(Sequence<PrimeField>(field, std::move(terms)));
        std::size_t k = len;
        while (k > 0 && ++digits[k - 1] == field.modulus())
            digits[--k] = 0;
        if (k == 0) return;
    }
}

inline Sequence<PrimeField> random_sequence(const PrimeField& field, std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    std::vector<ModP> terms;
    for (std::size_t k = 0; k < len; ++k)
        terms.emplace_back(dist(rng), field.modulus());
    return Sequence<PrimeField>(field, std::move(terms));
}

inline Sequence<RationalField> random_rational_sequence(std::size_t len, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> terms;
    for (std::size_t k = 0; k < len; ++k)
        terms.emplace_back(Rational::integer(num(rng)), Rational::integer(den(rng)));
    return Sequence<RationalField>(RationalField{}, std::move(terms));
}

inline Poly<ModP> random_monic(const PrimeField& field, std::size_t degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
    std::vector<ModP> v;
    for (std::size_t k = 0; k < degree; ++k)
        v.emplace_back(dist(rng), field.modulus());
    v.push_back(field.one());
    return Poly<ModP>(std::move(v));
}

} // namespace minpoly::testing
