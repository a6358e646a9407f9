#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace minpoly {

/// Starting value of B. `b_zero` is the iterative algorithm as rewritten;
/// `b_one` starts from B = 1, which changes C at every step preceded only by
/// zeros (C becomes x^i - c there) and leaves the final degree unchanged.
enum class InitVariant { b_zero, b_one };

/// Working state of the iterative minimal polynomial algorithm.
///
/// At an iteration boundary i (after i terms consumed) the state satisfies
///   deg(C) == (e + i + 1) / 2,  e + i odd,  b != 0,
/// C is a minimal polynomial of s_1..s_i, and B is the most recent earlier
/// candidate of strictly smaller degree with b its (nonzero) discrepancy.
template <FieldScalar S>
struct EngineState {
    std::size_t i = 0;
    Poly<S> C;
    Poly<S> B;
    S b;
    std::int64_t e = -1;
    std::optional<S> last_discrepancy;

    /// The same exponent under the opposite sign convention (v = -e).
    std::int64_t v() const noexcept { return -e; }

    /// Linear complexity of s_1..s_i read off the exponent.
    std::size_t complexity() const { return static_cast<std::size_t>((e + static_cast<std::int64_t>(i) + 1) / 2); }

    friend bool operator==(const EngineState&, const EngineState&) = default;
};

template <Field F>
EngineState<scalar_t<F>> initial_state(const F& field, InitVariant variant = InitVariant::b_zero) {
    EngineState<scalar_t<F>> st;
    st.C = Poly<scalar_t<F>>({field.one()});
    st.B = variant == InitVariant::b_one ? Poly<scalar_t<F>>({field.one()}) : Poly<scalar_t<F>>{};
    st.b = field.one();
    st.e = -1;
    return st;
}

struct StepOptions {
    /// Rescale C to be monic after every update. Degrees and the final monic
    /// result are unaffected.
    bool monic_each_step = false;
};

/// Finite fields run the update as written. Over the rationals the update
/// multiplies C by b each time, so coefficient heights roughly double per
/// length change; there C is rescaled to be monic after every update.
template <Field F>
constexpr StepOptions default_step_options() {
    return {.monic_each_step = !FiniteField<F>};
}

/// Discrepancy of the state's C against the next term: with i = state.i + 1,
///   c = sum_{j=0}^{(e+i)/2} C_j * s_{j + (i-e)/2}.
template <Field F>
scalar_t<F> discrepancy(const EngineState<scalar_t<F>>& state, const Sequence<F>& s) {
    const auto i = static_cast<std::int64_t>(state.i) + 1;
    if (state.i >= s.size())
        throw Error(Errc::index_out_of_range,
                    "step " + std::to_string(i) + " past sequence length " + std::to_string(s.size()));
    const std::int64_t e = state.e;
    if ((e + i) % 2 != 0)
        throw Error(Errc::parity_violation, "e + i odd at head of step " + std::to_string(i));
    const std::int64_t top = (e + i) / 2;
    const std::int64_t offset = (i - e) / 2;
    if (top < 0 || offset < 1)
        throw Error(Errc::invariant_violation, "exponent " + std::to_string(e) + " out of range at step " +
                                                   std::to_string(i));

    auto c = s.field().zero();
    const auto& C = state.C;
    for (std::int64_t j = 0; j <= top && j < static_cast<std::int64_t>(C.size()); ++j)
        c = c + C[static_cast<std::size_t>(j)] * s.term(static_cast<std::size_t>(j + offset));
    return c;
}

/// One iteration: consume s_{i+1} and return the successor state.
template <Field F>
EngineState<scalar_t<F>> step(const EngineState<scalar_t<F>>& state, const Sequence<F>& s,
                              StepOptions opts = {}) {
    using S = scalar_t<F>;
    if (state.b.is_zero()) throw Error(Errc::invariant_violation, "b is zero");

    const S c = discrepancy(state, s);
    EngineState<S> next = state;
    next.last_discrepancy = c;

    if (!c.is_zero()) {
        if (next.e >= 0) {
            next.C = linear_combine(next.b, next.C, c, next.B, static_cast<std::size_t>(next.e));
        } else {
            Poly<S> saved = next.C;
            next.e = -next.e;
            next.C = linear_combine(next.b, shift(next.C, static_cast<std::size_t>(next.e)), c, next.B, 0);
            next.B = std::move(saved);
            next.b = c;
        }
        if (opts.monic_each_step) next.C = make_monic(next.C);
    }
    next.e -= 1;
    next.i += 1;

    const auto i = static_cast<std::int64_t>(next.i);
    if ((next.e + i) % 2 == 0)
        throw Error(Errc::parity_violation, "e + i even after step " + std::to_string(i));
    if (next.C.degree() != Degree(static_cast<std::size_t>((next.e + i + 1) / 2)))
        throw Error(Errc::invariant_violation, "deg C = " + next.C.degree().to_string() + " but (e+i+1)/2 = " +
                                                   std::to_string((next.e + i + 1) / 2) + " after step " +
                                                   std::to_string(i));
    return next;
}

/// Runs all n steps, calling `observe(before, after)` after each.
template <Field F, class Observer>
EngineState<scalar_t<F>> run_engine(const Sequence<F>& s, InitVariant variant, StepOptions opts,
                                    Observer&& observe) {
    auto state = initial_state(s.field(), variant);
    while (state.i < s.size()) {
        auto next = step(state, s, opts);
        observe(std::as_const(state), std::as_const(next));
        state = std::move(next);
    }
    return state;
}

template <Field F>
EngineState<scalar_t<F>> run_engine(const Sequence<F>& s, InitVariant variant = InitVariant::b_zero,
                                    StepOptions opts = default_step_options<F>()) {
    return run_engine(s, variant, opts, [](const auto&, const auto&) {});
}

/// The algorithm's literal return value C/b, without monic normalization.
/// Over GF(p), p > 2, this need not be monic (s = (2) over GF(3) gives 2x).
template <Field F>
Poly<scalar_t<F>> algorithm_output(const Sequence<F>& s, InitVariant variant = InitVariant::b_zero,
                                   StepOptions opts = default_step_options<F>()) {
    const auto st = run_engine(s, variant, opts);
    return scale(st.b.inverse(), st.C);
}

/// Monic minimal polynomial of s. The empty sequence gives 1.
template <Field F>
Poly<scalar_t<F>> minimal_polynomial(const Sequence<F>& s, InitVariant variant = InitVariant::b_zero,
                                     StepOptions opts = default_step_options<F>()) {
    return make_monic(algorithm_output(s, variant, opts));
}

/// Linear complexity of the prefix s_1..s_i together with the discrepancy
/// consumed at step i.
template <FieldScalar S>
struct ProfileEntry {
    std::size_t i;
    Degree L;
    S disc;

    friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

template <Field F>
std::vector<ProfileEntry<scalar_t<F>>> complexity_profile(const Sequence<F>& s) {
    std::vector<ProfileEntry<scalar_t<F>>> out;
    out.reserve(s.size());
    run_engine(s, InitVariant::b_zero, default_step_options<F>(), [&](const auto&, const auto& after) {
        out.push_back({after.i, Degree(after.complexity()), *after.last_discrepancy});
    });
    return out;
}

/// One line of engine trace output.
template <FieldScalar S>
struct TraceRecord {
    std::size_t i;
    S c;
    std::int64_t e_before;
    std::int64_t e_after;
    Degree degree;
    Poly<S> C;
    Poly<S> B;
    S b;
};

template <Field F>
std::vector<TraceRecord<scalar_t<F>>> trace(const Sequence<F>& s, InitVariant variant = InitVariant::b_zero,
                                            StepOptions opts = default_step_options<F>()) {
    std::vector<TraceRecord<scalar_t<F>>> out;
    out.reserve(s.size());
    run_engine(s, variant, opts, [&](const auto& before, const auto& after) {
        out.push_back({after.i, *after.last_discrepancy, before.e, after.e, after.C.degree(), after.C, after.B,
                       after.b});
    });
    return out;
}

/// `i=<i> c=<c> e=<e_after> L=<deg> C=<poly>`
template <FieldScalar S>
std::string format_trace_line(const TraceRecord<S>& r) {
    return "i=" + std::to_string(r.i) + " c=" + to_string(r.c) + " e=" + std::to_string(r.e_after) +
           " L=" + r.degree.to_string() + " C=" + to_string(r.C);
}

/// True iff C_0 s_{j-d} + ... + C_d s_j = 0 for every d+1 <= j <= n, with
/// d = deg C. Polynomials of degree >= n pass vacuously.
template <Field F>
bool is_characteristic(const Poly<scalar_t<F>>& C, const Sequence<F>& s) {
    if (C.is_zero()) throw Error(Errc::zero_polynomial, "the zero polynomial is not a characteristic polynomial");
    const std::size_t d = C.degree().value();
    for (std::size_t j = d + 1; j <= s.size(); ++j) {
        auto acc = s.field().zero();
        for (std::size_t k = 0; k <= d; ++k)
            acc = acc + C[k] * s.term(j - d + k);
        if (!acc.is_zero()) return false;
    }
    return true;
}

/// Feedback polynomial F (constant term 1) and linear complexity L, related
/// to the monic minimal polynomial by C = x^{L - deg F} F*.
template <FieldScalar S>
struct MasseyForm {
    Poly<S> F;
    Degree L;
};

template <Field F>
MasseyForm<scalar_t<F>> massey_form(const Sequence<F>& s) {
    if (s.empty()) throw Error(Errc::empty_sequence, "massey form needs at least one term");
    const auto st = run_engine(s, InitVariant::b_zero, default_step_options<F>());
    const auto C = make_monic(scale(st.b.inverse(), st.C));
    return {reciprocal(C), Degree(st.complexity())};
}

} // namespace minpoly
