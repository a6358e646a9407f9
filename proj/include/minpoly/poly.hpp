#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace minpoly {

/// Degree of a polynomial: a nonnegative integer, or negative infinity for
/// the zero polynomial. Negative infinity orders below every integer.
class Degree {
public:
    constexpr Degree() = default;
    constexpr explicit Degree(std::size_t d) : value_(d) {}

    static constexpr Degree neg_inf() { return Degree{}; }

    constexpr bool is_neg_inf() const noexcept { return !value_.has_value(); }

    std::size_t value() const {
        if (!value_) throw Error(Errc::zero_polynomial, "degree of the zero polynomial is -inf");
        return *value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

    friend constexpr bool operator==(const Degree&, const Degree&) = default;
    friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

private:
    std::optional<std::size_t> value_;
};

/// Dense polynomial, coefficient of x^j at index j. Trailing zeros are
/// never stored, so the zero polynomial is the empty vector.
template <FieldScalar S>
class Poly {
public:
    using scalar_type = S;

    Poly() = default;

    explicit Poly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (!coeffs_[j].same_field(coeffs_[0]))
                throw Error(Errc::field_mismatch, "polynomial coefficients from different fields");
        normalize();
    }

    /// c * x^k
    static Poly monomial(const S& c, std::size_t k) {
        std::vector<S> v(k + 1, c.zero_like());
        v[k] = c;
        return Poly(std::move(v));
    }

    const std::vector<S>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Degree degree() const noexcept { return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1); }

    const S& operator[](std::size_t j) const { return coeffs_.at(j); }

    const S& leading() const {
        if (coeffs_.empty()) throw Error(Errc::zero_polynomial, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Evaluation at a field element.
    S operator()(const S& x) const {
        S acc = x.zero_like();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Lexicographic on the coefficient tuple, low-to-high.
    friend auto operator<=>(const Poly& a, const Poly& b) {
        return std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                                      b.coeffs_.end());
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<S> coeffs_;
};

template <FieldScalar S>
Degree degree(const Poly<S>& p) noexcept {
    return p.degree();
}

/// alpha*P - beta*x^k*Q, the update shape every branch of the algorithm uses.
template <FieldScalar S>
Poly<S> linear_combine(const S& alpha, const Poly<S>& p, const S& beta, const Poly<S>& q, std::size_t k) {
    if (!alpha.same_field(beta)) throw Error(Errc::field_mismatch, "alpha and beta from different fields");
    const std::size_t n = q.is_zero() ? p.size() : std::max(p.size(), k + q.size());
    std::vector<S> out(n, alpha.zero_like());
    for (std::size_t j = 0; j < p.size(); ++j)
        out[j] = alpha * p[j];
    if (!beta.is_zero())
        for (std::size_t j = 0; j < q.size(); ++j)
            out[j + k] = out[j + k] - beta * q[j];
    return Poly<S>(std::move(out));
}

/// x^k * P
template <FieldScalar S>
Poly<S> shift(const Poly<S>& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<S> out(k, p[0].zero_like());
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly<S>(std::move(out));
}

template <FieldScalar S>
Poly<S> scale(const S& c, const Poly<S>& p) {
    std::vector<S> out;
    out.reserve(p.size());
    for (const auto& a : p.coeffs())
        out.push_back(c * a);
    return Poly<S>(std::move(out));
}

/// x^{deg P} P(1/x). Drops the x-power factor of P.
template <FieldScalar S>
Poly<S> reciprocal(const Poly<S>& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "reciprocal of the zero polynomial");
    std::vector<S> out(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<S>(std::move(out));
}

template <FieldScalar S>
Poly<S> make_monic(const Poly<S>& p) {
    if (p.is_zero()) throw Error(Errc::zero_polynomial, "cannot make the zero polynomial monic");
    if (p.is_monic()) return p;
    return scale(p.leading().inverse(), p);
}

/// Descending powers joined by ` + ` (or ` - ` for negative rational
/// coefficients), unit coefficients suppressed: `x^2 + x + 1`,
/// `2*x^3 + 1`, `3/2*x - 1`, `0`.
template <FieldScalar S>
std::string to_string(const Poly<S>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = p.size(); j-- > 0;) {
        const S& c = p[j];
        if (c.is_zero()) continue;
        std::string mag = to_string(c);
        bool negative = !mag.empty() && mag.front() == '-';
        if (negative) mag.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string var = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
        if (j == 0)
            out += mag;
        else if (mag == "1")
            out += var;
        else
            out += mag + "*" + var;
    }
    return out;
}

} // namespace minpoly
