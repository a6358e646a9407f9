#pragma once

#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace minpoly {

enum class FieldKind { gf2, gfp, rational };

namespace detail {

constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

/// Names one of the supported coefficient fields. GF(2) is the prime field
/// with modulus 2; `gfp(2)` and `gf2()` produce equal descriptors.
class FieldDescriptor {
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 31;

    static FieldDescriptor gf2() { return FieldDescriptor(FieldKind::gf2, 2); }

    static FieldDescriptor gfp(std::uint64_t p) {
        if (p >= max_modulus)
            throw Error(Errc::invalid_modulus, "modulus " + std::to_string(p) + " is not below 2^31");
        if (!detail::is_prime(p))
            throw Error(Errc::invalid_modulus, "modulus " + std::to_string(p) + " is not prime");
        if (p == 2) return gf2();
        return FieldDescriptor(FieldKind::gfp, static_cast<std::uint32_t>(p));
    }

    static FieldDescriptor rational() { return FieldDescriptor(FieldKind::rational, 0); }

    /// Grammar: `gf2`, `gf:<p>` with decimal prime p, `q`.
    static FieldDescriptor parse(std::string_view text) {
        if (text == "gf2") return gf2();
        if (text == "q") return rational();
        if (text.starts_with("gf:")) {
            auto digits = text.substr(3);
            std::uint64_t p = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
            if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
                throw Error(Errc::invalid_argument, "bad modulus in field spec '" + std::string(text) + "'");
            return gfp(p);
        }
        throw Error(Errc::invalid_argument, "unknown field spec '" + std::string(text) + "'");
    }

    FieldKind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ != FieldKind::rational; }

    /// Prime modulus; 0 for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }

    std::string to_string() const {
        switch (kind_) {
        case FieldKind::gf2: return "gf2";
        case FieldKind::gfp: return "gf:" + std::to_string(modulus_);
        case FieldKind::rational: return "q";
        }
        return {};
    }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

private:
    FieldDescriptor(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint32_t modulus_;
};

/// Residue in GF(p), always in 0..p-1. Carries its modulus so that mixing
/// fields is caught at the operation that does it.
class ModP {
public:
    /// Zero of GF(2).
    ModP() = default;
    ModP(std::uint32_t value, std::uint32_t modulus) : value_(value % modulus), modulus_(modulus) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    FieldDescriptor field() const { return FieldDescriptor::gfp(modulus_); }

    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    ModP zero_like() const noexcept { return {0, modulus_}; }
    ModP one_like() const noexcept { return {1, modulus_}; }
    bool same_field(const ModP& other) const noexcept { return modulus_ == other.modulus_; }

    ModP canonical() const noexcept { return *this; }

    ModP inverse() const {
        if (value_ == 0) throw Error(Errc::division_by_zero, "inverse of zero in GF(" + std::to_string(modulus_) + ")");
        // extended Euclid on (value, modulus)
        std::int64_t r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
            std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
        }
        if (t0 < 0) t0 += modulus_;
        return {static_cast<std::uint32_t>(t0), modulus_};
    }

    ModP operator-() const noexcept { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

    friend ModP operator+(const ModP& a, const ModP& b) {
        check(a, b);
        std::uint64_t s = std::uint64_t{a.value_} + b.value_;
        return {static_cast<std::uint32_t>(s % a.modulus_), a.modulus_};
    }
    friend ModP operator-(const ModP& a, const ModP& b) {
        check(a, b);
        return a + -b;
    }
    friend ModP operator*(const ModP& a, const ModP& b) {
        check(a, b);
        std::uint64_t p = std::uint64_t{a.value_} * b.value_;
        return {static_cast<std::uint32_t>(p % a.modulus_), a.modulus_};
    }
    friend ModP operator/(const ModP& a, const ModP& b) {
        check(a, b);
        return a * b.inverse();
    }

    friend bool operator==(const ModP&, const ModP&) = default;
    friend auto operator<=>(const ModP& a, const ModP& b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
        return a.value_ <=> b.value_;
    }

    friend std::string to_string(const ModP& a) { return std::to_string(a.value_); }

private:
    static void check(const ModP& a, const ModP& b) {
        if (a.modulus_ != b.modulus_)
            throw Error(Errc::field_mismatch, "GF(" + std::to_string(a.modulus_) + ") vs GF(" +
                                                  std::to_string(b.modulus_) + ")");
    }

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 2;
};

/// Exact rational in lowest terms with positive denominator; zero is 0/1.
class Rational {
public:
    using integer = boost::multiprecision::cpp_int;

    Rational() = default;
    explicit Rational(std::int64_t n) : value_(n) {}
    Rational(const integer& num, const integer& den) {
        if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
        // boost 1.74 rejects negative denominators instead of normalizing them
        if (den < 0)
            value_ = boost::multiprecision::cpp_rational(integer(-num), integer(-den));
        else
            value_ = boost::multiprecision::cpp_rational(num, den);
    }

    integer numerator() const { return boost::multiprecision::numerator(value_); }
    integer denominator() const { return boost::multiprecision::denominator(value_); }
    FieldDescriptor field() const { return FieldDescriptor::rational(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    Rational zero_like() const { return Rational{}; }
    Rational one_like() const { return Rational{1}; }
    bool same_field(const Rational&) const noexcept { return true; }

    Rational canonical() const { return Rational(numerator(), denominator()); }

    Rational inverse() const {
        if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero rational");
        return from(1 / value_);
    }

    Rational operator-() const { return from(-value_); }
    friend Rational operator+(const Rational& a, const Rational& b) { return from(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
        return from(a.value_ / b.value_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// `n` or `n/d`.
    friend std::string to_string(const Rational& a) {
        auto den = a.denominator();
        if (den == 1) return a.numerator().str();
        return a.numerator().str() + "/" + den.str();
    }

private:
    static Rational from(boost::multiprecision::cpp_rational v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    boost::multiprecision::cpp_rational value_{0};
};

template <class S>
concept FieldScalar = std::regular<S> && std::totally_ordered<S> && requires(const S a, const S b) {
    { a + b } -> std::same_as<S>;
    { a - b } -> std::same_as<S>;
    { a * b } -> std::same_as<S>;
    { a / b } -> std::same_as<S>;
    { -a } -> std::same_as<S>;
    { a.inverse() } -> std::same_as<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::same_as<S>;
    { a.one_like() } -> std::same_as<S>;
    { a.same_field(b) } -> std::convertible_to<bool>;
    { a.field() } -> std::same_as<FieldDescriptor>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

/// GF(p) for prime p < 2^31.
class PrimeField {
public:
    using scalar_type = ModP;

    explicit PrimeField(std::uint64_t p) : descriptor_(FieldDescriptor::gfp(p)) {}
    explicit PrimeField(const FieldDescriptor& d) : descriptor_(d) {
        if (!d.is_finite()) throw Error(Errc::invalid_argument, "PrimeField needs a finite descriptor");
    }

    const FieldDescriptor& descriptor() const noexcept { return descriptor_; }
    std::uint32_t modulus() const noexcept { return descriptor_.modulus(); }
    std::uint64_t order() const noexcept { return descriptor_.modulus(); }

    ModP zero() const { return {0, modulus()}; }
    ModP one() const { return {1, modulus()}; }

    ModP from_integer(std::int64_t k) const {
        auto p = static_cast<std::int64_t>(modulus());
        auto r = k % p;
        if (r < 0) r += p;
        return {static_cast<std::uint32_t>(r), modulus()};
    }

    /// The element with canonical residue `index`, for enumeration.
    ModP element(std::uint64_t index) const {
        if (index >= order()) throw Error(Errc::index_out_of_range, "element index past field order");
        return {static_cast<std::uint32_t>(index), modulus()};
    }

    bool contains(const ModP& a) const noexcept { return a.modulus() == modulus(); }

private:
    FieldDescriptor descriptor_;
};

class RationalField {
public:
    using scalar_type = Rational;

    const FieldDescriptor& descriptor() const noexcept { return descriptor_; }
    Rational zero() const { return Rational{}; }
    Rational one() const { return Rational{1}; }
    Rational from_integer(std::int64_t k) const { return Rational{k}; }
    bool contains(const Rational&) const noexcept { return true; }

private:
    FieldDescriptor descriptor_ = FieldDescriptor::rational();
};

template <class F>
concept Field = FieldScalar<typename F::scalar_type> && requires(const F f, std::int64_t k,
                                                                 const typename F::scalar_type a) {
    { f.descriptor() } -> std::convertible_to<FieldDescriptor>;
    { f.zero() } -> std::same_as<typename F::scalar_type>;
    { f.one() } -> std::same_as<typename F::scalar_type>;
    { f.from_integer(k) } -> std::same_as<typename F::scalar_type>;
    { f.contains(a) } -> std::convertible_to<bool>;
};

template <class F>
concept FiniteField = Field<F> && requires(const F f, std::uint64_t i) {
    { f.order() } -> std::convertible_to<std::uint64_t>;
    { f.element(i) } -> std::same_as<typename F::scalar_type>;
};

template <Field F>
using scalar_t = typename F::scalar_type;

enum class ArithOp { add, sub, mul, div };

template <FieldScalar S>
S arithmetic(const S& a, const S& b, ArithOp op) {
    if (!a.same_field(b))
        throw Error(Errc::field_mismatch, a.field().to_string() + " vs " + b.field().to_string());
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
        if (b.is_zero()) throw Error(Errc::division_by_zero, "division by zero");
        return a / b;
    }
    throw Error(Errc::invalid_argument, "unknown arithmetic op");
}

template <FieldScalar S>
S inverse(const S& a) {
    return a.inverse();
}

template <Field F>
scalar_t<F> from_integer(std::int64_t k, const F& field) {
    return field.from_integer(k);
}

/// Calls `fn` with the concrete field object named by `d`.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& d, Fn&& fn) {
    if (d.is_finite()) return std::forward<Fn>(fn)(PrimeField(d));
    return std::forward<Fn>(fn)(RationalField{});
}

} // namespace minpoly
