#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace minpoly {

/// Finite sequence s_1..s_n over a field. Accessors use the 1-based indexing
/// of the recurrence; s_j is stored at terms()[j - 1].
template <Field F>
class Sequence {
public:
    using field_type = F;
    using scalar_type = scalar_t<F>;

    explicit Sequence(F field, std::vector<scalar_type> terms = {})
        : field_(std::move(field)), terms_(std::move(terms)) {
        for (const auto& t : terms_)
            if (!field_.contains(t))
                throw Error(Errc::field_mismatch, "sequence term outside " + field_.descriptor().to_string());
    }

    static Sequence from_integers(F field, std::span<const std::int64_t> values) {
        std::vector<scalar_type> terms;
        terms.reserve(values.size());
        for (auto v : values)
            terms.push_back(field.from_integer(v));
        return Sequence(std::move(field), std::move(terms));
    }

    static Sequence from_integers(F field, std::initializer_list<std::int64_t> values) {
        return from_integers(std::move(field), std::span<const std::int64_t>(values.begin(), values.size()));
    }

    const F& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    std::span<const scalar_type> terms() const noexcept { return terms_; }

    /// s_j for 1 <= j <= n.
    const scalar_type& term(std::size_t j) const {
        if (j < 1 || j > terms_.size())
            throw Error(Errc::index_out_of_range,
                        "s_" + std::to_string(j) + " outside 1.." + std::to_string(terms_.size()));
        return terms_[j - 1];
    }

    /// s_1..s_i
    Sequence prefix(std::size_t i) const {
        if (i > terms_.size()) throw Error(Errc::index_out_of_range, "prefix longer than sequence");
        return Sequence(field_, std::vector<scalar_type>(terms_.begin(), terms_.begin() + i));
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.field_.descriptor() == b.field_.descriptor() && a.terms_ == b.terms_;
    }

private:
    F field_;
    std::vector<scalar_type> terms_;
};

template <Field F>
std::string to_string(const Sequence<F>& s) {
    std::string out;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (j) out += ',';
        out += to_string(s.terms()[j]);
    }
    return out;
}

} // namespace minpoly
