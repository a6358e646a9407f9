#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "error.hpp"
#include "field.hpp"
#include "lfsr.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace minpoly::cli {

enum class Mode { minpoly, profile, trace, massey, oracle_check, extend };

inline Mode parse_mode(std::string_view s) {
    if (s == "minpoly") return Mode::minpoly;
    if (s == "profile") return Mode::profile;
    if (s == "trace") return Mode::trace;
    if (s == "massey") return Mode::massey;
    if (s == "oracle-check") return Mode::oracle_check;
    if (s == "extend") return Mode::extend;
    throw Error(Errc::invalid_argument, "unknown mode '" + std::string(s) + "'");
}

inline InitVariant parse_variant(std::string_view s) {
    if (s == "b0") return InitVariant::b_zero;
    if (s == "b1") return InitVariant::b_one;
    throw Error(Errc::invalid_argument, "unknown variant '" + std::string(s) + "' (expected b0 or b1)");
}

struct RunConfig {
    FieldDescriptor field = FieldDescriptor::gf2();
    InitVariant variant = InitVariant::b_zero;
    Mode mode = Mode::minpoly;
    std::optional<std::string> input_path;  // stdin when empty
    bool json = false;
    std::optional<std::string> poly;        // extend
    std::optional<std::size_t> count;       // extend
    std::optional<std::size_t> exhaustive;  // oracle-check over all sequences up to this length
    std::uint64_t budget = oracle::Budget{}.max_candidates;
};

/// Exit codes.
enum Exit : int { ok = 0, usage = 1, internal = 2, mismatch = 3 };

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_integer(std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

inline Rational::integer to_big(std::string_view t) {
    bool neg = false;
    if (t.front() == '-' || t.front() == '+') {
        neg = t.front() == '-';
        t.remove_prefix(1);
    }
    Rational::integer v{std::string(t)};
    return neg ? Rational::integer(-v) : v;
}

/// Parses `n` or `n/d` into the field. Throws ParseError tagged `position`.
template <Field F>
scalar_t<F> parse_scalar(std::string_view tok, const F& field, std::size_t position) {
    auto slash = tok.find('/');
    auto num_s = tok.substr(0, slash);
    auto den_s = slash == std::string_view::npos ? std::string_view{"1"} : tok.substr(slash + 1);
    if (!is_integer(num_s) || !is_integer(den_s))
        throw ParseError(position, "'" + std::string(tok) + "' is not an integer or fraction");
    auto num = to_big(num_s);
    auto den = to_big(den_s);
    if (den == 0) throw ParseError(position, "zero denominator in '" + std::string(tok) + "'");

    if constexpr (FiniteField<F>) {
        Rational::integer p = field.order();
        auto reduce = [&](Rational::integer v) {
            v %= p;
            if (v < 0) v += p;
            return field.element(static_cast<std::uint64_t>(v));
        };
        auto d = reduce(den);
        if (d.is_zero()) throw ParseError(position, "denominator vanishes mod " + p.str());
        return reduce(num) / d;
    } else {
        return scalar_t<F>(num, den);
    }
}

} // namespace detail

/// Comma- and/or whitespace-separated integers (`a/b` fractions allowed).
/// Over GF(2) a single token made only of 0s and 1s is read as a bitstring.
template <Field F>
Sequence<F> parse_sequence(std::string_view text, const F& field) {
    text = detail::trim(text);
    if (text.empty()) throw Error(Errc::empty_input, "no sequence terms given");

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    bool after_comma = false;
    while (pos < text.size()) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (ch == ',') {
            if (after_comma || tokens.empty()) throw ParseError(tokens.size() + 1, "empty term");
            after_comma = true;
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',' && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        tokens.push_back(text.substr(pos, end - pos));
        after_comma = false;
        pos = end;
    }
    if (after_comma) throw ParseError(tokens.size() + 1, "trailing comma");

    std::vector<scalar_t<F>> terms;
    if (field.descriptor().kind() == FieldKind::gf2 && tokens.size() == 1 && tokens[0].size() > 1 &&
        tokens[0].find_first_not_of("01") == std::string_view::npos) {
        for (char ch : tokens[0])
            terms.push_back(field.from_integer(ch - '0'));
        return Sequence<F>(field, std::move(terms));
    }
    for (std::size_t k = 0; k < tokens.size(); ++k)
        terms.push_back(detail::parse_scalar(tokens[k], field, k + 1));
    return Sequence<F>(field, std::move(terms));
}

/// Inverse of the polynomial renderer. Accepts sums/differences of terms
/// `c`, `c*x`, `c*x^k`, `x^k`, `-x`, with whitespace anywhere; like terms
/// are combined.
template <Field F>
Poly<scalar_t<F>> parse_poly(std::string_view text, const F& field) {
    auto is_op = [](char ch) { return ch == '+' || ch == '-' || ch == '*' || ch == '^' || ch == '/'; };
    std::string s;
    bool gap = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            gap = !s.empty();
            continue;
        }
        if (gap && !is_op(ch) && !is_op(s.back()))
            throw ParseError(1, "missing operator in '" + std::string(text) + "'");
        gap = false;
        s += ch;
    }
    if (s.empty()) throw Error(Errc::empty_input, "no polynomial given");

    std::vector<scalar_t<F>> coeffs;
    std::size_t pos = 0;
    std::size_t term_no = 0;
    while (pos < s.size()) {
        ++term_no;
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (term_no > 1) {
            throw ParseError(term_no, "expected '+' or '-'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            if (s[end] == '^' && end + 1 < s.size() && (s[end + 1] == '+' || s[end + 1] == '-')) ++end;
            ++end;
        }
        std::string_view term(s.data() + pos, end - pos);
        pos = end;
        if (term.empty()) throw ParseError(term_no, "empty term");

        auto coef = field.one();
        std::size_t power = 0;
        auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            coef = detail::parse_scalar(term, field, term_no);
        } else {
            auto head = term.substr(0, xpos);
            if (!head.empty()) {
                if (head.back() != '*') throw ParseError(term_no, "expected '*' before x");
                coef = detail::parse_scalar(head.substr(0, head.size() - 1), field, term_no);
            }
            auto tail = term.substr(xpos + 1);
            if (tail.empty()) {
                power = 1;
            } else {
                if (tail.front() != '^' || !detail::is_integer(tail.substr(1)) || tail[1] == '-' || tail[1] == '+')
                    throw ParseError(term_no, "bad exponent in '" + std::string(term) + "'");
                power = std::stoul(std::string(tail.substr(1)));
            }
        }
        if (negative) coef = -coef;
        if (coeffs.size() <= power) coeffs.resize(power + 1, field.zero());
        coeffs[power] = coeffs[power] + coef;
    }
    return Poly<scalar_t<F>>(std::move(coeffs));
}

namespace detail {

inline nlohmann::json scalar_json(const ModP& a) { return a.value(); }
inline nlohmann::json scalar_json(const Rational& a) { return to_string(a); }

template <FieldScalar S>
nlohmann::json coeffs_json(const Poly<S>& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(scalar_json(c));
    return arr;
}

inline nlohmann::json degree_json(const Degree& d) {
    return d.is_neg_inf() ? nlohmann::json(nullptr) : nlohmann::json(d.value());
}

template <FieldScalar S>
nlohmann::json poly_json(const FieldDescriptor& f, std::size_t n, const Poly<S>& p) {
    return {{"field", f.to_string()}, {"n", n}, {"degree", degree_json(p.degree())}, {"coeffs", coeffs_json(p)}};
}

template <Field F>
void enumerate_sequences(const F& field, std::size_t len, std::vector<std::uint64_t>& digits, auto&& fn) {
    digits.assign(len, 0);
    while (true) {
        std::vector<scalar_t<F>> terms;
        terms.reserve(len);
        for (auto d : digits)
            terms.push_back(field.element(d));
        fn(Sequence<F>(field, std::move(terms)));
        std::size_t k = len;
        while (k > 0 && ++digits[k - 1] == field.order())
            digits[--k] = 0;
        if (k == 0) return;
    }
}

template <Field F>
int run_typed(const RunConfig& cfg, std::string_view input, const F& field, std::ostream& out,
              std::ostream& err) {
    const auto& fd = field.descriptor();
    oracle::Budget budget{cfg.budget};

    if (cfg.mode == Mode::oracle_check && cfg.exhaustive) {
        if constexpr (FiniteField<F>) {
            std::size_t checked = 0, bad = 0;
            std::vector<std::uint64_t> digits;
            for (std::size_t len = 1; len <= *cfg.exhaustive; ++len) {
                enumerate_sequences(field, len, digits, [&](const Sequence<F>& s) {
                    ++checked;
                    auto mp = minimal_polynomial(s, cfg.variant);
                    auto res = oracle::enumerate_minimal_polys(s, budget);
                    if (mp.degree() != res.min_degree || !oracle::contains(res, mp)) {
                        ++bad;
                        err << "mismatch s=" << to_string(s) << " engine=" << to_string(mp)
                            << " oracle_degree=" << res.min_degree.to_string() << '\n';
                    }
                });
            }
            if (cfg.json)
                out << nlohmann::json{{"field", fd.to_string()}, {"checked", checked}, {"mismatches", bad}}.dump()
                    << '\n';
            else
                out << "checked " << checked << " sequences, " << bad << " mismatches\n";
            return bad == 0 ? Exit::ok : Exit::mismatch;
        }
    }

    const auto s = parse_sequence(input, field);

    switch (cfg.mode) {
    case Mode::minpoly: {
        auto mp = minimal_polynomial(s, cfg.variant);
        if (cfg.json)
            out << poly_json(fd, s.size(), mp).dump() << '\n';
        else
            out << to_string(mp) << '\n';
        return Exit::ok;
    }
    case Mode::profile: {
        auto prof = complexity_profile(s);
        if (cfg.json) {
            auto arr = nlohmann::json::array();
            for (const auto& p : prof)
                arr.push_back({{"i", p.i}, {"L", degree_json(p.L)}, {"c", scalar_json(p.disc)}});
            out << nlohmann::json{{"field", fd.to_string()}, {"n", s.size()}, {"profile", arr}}.dump() << '\n';
        } else {
            for (const auto& p : prof)
                out << "i=" << p.i << " L=" << p.L.to_string() << " c=" << to_string(p.disc) << '\n';
        }
        return Exit::ok;
    }
    case Mode::trace: {
        auto recs = trace(s, cfg.variant);
        if (cfg.json) {
            auto arr = nlohmann::json::array();
            for (const auto& r : recs)
                arr.push_back({{"i", r.i},
                               {"c", scalar_json(r.c)},
                               {"e_before", r.e_before},
                               {"e_after", r.e_after},
                               {"L", degree_json(r.degree)},
                               {"C", to_string(r.C)},
                               {"B", to_string(r.B)},
                               {"b", scalar_json(r.b)}});
            out << nlohmann::json{{"field", fd.to_string()}, {"n", s.size()}, {"trace", arr}}.dump() << '\n';
        } else {
            for (const auto& r : recs)
                out << format_trace_line(r) << '\n';
        }
        return Exit::ok;
    }
    case Mode::massey: {
        auto mf = massey_form(s);
        if (cfg.json) {
            auto j = poly_json(fd, s.size(), mf.F);
            j["L"] = degree_json(mf.L);
            out << j.dump() << '\n';
        } else {
            out << "F=" << to_string(mf.F) << " L=" << mf.L.to_string() << '\n';
        }
        return Exit::ok;
    }
    case Mode::oracle_check: {
        if constexpr (FiniteField<F>) {
            auto mp = minimal_polynomial(s, cfg.variant);
            auto res = oracle::enumerate_minimal_polys(s, budget);
            bool good = mp.degree() == res.min_degree && oracle::contains(res, mp);
            if (cfg.json) {
                auto j = poly_json(fd, s.size(), mp);
                j["oracle_degree"] = degree_json(res.min_degree);
                j["oracle_count"] = res.polys.size();
                j["ok"] = good;
                out << j.dump() << '\n';
            } else {
                out << (good ? "ok " : "mismatch ") << to_string(mp) << " (oracle: degree "
                    << res.min_degree.to_string() << ", " << res.polys.size() << " minimal polynomials)\n";
            }
            return good ? Exit::ok : Exit::mismatch;
        }
        break;
    }
    case Mode::extend: {
        auto C = parse_poly(*cfg.poly, field);
        auto seq = extend(Recurrence<F>{C, s}, *cfg.count);
        if (cfg.json) {
            auto arr = nlohmann::json::array();
            for (const auto& t : seq.terms())
                arr.push_back(scalar_json(t));
            out << nlohmann::json{{"field", fd.to_string()}, {"n", seq.size()}, {"terms", arr}}.dump() << '\n';
        } else {
            out << to_string(seq) << '\n';
        }
        return Exit::ok;
    }
    }
    err << "error: unsupported mode for field " << fd.to_string() << '\n';
    return Exit::usage;
}

} // namespace detail

inline void validate(const RunConfig& cfg) {
    if (cfg.mode == Mode::oracle_check && !cfg.field.is_finite())
        throw Error(Errc::infinite_field, "oracle-check needs a finite field");
    if (cfg.mode == Mode::extend && (!cfg.poly || !cfg.count))
        throw Error(Errc::invalid_argument, "extend needs --poly and --count");
    if (cfg.exhaustive && cfg.mode != Mode::oracle_check)
        throw Error(Errc::invalid_argument, "--exhaustive only applies to oracle-check");
}

/// Executes one command; `input` is the sequence text. Returns the exit code.
inline int run(const RunConfig& cfg, std::string_view input, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
        return visit_field(cfg.field, [&](const auto& field) { return detail::run_typed(cfg, input, field, out, err); });
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.is_internal() ? Exit::internal : Exit::usage;
    }
}

} // namespace minpoly::cli
