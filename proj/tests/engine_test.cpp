#include <gtest/gtest.h>

#include <iostream>
#include <random>

#include "test_util.hpp"

using namespace minpoly;
using namespace minpoly::testing;

namespace {

std::vector<std::string> rendered_steps(const Sequence<PrimeField>& s, InitVariant v) {
    std::vector<std::string> out;
    for (const auto& r : trace(s, v))
        out.push_back(to_string(r.C));
    return out;
}

EngineState<ModP> state_at(std::size_t i, Poly<ModP> C, Poly<ModP> B, ModP b, std::int64_t e) {
    EngineState<ModP> st;
    st.i = i;
    st.C = std::move(C);
    st.B = std::move(B);
    st.b = b;
    st.e = e;
    return st;
}

} // namespace

TEST(Engine, InitialState) {
    auto z = initial_state(gf3, InitVariant::b_zero);
    EXPECT_EQ(z.i, 0u);
    EXPECT_EQ(z.C, P(gf3, {1}));
    EXPECT_TRUE(z.B.is_zero());
    EXPECT_EQ(z.b, gf3.one());
    EXPECT_EQ(z.e, -1);
    EXPECT_EQ(z.v(), 1);
    EXPECT_EQ(initial_state(gf3, InitVariant::b_one).B, P(gf3, {1}));
}

TEST(Engine, DiscrepancyExamples) {
    // head of step 3 for (0,1,1,0): C = x^2, e = 1, so c = s_3
    auto s1 = seq(gf2, {0, 1, 1, 0});
    EXPECT_EQ(discrepancy(state_at(2, P(gf2, {0, 0, 1}), P(gf2, {1}), gf2.one(), 1), s1), gf2.one());
    // head of step 4 for (1,1,0,0): C = x^2 + x + 1, e = 0, so c = s_4 + s_3 + s_2
    auto s2 = seq(gf2, {1, 1, 0, 0});
    EXPECT_EQ(discrepancy(state_at(3, P(gf2, {1, 1, 1}), P(gf2, {1, 1}), gf2.one(), 0), s2), gf2.one());

    auto zeros = seq(gf3, {0, 0, 0, 0, 0});
    auto st = initial_state(gf3);
    while (st.i < zeros.size()) {
        EXPECT_TRUE(discrepancy(st, zeros).is_zero());
        st = step(st, zeros);
    }
}

TEST(Engine, DiscrepancyErrors) {
    auto s = seq(gf2, {0, 1, 1, 0});
    try {
        (void)discrepancy(state_at(2, P(gf2, {0, 0, 1}), P(gf2, {1}), gf2.one(), 0), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::parity_violation);
        EXPECT_TRUE(e.is_internal());
    }
    try {
        (void)discrepancy(state_at(4, P(gf2, {1}), P(gf2, {}), gf2.one(), -5), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::index_out_of_range);
    }
    EXPECT_THROW((void)step(state_at(4, P(gf2, {1}), P(gf2, {}), gf2.one(), -5), s), Error);
}

TEST(Engine, StepTraceSequenceOne) {
    EXPECT_EQ(rendered_steps(seq(gf2, {0, 1, 1, 0}), InitVariant::b_zero),
              (std::vector<std::string>{"1", "x^2", "x^2 + x", "x^2 + x + 1"}));
}

TEST(Engine, StepTraceSequenceTwo) {
    EXPECT_EQ(rendered_steps(seq(gf2, {1, 1, 0, 0}), InitVariant::b_zero),
              (std::vector<std::string>{"x", "x + 1", "x^2 + x + 1", "x^2"}));
}

TEST(Engine, StepOverGF3) {
    auto s = seq(gf3, {1, 2});
    auto st = step(initial_state(gf3), s);
    EXPECT_EQ(st.C, P(gf3, {0, 1}));
    EXPECT_EQ(st.b, gf3.one());
    EXPECT_EQ(st.e, 0);
    st = step(st, s);
    EXPECT_EQ(st.C, P(gf3, {1, 1}));
    // oracle: x + 1 is the only monic minimal polynomial
    auto res = oracle::enumerate_minimal_polys(s);
    ASSERT_EQ(res.polys.size(), 1u);
    EXPECT_EQ(res.polys[0], P(gf3, {1, 1}));
}

TEST(Engine, MinimalPolynomialExamples) {
    EXPECT_EQ(minimal_polynomial(seq(gf2, {0, 1, 1, 0})), P(gf2, {1, 1, 1}));
    EXPECT_EQ(minimal_polynomial(seq(gf2, {1, 1, 0, 0})), P(gf2, {0, 0, 1}));
    for (auto v : {InitVariant::b_zero, InitVariant::b_one}) {
        EXPECT_EQ(minimal_polynomial(seq(gf2, {0, 0, 0}), v), P(gf2, {1}));
        EXPECT_EQ(minimal_polynomial(seq(gf3, {0, 0, 0}), v), P(gf3, {1}));
    }

    auto s101 = seq(gf2, {1, 0, 1});
    EXPECT_EQ(minimal_polynomial(s101), P(gf2, {1, 0, 1}));
    auto res = oracle::enumerate_minimal_polys(s101);
    EXPECT_EQ(res.polys, (std::vector{P(gf2, {1, 0, 1}), P(gf2, {1, 1, 1})}));

    auto s01 = seq(gf2, {0, 1});
    EXPECT_EQ(minimal_polynomial(s01, InitVariant::b_zero), P(gf2, {0, 0, 1}));
    EXPECT_EQ(minimal_polynomial(s01, InitVariant::b_one), P(gf2, {1, 0, 1}));
    EXPECT_EQ(oracle::brute_force_min_degree(s01), Degree(2));
}

TEST(Engine, EmptySequenceGivesOne) {
    Sequence<PrimeField> empty(gf3);
    EXPECT_EQ(minimal_polynomial(empty), P(gf3, {1}));
    EXPECT_TRUE(complexity_profile(empty).empty());
    EXPECT_THROW((void)massey_form(empty), Error);
}

TEST(Engine, ComplexityProfile) {
    auto L = [](const auto& prof) {
        std::vector<std::size_t> out;
        for (const auto& p : prof)
            out.push_back(p.L.value());
        return out;
    };
    EXPECT_EQ(L(complexity_profile(seq(gf2, {0, 1, 1, 0}))), (std::vector<std::size_t>{0, 2, 2, 2}));
    EXPECT_EQ(L(complexity_profile(seq(gf2, {1, 1, 0, 0}))), (std::vector<std::size_t>{1, 1, 2, 2}));
    EXPECT_EQ(L(complexity_profile(seq(gf3, {0, 0, 0, 0, 0}))), (std::vector<std::size_t>{0, 0, 0, 0, 0}));

    auto prof = complexity_profile(seq(gf2, {1, 1, 0, 0}));
    EXPECT_EQ(prof[0].disc, gf2.one());  // c_0 = s_1
    EXPECT_EQ(prof[0].i, 1u);
}

TEST(Engine, IsCharacteristic) {
    EXPECT_TRUE(is_characteristic(P(gf2, {1, 1, 1}), seq(gf2, {0, 1, 1, 0})));
    EXPECT_FALSE(is_characteristic(P(gf2, {1, 1, 1}), seq(gf2, {1, 1, 0, 0})));
    EXPECT_TRUE(is_characteristic(P(gf2, {1, 1, 1}), seq(gf2, {1, 1, 0})));
    EXPECT_TRUE(is_characteristic(P(gf3, {2, 0, 0, 1}), seq(gf3, {1, 2, 2})));
    EXPECT_TRUE(is_characteristic(P(gf3, {0, 0, 0, 0, 2}), seq(gf3, {1, 2, 2})));
    try {
        (void)is_characteristic(Poly<ModP>{}, seq(gf3, {1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_polynomial);
    }
}

TEST(Engine, MasseyForm) {
    auto a = massey_form(seq(gf2, {1, 1, 0, 0}));
    EXPECT_EQ(a.F, P(gf2, {1}));
    EXPECT_EQ(a.L, Degree(2));
    auto b = massey_form(seq(gf2, {0, 1, 1, 0}));
    EXPECT_EQ(b.F, P(gf2, {1, 1, 1}));
    EXPECT_EQ(b.L, Degree(2));
    auto c = massey_form(seq(gf3, {0, 0, 0}));
    EXPECT_EQ(c.F, P(gf3, {1}));
    EXPECT_EQ(c.L, Degree(0));
    // feedback polynomials carry constant term 1: (1,1) over GF(3) has C = x + 2
    auto d = massey_form(seq(gf3, {1, 1}));
    EXPECT_EQ(d.F, P(gf3, {1, 2}));
    EXPECT_EQ(d.L, Degree(1));
}

TEST(Engine, TraceLineFormat) {
    auto recs = trace(seq(gf2, {0, 1, 1, 0}));
    ASSERT_EQ(recs.size(), 4u);
    EXPECT_EQ(format_trace_line(recs[0]), "i=1 c=0 e=-2 L=0 C=1");
    EXPECT_EQ(format_trace_line(recs[1]), "i=2 c=1 e=1 L=2 C=x^2");
    EXPECT_EQ(format_trace_line(recs[3]), "i=4 c=1 e=-1 L=2 C=x^2 + x + 1");
    EXPECT_EQ(recs[1].e_before, -2);
    EXPECT_EQ(recs[1].B, P(gf2, {1}));
}

// Rescaling C to be monic after every update keeps degrees and the final
// monic output.
TEST(EngineProperty, PerStepMonicPreservesDegrees) {
    PrimeField f5(5);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        auto s = random_sequence(f5, 1 + trial % 20, rng);
        auto plain = trace(s, InitVariant::b_zero);
        auto monic = trace(s, InitVariant::b_zero, StepOptions{.monic_each_step = true});
        ASSERT_EQ(plain.size(), monic.size());
        for (std::size_t k = 0; k < plain.size(); ++k) {
            EXPECT_EQ(plain[k].degree, monic[k].degree);
            EXPECT_EQ(make_monic(plain[k].C), make_monic(monic[k].C));
        }
    }
}

TEST(EngineProperty, SoundnessAndInvariantsGF5) {
    PrimeField f5(5);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto s = random_sequence(f5, 1 + trial % 25, rng);
        for (auto v : {InitVariant::b_zero, InitVariant::b_one}) {
            std::size_t prev_L = 0;
            run_engine(s, v, {}, [&](const auto& before, const auto& after) {
                const auto i = static_cast<std::int64_t>(after.i);
                EXPECT_NE((after.e + i) % 2, 0);
                EXPECT_FALSE(after.b.is_zero());
                EXPECT_EQ(after.C.degree(), Degree(after.complexity()));
                EXPECT_TRUE(is_characteristic(after.C, s.prefix(after.i)));
                std::size_t L = after.complexity();
                if (after.last_discrepancy->is_zero())
                    EXPECT_EQ(L, prev_L);
                else
                    EXPECT_EQ(L, std::max<std::size_t>(prev_L, after.i - prev_L));
                EXPECT_EQ(before.complexity(), prev_L);
                prev_L = L;
            });
            auto mp = minimal_polynomial(s, v);
            EXPECT_TRUE(mp.is_monic());
            EXPECT_TRUE(is_characteristic(mp, s));
        }
    }
}

// For s_1 != 0 the variants part ways only at step 1 (x versus x - s_1);
// from step 2 on their candidates agree up to a nonzero scalar, and exactly
// over GF(2).
TEST(EngineProperty, VariantsAgreeAfterFirstStep) {
    for (const PrimeField* f : {&gf2, &gf3}) {
        for (std::size_t len = 1; len <= (f == &gf2 ? 10u : 6u); ++len) {
            for_each_sequence(*f, len, [&](const Sequence<PrimeField>& s) {
                auto z = trace(s, InitVariant::b_zero);
                auto o = trace(s, InitVariant::b_one);
                for (std::size_t k = 0; k < z.size(); ++k)
                    EXPECT_EQ(z[k].degree, o[k].degree);
                EXPECT_EQ(minimal_polynomial(s, InitVariant::b_zero).degree(),
                          minimal_polynomial(s, InitVariant::b_one).degree());
                if (s.term(1).is_zero()) return;
                EXPECT_EQ(z[0].C, P(*f, {0, 1}));
                EXPECT_EQ(o[0].C, linear_combine(f->one(), P(*f, {0, 1}), s.term(1), P(*f, {1}), 0));
                for (std::size_t k = 1; k < z.size(); ++k) {
                    EXPECT_EQ(make_monic(z[k].C), make_monic(o[k].C)) << to_string(s) << " step " << k + 1;
                    if (f == &gf2) {
                        EXPECT_EQ(z[k].C, o[k].C);
                    }
                }
            });
        }
    }
}

// The algorithm's literal return value C/b is not monic in general once
// p > 2; minimal_polynomial normalizes it. Log how often that matters.
TEST(Engine, LiteralReturnValueMonicity) {
    EXPECT_EQ(algorithm_output(seq(gf3, {2})), P(gf3, {0, 2}));
    EXPECT_EQ(minimal_polynomial(seq(gf3, {2})), P(gf3, {0, 1}));

    std::size_t total = 0, non_monic = 0;
    for (std::size_t len = 1; len <= 7; ++len)
        for_each_sequence(gf3, len, [&](const Sequence<PrimeField>& s) {
            ++total;
            if (!algorithm_output(s).is_monic()) ++non_monic;
        });
    std::cout << "[ info ] C/b not monic for " << non_monic << " of " << total << " GF(3) sequences\n";
    EXPECT_GT(non_monic, 0u);

    for (std::size_t len = 1; len <= 10; ++len)
        for_each_sequence(gf2, len, [&](const Sequence<PrimeField>& s) { EXPECT_TRUE(algorithm_output(s).is_monic()); });
}

TEST(Engine, RationalSequence) {
    RationalField q;
    // s_j = (1/2)^j satisfies s_j - (1/2) s_{j-1} = 0
    std::vector<Rational> terms;
    Rational v(1);
    for (int k = 0; k < 6; ++k) {
        v = v * Rational(1, 2);
        terms.push_back(v);
    }
    Sequence<RationalField> s(q, terms);
    auto mp = minimal_polynomial(s);
    EXPECT_EQ(mp, Poly<Rational>({Rational(-1, 2), Rational(1)}));
    EXPECT_EQ(to_string(mp), "x - 1/2");
}
