#include "quadratic_oracle.hpp"

#include <pisot/alpha_adic.hpp>
#include <pisot/notation.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <regex>

using namespace pisot;

namespace {

FieldElement finite_value(const DigitWord &w, const PisotSpec &s) { return pi_beta(FiniteWord{w, w.size()}, s); }

} // namespace

TEST(Transducer, Shape) {
    const Transducer t = build_normalization_transducer(3, 3);
    EXPECT_EQ(t.states().size(), 10u);
    EXPECT_EQ(t.states()[t.initial()], "eps");
    EXPECT_TRUE(t.is_deterministic());
    EXPECT_EQ(build_normalization_transducer(1, 2).states().size(), 3u);
    EXPECT_EQ(build_normalization_transducer(2, 1).states().size(), 3u);
    EXPECT_NO_THROW(t.state_index("a^2:1"));
    EXPECT_THROW(t.state_index("a^3:1"), Error);
    // Every state reads every letter except the a that would overflow a chain.
    for (long long a = 1; a <= 3; ++a) {
        for (long long c = 1; c <= 5; ++c) {
            const Transducer u = build_normalization_transducer(a, c);
            EXPECT_TRUE(u.is_deterministic());
            EXPECT_EQ(u.states().size(), static_cast<std::size_t>(1 + a + a * (c - 1)));
            EXPECT_EQ(u.find(u.initial(), static_cast<Digit>(a + 1)), nullptr);
        }
    }
}

TEST(Transducer, RunBound) {
    EXPECT_EQ(consecutive_a_bound(3, Integer(2)), 3);
    EXPECT_EQ(consecutive_a_bound(2, Integer(1)), 3);
    EXPECT_EQ(consecutive_a_bound(2, Integer(2)), 4);
    EXPECT_EQ(consecutive_a_bound(3, Integer(3)), 4);
    EXPECT_EQ(consecutive_a_bound(3, Integer(9)), 5);
    for (long long a = 2; a <= 5; ++a) {
        for (long den = 1; den <= 200; ++den) {
            const long long k = consecutive_a_bound(a, Integer(den));
            Integer p = 1;
            for (long long i = 0; i < k - 2; ++i) {
                p *= static_cast<long>(a);
            }
            EXPECT_GT(p, den);
            EXPECT_LE(p / static_cast<long>(a), den);
        }
    }
}

TEST(Transducer, Examples) {
    const PisotSpec three = PisotSpec::make({1, 3});
    const Transducer t = build_normalization_transducer(3, 3);
    EXPECT_EQ(to_text(run_right_sequential(t, parse_left_word("~(012)1"))), "~(012)1");
    EXPECT_EQ(to_text(run_right_sequential(t, parse_left_word("~(0)0331"))), "1021");
    EXPECT_EQ(run_right_sequential(t, DigitWord{3, 3, 1}), (DigitWord{1, 0, 2, 1}));
    // 33 = 3 beta + 3; beta^2 = 3 beta + 1 gives 33 = 100 + 2 -> 102.
    EXPECT_EQ(run_right_sequential(t, DigitWord{3, 3}), (DigitWord{1, 0, 2}));
    EXPECT_EQ(finite_value({1, 0, 2}, three), finite_value({3, 3}, three));
    EXPECT_TRUE(run_right_sequential(t, DigitWord{0, 0, 0}).empty());
    EXPECT_TRUE(run_right_sequential(t, LeftWord{}).is_zero());
    try {
        run_right_sequential(t, DigitWord{4, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoTransition);
    }
    const PisotSpec golden = PisotSpec::make({1, 1});
    const Transducer g = build_normalization_transducer(1, 4);
    const DigitWord out = run_right_sequential(g, DigitWord{1, 1});
    EXPECT_EQ(out, (DigitWord{1, 0, 0}));
    EXPECT_EQ(finite_value(out, golden), finite_value({1, 1}, golden));
}

TEST(Transducer, Export) {
    const Transducer t = build_normalization_transducer(3, 3);
    const std::string dot = export_transducer(t, ExportFormat::Dot);
    EXPECT_EQ(dot.rfind("digraph normalizer", 0), 0u);
    std::size_t nodes = 0;
    const std::regex node_re(R"(^\s*s\d+\s*\[label=)");
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        nodes += std::regex_search(line, node_re) ? 1 : 0;
    }
    EXPECT_EQ(nodes, t.states().size());
    const std::string js = export_transducer(t, ExportFormat::Json);
    EXPECT_EQ(transducer_from_json(js), t);
    EXPECT_THROW(transducer_from_json("{\"a\": 1}"), Error);
}

TEST(Transducer, IdempotentOnAdmissibleWords) {
    std::mt19937_64 rng(12);
    for (long long a = 1; a <= 3; ++a) {
        const PisotSpec s = PisotSpec::make({1, a});
        const Transducer t = build_normalization_transducer(a, 6);
        std::size_t checked = 0;
        while (checked < 150) {
            DigitWord w;
            for (std::size_t k = rng() % 10 + 1; k > 0; --k) {
                w.push_back(static_cast<Digit>(rng() % static_cast<unsigned long>(a + 1)));
            }
            while (!w.empty() && w.front() == 0) {
                w.erase(w.begin());
            }
            if (!is_weakly_admissible(LeftWord{{}, w, {}}, s)) {
                continue;
            }
            EXPECT_EQ(run_right_sequential(t, w), w);
            ++checked;
        }
    }
}

TEST(Transducer, DifferentialAgainstExactExpansion) {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        const long long a = static_cast<long long>(rng() % 3) + 1;
        const PisotSpec s = PisotSpec::make({1, a});
        const long den = static_cast<long>(rng() % 29) + 2;
        Rational q(static_cast<long>(rng() % static_cast<unsigned long>(2 * den - 1)) - (den - 1), den);
        q.canonicalize();
        const LeftWord raw = rational_alpha_represent(q, s);
        const LeftWord exact = alpha_expand(FieldElement(s, q));
        const LeftWord via = rational_alpha_expand(q, s);
        EXPECT_EQ(pi_alpha(via, s), pi_alpha(exact, s)) << q;
        EXPECT_EQ(pi_alpha(raw, s), pi_alpha(exact, s)) << q;
        EXPECT_TRUE(is_weakly_admissible(via, s)) << q << " " << to_text(via);
        // The oracle sees the same alpha-value.
        const oracle::QuadraticBase b(1, a);
        EXPECT_TRUE(b.left_value(via.period, via.head, via.fraction) == oracle::rational(q, b.D)) << q;
    }
}
