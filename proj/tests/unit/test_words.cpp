#include "quadratic_oracle.hpp"

#include <pisot/beta.hpp>
#include <pisot/notation.hpp>
#include <pisot/words.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace pisot;

namespace {

const PisotSpec &golden() {
    static const PisotSpec s = PisotSpec::make({1, 1});
    return s;
}

FieldElement rat(const PisotSpec &s, long n, long d = 1) { return FieldElement(s, Rational(n, d)); }

oracle::Quad left_oracle(const oracle::QuadraticBase &b, const LeftWord &w) {
    return b.left_value(w.period, w.head, w.fraction);
}

} // namespace

TEST(Words, PiBeta) {
    EXPECT_EQ(pi_beta(parse_finite_word("101.01"), golden()), rat(golden(), 4));
    EXPECT_TRUE(pi_beta(FiniteWord{}, golden()).is_zero());
    // 0.(10)^omega = beta / (beta^2 - 1) = 1, the quasi-greedy expansion of 1
    const RightWord y = parse_right_word("0.(10)~");
    EXPECT_EQ(pi_beta(y, golden()), FieldElement::one(golden()));
    EXPECT_EQ(pi_beta(parse_right_word("0.(01)~"), golden()), FieldElement(golden(), {Rational(-1), Rational(1)}));
    try {
        pi_beta(parse_left_word("~(10)1"), golden());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Divergent);
    }
    EXPECT_EQ(pi_beta(parse_left_word("101.01"), golden()), rat(golden(), 4));
}

TEST(Words, PiAlphaKnownValues) {
    EXPECT_EQ(pi_alpha(parse_left_word("~(10)"), golden()), rat(golden(), -1));
    EXPECT_EQ(pi_alpha(parse_left_word("~(10)0.1"), golden()), rat(golden(), -1));
    EXPECT_EQ(pi_alpha(parse_left_word("~(10)010.1"), golden()), rat(golden(), -2));
    EXPECT_TRUE((pi_alpha(parse_left_word("~(10)"), golden()) + FieldElement::one(golden())).is_zero());
}

TEST(Words, PiAlphaAgainstSurdOracle) {
    std::mt19937_64 rng(3);
    for (long a : {1L, 2L, 3L}) {
        const PisotSpec s = PisotSpec::make({1, a});
        const oracle::QuadraticBase b(1, a);
        for (int i = 0; i < 200; ++i) {
            LeftWord w;
            auto fill = [&](DigitWord &d, std::size_t n) {
                for (std::size_t k = 0; k < n; ++k) {
                    d.push_back(static_cast<Digit>(rng() % static_cast<unsigned long>(a + 1)));
                }
            };
            fill(w.period, rng() % 4);
            fill(w.head, rng() % 5);
            fill(w.fraction, rng() % 4);
            const FieldElement v = pi_alpha(w, s);
            // pi_alpha returns x with x' equal to the value at alpha.
            EXPECT_TRUE(b.embed(v.coords()[0], v.coords()[1]).conj() == left_oracle(b, w)) << to_text(w);
            EXPECT_EQ(pi_alpha(canonicalize(w), s), v);
            // Unrolling the period once into the head changes nothing.
            LeftWord u = w;
            u.head.insert(u.head.begin(), w.period.begin(), w.period.end());
            EXPECT_EQ(pi_alpha(u, s), v);
        }
    }
}

TEST(Words, LexicographicOrder) {
    const Sequence ten{{}, {1, 0}};
    EXPECT_TRUE(lex_less(Sequence{{0}, {1}}, ten));
    EXPECT_FALSE(lex_less(ten, ten));
    EXPECT_FALSE(lex_less(Sequence{{1, 1}, {}}, ten));
    EXPECT_EQ(lex_compare(Sequence{{1, 0, 1, 0}, {1, 0}}, ten), 0);
    std::mt19937_64 rng(4);
    auto random_seq = [&] {
        Sequence s;
        for (std::size_t k = rng() % 3; k > 0; --k) {
            s.prefix.push_back(static_cast<Digit>(rng() % 2));
        }
        for (std::size_t k = rng() % 3; k > 0; --k) {
            s.period.push_back(static_cast<Digit>(rng() % 2));
        }
        return s;
    };
    for (int i = 0; i < 500; ++i) {
        const Sequence u = random_seq();
        const Sequence v = random_seq();
        const Sequence w = random_seq();
        EXPECT_EQ(lex_compare(u, v), -lex_compare(v, u));
        if (lex_less(u, v) && lex_less(v, w)) {
            EXPECT_TRUE(lex_less(u, w));
        }
    }
}

TEST(Words, BetaAdmissibility) {
    EXPECT_FALSE(is_admissible_beta(parse_right_word("0.(10)~"), golden()));
    EXPECT_TRUE(is_admissible_beta(parse_right_word("0.01"), golden()));
    EXPECT_TRUE(is_admissible_beta(parse_right_word("101.01"), golden()));
    EXPECT_FALSE(is_admissible_beta(parse_right_word("11"), golden()));
    const PisotSpec three = PisotSpec::make({1, 3});
    EXPECT_FALSE(is_admissible_beta(parse_right_word("0.(3)~"), three));
    EXPECT_FALSE(is_admissible_beta(parse_right_word("0.30(30)~"), three));
    EXPECT_TRUE(is_admissible_beta(parse_right_word("0.(2)~"), three));
    EXPECT_TRUE(is_admissible_beta(parse_right_word("0.3(03)~"), three) == false);
    EXPECT_TRUE(is_admissible_beta(parse_right_word("0.(302)~"), three));
}

TEST(Words, WeakAdmissibility) {
    EXPECT_TRUE(is_weakly_admissible(parse_left_word("~(10)010.1"), golden()));
    EXPECT_FALSE(is_weakly_admissible(parse_left_word("~(1)"), golden()));
    EXPECT_TRUE(is_weakly_admissible(parse_left_word("~(10)1"), golden()));
    EXPECT_FALSE(is_weakly_admissible(parse_left_word("~(01)1"), golden()));
    EXPECT_FALSE(is_weakly_admissible(parse_left_word("1.1"), golden()));
    const PisotSpec cubic = PisotSpec::make({1, 0, 1});
    EXPECT_TRUE(is_weakly_admissible(parse_left_word("~(100)01.00001"), cubic));
    EXPECT_FALSE(is_weakly_admissible(parse_left_word("~(100)1.01"), cubic));
    EXPECT_FALSE(is_weakly_admissible(parse_left_word("2"), golden()));
}

TEST(Words, WeakAdmissibilityFormsAgree) {
    std::mt19937_64 rng(5);
    for (const auto &c : std::vector<std::vector<long long>>{{1, 1}, {1, 3}, {1, 0, 1}, {1, 1, 1}}) {
        const PisotSpec s = PisotSpec::make(c);
        const Digit top = static_cast<Digit>(s.floor_beta());
        for (int i = 0; i < 400; ++i) {
            LeftWord w;
            auto fill = [&](DigitWord &d, std::size_t n) {
                for (std::size_t k = 0; k < n; ++k) {
                    d.push_back(static_cast<Digit>(rng() % static_cast<unsigned long>(top + 1)));
                }
            };
            fill(w.period, rng() % 4);
            fill(w.head, rng() % 5);
            fill(w.fraction, rng() % 4);
            const bool strict = is_weakly_admissible(w, s);
            EXPECT_EQ(strict, is_weakly_admissible_dstar(w, s)) << s.describe() << " " << to_text(w);
            // Factor monotonicity: dropping the fraction keeps admissibility.
            if (strict) {
                EXPECT_TRUE(is_weakly_admissible(LeftWord{w.period, w.head, {}}, s));
            }
        }
    }
}

TEST(Words, Canonicalize) {
    EXPECT_EQ(canonicalize(LeftWord{{1, 0}, {1, 0}, {}}), (LeftWord{{1, 0}, {}, {}}));
    EXPECT_EQ(canonicalize(LeftWord{{}, {0, 0, 4}, {}}), (LeftWord{{}, {4}, {}}));
    EXPECT_EQ(canonicalize(LeftWord{{0, 1, 0, 1}, {}, {1, 0}}), (LeftWord{{0, 1}, {}, {1}}));
    EXPECT_EQ(canonicalize(LeftWord{{0}, {0, 2}, {}}), (LeftWord{{}, {2}, {}}));
    EXPECT_EQ(canonicalize(RightWord{{}, {}, {1, 0, 1, 0}}), (RightWord{{}, {}, {1, 0}}));
    EXPECT_EQ(canonicalize(RightWord{{0, 1}, {2, 1, 0}, {1, 0}}), (RightWord{{1}, {2}, {1, 0}}));
}

TEST(Notation, RoundTrip) {
    for (const char *text : {"~(10)0100.001", "~(10)", "~(012)1", "101.01", "~(100)01.00001", "0", "~(30)2.1"}) {
        EXPECT_EQ(to_text(parse_left_word(text)), text);
        const LeftWord w = parse_left_word(text);
        EXPECT_EQ(left_word_from_json(to_json(w)), w);
    }
    for (const char *text : {"101.01", "0.(10)~", "1.2(03)~"}) {
        EXPECT_EQ(to_text(parse_right_word(text)), text);
        EXPECT_EQ(right_word_from_json(to_json(parse_right_word(text))), parse_right_word(text));
    }
    EXPECT_EQ(to_text(parse_finite_word("1[-1]1[-1].10")), "1[-1]1[-1].10");
    EXPECT_EQ(parse_finite_word("1[-1]1[-1].10").point, 4u);
    EXPECT_EQ(parse_digits("[12]0"), (DigitWord{12, 0}));
    EXPECT_THROW(parse_left_word("~(10"), Error);
    EXPECT_THROW(parse_left_word("1.2.3"), Error);
    EXPECT_THROW(left_word_from_json("{\"head\":"), Error);
}
