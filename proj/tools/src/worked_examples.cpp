#include <pisot_tools/cli.hpp>

#include <pisot/alpha_adic.hpp>
#include <pisot/beta.hpp>
#include <pisot/notation.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>

#include <functional>

namespace pisot::cli {

namespace {

std::string join(const std::vector<LeftWord> &words) {
    std::string s = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        s += (i ? ", " : "") + to_text(words[i]);
    }
    return s + "}";
}

WorkedExample check(std::string name, std::string expected, const std::function<std::string()> &compute) {
    WorkedExample c{std::move(name), std::move(expected), {}, false};
    try {
        c.actual = compute();
        c.pass = c.actual == c.expected;
    } catch (const Error &e) {
        c.actual = std::string(to_string(e.kind())) + ": " + e.what();
    }
    return c;
}

} // namespace

std::vector<WorkedExample> worked_examples() {
    const PisotSpec golden = PisotSpec::make({1, 1});
    const PisotSpec cubic = PisotSpec::make({1, 0, 1});
    const PisotSpec three = PisotSpec::make({1, 3});
    auto value = [](const PisotSpec &s, long n) { return FieldElement(s, Rational(n)); };

    std::vector<WorkedExample> out;
    out.push_back(check("golden d(1)", "11", [&] { return to_text(renyi_d(golden).digits); }));
    out.push_back(check("golden expansions of -1 (6,6)", "{~(10), ~(10)0.1}",
                        [&] { return join(enumerate_expansions(value(golden, -1), 6, 6).expansions); }));
    out.push_back(check("golden pi_alpha(~(10)010.1)", "-2",
                        [&] {
                            const FieldElement v = pi_alpha(parse_left_word("~(10)010.1"), golden);
                            return v == value(golden, -2) ? std::string("-2") : v.to_string();
                        }));
    out.push_back(check("golden expansions of -2 (6,6)", "{~(10)00.1, ~(10)010.1}",
                        [&] { return join(enumerate_expansions(value(golden, -2), 6, 6).expansions); }));
    out.push_back(check("golden beta-expansion of 4", "101.01",
                        [&] { return to_text(beta_expand(value(golden, 4))); }));
    out.push_back(check("golden normalize 1[-1]1[-1].10", "0100.001", [&] {
        return to_text(normalize_preperiod(parse_finite_word("1[-1]1[-1].10"), golden).word);
    }));
    out.push_back(check("golden expansion of -4", "~(10)0100.001",
                        [&] { return to_text(alpha_expand_negative(value(golden, -4))); }));
    out.push_back(check("cubic d(1)", "101", [&] { return to_text(renyi_d(cubic).digits); }));
    out.push_back(check("cubic d*(1)", "(100)", [&] {
        const Sequence s = renyi_d(cubic).d_star();
        return to_text(s.prefix) + "(" + to_text(s.period) + ")";
    }));
    out.push_back(check("cubic expansions of -1", "{~(100), ~(100)0.01, ~(100)01.00001}",
                        [&] { return join(expansions_of_minus_one(cubic).expansions); }));
    out.push_back(check("a=3 d(1)", "31", [&] { return to_text(renyi_d(three).digits); }));
    out.push_back(check("a=3 psi(0, 0, 1/2)", "(-1/2, 3/2, 1)", [&] {
        const PsiResult r = psi_step(0, 0, Rational(1, 2), 3);
        return "(" + r.x3.get_str() + ", " + r.x2.get_str() + ", " + r.x1.get_str() + ")";
    }));
    out.push_back(check("a=3 psi states for 1/2", "after 0 = after 3 = (-1/2, 3/2)", [&] {
        const PsiTrace t = trace_rational_alpha(Rational(1, 2), 3);
        const PsiState &s = t.states[t.period_start];
        return "after " + std::to_string(t.period_start) + " = after " +
               std::to_string(t.period_start + t.period_len) + " = (" + s.carry_hi.get_str() + ", " +
               s.carry_lo.get_str() + ")";
    }));
    out.push_back(check("a=3 <1/2>", "~(012)1", [&] { return to_text(rational_alpha_expand(Rational(1, 2), three)); }));
    out.push_back(check("a=3 <3/2>", "~(012)2", [&] { return to_text(rational_alpha_expand(Rational(3, 2), three)); }));
    out.push_back(check("a=3 transducer fixes ~(012)1", "~(012)1", [&] {
        return to_text(run_right_sequential(build_normalization_transducer(3, 3), parse_left_word("~(012)1")));
    }));
    return out;
}

} // namespace pisot::cli
