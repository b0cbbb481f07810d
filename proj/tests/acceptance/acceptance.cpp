// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "properties.hpp"

#include <pisot/alpha_adic.hpp>
#include <pisot/beta.hpp>
#include <pisot/notation.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>
#include <pisot_tools/cli.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace pisot;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string run_cli_text(const std::vector<std::string> &args, int &code) {
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run_cli(args, out, err);
    return out.str() + err.str();
}

bool is_rotation_of_10(const DigitWord &p) { return p == DigitWord{1, 0} || p == DigitWord{0, 1}; }

std::string joined(const std::vector<LeftWord> &ws) {
    std::string s;
    for (const auto &w : ws) {
        s += (s.empty() ? "" : " ") + to_text(w);
    }
    return "{" + s + "}";
}

Outcome criterion1() {
    int code = 0;
    const std::string out =
        run_cli_text({"alpha-enumerate", "--coeffs", "1,1", "--value", "-1", "--head-bound", "6", "--fraction-bound", "6"}, code);
    std::string shown = out.substr(0, out.find_last_not_of('\n') + 1);
    std::replace(shown.begin(), shown.end(), '\n', ' ');
    return {code == 0 && out == "~(10)\n~(10)0.1\n", "output " + shown};
}

Outcome criterion2() {
    const PisotSpec g = PisotSpec::make({1, 1});
    const NegativeExpansionTrace t = trace_alpha_expand_negative(FieldElement(g, Rational(-4)));
    const NormalizedPreperiod n = normalize_preperiod(parse_finite_word("1[-1]1[-1].10"), g);
    const std::string r = to_text(t.result);
    const std::string nt = to_text(n.word);
    return {r == "~(10)0100.001" && nt == "0100.001" && to_text(t.normalized.word) == "0100.001",
            "expand(-4) = " + r + ", normalize = " + nt};
}

Outcome criterion3() {
    const PisotSpec g = PisotSpec::make({1, 1});
    const FieldElement v = pi_alpha(parse_left_word("~(10)010.1"), g);
    return {v == FieldElement(g, Rational(-2)), "value " + v.to_string()};
}

Outcome criterion4() {
    const PisotSpec c = PisotSpec::make({1, 0, 1});
    const RenyiExpansion d = renyi_d(c);
    const Sequence ds = d.d_star();
    const ExpansionSet e = expansions_of_minus_one(c);
    std::set<std::string> got;
    for (const auto &w : e.expansions) {
        got.insert(to_text(w));
    }
    const std::set<std::string> want{"~(100)", "~(100)0.01", "~(100)01.00001"};
    const bool ok = to_text(d.digits) == "101" && d.period.empty() && ds.prefix.empty() && to_text(ds.period) == "100" &&
                    got == want && e.expansions.size() == 3;
    return {ok, "d = " + to_text(d.digits) + ", d* = (" + to_text(ds.period) + ")^w, expansions " + joined(e.expansions)};
}

Outcome criterion5() {
    int code = 0;
    const std::string out = run_cli_text({"rational-adic", "--a", "3", "--q", "1/2", "--trace"}, code);
    int code2 = 0;
    const std::string out2 = run_cli_text({"rational-adic", "--a", "3", "--q", "3/2"}, code2);
    const PsiTrace t = trace_rational_alpha(Rational(1, 2), 3);
    const bool recurs = t.states.size() == t.period_start + t.period_len + 1 && t.states.back() == t.states[t.period_start];
    const bool pair = t.states[t.period_start] == PsiState{Rational(-1, 2), Rational(3, 2)};
    const bool table = out.find("= (-1/2, 3/2)") != std::string::npos;
    const bool ends = out.size() >= 8 && out.substr(out.size() - 8) == "~(012)1\n";
    const LeftWord w = rational_alpha_expand(Rational(3, 2), PisotSpec::make({1, 3}));
    const bool ok = code == 0 && code2 == 0 && recurs && pair && table && ends && out2 == "~(012)2\n" &&
                    w.fraction.empty();
    return {ok, "1/2 -> " + to_text(t.word) + ", 3/2 -> " + out2.substr(0, out2.size() - (out2.empty() ? 0 : 1))};
}

Outcome criterion6() {
    const auto start = Clock::now();
    const auto reports = props::all(props::seed(), 500);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first;
    for (const auto &r : reports) {
        cases += r.cases;
        failures += r.failures;
        if (first.empty() && r.failures) {
            first = r.name + ": " + r.first_failure;
        }
    }
    std::ostringstream os;
    os << cases << " cases, " << failures << " failures, " << secs << " s";
    if (!first.empty()) {
        os << " (" << first << ")";
    }
    return {failures == 0 && secs < 60.0, os.str()};
}

Outcome criterion7() {
    const PisotSpec g = PisotSpec::make({1, 1});
    std::size_t checked = 0;
    std::string bad;
    for (long c0 = -10; c0 <= 10 && bad.empty(); ++c0) {
        for (long c1 = -10; c1 <= 10 && bad.empty(); ++c1) {
            if (c0 == 0 && c1 == 0) {
                continue;
            }
            const FieldElement x(g, {Rational(c0), Rational(c1)});
            const int s = sign(x);
            const ExpansionSet e = enumerate_expansions(x, 8, 6);
            bool ok = !e.heuristic;
            if (s > 0) {
                ok = ok && e.expansions.size() == 1 && e.expansions.front().period.empty();
            } else {
                ok = ok && e.expansions.size() == 2;
                for (const auto &w : e.expansions) {
                    ok = ok && is_rotation_of_10(w.period);
                }
            }
            for (const auto &w : e.expansions) {
                ok = ok && pi_alpha(w, g) == x && is_weakly_admissible(w, g);
            }
            ++checked;
            if (!ok) {
                bad = x.to_string() + " -> " + joined(e.expansions) + (e.heuristic ? " (heuristic)" : "");
            }
        }
    }
    return {bad.empty(), bad.empty() ? std::to_string(checked) + " nonzero targets" : "counterexample " + bad};
}

Outcome criterion8() {
    std::size_t checked = 0;
    std::string bad;
    for (long long a : {2LL, 3LL}) {
        const PisotSpec s = PisotSpec::make({1, a});
        for (long den = 1; den <= 30; ++den) {
            const long long k = consecutive_a_bound(a, Integer(den));
            for (long p = -(den - 1); p < den; ++p) {
                Rational q(p, den);
                q.canonicalize();
                const LeftWord w = rational_alpha_represent(q, s);
                DigitWord text = w.period;
                text.insert(text.end(), w.period.begin(), w.period.end());
                text.insert(text.end(), w.head.begin(), w.head.end());
                text.insert(text.end(), w.fraction.begin(), w.fraction.end());
                long long run = 0;
                long long best = 0;
                for (Digit d : text) {
                    run = d == a ? run + 1 : 0;
                    best = std::max(best, run);
                }
                ++checked;
                if (best >= k && bad.empty()) {
                    bad = "a=" + std::to_string(a) + " q=" + q.get_str() + " run " + std::to_string(best) +
                          " bound " + std::to_string(k);
                }
            }
        }
    }
    return {bad.empty(), bad.empty() ? std::to_string(checked) + " rationals" : "violation " + bad};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden expansions of -1 within (6,6)", 1.0, criterion1},
        {2, "negative expansion of -4 and its pre-period normalization", 1.0, criterion2},
        {3, "pi_alpha(~(10)010.1) = -2", 0.0, criterion3},
        {4, "cubic x^3-x^2-1 Renyi data and expansions of -1", 0.0, criterion4},
        {5, "psi trace for 1/2 and 3/2 with a = 3", 0.0, criterion5},
        {6, "property suite, 500 cases per spec", 60.0, criterion6},
        {7, "golden uniqueness over [-10,10]^2 with bounds (8,6)", 300.0, criterion7},
        {8, "run of a below the consecutive bound, den <= 30", 0.0, criterion8},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.limit_s <= 0.0 || secs < c.limit_s;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::ostringstream line;
        line.precision(3);
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "; "
             << std::fixed << secs << " s";
        if (!in_time) {
            line << ", limit " << c.limit_s << " s";
        }
        line << "]";
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
