#include <pisot_tools/cli.hpp>

#include <pisot/alpha_adic.hpp>
#include <pisot/beta.hpp>
#include <pisot/notation.hpp>
#include <pisot/rational_psi.hpp>
#include <pisot/transducer.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace pisot::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    if (const char *env = std::getenv("PISOT_BUDGET")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw UsageError("PISOT_BUDGET must be a positive integer");
    }
    return kDefaultBudget;
}

std::vector<long long> parse_coeffs(const std::string &text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw UsageError("bad coefficient '" + item + "'");
            }
        } catch (const std::logic_error &) {
            throw UsageError("bad coefficient '" + item + "'");
        }
    }
    if (out.empty()) {
        throw UsageError("empty coefficient list");
    }
    return out;
}

// Options shared by every subcommand that needs a base.
struct SpecArgs {
    std::string coeffs;
    std::string spec;
    std::optional<long long> a;
    std::size_t alpha_index = 0;
    bool assume_irreducible = false;

    void attach(CLI::App *app, bool allow_a) {
        app->add_option("--coeffs", coeffs, "a_0,...,a_{d-1} of x^d - a_{d-1}x^{d-1} - ... - a_0");
        app->add_option("--spec", spec, "JSON {\"coeffs\":[...]} inline or a path to such a file");
        if (allow_a) {
            app->add_option("--a", a, "quadratic unit x^2 - a x - 1");
        }
        app->add_option("--alpha-index", alpha_index, "which conjugate plays alpha");
        app->add_flag("--assume-irreducible", assume_irreducible, "vouch for irreducibility (degree >= 5)");
    }

    PisotSpec make(std::optional<long long> fallback_a = std::nullopt) const {
        SpecOptions options;
        options.alpha_index = alpha_index;
        options.assume_irreducible = assume_irreducible;
        std::vector<long long> c;
        if (!spec.empty()) {
            std::string text = spec;
            if (text.find('{') == std::string::npos) {
                std::ifstream in(text);
                if (!in) {
                    throw UsageError("cannot read spec file '" + spec + "'");
                }
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            try {
                const json j = json::parse(text);
                c = j.at("coeffs").get<std::vector<long long>>();
                options.alpha_index = j.value("alpha_index", options.alpha_index);
                options.assume_irreducible = j.value("assume_irreducible", options.assume_irreducible);
            } catch (const json::exception &e) {
                throw UsageError(std::string("bad spec JSON: ") + e.what());
            }
        } else if (!coeffs.empty()) {
            c = parse_coeffs(coeffs);
        } else if (a || fallback_a) {
            c = {1, a ? *a : *fallback_a};
        } else {
            throw UsageError("a base is required: --coeffs, --spec or --a");
        }
        return PisotSpec::make(c, options);
    }
};

enum class Format { Text, Json };

std::string renyi_text(const DigitWord &digits, const DigitWord &period) {
    std::string s = to_text(digits);
    if (!period.empty()) {
        s += "(" + to_text(period) + ")~";
    }
    return s;
}

json word_json(const LeftWord &w) { return json::parse(to_json(w)); }
json word_json(const RightWord &w) { return json::parse(to_json(w)); }

std::string rational_text(const Rational &q) { return q.get_str(); }

void print_trace(const PsiTrace &t, std::ostream &out) {
    out << "step  s_{i+2}  s_{i+1}  s_i  ->  s_{i+2}  s_{i+1}  digit\n";
    Rational hi = 0;
    Rational lo = 0;
    Rational low = t.q;
    auto cell = [](const Rational &x) {
        std::ostringstream os;
        os << std::setw(7) << x.get_str();
        return os.str();
    };
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        out << std::setw(4) << i << "  " << cell(hi) << "  " << cell(lo) << "  " << cell(low) << "  ->  "
            << cell(t.states[i].carry_hi) << "  " << cell(t.states[i].carry_lo) << "  " << std::setw(5)
            << t.emitted[i] << "\n";
        hi = 0;
        lo = t.states[i].carry_hi;
        low = t.states[i].carry_lo;
    }
    const PsiState &s = t.states[t.period_start];
    out << "state after step " << t.period_start + t.period_len << " = state after step " << t.period_start
        << " = (" << s.carry_hi.get_str() << ", " << s.carry_lo.get_str() << ")\n";
}

int cmd_spec_check(const SpecArgs &sa, Format fmt, std::ostream &out) {
    const PisotSpec spec = sa.make();
    const FinitenessCondition cond = check_finiteness_conditions(spec);
    if (fmt == Format::Json) {
        json conj = json::array();
        for (const auto &box : spec.conjugate_regions()) {
            std::ostringstream os;
            os << box;
            conj.push_back(os.str());
        }
        std::ostringstream beta;
        beta << spec.beta_interval();
        json j{{"polynomial", spec.describe()},
               {"coeffs", spec.coeffs()},
               {"pisot", true},
               {"beta_interval", beta.str()},
               {"floor_beta", spec.floor_beta()},
               {"unit", spec.is_unit()},
               {"quadratic_unit", spec.is_quadratic_unit()},
               {"alpha_index", spec.alpha_index()},
               {"conjugates", conj},
               {"finiteness", std::string(to_string(cond))}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "polynomial  " << spec.describe() << "\n";
    out << "pisot       yes\n";
    out << "beta        " << spec.beta_interval() << "\n";
    out << "floor       " << spec.floor_beta() << "\n";
    out << "unit        " << (spec.is_unit() ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < spec.conjugate_regions().size(); ++i) {
        out << "conjugate " << i << (i == spec.alpha_index() ? "*" : " ") << " " << spec.conjugate_regions()[i]
            << "\n";
    }
    out << "property F  " << to_string(cond) << "\n";
    return 0;
}

int cmd_renyi(const SpecArgs &sa, bool star, bool minus_one, std::uint64_t budget, Format fmt, std::ostream &out) {
    const PisotSpec spec = sa.make();
    const RenyiExpansion r = renyi_d(spec, budget);
    const Sequence ds = r.d_star();
    std::vector<LeftWord> minus;
    if (minus_one) {
        minus = expansions_of_minus_one(spec).expansions;
    }
    if (fmt == Format::Json) {
        json j{{"d", r.digits}, {"d_period", r.period}, {"d_star_prefix", ds.prefix}, {"d_star_period", ds.period}};
        if (minus_one) {
            json arr = json::array();
            for (const auto &w : minus) {
                arr.push_back(word_json(w));
            }
            j["minus_one"] = arr;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << renyi_text(r.digits, r.period) << "\n";
    if (star) {
        out << renyi_text(ds.prefix, ds.period) << "\n";
    }
    for (const auto &w : minus) {
        out << to_text(w) << "\n";
    }
    return 0;
}

int cmd_beta_expand(const SpecArgs &sa, const std::string &value, std::uint64_t budget, Format fmt,
                    std::ostream &out) {
    const PisotSpec spec = sa.make();
    const RightWord w = beta_expand(parse_field_element(spec, value), budget);
    if (fmt == Format::Json) {
        out << word_json(w).dump() << "\n";
    } else {
        out << to_text(w) << "\n";
    }
    return 0;
}

int cmd_alpha_expand(const SpecArgs &sa, const std::string &value, std::optional<std::size_t> variant, bool trace,
                     std::uint64_t budget, Format fmt, std::ostream &out) {
    const PisotSpec spec = sa.make();
    const FieldElement x = parse_field_element(spec, value);
    if (variant || trace) {
        const NegativeExpansionTrace t = trace_alpha_expand_negative(x, variant.value_or(0), budget);
        if (fmt == Format::Json) {
            json j{{"expansion_of_negation", word_json(t.expansion_of_negation)},
                   {"signed_preperiod", to_text(t.signed_preperiod)},
                   {"normalized", to_text(t.normalized.word)},
                   {"unfolds", t.normalized.unfolds},
                   {"result", word_json(t.result)}};
            out << j.dump(2) << "\n";
            return 0;
        }
        if (trace) {
            out << "expansion of -x   " << to_text(t.expansion_of_negation) << "\n";
            out << "signed pre-period " << to_text(t.signed_preperiod) << "\n";
            out << "normalized        " << to_text(t.normalized.word) << " (" << t.normalized.unfolds
                << " unfolds)\n";
        }
        out << to_text(t.result) << "\n";
        return 0;
    }
    const LeftWord w = alpha_expand(x, budget);
    if (fmt == Format::Json) {
        out << word_json(w).dump() << "\n";
    } else {
        out << to_text(w) << "\n";
    }
    return 0;
}

int cmd_alpha_enumerate(const SpecArgs &sa, const std::string &value, std::size_t hb, std::size_t fb, Format fmt,
                        std::ostream &out) {
    const PisotSpec spec = sa.make(1);
    const ExpansionSet set = enumerate_expansions(parse_field_element(spec, value), hb, fb);
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto &w : set.expansions) {
            arr.push_back(word_json(w));
        }
        json j{{"expansions", arr},
               {"head_bound", set.head_bound},
               {"fraction_bound", set.fraction_bound},
               {"heuristic", set.heuristic}};
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto &w : set.expansions) {
        out << to_text(w) << "\n";
    }
    if (set.heuristic) {
        out << "# search restricted to the candidate periods; completeness not guaranteed\n";
    }
    return 0;
}

int cmd_rational_adic(long long a, const std::string &qtext, bool normalize, bool trace, std::uint64_t psi_budget,
                      Format fmt, std::ostream &out) {
    const PisotSpec spec = PisotSpec::make({1, a});
    const Rational q = parse_rational(qtext);
    // Outside (-1, 1) only the split n + r path exists; the trace shows r.
    const bool inside = q > -1 && q < 1;
    Rational traced = q;
    if (!inside) {
        mpz_class n;
        mpz_fdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        traced = q - Rational(n);
    }
    std::optional<PsiTrace> t;
    if (trace) {
        t = trace_rational_alpha(traced, a, psi_budget);
    }
    const LeftWord w = normalize || !inside ? rational_alpha_expand(q, spec, psi_budget)
                                            : rational_alpha_represent(q, spec, psi_budget);
    if (fmt == Format::Json) {
        json j{{"a", a}, {"q", rational_text(q)}, {"word", word_json(w)}};
        if (t) {
            j["traced"] = rational_text(traced);
            json steps = json::array();
            for (std::size_t i = 0; i < t->states.size(); ++i) {
                steps.push_back({{"digit", t->emitted[i]},
                                 {"carry_hi", rational_text(t->states[i].carry_hi)},
                                 {"carry_lo", rational_text(t->states[i].carry_lo)}});
            }
            j["steps"] = steps;
            j["period_start"] = t->period_start;
            j["period_len"] = t->period_len;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (t) {
        if (!inside) {
            out << "# fractional part " << rational_text(traced) << "\n";
        }
        print_trace(*t, out);
    }
    out << to_text(w) << "\n";
    return 0;
}

int cmd_normalize(const SpecArgs &sa, const std::string &word, std::uint64_t budget, Format fmt, std::ostream &out) {
    const PisotSpec spec = sa.make(1);
    const NormalizedPreperiod n = normalize_preperiod(parse_finite_word(word), spec, budget);
    if (fmt == Format::Json) {
        out << json{{"word", to_text(n.word)}, {"unfolds", n.unfolds}}.dump() << "\n";
    } else {
        out << to_text(n.word) << "\n";
    }
    return 0;
}

int cmd_transducer_build(long long a, std::optional<long long> den, std::optional<long long> c,
                         const std::string &format, std::ostream &out) {
    if (den && c) {
        throw UsageError("give --den or --C, not both");
    }
    const long long bound = c ? *c : consecutive_a_bound(a, Integer(static_cast<long>(den.value_or(1))));
    const Transducer t = build_normalization_transducer(a, bound);
    out << export_transducer(t, format == "json" ? ExportFormat::Json : ExportFormat::Dot);
    if (format == "json") {
        out << "\n";
    }
    return 0;
}

int cmd_transducer_run(long long a, long long c, const std::string &word, Format fmt, std::ostream &out) {
    const Transducer t = build_normalization_transducer(a, c);
    const LeftWord w = run_right_sequential(t, parse_left_word(word));
    if (fmt == Format::Json) {
        out << word_json(w).dump() << "\n";
    } else {
        out << to_text(w) << "\n";
    }
    return 0;
}

int cmd_verify_examples(Format fmt, std::ostream &out) {
    const std::vector<WorkedExample> checks = worked_examples();
    bool all = true;
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto &c : checks) {
            arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
            all = all && c.pass;
        }
        out << arr.dump(2) << "\n";
        return all ? 0 : 1;
    }
    std::size_t w = 0;
    for (const auto &c : checks) {
        w = std::max(w, c.name.size());
    }
    for (const auto &c : checks) {
        out << std::left << std::setw(static_cast<int>(w)) << c.name << "  " << (c.pass ? "PASS" : "FAIL") << "  "
            << c.actual;
        if (!c.pass) {
            out << "  (expected " << c.expected << ")";
        }
        out << "\n";
        all = all && c.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact beta-expansions and alpha-adic expansions in Pisot bases", "pisot"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::optional<std::uint64_t> budget_flag;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", budget_flag, "iteration budget (default $PISOT_BUDGET or 100000)");

    SpecArgs spec_args;
    std::string value;
    std::string word;
    std::string q;
    long long a = 1;
    std::size_t head_bound = 6;
    std::size_t fraction_bound = 6;
    std::optional<std::size_t> variant;
    std::optional<long long> den;
    std::optional<long long> c_opt;
    long long c_run = 0;
    std::string export_format = "dot";
    bool trace = false;
    bool normalize = false;
    bool star = false;
    bool minus_one = false;

    auto *spec_check = app.add_subcommand("spec-check", "certify a Pisot polynomial and test Property (F) criteria");
    spec_args.attach(spec_check, true);

    auto *renyi = app.add_subcommand("renyi", "Renyi expansion of 1");
    spec_args.attach(renyi, true);
    renyi->add_flag("--star", star, "also print the quasi-greedy expansion");
    renyi->add_flag("--minus-one", minus_one, "also list the expansions of -1");

    auto *beta = app.add_subcommand("beta-expand", "greedy beta-expansion of a nonnegative value");
    spec_args.attach(beta, true);
    beta->add_option("--value", value, "p/q or c0,c1,... coordinates")->required();

    auto *alpha = app.add_subcommand("alpha-expand", "alpha-adic expansion of a value");
    spec_args.attach(alpha, true);
    alpha->add_option("--value", value, "p/q or c0,c1,... coordinates")->required();
    alpha->add_option("--variant", variant, "index of the expansion of -1 used for a negative value");
    alpha->add_flag("--trace", trace, "show the steps for a negative value");

    auto *enumerate = app.add_subcommand("alpha-enumerate", "all alpha-adic expansions within bounds");
    spec_args.attach(enumerate, true);
    enumerate->add_option("--value", value, "p/q or c0,c1 coordinates")->required();
    enumerate->add_option("--head-bound", head_bound, "maximum head length");
    enumerate->add_option("--fraction-bound", fraction_bound, "maximum fraction length");

    auto *rational = app.add_subcommand("rational-adic", "psi-iteration for a rational");
    rational->add_option("--a", a, "quadratic unit x^2 - a x - 1")->required()->check(CLI::PositiveNumber);
    rational->add_option("--q", q, "p/r")->required();
    rational->add_flag("--normalize", normalize, "return a weakly admissible expansion");
    rational->add_flag("--trace", trace, "print the step table");

    auto *norm = app.add_subcommand("normalize", "rewrite a signed finite word over the canonical alphabet");
    spec_args.attach(norm, true);
    norm->add_option("--word", word, "finite word, e.g. 1[-1]1[-1].10")->required();

    auto *transducer = app.add_subcommand("transducer", "normalization transducer");
    transducer->require_subcommand(1);
    auto *build = transducer->add_subcommand("build", "build and export");
    build->add_option("--a", a, "digit a")->required()->check(CLI::PositiveNumber);
    build->add_option("--den", den, "denominator; C = consecutive_a_bound(a, den)")->check(CLI::PositiveNumber);
    build->add_option("--C", c_opt, "run bound")->check(CLI::PositiveNumber);
    build->add_option("--export", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    auto *run = transducer->add_subcommand("run", "run on a left word");
    run->add_option("--a", a, "digit a")->required()->check(CLI::PositiveNumber);
    run->add_option("--C", c_run, "run bound")->required()->check(CLI::PositiveNumber);
    run->add_option("--word", word, "left word, e.g. ~(012)1")->required();

    auto *verify = app.add_subcommand("verify-paper", "reproduce the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = format == "json" ? Format::Json : Format::Text;
        const std::uint64_t budget = budget_flag ? *budget_flag : default_budget();
        if (budget == 0) {
            throw UsageError("budget must be positive");
        }
        if (*spec_check) {
            return cmd_spec_check(spec_args, fmt, out);
        }
        if (*renyi) {
            return cmd_renyi(spec_args, star, minus_one, budget, fmt, out);
        }
        if (*beta) {
            return cmd_beta_expand(spec_args, value, budget, fmt, out);
        }
        if (*alpha) {
            return cmd_alpha_expand(spec_args, value, variant, trace, budget, fmt, out);
        }
        if (*enumerate) {
            return cmd_alpha_enumerate(spec_args, value, head_bound, fraction_bound, fmt, out);
        }
        if (*rational) {
            // Without --budget the iteration uses its pigeonhole bound.
            return cmd_rational_adic(a, q, normalize, trace, budget_flag.value_or(0), fmt, out);
        }
        if (*norm) {
            return cmd_normalize(spec_args, word, budget, fmt, out);
        }
        if (*build) {
            return cmd_transducer_build(a, den, c_opt, export_format, out);
        }
        if (*run) {
            return cmd_transducer_run(a, c_run, word, fmt, out);
        }
        if (*verify) {
            return cmd_verify_examples(fmt, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error &e) {
        err << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? 2 : 1;
    }
    return 2;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv{"pisot"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace pisot::cli
