#include <pisot/transducer.hpp>

#include <pisot/notation.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace pisot {

namespace {

using nlohmann::json;

std::string chain_label(long long k, long long h) {
    return "a^" + std::to_string(k) + ":" + std::to_string(h);
}

DigitWord repeat_0a(long long m, Digit a) {
    DigitWord u;
    for (long long i = 0; i < m; ++i) {
        u.push_back(0);
        u.push_back(a);
    }
    return u;
}

DigitWord prepend(const DigitWord &front, const DigitWord &back) {
    DigitWord out = front;
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

} // namespace

Transducer::Transducer(long long a, long long run_bound, std::vector<std::string> states, std::size_t initial,
                       std::vector<TransducerEdge> edges)
    : a_(a), run_bound_(run_bound), states_(std::move(states)), initial_(initial), edges_(std::move(edges)) {
    const std::size_t width = static_cast<std::size_t>(a_ + 1);
    table_.assign(states_.size() * width, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto &e = edges_[i];
        if (e.source >= states_.size() || e.target >= states_.size() || e.input < 0 || e.input > a_) {
            throw Error(ErrorKind::ParseError, "edge refers to an unknown state or letter");
        }
        int &slot = table_[e.source * width + static_cast<std::size_t>(e.input)];
        if (slot < 0) {
            slot = static_cast<int>(i);
        }
    }
}

std::size_t Transducer::state_index(std::string_view label) const {
    auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) {
        throw Error(ErrorKind::OutOfRange, "unknown state '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - states_.begin());
}

const TransducerEdge *Transducer::find(std::size_t state, Digit input) const {
    if (input < 0 || input > a_ || state >= states_.size()) {
        return nullptr;
    }
    const int slot = table_[state * static_cast<std::size_t>(a_ + 1) + static_cast<std::size_t>(input)];
    return slot < 0 ? nullptr : &edges_[static_cast<std::size_t>(slot)];
}

bool Transducer::is_deterministic() const {
    std::map<std::pair<std::size_t, Digit>, int> seen;
    for (const auto &e : edges_) {
        if (++seen[{e.source, e.input}] > 1) {
            return false;
        }
    }
    return true;
}

Transducer build_normalization_transducer(long long a, long long run_bound) {
    if (a < 1 || run_bound < 1) {
        throw Error(ErrorKind::OutOfRange, "need a >= 1 and C >= 1");
    }
    const Digit ad = static_cast<Digit>(a);
    std::vector<std::string> states{"eps"};
    for (long long h = 1; h <= a; ++h) {
        states.push_back(std::to_string(h));
    }
    for (long long h = 1; h <= a; ++h) {
        for (long long k = 1; k < run_bound; ++k) {
            states.push_back(chain_label(k, h));
        }
    }
    auto letter = [](long long h) { return static_cast<std::size_t>(h); };
    auto chain = [&](long long k, long long h) {
        return static_cast<std::size_t>(1 + a + (h - 1) * (run_bound - 1) + (k - 1));
    };

    std::vector<TransducerEdge> edges;
    edges.push_back({0, 0, {0}, 0});
    for (long long h = 1; h <= a; ++h) {
        const Digit hd = static_cast<Digit>(h);
        edges.push_back({0, hd, {}, letter(h)});
        edges.push_back({letter(h), 0, {0, hd}, 0});
        for (long long j = 1; j < a; ++j) {
            edges.push_back({letter(h), static_cast<Digit>(j), {hd}, letter(j)});
        }
        // A letter a above the pending digit h starts a run.
        if (run_bound > 1) {
            edges.push_back({letter(h), ad, {}, chain(1, h)});
        }
        for (long long k = 1; k < run_bound; ++k) {
            if (k + 1 < run_bound) {
                edges.push_back({chain(k, h), ad, {}, chain(k + 1, h)});
            }
            // The run a^k h is rewritten; the letter i read above it becomes the
            // pending digit i + 1.
            const long long m = (k - 1) / 2;
            DigitWord u = repeat_0a(m, ad);
            if (k % 2 == 1) {
                u.push_back(0);
                u.push_back(hd - 1);
            } else {
                u.push_back(0);
                u.push_back(ad - 1);
                u.push_back(hd);
            }
            for (long long i = 0; i < a; ++i) {
                edges.push_back({chain(k, h), static_cast<Digit>(i), u, letter(i + 1)});
            }
        }
    }
    return Transducer(a, run_bound, std::move(states), 0, std::move(edges));
}

DigitWord run_right_sequential(const Transducer &t, const DigitWord &w) {
    std::size_t state = t.initial();
    DigitWord out;
    auto step = [&](Digit d) {
        const TransducerEdge *e = t.find(state, d);
        if (e == nullptr) {
            throw Error(ErrorKind::NoTransition, "no edge from state " + t.states()[state] +
                                                     " on letter " + std::to_string(d));
        }
        out = prepend(e->output, out);
        state = e->target;
    };
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        step(*it);
    }
    while (state != t.initial()) {
        step(0);
    }
    auto first = std::find_if(out.begin(), out.end(), [](Digit d) { return d != 0; });
    out.erase(out.begin(), first);
    return out;
}

LeftWord run_right_sequential(const Transducer &t, const LeftWord &w) {
    DigitWord finite = w.head;
    finite.insert(finite.end(), w.fraction.begin(), w.fraction.end());
    const std::size_t fraction_len = w.fraction.size();
    if (w.period.empty()) {
        const DigitWord out = run_right_sequential(t, finite);
        LeftWord r;
        if (out.size() >= fraction_len) {
            r.head.assign(out.begin(), out.end() - static_cast<long>(fraction_len));
            r.fraction.assign(out.end() - static_cast<long>(fraction_len), out.end());
        } else {
            r.fraction = DigitWord(fraction_len - out.size(), 0);
            r.fraction.insert(r.fraction.end(), out.begin(), out.end());
        }
        return canonicalize(r);
    }

    std::size_t state = t.initial();
    DigitWord out;
    auto step = [&](Digit d) {
        const TransducerEdge *e = t.find(state, d);
        if (e == nullptr) {
            throw Error(ErrorKind::NoTransition, "no edge from state " + t.states()[state] +
                                                     " on letter " + std::to_string(d));
        }
        out = prepend(e->output, out);
        state = e->target;
    };
    for (auto it = finite.rbegin(); it != finite.rend(); ++it) {
        step(*it);
    }
    // state at a period boundary -> output length at that boundary
    std::map<std::size_t, std::size_t> boundary;
    for (;;) {
        auto [it, inserted] = boundary.emplace(state, out.size());
        if (!inserted) {
            const std::size_t block_len = out.size() - it->second;
            DigitWord block(out.begin(), out.begin() + static_cast<long>(block_len));
            DigitWord head(out.begin() + static_cast<long>(block_len), out.end());
            while (head.size() < fraction_len) {
                head = prepend(block, head);
            }
            LeftWord r;
            r.period = block;
            r.head.assign(head.begin(), head.end() - static_cast<long>(fraction_len));
            r.fraction.assign(head.end() - static_cast<long>(fraction_len), head.end());
            return canonicalize(r);
        }
        for (auto p = w.period.rbegin(); p != w.period.rend(); ++p) {
            step(*p);
        }
    }
}

long long consecutive_a_bound(long long a, const Integer &den) {
    if (den <= 0) {
        throw Error(ErrorKind::OutOfRange, "denominator must be positive");
    }
    if (a < 1) {
        throw Error(ErrorKind::OutOfRange, "need a >= 1");
    }
    if (a == 1) {
        return den.get_si() + 2;
    }
    long long k = 2;
    Integer power = 1;
    while (power <= den) {
        power *= static_cast<long>(a);
        ++k;
    }
    return k;
}

std::string export_transducer(const Transducer &t, ExportFormat format) {
    if (format == ExportFormat::Json) {
        json edges = json::array();
        for (const auto &e : t.edges()) {
            edges.push_back({{"source", t.states()[e.source]},
                             {"input", e.input},
                             {"output", e.output},
                             {"target", t.states()[e.target]}});
        }
        json j{{"a", t.a()},
               {"run_bound", t.run_bound()},
               {"states", t.states()},
               {"initial", t.states()[t.initial()]},
               {"edges", edges}};
        return j.dump(2);
    }
    std::ostringstream os;
    os << "digraph normalizer {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < t.states().size(); ++i) {
        os << "  s" << i << " [label=\"" << t.states()[i] << "\""
           << (i == t.initial() ? ", shape=doublecircle" : "") << "];\n";
    }
    for (const auto &e : t.edges()) {
        os << "  s" << e.source << " -> s" << e.target << " [label=\"" << e.input << "|"
           << (e.output.empty() ? "eps" : to_text(e.output)) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

Transducer transducer_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        const auto states = j.at("states").get<std::vector<std::string>>();
        auto index = [&](const std::string &label) {
            auto it = std::find(states.begin(), states.end(), label);
            if (it == states.end()) {
                throw Error(ErrorKind::ParseError, "unknown state '" + label + "'");
            }
            return static_cast<std::size_t>(it - states.begin());
        };
        std::vector<TransducerEdge> edges;
        for (const auto &e : j.at("edges")) {
            edges.push_back({index(e.at("source").get<std::string>()), e.at("input").get<Digit>(),
                             e.at("output").get<DigitWord>(), index(e.at("target").get<std::string>())});
        }
        return Transducer(j.at("a").get<long long>(), j.at("run_bound").get<long long>(), states,
                          index(j.at("initial").get<std::string>()), std::move(edges));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace pisot
