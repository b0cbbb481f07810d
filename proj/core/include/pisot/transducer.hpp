#pragma once

// Right-sequential normalization transducer for bases with d_beta(1) = a1
// (quadratic units x^2 - a x - 1).
//
// States are labelled "eps", "h" for a pending nonzero digit h, and "a^k:h"
// for a pending digit h with k letters a above it. Words are read from the
// right; every edge output is written to the left of what has been produced
// so far, and the output stays aligned with the input positions.

#include <pisot/algebra.hpp>
#include <pisot/words.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pisot {

struct TransducerEdge {
    std::size_t source = 0;
    Digit input = 0;
    DigitWord output;
    std::size_t target = 0;

    bool operator==(const TransducerEdge &) const = default;
};

class Transducer {
public:
    Transducer() = default;
    Transducer(long long a, long long run_bound, std::vector<std::string> states, std::size_t initial,
               std::vector<TransducerEdge> edges);

    long long a() const { return a_; }
    long long run_bound() const { return run_bound_; }
    const std::vector<std::string> &states() const { return states_; }
    std::size_t initial() const { return initial_; }
    const std::vector<TransducerEdge> &edges() const { return edges_; }

    // Throws OutOfRange for an unknown label.
    std::size_t state_index(std::string_view label) const;
    // nullptr when there is no edge.
    const TransducerEdge *find(std::size_t state, Digit input) const;
    bool is_deterministic() const;

    bool operator==(const Transducer &) const = default;

private:
    long long a_ = 0;
    long long run_bound_ = 0;
    std::vector<std::string> states_;
    std::size_t initial_ = 0;
    std::vector<TransducerEdge> edges_;
    // index = state * (a + 1) + input
    std::vector<int> table_;
};

// States: eps, h in {1..a}, and chains a^k:h for k = 1..C-1.
Transducer build_normalization_transducer(long long a, long long run_bound);

// Finite word (most significant digit first): the run is flushed with zeros
// and leading zeros are dropped. Throws NoTransition.
DigitWord run_right_sequential(const Transducer &t, const DigitWord &w);
// Left eventually periodic word: runs until the state at period boundaries
// repeats and splices the output.
LeftWord run_right_sequential(const Transducer &t, const LeftWord &w);

// Smallest K with a^{K-2} > den, for a >= 2. For a = 1 the estimate
// degenerates and den + 2 is returned.
long long consecutive_a_bound(long long a, const Integer &den);

enum class ExportFormat { Dot, Json };

std::string export_transducer(const Transducer &t, ExportFormat format);
Transducer transducer_from_json(std::string_view text);

} // namespace pisot
