#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Report {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// PISOT_TEST_SEED if set, else a fixed default.
std::uint64_t seed();

Report beta_round_trip(std::uint64_t seed, std::size_t per_spec);
Report alpha_admissible(std::uint64_t seed, std::size_t per_spec);
Report psi_preserves_value(std::uint64_t seed, std::size_t per_spec);
Report psi_digit_bounds(std::uint64_t seed, std::size_t per_spec);
Report transducer_normalizes(std::uint64_t seed, std::size_t per_spec);

std::vector<Report> all(std::uint64_t seed, std::size_t per_spec);

} // namespace props
