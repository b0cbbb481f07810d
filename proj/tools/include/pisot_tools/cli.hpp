#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pisot::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct WorkedExample {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// The worked examples reproduced by `verify-paper`.
std::vector<WorkedExample> worked_examples();

} // namespace pisot::cli
