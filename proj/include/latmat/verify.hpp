#pragma once

#include <cstdint>
#include <string>

namespace latmat::verify {

struct Options {
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
};

// The report text is a pure function of the options: identical runs produce
// byte-identical reports. On failure it carries the first counterexample in
// the poset text format.
struct Report {
    std::string text;
    bool all_pass = false;
};

Report run(const Options& opts);

}  // namespace latmat::verify
