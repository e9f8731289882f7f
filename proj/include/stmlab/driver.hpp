#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stmlab/report.hpp"

namespace stm {

// Parsed batch configuration; every field mirrors a CLI flag.
struct RunConfig {
    int n = 0;
    std::string word;    // "1,2,1"
    std::string word_j;  // fiber: left word
    std::string word_k;  // fiber: right word
    std::string w;       // "[3,2,1]"
    std::string v;
    std::vector<int> mult;
    int power = 2;
    std::vector<std::uint64_t> seeds = {2026};
    int margin = 25;
    int bound = 50;
    bool dump_tableaux = false;
};

Json run_columns(const RunConfig& cfg);
Json run_enumerate(const RunConfig& cfg);
Json run_dim(const RunConfig& cfg);
Json run_verify_bs(const RunConfig& cfg);
Json run_verify_restriction(const RunConfig& cfg);
Json run_verify_schubert(const RunConfig& cfg);
Json run_verify_richardson(const RunConfig& cfg);
Json run_verify_sagbi(const RunConfig& cfg);
Json run_fiber_dim(const RunConfig& cfg);

// Report with the volatile "timing" keys removed (for byte comparisons).
Json strip_timing(Json j);

} // namespace stm
