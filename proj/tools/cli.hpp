#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace orthoform::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

struct RunRequest {
    std::string command;  // perp, closure, check-space, harmonic, lemma33, geometry-axioms,
                          // lattice, baer-demo, qlogic-check, norm-equiv
    std::string action;   // lattice: build | check | dot
    std::string input;
    std::vector<std::string> subspaces;
    std::string mode = "auto";  // auto | exhaustive | sampled
    std::uint64_t seed = 0;
    std::size_t cap = 20000;
    std::size_t samples = 500;
    std::string dot;
    std::string field = "Q(i)";  // baer-demo
    std::size_t n = 2;           // baer-demo
};

// Executes one request. Reports go to out, diagnostics to err.
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

// Command-line front end: parses argv into a RunRequest and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orthoform::cli
