#ifndef HANKELKIT_CLI_HPP
#define HANKELKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <hankelkit/conjecture_lab.hpp>

namespace hankelkit::cli {

// 0: success or all checks pass; 1: a verification found a counterexample;
// 2: usage or precondition error. No other code is returned.
enum ExitCode : int { exit_ok = 0, exit_counterexample = 1, exit_usage = 2 };

int exit_code(const ConjectureReport& report);
int exit_code(const SweepResult& result);

// args excludes the program name. `--seq -` reads the sequence from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

} // namespace hankelkit::cli

#endif
