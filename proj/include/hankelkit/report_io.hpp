#ifndef HANKELKIT_REPORT_IO_HPP
#define HANKELKIT_REPORT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include <hankelkit/conjecture_lab.hpp>
#include <hankelkit/hankel.hpp>
#include <hankelkit/power_series.hpp>

namespace hankelkit {

// Serialization. Every number is a decimal string so arbitrarily large
// values survive JSON transport; rationals are "num/den" with the
// denominator omitted when it is 1.

enum class OutputFormat { table, json, csv };

OutputFormat parse_output_format(std::string_view text);

nlohmann::json to_json(const PowerSeries& s);
PowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IntegerSequence& s);
IntegerSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HankelTriple& t);

// {conjecture, family, alpha, beta, depth, checks: [{n, claim, lhs, rhs, pass}],
//  all_pass, sequence, notes}. beta is null where the check ignores it.
nlohmann::json to_json(const ConjectureReport& r);

nlohmann::json to_json(const SweepResult& s);

// Text renderers. Output is deterministic for a given value and format and
// always ends with a newline.
std::string render_series(const PowerSeries& s, OutputFormat format);
std::string render_sequence(const IntegerSequence& s, OutputFormat format);
std::string render_triple(const HankelTriple& t, OutputFormat format);
std::string render_report(const ConjectureReport& r, OutputFormat format);
std::string render_sweep(const SweepResult& s, OutputFormat format);

} // namespace hankelkit

#endif
