#include <hankelkit/report_io.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

namespace hankelkit {

namespace {

using nlohmann::json;

bool uses_beta(ConjectureId id) { return id != ConjectureId::conjecture8 && id != ConjectureId::prop9; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

// Left-aligned columns separated by two spaces; no trailing whitespace.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) {
                line += std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        out += line + "\n";
    }
    return out;
}

std::string params_text(const ConjectureReport& r) {
    std::string s = "alpha=" + r.params.alpha.get_str();
    if (uses_beta(r.conjecture)) {
        s += " beta=" + r.params.beta.get_str();
    }
    return s;
}

std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i > 0 ? "," : "") + parts[i];
    }
    return out + "\n";
}

} // namespace

OutputFormat parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected table, json or csv)");
}

json to_json(const PowerSeries& s) {
    json j = json::array();
    for (const auto& c : s.coefficients()) {
        j.push_back(to_string(c));
    }
    return j;
}

PowerSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("series JSON must be a non-empty array");
    }
    std::vector<Rational> c;
    for (const auto& v : j) {
        c.push_back(parse_rational(v.get<std::string>()));
    }
    return PowerSeries(std::move(c));
}

json to_json(const IntegerSequence& s) {
    json j = json::array();
    for (const auto& t : s) {
        j.push_back(t.get_str());
    }
    return j;
}

IntegerSequence sequence_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("sequence JSON must be an array");
    }
    std::vector<Integer> terms;
    for (const auto& v : j) {
        terms.push_back(parse_integer(v.get<std::string>()));
    }
    return IntegerSequence(std::move(terms));
}

json to_json(const HankelTriple& t) {
    return json{{"depth", std::to_string(t.depth)},
                {"h", to_json(t.h)},
                {"h_star", to_json(t.h_star)},
                {"h_star_star", to_json(t.h_star_star)}};
}

json to_json(const ConjectureReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{{"n", std::to_string(c.n)},
                              {"claim", c.claim},
                              {"lhs", c.lhs.get_str()},
                              {"rhs", c.rhs.get_str()},
                              {"pass", c.pass}});
    }
    return json{{"conjecture", to_string(r.conjecture)},
                {"family", to_string(r.params.family)},
                {"alpha", r.params.alpha.get_str()},
                {"beta", uses_beta(r.conjecture) ? json(r.params.beta.get_str()) : json(nullptr)},
                {"depth", std::to_string(r.depth)},
                {"checks", std::move(checks)},
                {"all_pass", r.all_pass()},
                {"sequence", to_json(r.sequence)},
                {"notes", r.notes}};
}

json to_json(const SweepResult& s) {
    json reports = json::array();
    for (const auto& r : s.reports) {
        reports.push_back(to_json(r));
    }
    json counterexamples = json::array();
    for (const auto& r : s.counterexamples) {
        counterexamples.push_back(to_json(r));
    }
    json skipped = json::array();
    for (const auto& p : s.skipped) {
        skipped.push_back(json{{"alpha", p.params.alpha.get_str()},
                               {"beta", uses_beta(s.conjecture) ? json(p.params.beta.get_str()) : json(nullptr)},
                               {"reason", p.reason}});
    }
    return json{{"conjecture", to_string(s.conjecture)},
                {"depth", std::to_string(s.depth)},
                {"points", std::to_string(s.reports.size())},
                {"reports", std::move(reports)},
                {"counterexamples", std::move(counterexamples)},
                {"skipped", std::move(skipped)},
                {"all_pass", s.counterexamples.empty()}};
}

std::string render_series(const PowerSeries& s, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return to_json(s).dump(2) + "\n";
    case OutputFormat::csv: {
        std::vector<std::string> parts;
        for (const auto& c : s.coefficients()) {
            parts.push_back(to_string(c));
        }
        return joined(parts);
    }
    case OutputFormat::table:
        break;
    }
    std::vector<std::vector<std::string>> rows{{"n", "coefficient"}};
    for (std::size_t n = 0; n <= s.order(); ++n) {
        rows.push_back({std::to_string(n), to_string(s[n])});
    }
    return table(rows);
}

std::string render_sequence(const IntegerSequence& s, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return to_json(s).dump(2) + "\n";
    case OutputFormat::csv: {
        std::vector<std::string> parts;
        for (const auto& t : s) {
            parts.push_back(t.get_str());
        }
        return joined(parts);
    }
    case OutputFormat::table:
        break;
    }
    std::vector<std::vector<std::string>> rows{{"n", "value"}};
    for (std::size_t n = 0; n < s.size(); ++n) {
        rows.push_back({std::to_string(n), s[n].get_str()});
    }
    return table(rows);
}

std::string render_triple(const HankelTriple& t, OutputFormat format) {
    if (format == OutputFormat::json) {
        return to_json(t).dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows{{"n", "h", "h_star", "h_star_star"}};
    for (std::size_t n = 0; n <= t.depth; ++n) {
        rows.push_back({std::to_string(n), t.h[n].get_str(), t.h_star[n].get_str(), t.h_star_star[n].get_str()});
    }
    if (format == OutputFormat::table) {
        return table(rows);
    }
    std::string out;
    for (const auto& row : rows) {
        out += csv_row(row);
    }
    return out;
}

std::string render_report(const ConjectureReport& r, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return to_json(r).dump(2) + "\n";
    case OutputFormat::csv: {
        std::string out = csv_row({"conjecture", "alpha", "beta", "depth", "n", "claim", "lhs", "rhs", "pass"});
        const std::string beta = uses_beta(r.conjecture) ? r.params.beta.get_str() : "";
        for (const auto& c : r.checks) {
            out += csv_row({to_string(r.conjecture), r.params.alpha.get_str(), beta, std::to_string(r.depth),
                            std::to_string(c.n), c.claim, c.lhs.get_str(), c.rhs.get_str(),
                            c.pass ? "true" : "false"});
        }
        return out;
    }
    case OutputFormat::table:
        break;
    }
    std::string out = "conjecture " + to_string(r.conjecture) + "  " + params_text(r) +
                      "  depth=" + std::to_string(r.depth) + "\n";
    std::vector<std::vector<std::string>> rows{{"n", "claim", "lhs", "rhs", "status"}};
    for (const auto& c : r.checks) {
        rows.push_back({std::to_string(c.n), c.claim, c.lhs.get_str(), c.rhs.get_str(), c.pass ? "ok" : "FAIL"});
    }
    out += table(rows);
    for (const auto& note : r.notes) {
        out += "note: " + note + "\n";
    }
    out += std::string("all_pass: ") + (r.all_pass() ? "true" : "false") + "\n";
    return out;
}

std::string render_sweep(const SweepResult& s, OutputFormat format) {
    if (format == OutputFormat::json) {
        return to_json(s).dump(2) + "\n";
    }
    const bool beta = uses_beta(s.conjecture);
    std::vector<std::vector<std::string>> rows{{"alpha", "beta", "checks", "failed", "status"}};
    for (const auto& r : s.reports) {
        const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass; });
        rows.push_back({r.params.alpha.get_str(), beta ? r.params.beta.get_str() : "", std::to_string(r.checks.size()),
                        std::to_string(failed), r.all_pass() ? "ok" : "FAIL"});
    }
    if (format == OutputFormat::csv) {
        std::string out;
        for (const auto& row : rows) {
            out += csv_row(row);
        }
        return out;
    }
    std::string out = "sweep conjecture " + to_string(s.conjecture) + "  depth=" + std::to_string(s.depth) + "\n";
    out += table(rows);
    for (const auto& p : s.skipped) {
        out += "skipped alpha=" + p.params.alpha.get_str() + (beta ? " beta=" + p.params.beta.get_str() : "") + ": " +
               p.reason + "\n";
    }
    out += "points: " + std::to_string(s.reports.size()) + "  counterexamples: " +
           std::to_string(s.counterexamples.size()) + "  skipped: " + std::to_string(s.skipped.size()) + "\n";
    return out;
}

} // namespace hankelkit
