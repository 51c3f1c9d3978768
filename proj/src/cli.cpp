#include <hankelkit/cli.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <hankelkit/conjecture_lab.hpp>
#include <hankelkit/families.hpp>
#include <hankelkit/gf_expression.hpp>
#include <hankelkit/hankel.hpp>
#include <hankelkit/power_series.hpp>
#include <hankelkit/report_io.hpp>
#ifdef HANKELKIT_WITH_OEIS
#include <hankelkit/oeis.hpp>
#endif

namespace hankelkit::cli {

namespace {

// A bad flag value; the message leads with the flag name.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& flag, const std::string& message) : std::runtime_error(flag + ": " + message) {}
};

Integer integer_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_integer(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag, "expected an integer, got '" + text + "'");
    }
}

IntRange range_flag(const std::string& flag, const std::string& text) {
    // "lo:hi" or a single value; the first ':' after position 0 splits.
    const auto colon = text.find(':', 1);
    try {
        if (colon == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        std::size_t used = 0;
        const long lo = std::stol(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument(text);
        const std::string rest = text.substr(colon + 1);
        const long hi = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        if (lo > hi) {
            throw UsageError(flag, "empty range " + text);
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(flag, "expected lo:hi, got '" + text + "'");
    }
}

IntegerSequence sequence_flag(const std::string& flag, const std::string& text, std::istream& in) {
    std::string payload = text;
    if (text == "-") {
        payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return parse_sequence(payload);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag, e.what());
    }
}

GfExpression gf_flag(const std::string& text) {
    try {
        return parse_gf(text);
    } catch (const ParseError& e) {
        throw UsageError("--gf", e.what());
    }
}

struct FamilyFlags {
    std::string family;
    std::string alpha;
    std::string beta = "0";

    void add_to(CLI::App* app) {
        app->add_option("--family", family, "Parametric family: A, B or C")
            ->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
        app->add_option("--alpha", alpha, "Integer parameter alpha");
        app->add_option("--beta", beta, "Integer parameter beta (ignored by family C)")->capture_default_str();
    }

    bool given() const { return !family.empty(); }

    FamilyParams params() const {
        if (alpha.empty()) {
            throw UsageError("--alpha", "required with --family");
        }
        FamilyParams p{parse_family(family), integer_flag("--alpha", alpha), integer_flag("--beta", beta)};
        if (p.family == Family::C) {
            p.beta = 0;
        }
        return p;
    }
};

// Integer sequence from --seq or the reversion of a family.
IntegerSequence sequence_source(CLI::Option* seq_opt, const std::string& seq, const FamilyFlags& fam,
                                std::size_t length, std::istream& in) {
    if (seq_opt->count() > 0) {
        return sequence_flag("--seq", seq, in);
    }
    if (fam.given()) {
        return family_reversion_sequence(fam.params(), length);
    }
    throw UsageError("--seq", "one of --seq or --family is required");
}

#ifdef HANKELKIT_WITH_OEIS
std::string render_matches(const std::vector<OeisMatch>& matches, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& m : matches) {
            out.push_back({{"id", m.id}, {"name", m.name}, {"matched_prefix_length", std::to_string(m.matched_prefix_length)}});
        }
        return out.dump(2) + "\n";
    }
    std::string text;
    if (format == OutputFormat::csv) {
        text = "id,matched_prefix_length,name\n";
        for (const auto& m : matches) {
            std::string name = m.name;
            if (name.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char c : name) {
                    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                }
                name = quoted + "\"";
            }
            text += m.id + "," + std::to_string(m.matched_prefix_length) + "," + name + "\n";
        }
        return text;
    }
    if (matches.empty()) {
        return "no matches\n";
    }
    for (const auto& m : matches) {
        text += m.id + "  " + std::to_string(m.matched_prefix_length) + "  " + m.name + "\n";
    }
    return text;
}
#endif

} // namespace

int exit_code(const ConjectureReport& report) { return report.all_pass() ? exit_ok : exit_counterexample; }

int exit_code(const SweepResult& result) { return result.counterexamples.empty() ? exit_ok : exit_counterexample; }

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact power series, Hankel transforms and conjecture checks", "hankelkit"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format_text = "table";
    app.add_option("--format", format_text, "Output format: table, json or csv")->capture_default_str()
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // expand
    auto* expand = app.add_subcommand("expand", "Expand a generating function");
    std::string gf;
    std::size_t order = 10;
    bool reversion = false;
    FamilyFlags expand_family;
    auto* expand_gf = expand->add_option("--gf", gf, "Expression in x, e.g. \"x/(1-3*x-5*x^2)\"");
    expand_family.add_to(expand);
    expand->add_flag("--reversion", reversion, "With --family: expand the reversion instead");
    expand->add_option("--order", order, "Truncation order")->capture_default_str();

    // revert
    auto* revert_cmd = app.add_subcommand("revert", "Series reversion of --gf or of the --seq coefficients");
    std::string revert_gf;
    std::string revert_seq;
    std::size_t revert_order = 10;
    auto* revert_gf_opt = revert_cmd->add_option("--gf", revert_gf, "Expression in x");
    auto* revert_seq_opt = revert_cmd->add_option("--seq", revert_seq, "Coefficients a0, a1, ... ('-' reads stdin)");
    auto* revert_order_opt = revert_cmd->add_option("--order", revert_order, "Truncation order");

    // hankel / triple share their source flags
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of --seq or a family reversion");
    auto* triple_cmd = app.add_subcommand("triple", "Hankel transforms of u, u shifted by 1 and by 2");
    std::string hankel_seq;
    std::size_t hankel_depth = 0;
    FamilyFlags hankel_family;
    CLI::Option* hankel_seq_opt = nullptr;
    CLI::Option* hankel_depth_opt = nullptr;
    for (auto* sub : {hankel_cmd, triple_cmd}) {
        auto* s = sub->add_option("--seq", hankel_seq, "Sequence terms ('-' reads stdin)");
        auto* d = sub->add_option("--depth", hankel_depth, "Largest index n");
        hankel_family.add_to(sub);
        if (sub == hankel_cmd) {
            hankel_seq_opt = s;
            hankel_depth_opt = d;
        }
    }
    auto* triple_seq_opt = triple_cmd->get_option("--seq");
    auto* triple_depth_opt = triple_cmd->get_option("--depth");

    // binomial
    auto* binomial_cmd = app.add_subcommand("binomial", "Binomial transform of --seq");
    std::string binomial_seq;
    bool inverse = false;
    binomial_cmd->add_option("--seq", binomial_seq, "Sequence terms ('-' reads stdin)")->required();
    binomial_cmd->add_flag("--inverse", inverse, "Apply the inverse transform");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check one conjecture at one parameter point");
    std::string conjecture;
    std::string verify_alpha;
    std::string verify_beta;
    std::size_t verify_depth = 6;
    verify_cmd->add_option("--conjecture", conjecture, "4, 6, 8, prop9 or alpha_shift")->required();
    verify_cmd->add_option("--alpha", verify_alpha, "Integer alpha")->required();
    auto* verify_beta_opt = verify_cmd->add_option("--beta", verify_beta, "Integer beta (unused by 8 and prop9)");
    verify_cmd->add_option("--depth,--order", verify_depth, "Depth (the order for alpha_shift)")->capture_default_str();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Check a conjecture over a parameter grid");
    std::string sweep_conjecture;
    std::string alpha_range = "-5:5";
    std::string beta_range = "-5:5";
    std::size_t sweep_depth = 6;
    unsigned threads = 0;
    sweep_cmd->add_option("--conjecture", sweep_conjecture, "4, 6, 8, prop9 or alpha_shift")->required();
    sweep_cmd->add_option("--alpha-range", alpha_range, "Inclusive range lo:hi")->capture_default_str();
    sweep_cmd->add_option("--beta-range", beta_range, "Inclusive range lo:hi")->capture_default_str();
    sweep_cmd->add_option("--depth,--order", sweep_depth, "Depth (the order for alpha_shift)")->capture_default_str();
    sweep_cmd->add_option("--threads", threads, "Worker threads (0: one per core)")->capture_default_str();

    // prop9
    auto* prop9_cmd = app.add_subcommand("prop9", "Check H = T T^T and the determinant for C(n) alpha^n");
    std::string prop9_alpha;
    std::size_t prop9_n = 4;
    prop9_cmd->add_option("--alpha", prop9_alpha, "Integer alpha")->required();
    prop9_cmd->add_option("--n", prop9_n, "Matrix index n")->capture_default_str();

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "Identify a sequence in the OEIS");
    std::string oeis_seq;
    bool offline = false;
    oeis_cmd->add_option("--seq", oeis_seq, "Sequence terms ('-' reads stdin)")->required();
    oeis_cmd->add_flag("--offline", offline, "Use only the cache and bundled fixtures");

    std::vector<const char*> argv{"hankelkit"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        const OutputFormat format = parse_output_format(format_text);
        std::string text;
        int code = exit_ok;

        if (expand->parsed()) {
            if (expand_gf->count() > 0 && expand_family.given()) {
                throw UsageError("--gf", "cannot be combined with --family");
            }
            PowerSeries s = PowerSeries::zero(order);
            if (expand_gf->count() > 0) {
                s = eval_gf(gf_flag(gf), order);
            } else if (expand_family.given()) {
                const FamilyParams p = expand_family.params();
                s = reversion ? family_reversion_ogf(p, order) : family_ogf(p, order);
            } else {
                throw UsageError("--gf", "one of --gf or --family is required");
            }
            text = render_series(s, format);
        } else if (revert_cmd->parsed()) {
            if ((revert_gf_opt->count() > 0) == (revert_seq_opt->count() > 0)) {
                throw UsageError("--gf", "exactly one of --gf or --seq is required");
            }
            PowerSeries f = PowerSeries::zero(0);
            if (revert_gf_opt->count() > 0) {
                f = eval_gf(gf_flag(revert_gf), revert_order);
            } else {
                const IntegerSequence seq = sequence_flag("--seq", revert_seq, in);
                if (seq.size() < 2) {
                    throw UsageError("--seq", "need at least the coefficients of x^0 and x^1");
                }
                f = PowerSeries::from_integers(seq.terms());
                f = f.with_order(revert_order_opt->count() > 0 ? revert_order : seq.size() - 1);
            }
            text = render_series(revert(f), format);
        } else if (hankel_cmd->parsed() || triple_cmd->parsed()) {
            const bool triple = triple_cmd->parsed();
            CLI::Option* seq_opt = triple ? triple_seq_opt : hankel_seq_opt;
            CLI::Option* depth_opt = triple ? triple_depth_opt : hankel_depth_opt;
            if (seq_opt->count() > 0 && hankel_family.given()) {
                throw UsageError("--seq", "cannot be combined with --family");
            }
            const std::size_t extra = triple ? 3 : 1;
            std::size_t depth = depth_opt->count() > 0 ? hankel_depth : 5;
            const IntegerSequence seq = sequence_source(seq_opt, hankel_seq, hankel_family, 2 * depth + extra, in);
            if (depth_opt->count() == 0 && seq_opt->count() > 0) {
                if (seq.size() < extra) {
                    throw UsageError("--seq", "need at least " + std::to_string(extra) + " terms");
                }
                depth = (seq.size() - extra) / 2;
            }
            text = triple ? render_triple(hankel_triple(seq, depth), format)
                          : render_sequence(hankel_transform(seq, depth), format);
        } else if (binomial_cmd->parsed()) {
            const IntegerSequence seq = sequence_flag("--seq", binomial_seq, in);
            text = render_sequence(inverse ? inverse_binomial_transform(seq) : binomial_transform(seq), format);
        } else if (verify_cmd->parsed()) {
            const ConjectureId id = parse_conjecture_id(conjecture);
            const bool needs_beta = id != ConjectureId::conjecture8 && id != ConjectureId::prop9;
            if (needs_beta && verify_beta_opt->count() == 0) {
                throw UsageError("--beta", "required for conjecture " + to_string(id));
            }
            const Integer alpha = integer_flag("--alpha", verify_alpha);
            const Integer beta = needs_beta ? integer_flag("--beta", verify_beta) : Integer(0);
            const ConjectureReport r = verify(id, alpha, beta, verify_depth);
            text = render_report(r, format);
            code = exit_code(r);
        } else if (sweep_cmd->parsed()) {
            const ConjectureId id = parse_conjecture_id(sweep_conjecture);
            const IntRange a = range_flag("--alpha-range", alpha_range);
            const IntRange b = range_flag("--beta-range", beta_range);
            SweepOptions options;
            options.threads = threads > 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
            const SweepResult s = sweep(id, a, b, sweep_depth, options);
            text = render_sweep(s, format);
            code = exit_code(s);
        } else if (prop9_cmd->parsed()) {
            const ConjectureReport r = prop9_verify(integer_flag("--alpha", prop9_alpha), prop9_n);
            text = render_report(r, format);
            code = exit_code(r);
        } else if (oeis_cmd->parsed()) {
#ifdef HANKELKIT_WITH_OEIS
            const IntegerSequence seq = sequence_flag("--seq", oeis_seq, in);
            OeisClient client(OeisCache::default_directory());
            text = render_matches(client.lookup(seq, offline ? LookupMode::offline : LookupMode::online), format);
#else
            (void)offline;
            throw UsageError("oeis", "this build has no OEIS support");
#endif
        }
        out << text;
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

} // namespace hankelkit::cli
