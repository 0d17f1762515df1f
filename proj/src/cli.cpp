#include "doublestar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "doublestar/bounds.hpp"
#include "doublestar/constructions.hpp"
#include "doublestar/extract.hpp"
#include "doublestar/search.hpp"

namespace doublestar::cli {

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitError = 2;
constexpr int kExitAlarm = 3;

Colouring2 load_colouring(const std::string& path, std::istream& in) {
    if (path == "-") return parse_colouring(in);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return parse_colouring(f);
}

int cmd_bounds(const DoubleStarSpec& spec, std::ostream& out) {
    BoundsReport report = BoundsReport::compute(spec);
    out << report.human() << report.machine() << "\n";
    return kExitFound;
}

int cmd_verify(const DoubleStarSpec& spec, const std::string& path, std::istream& in, std::ostream& out) {
    Colouring2 c = load_colouring(path, in);
    std::optional<Embedding> found = find_monochromatic(c, spec);
    if (found) {
        out << render_certificate(*found);
        out << "result=found n=" << c.order() << " m1=" << spec.m1 << " m2=" << spec.m2 << " colour="
            << colour_char(found->colour) << " centre1=" << found->centre1 << " centre2=" << found->centre2 << "\n";
        return kExitFound;
    }
    out << "none\n";
    out << "result=none n=" << c.order() << " m1=" << spec.m1 << " m2=" << spec.m2 << "\n";
    return kExitNone;
}

int cmd_extract(const DoubleStarSpec& spec, const std::string& path, bool show_trace, std::istream& in,
                std::ostream& out) {
    Colouring2 c = load_colouring(path, in);
    ExtractionTrace trace = extract_trace(c, spec);
    if (show_trace) {
        out << render_trace(trace);
    } else {
        out << render_certificate(trace.embedding);
    }
    out << "result=ok n=" << c.order() << " m1=" << spec.m1 << " m2=" << spec.m2 << " used_fallback="
        << (trace.used_fallback ? 1 : 0) << " colour=" << colour_char(trace.embedding.colour) << " centre1="
        << trace.embedding.centre1 << " centre2=" << trace.embedding.centre2 << "\n";
    return kExitFound;
}

int cmd_construct(const DoubleStarSpec& spec, const std::string& out_path, std::ostream& out) {
    Colouring2 c = canonical_colouring(spec);
    std::string text = serialize_colouring(c);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
        out << "wrote good colouring on " << c.order() << " vertices to " << out_path << "\n";
        out << "n=" << c.order() << " m1=" << spec.m1 << " m2=" << spec.m2 << " out=" << out_path << "\n";
    } else {
        // keep stdout parseable as a colouring file: the summary line is a comment
        out << text;
        out << "# n=" << c.order() << " m1=" << spec.m1 << " m2=" << spec.m2 << " out=-\n";
    }
    return kExitFound;
}

const char* verdict_word(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "good colouring found";
    case Verdict::No: return "exhausted, none exists";
    default: return "undetermined (budget)";
    }
}

int cmd_search_exact(const DoubleStarSpec& spec, int max_n, std::uint64_t budget, int threads,
                     const std::string& witness_dir, std::ostream& out, std::ostream& err) {
    SearchOutcome o = ramsey_exact(spec, max_n, budget, threads);
    out << "search exact for " << spec.name() << ", n up to " << max_n << "\n";
    for (const LevelReport& lv : o.levels) {
        out << "  n=" << lv.n << ": ";
        if (lv.canonical) {
            out << "good colouring from canonical construction\n";
        } else {
            out << verdict_word(lv.verdict) << " (nodes=" << lv.nodes << ", prunes=" << lv.prunes << ")\n";
        }
    }
    if (!witness_dir.empty()) {
        for (const auto& [n, witness] : o.witnesses) {
            std::string path = witness_dir + "/witness_n" + std::to_string(n) + ".txt";
            std::ofstream f(path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << serialize_colouring(witness);
        }
    }

    std::ostringstream machine;
    machine << "m1=" << spec.m1 << " m2=" << spec.m2 << " max_n=" << max_n;
    int rc;
    if (o.ramsey_value) {
        out << "R(" << spec.name() << ") = " << *o.ramsey_value << "\n";
        machine << " ramsey=" << *o.ramsey_value << " exhausted_at=" << *o.exhausted_at;
        rc = kExitFound;
    } else {
        int best = o.witnesses.empty() ? 0 : o.witnesses.rbegin()->first;
        out << "R(" << spec.name() << ") undetermined";
        if (best > 0) out << ", >= " << best + 1;
        out << "\n";
        machine << " ramsey=unknown";
        if (best > 0) machine << " lower_bound=" << best + 1;
        rc = kExitNone;
    }
    machine << " nodes=" << o.stats.nodes << " prunes=" << o.stats.prunes;
    out << machine.str() << "\n";
    err << "# wall_seconds=" << o.stats.wall_seconds << "\n";
    return rc;
}

int cmd_search_witness(const DoubleStarSpec& spec, int n, std::uint64_t seed, std::uint64_t iters,
                       const std::string& out_path, std::ostream& out) {
    std::optional<Colouring2> witness = random_witness_search(n, spec, seed, iters);
    if (!witness) {
        out << "not found\n";
        out << "result=none n=" << n << " m1=" << spec.m1 << " m2=" << spec.m2 << " seed=" << seed << " iters="
            << iters << "\n";
        return kExitNone;
    }
    std::string text = serialize_colouring(*witness);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
        out << "wrote good colouring on " << n << " vertices to " << out_path << "\n";
        out << "result=found n=" << n << " m1=" << spec.m1 << " m2=" << spec.m2 << " seed=" << seed << " out="
            << out_path << "\n";
    } else {
        out << text;
        out << "# result=found n=" << n << " m1=" << spec.m1 << " m2=" << spec.m2 << " seed=" << seed << " out=-\n";
    }
    return kExitFound;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Ramsey tools for double stars S(m1,m2)"};
    app.require_subcommand(1);

    int m1 = 0, m2 = 0;
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--m1", m1, "larger leaf count")->required()->check(CLI::Range(1, 100'000'000));
        cmd->add_option("--m2", m2, "smaller leaf count")->required()->check(CLI::Range(1, 100'000'000));
    };

    auto* bounds_cmd = app.add_subcommand("bounds", "exact lower/upper bound summary");
    add_spec(bounds_cmd);

    std::string input_path;
    auto* verify_cmd = app.add_subcommand("verify", "scan a colouring file for a monochromatic copy");
    add_spec(verify_cmd);
    verify_cmd->add_option("--input", input_path, "colouring file, - for stdin")->required();

    bool show_trace = false;
    auto* extract_cmd = app.add_subcommand("extract", "pin down a copy by replaying the bound argument");
    add_spec(extract_cmd);
    extract_cmd->add_option("--input", input_path, "colouring file, - for stdin")->required();
    extract_cmd->add_flag("--trace", show_trace, "print the replay trace, not just the certificate");

    std::string out_path;
    auto* construct_cmd = app.add_subcommand("construct", "emit the canonical good colouring on r_b-1 vertices");
    add_spec(construct_cmd);
    construct_cmd->add_option("--out", out_path, "write the colouring here instead of stdout");

    auto* search_cmd = app.add_subcommand("search", "exhaustive and randomized searches");
    search_cmd->require_subcommand(1);

    int max_n = -1, threads = 1;
    std::uint64_t budget = 0;
    std::string witness_dir;
    auto* exact_cmd = search_cmd->add_subcommand("exact", "determine the Ramsey number by exhaustion");
    add_spec(exact_cmd);
    exact_cmd->add_option("--max-n", max_n, "largest n to exhaust (default r_b + 2)");
    exact_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    exact_cmd->add_option("--budget", budget, "node limit per search task, 0 = unlimited");
    exact_cmd->add_option("--witness-dir", witness_dir, "directory for witness colouring files");

    int witness_n = 0;
    std::uint64_t seed = 0, iters = 100'000;
    auto* witness_cmd = search_cmd->add_subcommand("witness", "randomized local search for one good colouring");
    add_spec(witness_cmd);
    witness_cmd->add_option("--n", witness_n, "vertex count")->required()->check(CLI::Range(2, 64));
    witness_cmd->add_option("--seed", seed, "random seed");
    witness_cmd->add_option("--iters", iters, "flip/restart budget");
    witness_cmd->add_option("--out", out_path, "write the colouring here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitFound;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        DoubleStarSpec spec(m1, m2);
        if (bounds_cmd->parsed()) return cmd_bounds(spec, out);
        if (verify_cmd->parsed()) return cmd_verify(spec, input_path, in, out);
        if (extract_cmd->parsed()) return cmd_extract(spec, input_path, show_trace, in, out);
        if (construct_cmd->parsed()) return cmd_construct(spec, out_path, out);
        if (exact_cmd->parsed()) {
            if (max_n < 0) max_n = static_cast<int>(r_b(spec)) + 2;
            return cmd_search_exact(spec, max_n, budget, threads, witness_dir, out, err);
        }
        if (witness_cmd->parsed()) return cmd_search_witness(spec, witness_n, seed, iters, out_path, out);
        err << "error: no subcommand selected\n";
        return kExitError;
    } catch (const CounterexampleAlarm& alarm) {
        err << "error: " << alarm.what() << "\n" << alarm.colouring_text();
        return kExitAlarm;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

} // namespace doublestar::cli
