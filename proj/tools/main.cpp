#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symdyn/error.hpp"
#include "symdyn/json_io.hpp"
#include "symdyn/random.hpp"
#include "symdyn/recon.hpp"

namespace {

using namespace symdyn;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

void emit_diagnostic(const std::string& code, const std::string& message) {
    std::cerr << "{\"error\": \"" << code << "\", \"message\": \"";
    for (char c : message) {
        if (c == '"' || c == '\\') std::cerr << '\\';
        if (c == '\n') {
            std::cerr << "\\n";
            continue;
        }
        std::cerr << c;
    }
    std::cerr << "\"}\n";
}

// Errors raised while checking a morphism mean "this morphism does not fit
// these objects" and count as check failures; everything else is an input
// problem.
int exit_code_for(const Error& e, bool during_check) {
    switch (e.code()) {
        case ErrorCode::MapNotTotal:
        case ErrorCode::UnknownWord:
        case ErrorCode::LengthMismatch:
        case ErrorCode::AlphabetMismatch:
            return during_check ? kExitCheckFailed : kExitInputError;
        default:
            return kExitInputError;
    }
}

void write_output(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        io::write_file(*out_path, content);
    else
        std::cout << content;
}

std::string render_bijection(const std::map<StateId, StateId>& h) {
    std::string out;
    for (const auto& [a, b] : h) {
        if (!out.empty()) out += "; ";
        out += a + "=>" + b;
    }
    return out.empty() ? "(empty)" : out;
}

int run_consistency_single(const std::string& path) {
    FiniteDynSys sys = io::parse_system(io::read_file(path));
    ConsistencyReport report = consistency_check(sys);
    if (report.pass) {
        std::cout << "PASS states=" << sys.size() << " h: " << render_bijection(*report.bijection)
                  << "\n";
        std::cout << "1/1 PASS\n";
        return kExitOk;
    }
    std::cout << "FAIL states=" << sys.size() << " note: " << report.note << "\n";
    std::cout << "0/1 PASS\n";
    return kExitCheckFailed;
}

int run_consistency_random(std::size_t count, std::size_t max_states, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::size_t passed = 0;
    std::ostringstream lines;
    for (std::size_t i = 0; i < count; ++i) {
        FiniteDynSys sys = random_system(1 + rng.below(max_states), rng);
        ConsistencyReport report = consistency_check(sys);
        if (report.pass) {
            ++passed;
            lines << "PASS #" << i << " states=" << sys.size() << " h: "
                  << render_bijection(*report.bijection) << "\n";
        } else {
            lines << "FAIL #" << i << " states=" << sys.size() << " note: " << report.note
                  << "\n";
        }
    }
    std::cout << lines.str() << passed << "/" << count << " PASS\n";
    return passed == count ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symdyn: reconstruct finite dynamical systems from symbolic timeseries"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand(
        "generate", "Observed system or raw symbol stream -> timeseries data");
    std::string gen_input;
    std::size_t gen_dt = 1, gen_horizon = 4;
    std::optional<std::string> gen_out;
    generate->add_option("input", gen_input,
                         "Observed-system JSON file, or a raw stream (one symbol per "
                         "line / one comma-separated line)")
        ->required();
    generate->add_option("--dt", gen_dt, "Sampling stride (default 1; JSON input only)");
    generate->add_option("--horizon", gen_horizon, "Largest level to materialize (default 4)");
    generate->add_option("--out", gen_out, "Output file");

    // words
    auto* words_cmd =
        app.add_subcommand("words", "Word sets of a presentation, level by level");
    std::string words_input;
    std::size_t words_depth = 8;
    std::optional<std::string> words_out;
    words_cmd->add_option("input", words_input, "Presentation JSON file")->required();
    words_cmd->add_option("--depth", words_depth, "Largest level to enumerate (default 8)");
    words_cmd->add_option("--out", words_out, "Output file");

    // reconstruct
    auto* recon_cmd =
        app.add_subcommand("reconstruct", "Timeseries data -> de Bruijn reconstruction");
    std::string recon_input;
    std::optional<std::size_t> recon_order;
    std::optional<std::string> recon_out;
    recon_cmd->add_option("input", recon_input, "Timeseries-data JSON file")->required();
    recon_cmd->add_option("--order", recon_order,
                          "Block order (default: largest level with data)");
    recon_cmd->add_option("--out", recon_out, "Output file");

    // check-morphism
    auto* check_cmd = app.add_subcommand("check-morphism",
                                         "Validate an obs / sbc / tsd morphism between "
                                         "two objects");
    std::string check_kind;
    std::vector<std::string> check_files;
    std::size_t check_depth = 8;
    check_cmd->add_option("--kind", check_kind, "One of: obs, sbc, tsd")
        ->required()
        ->check(CLI::IsMember({"obs", "sbc", "tsd"}));
    check_cmd->add_option("files", check_files, "morphism.json x.json y.json")
        ->expected(3);
    check_cmd->add_option("--depth", check_depth,
                          "Language-containment bound for sbc checks (default 8)");

    // compose
    auto* compose_cmd =
        app.add_subcommand("compose", "Compose two codes or tsd morphisms (first applied "
                                      "first)");
    std::string compose_kind;
    std::vector<std::string> compose_files;
    std::optional<std::string> compose_out;
    compose_cmd->add_option("--kind", compose_kind, "One of: sbc, tsd")
        ->required()
        ->check(CLI::IsMember({"sbc", "tsd"}));
    compose_cmd->add_option("files", compose_files, "first.json second.json")->expected(2);
    compose_cmd->add_option("--out", compose_out, "Output file");

    // colimit
    auto* colimit_cmd = app.add_subcommand("colimit", "Diagram -> colimit system");
    std::string colimit_input;
    std::optional<std::string> colimit_out;
    colimit_cmd->add_option("input", colimit_input, "Diagram JSON file")->required();
    colimit_cmd->add_option("--out", colimit_out, "Output file");

    // consistency
    auto* cons_cmd = app.add_subcommand(
        "consistency", "Reconstruct fully observed systems and verify conjugacy");
    std::optional<std::string> cons_input;
    std::optional<std::size_t> cons_random;
    std::size_t cons_max_states = 8;
    std::uint64_t cons_seed = 0;
    bool cons_seed_set = false;
    cons_cmd->add_option("input", cons_input, "System JSON file");
    cons_cmd->add_option("--random", cons_random, "Number of random systems to test");
    cons_cmd->add_option("--max-states", cons_max_states, "Largest random system (default 8)");
    cons_cmd->add_option("--seed", cons_seed, "RNG seed (required with --random)")
        ->each([&](const std::string&) { cons_seed_set = true; });

    // delay-embed
    auto* embed_cmd =
        app.add_subcommand("delay-embed", "Replace the measurement by delay tuples");
    std::string embed_input;
    std::size_t embed_window = 1, embed_dt = 1;
    std::optional<std::string> embed_out;
    embed_cmd->add_option("input", embed_input, "Observed-system JSON file")->required();
    embed_cmd->add_option("--window", embed_window, "Tuple length k >= 1 (default 1)");
    embed_cmd->add_option("--dt", embed_dt, "Sampling stride (default 1)");
    embed_cmd->add_option("--out", embed_out, "Output file");

    // subsample
    auto* sub_cmd = app.add_subcommand("subsample", "Replace the step map by its dt-th iterate");
    std::string sub_input;
    std::size_t sub_dt = 1;
    std::optional<std::string> sub_out;
    sub_cmd->add_option("input", sub_input, "System JSON file")->required();
    sub_cmd->add_option("--dt", sub_dt, "Stride (default 1)");
    sub_cmd->add_option("--out", sub_out, "Output file");

    // roundtrip
    auto* round_cmd = app.add_subcommand(
        "roundtrip", "Canonicalize a document and verify parse/serialize stability");
    std::string round_input;
    std::optional<std::string> round_out;
    round_cmd->add_option("input", round_input, "Any symdyn JSON document")->required();
    round_cmd->add_option("--out", round_out, "Write the canonical form here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        emit_diagnostic("UsageError", e.what());
        return kExitInputError;
    }

    bool during_check = check_cmd->parsed();
    try {
        if (generate->parsed()) {
            std::string content = io::read_file(gen_input);
            std::size_t first = content.find_first_not_of(" \t\r\n");
            TimeSeriesData data;
            if (first != std::string::npos && content[first] == '{') {
                ObservedSystem x = io::parse_observed_system(content);
                data = data_functor(x, gen_dt, gen_horizon);
            } else {
                data = tsd_from_sequence(io::parse_raw_sequence(content), gen_horizon);
            }
            write_output(gen_out, io::to_json(data));
            return kExitOk;
        }

        if (words_cmd->parsed()) {
            SubshiftPresentation p = io::parse_presentation(io::read_file(words_input));
            std::ostringstream out;
            std::string sizes;
            for (std::size_t n = 0; n <= words_depth; ++n) {
                WordSet level = words(p, n);
                out << "n=" << n << " size=" << level.size() << ":";
                for (const auto& w : level) out << " " << w.str();
                out << "\n";
                if (!sizes.empty()) sizes += " ";
                sizes += std::to_string(level.size());
            }
            out << "sizes: " << sizes << "\n";
            write_output(words_out, out.str());
            return kExitOk;
        }

        if (recon_cmd->parsed()) {
            TimeSeriesData x = io::parse_tsd(io::read_file(recon_input));
            ReconResult r = reconstruct(x, recon_order);
            if (r.empty_data)
                std::cerr << "note: pruning removed all states; result is empty\n";
            write_output(recon_out, io::to_json(r));
            return kExitOk;
        }

        if (check_cmd->parsed()) {
            const std::string& morphism_path = check_files[0];
            const std::string& x_path = check_files[1];
            const std::string& y_path = check_files[2];
            std::string detail;
            bool ok = false;
            if (check_kind == "obs") {
                ObsMorphism m = io::parse_obs_morphism(io::read_file(morphism_path));
                ObservedSystem x = io::parse_observed_system(io::read_file(x_path));
                ObservedSystem y = io::parse_observed_system(io::read_file(y_path));
                auto report = check_obs_morphism_report(m, x, y);
                ok = report.ok;
                detail = report.detail;
            } else if (check_kind == "sbc") {
                SlidingBlockCode c = io::parse_code(io::read_file(morphism_path));
                SubshiftPresentation src = io::parse_presentation(io::read_file(x_path));
                SubshiftPresentation tgt = io::parse_presentation(io::read_file(y_path));
                auto report = check_sbc(c, src, tgt, check_depth);
                ok = report.ok;
                detail = report.detail;
            } else {
                TsdMorphism m = io::parse_tsd_morphism(io::read_file(morphism_path));
                TimeSeriesData x = io::parse_tsd(io::read_file(x_path));
                TimeSeriesData y = io::parse_tsd(io::read_file(y_path));
                auto report = check_tsd_morphism_report(m, x, y);
                ok = report.ok;
                detail = report.detail;
            }
            if (ok) {
                std::cout << "OK\n";
                return kExitOk;
            }
            std::cout << "INVALID: " << detail << "\n";
            emit_diagnostic("MorphismInvalid", detail);
            return kExitCheckFailed;
        }

        if (compose_cmd->parsed()) {
            if (compose_kind == "sbc") {
                SlidingBlockCode first = io::parse_code(io::read_file(compose_files[0]));
                SlidingBlockCode second = io::parse_code(io::read_file(compose_files[1]));
                write_output(compose_out, io::to_json(compose_sbc(second, first)));
            } else {
                TsdMorphism first = io::parse_tsd_morphism(io::read_file(compose_files[0]));
                TsdMorphism second = io::parse_tsd_morphism(io::read_file(compose_files[1]));
                write_output(compose_out, io::to_json(compose_tsd_morphisms(second, first)));
            }
            return kExitOk;
        }

        if (colimit_cmd->parsed()) {
            DynDiagram d = io::parse_diagram(io::read_file(colimit_input));
            write_output(colimit_out, io::to_json(colimit(d).system));
            return kExitOk;
        }

        if (cons_cmd->parsed()) {
            if (cons_random) {
                if (!cons_seed_set) {
                    emit_diagnostic("UsageError", "--random requires --seed");
                    return kExitInputError;
                }
                return run_consistency_random(*cons_random, cons_max_states, cons_seed);
            }
            if (!cons_input) {
                emit_diagnostic("UsageError", "need a system file or --random");
                return kExitInputError;
            }
            return run_consistency_single(*cons_input);
        }

        if (embed_cmd->parsed()) {
            ObservedSystem x = io::parse_observed_system(io::read_file(embed_input));
            write_output(embed_out, io::to_json(delay_embed(x, embed_window, embed_dt)));
            return kExitOk;
        }

        if (sub_cmd->parsed()) {
            FiniteDynSys sys = io::parse_system(io::read_file(sub_input));
            write_output(sub_out, io::to_json(subsample(sys, sub_dt)));
            return kExitOk;
        }

        if (round_cmd->parsed()) {
            io::RoundtripResult r = io::roundtrip(io::read_file(round_input));
            if (round_out) io::write_file(*round_out, r.canonical);
            std::cout << (r.stable ? "stable " : "UNSTABLE ") << io::doc_kind_name(r.kind)
                      << "\n";
            return r.stable ? kExitOk : kExitCheckFailed;
        }
    } catch (const Error& e) {
        emit_diagnostic(e.code_name(), e.what());
        return exit_code_for(e, during_check);
    } catch (const std::exception& e) {
        emit_diagnostic("InternalError", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}
