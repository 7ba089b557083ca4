#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccexp/cache.hpp"
#include "ccexp/config.hpp"
#include "ccexp/format.hpp"
#include "ccexp/oracle.hpp"
#include "ccexp/parser.hpp"
#include "ccexp/sequences.hpp"
#include "ccexp/theorems.hpp"

namespace {

using namespace ccexp;

// Exit codes: 0 verified, 1 falsified/mismatch, 2 usage error, 3 resource
// ceiling hit.
constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << content;
}

std::string decorated(const Config& config, const std::string& name) {
    return config.sequence == "tm" ? name : config.sequence + "-" + name;
}

std::string witness_text(const std::vector<std::uint64_t>& witness) {
    std::string text;
    for (std::uint64_t v : witness) text += (text.empty() ? "" : " ") + std::to_string(v);
    return text;
}

int cmd_prove(const Config& config, const std::string& script_path) {
    auto commands = parse_script(read_file(script_path), config.sequence);
    PredicateStore store;
    DiskCache cache(config.cache_dir);
    CompileOptions options;
    options.cache = &cache;
    bool all_true = true;
    for (const ScriptCommand& cmd : commands) {
        if (cmd.kind == ScriptCommand::Kind::Sequence) continue;
        auto start = std::chrono::steady_clock::now();
        if (cmd.kind == ScriptCommand::Kind::Define) {
            Dfa dfa = compile(cmd.formula, store, options);
            std::cout << cmd.name << ": " << dfa.live_state_count() << " states\n";
            cache.store_named(cmd.name, dfa);
            store.insert(cmd.name, {std::move(dfa), cmd.formula->dump()});
        } else {
            bool truth;
            if (cmd.formula->free_variables().empty()) {
                truth = eval_closed(cmd.formula, store, options);
                std::cout << cmd.name << ": " << (truth ? "true" : "false") << "\n";
            } else {
                // an open eval reports its automaton; true means nonempty
                Dfa dfa = compile(cmd.formula, store, options);
                truth = enumerate_accepted(dfa, 1).size() == 1;
                std::cout << cmd.name << ": " << (truth ? "true" : "false") << " ("
                          << dfa.live_state_count() << " states)\n";
            }
            all_true = all_true && truth;
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::fprintf(stderr, "# %s elapsed_ms=%.1f\n", cmd.name.c_str(), ms);
    }
    return all_true ? kOk : kFalsified;
}

int cmd_ccexp(const Config& config, const std::string& word,
              const std::vector<std::uint64_t>& prefix,
              const std::vector<std::uint64_t>& factor, bool use_oracle) {
    int modes = int(!word.empty()) + int(!prefix.empty()) + int(!factor.empty());
    if (modes != 1)
        throw std::invalid_argument("choose exactly one of --word, --prefix, --factor");
    if (!word.empty()) {
        std::cout << oracle::circular_critical_exponent(word).str() << "\n";
        return kOk;
    }
    bool is_prefix = !prefix.empty();
    std::uint64_t n = is_prefix ? prefix[0] : factor[0];
    std::uint64_t s = is_prefix ? 0 : factor[1];
    if (n == 0) throw std::invalid_argument("the length n must be >= 1");
    std::string dfao_name = is_prefix ? "dfao_prefix" : "dfao_factor";

    if (use_oracle) {
        Rational value =
            oracle::circular_critical_exponent(seq_window(config.sequence, s, n));
        DiskCache cache(config.cache_dir);
        if (auto m = cache.load_named_dfao(decorated(config, dfao_name))) {
            std::uint64_t values[] = {n, s};
            const std::string& claimed =
                is_prefix ? m->value1(n) : m->value(std::span<const std::uint64_t>(values));
            if (Rational::parse(claimed) != value) {
                std::cerr << "mismatch: oracle " << value.str() << " vs " << dfao_name
                          << " " << claimed << "\n";
                return kFalsified;
            }
        }
        std::cout << value.str() << "\n";
        return kOk;
    }
    TheoremSession session(config);
    Dfao m = is_prefix ? session.build_prefix_dfao() : session.build_factor_dfao();
    std::uint64_t values[] = {n, s};
    const std::string& value =
        is_prefix ? m.value1(n) : m.value(std::span<const std::uint64_t>(values));
    std::cout << value << "\n";
    return kOk;
}

int cmd_theorem(const Config& config, const std::string& name, bool all,
                bool include_pf) {
    TheoremSession session(config);
    std::vector<std::string> names;
    if (all) {
        for (const std::string& candidate : TheoremSession::theorem_names())
            if (include_pf || !TheoremSession::is_long_running(candidate))
                names.push_back(candidate);
    } else {
        if (name.empty()) throw std::invalid_argument("give a theorem name or --all");
        names.push_back(name);
    }
    for (const std::string& entry : names) std::cout << session.run(entry).text();
    return kOk;
}

int cmd_export(const Config& config, const std::string& name, const std::string& format,
               const std::string& out_path) {
    DiskCache cache(config.cache_dir);
    std::string stem = cache.has_named(name) ? name : decorated(config, name);
    auto text = cache.named_text(stem);
    if (!text) throw std::invalid_argument("no cached automaton named '" + name + "'");
    if (format == "text") {
        write_output(out_path, *text);
        return kOk;
    }
    if (sniff_kind(*text) == AutomatonKind::Dfa)
        write_output(out_path, to_dot(dfa_from_text(*text), name));
    else
        write_output(out_path, to_dot(dfao_from_text(*text), name));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular critical exponents of automatic sequences"};
    app.require_subcommand(1);

    std::string config_file, cache_dir, sequence;
    std::uint64_t seed = 0, ceiling = 0;
    app.add_option("--config", config_file, "key=value configuration file");
    auto* cache_opt = app.add_option("--cache-dir", cache_dir, "automaton cache directory");
    auto* seq_opt = app.add_option("--sequence", sequence, "sequence id (tm or pf)")
                        ->check(CLI::IsMember({"tm", "pf"}));
    auto* seed_opt = app.add_option("--seed", seed, "seed for randomized spot checks");
    auto* ceiling_opt =
        app.add_option("--memory-ceiling", ceiling, "construction size ceiling in bytes");

    auto* prove = app.add_subcommand("prove", "run a script of def/eval commands");
    std::string script_path;
    prove->add_option("script", script_path, "script file")->required();

    auto* ccexp_cmd = app.add_subcommand("ccexp", "circular critical exponent queries");
    std::string word;
    std::vector<std::uint64_t> prefix_args, factor_args;
    ccexp_cmd->add_option("--word", word, "explicit word over any alphabet");
    ccexp_cmd->add_option("--prefix", prefix_args, "length n of the sequence prefix")
        ->expected(1);
    ccexp_cmd->add_option("--factor", factor_args, "length n and start s of a factor")
        ->expected(2);
    bool use_oracle = false;
    ccexp_cmd->add_flag("--oracle", use_oracle, "brute force, cross-checked if cached");

    auto* theorem = app.add_subcommand("theorem", "run a named development end-to-end");
    std::string theorem_name;
    bool run_all = false, include_pf = false;
    theorem->add_option("name", theorem_name, "theorem name");
    theorem->add_flag("--all", run_all, "run the whole default suite");
    theorem->add_flag("--include-pf", include_pf, "include the long paperfolding runs");

    auto* export_cmd = app.add_subcommand("export", "write a cached automaton");
    std::string export_name, export_format = "text", out_path;
    export_cmd->add_option("name", export_name, "cached automaton name")->required();
    export_cmd->add_option("--format", export_format, "text or dot")
        ->check(CLI::IsMember({"text", "dot"}));
    export_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* cache_cmd = app.add_subcommand("cache", "cache management");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove all cached automata");
    auto* cache_path = cache_cmd->add_subcommand("path", "print the cache directory");
    cache_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Config config = Config::load(config_file);
        config.apply_environment();
        if (cache_opt->count()) config.cache_dir = cache_dir;
        if (seq_opt->count()) config.sequence = sequence;
        if (seed_opt->count()) config.seed = seed;
        if (ceiling_opt->count()) config.memory_ceiling_bytes = ceiling;

        if (prove->parsed()) return cmd_prove(config, script_path);
        if (ccexp_cmd->parsed())
            return cmd_ccexp(config, word, prefix_args, factor_args, use_oracle);
        if (theorem->parsed())
            return cmd_theorem(config, theorem_name, run_all, include_pf);
        if (export_cmd->parsed())
            return cmd_export(config, export_name, export_format, out_path);
        if (cache_cmd->parsed()) {
            DiskCache cache(config.cache_dir);
            if (cache_clear->parsed()) cache.clear();
            if (cache_path->parsed()) std::cout << cache.dir().string() << "\n";
            return kOk;
        }
        return kUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const TheoremError& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        if (!e.witness.empty())
            std::cerr << "counterexample: " << witness_text(e.witness) << "\n";
        return kFalsified;
    } catch (const PartitionViolation& e) {
        std::cerr << "falsified: " << e.what() << "\n";
        std::cerr << "counterexample: " << witness_text(e.witness) << "\n";
        return kFalsified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
