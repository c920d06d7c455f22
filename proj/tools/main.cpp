#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nakayama/epsilon.hpp"
#include "nakayama/perm.hpp"
#include "render.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace nakayama;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitContradiction = 3;

int cmd_analyze(const std::string& kupisch, const std::string& format) {
    const Algebra a = parse(kupisch);
    const tools::Analysis an = tools::analyze(a);
    std::cout << (format == "table" ? tools::format_table(an) : tools::format_json(an));
    return an.failures.empty() ? 0 : kExitContradiction;
}

int cmd_render(const std::string& kupisch, const std::string& kind) {
    std::cout << tools::render_dot(parse(kupisch), kind);
    return 0;
}

int cmd_convert(const std::string& input) {
    if (input.find(':') != std::string::npos) {
        std::cout << kupisch_to_dyck(parse(input)) << "\n";
    } else {
        std::cout << serialize(dyck_to_kupisch(input)) << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& kupisch, int max_steps) {
    Algebra a = parse(kupisch).canonical();
    std::cout << serialize(a) << "\n";
    for (int step = 0; step < max_steps; ++step) {
        const EpsilonAlgebra eps = epsilon_algebra(a);
        std::string line = "eps:";
        for (const auto& c : eps.components) line += " " + serialize(c);
        std::cout << line << "\n";
        if (eps.components.size() != 1) break;
        if (eps.components.front() == a || !eps.components.front().cyclic()) break;
        a = eps.components.front();
    }
    return 0;
}

int cmd_verify(const tools::VerifyOptions& opt, const std::string& out_dir) {
    const auto results = tools::run_verify(opt);
    long failures = 0;
    int case_no = 0;
    for (const auto& r : results) {
        std::cout << r.suite << ": algebras=" << r.algebras << " checks=" << r.checks << " failures=" << r.failures
                  << "\n";
        for (const auto& w : r.witnesses) {
            std::cout << "  witness " << w.pattern << ": ";
            if (w.found)
                std::cout << w.algebra << " (" << w.detail << ")\n";
            else
                std::cout << "not found\n";
        }
        for (const auto& c : r.counterexamples) {
            std::cout << "  FAIL " << c.algebra << " " << c.check << ": " << c.witness << "\n";
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                std::ostringstream name;
                name << "case-" << std::setw(4) << std::setfill('0') << ++case_no << ".txt";
                std::ofstream(std::filesystem::path(out_dir) / name.str()) << tools::case_file(c);
            }
        }
        failures += r.failures;
    }
    std::cout << (failures == 0 ? "verify: 0 failures" : "verify: " + std::to_string(failures) + " failures") << "\n";
    return failures == 0 ? 0 : kExitContradiction;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homological invariants of Nakayama algebras"};
    app.require_subcommand(1);

    std::string kupisch;
    std::string format = "json";
    auto* analyze = app.add_subcommand("analyze", "Report every invariant of one algebra");
    analyze->add_option("-k,--kupisch", kupisch, "Kupisch series, e.g. cyclic:3,2,3,4")->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    std::string render_kind;
    auto* render = app.add_subcommand("render", "DOT rendering of a quiver");
    render->add_option("-k,--kupisch", kupisch)->required();
    render->add_option("--kind", render_kind)->required()->check(CLI::IsMember(tools::render_kinds()));

    std::string convert_input;
    auto* convert = app.add_subcommand("convert", "Kupisch series <-> Dyck word for linear algebras");
    convert->add_option("input", convert_input, "linear:c_1,...,c_n or a U/D word")->required();

    int reduce_steps = 32;
    auto* reduce = app.add_subcommand("reduce", "Iterate the epsilon construction");
    reduce->add_option("-k,--kupisch", kupisch)->required();
    reduce->add_option("--steps", reduce_steps)->check(CLI::PositiveNumber);

    tools::VerifyOptions vopt;
    bool only_cyclic = false;
    bool only_linear = false;
    std::uint64_t seed = 0;
    std::string out_dir;
    auto* verify = app.add_subcommand("verify", "Sweep checker suites over enumerated algebras");
    verify->add_option("--simples-max", vopt.simples_max)->check(CLI::Range(1, 12));
    verify->add_option("--len-max", vopt.len_max)->check(CLI::Range(1, 16));
    verify->add_flag("--cyclic", only_cyclic, "Cyclic algebras only");
    verify->add_flag("--linear", only_linear, "Linear algebras only");
    verify->add_option("--suite", vopt.suites)->check(CLI::IsMember(tools::suite_names()));
    verify->add_option("--jobs", vopt.jobs)->check(CLI::PositiveNumber);
    auto* seed_opt = verify->add_option("--seed", seed, "Seed for random samples past the exhaustive range");
    verify->add_option("--samples", vopt.samples)->check(CLI::NonNegativeNumber);
    verify->add_option("--pattern", vopt.pattern, "Witness pattern: pd-pairs, component-sizes, same-psi-quiver, reflexive-chain, fixed-points");
    verify->add_option("--out", out_dir, "Directory for counterexample case files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(kupisch, format);
        if (*render) return cmd_render(kupisch, render_kind);
        if (*convert) return cmd_convert(convert_input);
        if (*reduce) return cmd_reduce(kupisch, reduce_steps);
        if (*verify) {
            if (only_cyclic || only_linear) {
                vopt.cyclic = only_cyclic;
                vopt.linear = only_linear;
            }
            if (*seed_opt) vopt.seed = seed;
            return cmd_verify(vopt, out_dir);
        }
    } catch (const Contradiction& e) {
        std::cerr << "contradiction: " << e.check() << ": " << e.witness() << "\n";
        return kExitContradiction;
    } catch (const FiltrationError& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
