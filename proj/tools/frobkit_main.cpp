#include "frobkit/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw frobkit::SpecError("cannot open input file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for flat-potential product structures"};
    app.require_subcommand(1);

    std::string file;
    frobkit::RunOptions opts;
    std::string format = "text";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input spec file")->required();
        cmd->add_option("--points", opts.points, "number of sampled rational points")
            ->default_val(100);
        cmd->add_option("--seed", opts.seed, "sampling seed")->default_val(frobkit::kDefaultSeed);
        cmd->add_option("--format", format, "report format")
            ->default_val("text")
            ->check(CLI::IsMember({"text", "machine"}));
    };
    CLI::App* verify = app.add_subcommand("verify", "run the axiom checks");
    add_common(verify);
    CLI::App* dualize = app.add_subcommand("dualize", "build and check the dual structure");
    add_common(dualize);
    dualize->add_flag("--emit-dual", opts.emit_dual,
                      "include the dual structure constants in the report");
    CLI::App* chain = app.add_subcommand("chain", "run the chained-product checks");
    add_common(chain);
    chain->add_option("--depth", opts.depth, "number of chain stages (default: all identities)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string text = slurp(file);
        opts.digest = frobkit::input_digest(text);
        frobkit::SpecFile spec = frobkit::parse_spec(text);
        frobkit::RunReport report;
        if (verify->parsed())
            report = frobkit::run_verify(spec, opts);
        else if (dualize->parsed())
            report = frobkit::run_dualize(spec, opts);
        else
            report = frobkit::run_chain(spec, opts);
        frobkit::ReportFormat fmt =
            format == "machine" ? frobkit::ReportFormat::machine : frobkit::ReportFormat::text;
        std::cout << frobkit::emit_report(report, fmt);
        return report.pass ? 0 : 1;
    } catch (const frobkit::SpecError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
