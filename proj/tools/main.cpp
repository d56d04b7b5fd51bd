#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

void add_common(CLI::App* sub, mbe::cli::RunConfig& cfg, std::string& space,
                std::string& format) {
    sub->add_option("input", cfg.input_path,
                    "graph file (`n m` header, then `u v w` lines); - for stdin")
        ->required();
    sub->add_option("--space", space, "matroid: cycle or cut")
        ->check(CLI::IsMember({"cycle", "cut"}))
        ->required();
    sub->add_option("--max", cfg.max, "stop after this many outputs")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "text or json-lines")
        ->check(CLI::IsMember({"text", "json-lines"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid basis enumeration over graph cut and cycle spaces"};
    app.require_subcommand(1);

    mbe::cli::RunConfig cfg;
    std::string space = "cut";
    std::string format = "text";

    auto* min_basis = app.add_subcommand("min-basis", "one minimum basis");
    add_common(min_basis, cfg, space, format);

    auto* min_bases =
        app.add_subcommand("min-bases", "all minimum bases, streamed");
    add_common(min_bases, cfg, space, format);
    min_bases->add_flag("--fast", cfg.fast,
                        "two-phase driver (per-class enumeration, then "
                        "constant-delay combinations)");

    auto* relevant = app.add_subcommand(
        "relevant", "all relevant elements in non-decreasing weight order");
    add_common(relevant, cfg, space, format);

    auto* all_bases = app.add_subcommand(
        "all-bases", "all bases of the space, reverse-search order");
    add_common(all_bases, cfg, space, format);
    all_bases->add_flag("--raw", cfg.raw,
                        "emit coefficient vectors instead of lifted edge sets");

    auto* verify = app.add_subcommand(
        "verify", "cross-check every stream against exhaustive oracles");
    add_common(verify, cfg, space, format);

    CLI11_PARSE(app, argc, argv);

    cfg.space = (space == "cycle") ? mbe::cli::Space::Cycle : mbe::cli::Space::Cut;
    cfg.format = (format == "json-lines") ? mbe::cli::Format::JsonLines
                                          : mbe::cli::Format::Text;
    if (min_basis->parsed()) cfg.command = mbe::cli::Command::MinBasis;
    if (min_bases->parsed()) cfg.command = mbe::cli::Command::MinBases;
    if (relevant->parsed()) cfg.command = mbe::cli::Command::Relevant;
    if (all_bases->parsed()) cfg.command = mbe::cli::Command::AllBases;
    if (verify->parsed()) cfg.command = mbe::cli::Command::Verify;

    return mbe::cli::run(cfg, std::cout, std::cerr);
}
