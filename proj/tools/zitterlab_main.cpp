#include <CLI11.hpp>

#include <utility>

#include "zitterlab/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"zitterlab: Dirac-equation operator algebra and strong-field desk experiments"};
    app.require_subcommand(1);

    zitterlab::cli::RunContext ctx;
    const std::pair<const char*, const char*> commands[] = {
        {"algebra-check", "verify the operator algebra and write a report"},
        {"zitter", "evolve a 4-spinor packet and fit its oscillation"},
        {"pairsim", "pair creation by a sudden step potential"},
        {"scan", "satellite separation vs field strength or width"},
        {"calc", "self-interaction energies and unit conversions"},
    };
    for (const auto& [name, desc] : commands) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", ctx.config_path, "flat JSON config with dotted keys")
            ->required();
        sub->add_option("--out", ctx.out_dir, "output directory (default: .)");
        sub->add_flag("--svg", ctx.emit_svg, "also emit SVG plots");
        sub->callback([&ctx, name = name] { ctx.command = name; });
    }

    CLI11_PARSE(app, argc, argv);
    return zitterlab::cli::run_with_exit_code(ctx);
}
