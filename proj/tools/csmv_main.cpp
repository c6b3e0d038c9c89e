#include <iostream>

#include <CLI11.hpp>

#include "csm/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"csmv: exact verification of pushforward identities for "
                 "degenerating elliptic fibrations"};
    app.require_subcommand(1);

    csm::CliConfig cfg;
    cfg.max_formal_dim = csm::default_max_formal_dim();

    auto add_selection = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "built-in family name, or 'all'")
            ->capture_default_str();
        sub->add_option("--scenario", cfg.scenario_path,
                        "JSON scenario file checked instead of a built-in family");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "'json' or 'markdown'")->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to this file instead of stdout");
    };
    auto add_base = [&](CLI::App* sub) {
        sub->add_option("--base", cfg.base, "'formal' or 'P<n>'");
        sub->add_option("--dim", cfg.dim, "base dimension for formal runs");
        sub->add_option("--L", cfg.line_l, "hyperplane multiple of the L line class on P<n>");
        sub->add_option("--S", cfg.line_s, "hyperplane multiple of the S line class on P<n>");
        sub->add_option("--max-dim", cfg.max_formal_dim,
                        "cap on the formal base dimension (env CSMV_MAX_FORMAL_DIM)")
            ->capture_default_str();
    };

    auto* list = app.add_subcommand("list", "list the built-in fibration families");
    add_selection(list);
    add_output(list);

    auto* check = app.add_subcommand(
        "check", "verify the identity degree by degree (formal base) or the "
                 "Euler-characteristic count (projective base)");
    add_selection(check);
    add_base(check);
    add_output(check);

    auto* cross = app.add_subcommand(
        "cross-check", "compare formal, native, and stratum-level numbers over P<n>");
    add_selection(cross);
    add_base(cross);
    add_output(cross);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list->parsed())
        cfg.cmd = csm::CliConfig::Cmd::List;
    else if (check->parsed())
        cfg.cmd = csm::CliConfig::Cmd::Check;
    else
        cfg.cmd = csm::CliConfig::Cmd::CrossCheck;

    return csm::run(cfg, std::cout, std::cerr);
}
