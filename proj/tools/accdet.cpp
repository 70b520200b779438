// accdet: command-line front end for the accelerated-detector library.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "accdet/cli_io.hpp"

int main(int argc, char** argv) {
    using namespace accdet::cli;

    CLI::App app{"Accelerated photodetector model: number, photocount, temperature, entanglement, UDW response"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    RunOptions options;

    for (const auto& name : subcommands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "config file (key = value)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "CSV output path (default: stdout)");
        sub->add_option("--workers", options.workers, "worker threads for sweeps")->check(CLI::PositiveNumber);
        if (name == "photocount")
            sub->add_option("--n-max", options.n_max, "largest photocount n")->check(CLI::NonNegativeNumber);
        sub->add_flag("--seed-free", "accepted and ignored; nothing here is random");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string name = app.get_subcommands().front()->get_name();

    RunConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "accdet: " << config_path << ": " << e.what() << '\n';
        return 2;
    }

    if (out_path.empty()) return run_subcommand(name, cfg, options, std::cout, std::cerr);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "accdet: cannot write " << out_path << '\n';
        return 2;
    }
    const int rc = run_subcommand(name, cfg, options, out, std::cerr);
    if (rc == 0 && name == "fig3") {
        std::ofstream gp(out_path + ".gp", std::ios::binary);
        gp << fig3_plot_script(out_path, cfg.fig3_modes);
    }
    return rc;
}
