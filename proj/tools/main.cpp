#include "commands.hpp"
#include "common.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"comet: comment corpus extraction, filtering and modeling"};
    app.set_version_flag("--version",
                         "comet " + comet::cli::tool_version() + " (rules table1-v1)");
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.require_subcommand(1);

    comet::cli::register_extract(app);
    comet::cli::register_filter(app);
    comet::cli::register_stats(app);
    comet::cli::register_train(app);
    comet::cli::register_generate(app);
    comet::cli::register_bleu(app);
    comet::cli::register_vocab_overlap(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return comet::cli::exit_usage;
    } catch (const comet::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return comet::cli::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return comet::cli::exit_internal;
    }
    return comet::cli::exit_ok;
}
