// interact: analyze, combine and classify interactions from the command line.

#include "interact/algebra.hpp"
#include "interact/classify.hpp"
#include "interact/configspace.hpp"
#include "interact/error.hpp"
#include "interact/io.hpp"
#include "interact/zoo.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace interact;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain:
        return 1;
    case ErrorKind::resource:
        return 2;
    case ErrorKind::io:
        return 3;
    }
    return 1;
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("INTERACT_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::domain, std::string("INTERACT_BUDGET is not a number: ") + env);
        }
    }
    return kDefaultBudget;
}

std::string render(const io::json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conserved quantities, classification and irreducible quantification of interactions"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string output;
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("-o,--output", output, "output file (default stdout)");
    };

    std::string path;
    auto* analyze = app.add_subcommand("analyze", "conserved basis, separability, exchangeability, components");
    analyze->add_option("interaction", path, "JSON file or zoo:<name>[:params]")->required();
    add_format(analyze);

    int kappa = 0;
    bool separable_only = false;
    auto* classify_cmd = app.add_subcommand("classify", "equivalence classes of interactions on {0..kappa}");
    classify_cmd->add_option("kappa", kappa, "largest state (1..4)")->required();
    classify_cmd->add_flag("--separable", separable_only, "separable classes only");
    add_format(classify_cmd);

    std::string family{kDefaultFamily};
    std::uint64_t budget = 0;
    auto* iq = app.add_subcommand("iq", "bounded irreducible-quantification check");
    iq->add_option("interaction", path, "JSON file or zoo:<name>[:params]")->required();
    iq->add_option("--graphs", family, "graph family, e.g. paths:2..5,cycles:3..4");
    iq->add_option("--budget", budget, "maximum configurations per graph (default 1000000 or $INTERACT_BUDGET)");
    add_format(iq);

    std::vector<std::string> wedge_args;
    std::vector<std::string> box_args;
    std::size_t base_left = 0;
    std::size_t base_right = 0;
    auto* combine = app.add_subcommand("combine", "wedge sum or box product of two interactions");
    auto* wedge_opt = combine->add_option("--wedge", wedge_args, "two interactions to glue")->expected(2);
    auto* box_opt = combine->add_option("--box", box_args, "two interactions to multiply")->expected(2);
    wedge_opt->excludes(box_opt);
    combine->add_option("--base-left", base_left, "glued state index of the first interaction");
    combine->add_option("--base-right", base_right, "glued state index of the second interaction");
    combine->add_option("-o,--output", output, "output file (default stdout)");

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the associated graph");
    dot->add_option("interaction", path, "JSON file or zoo:<name>[:params]")->required();
    dot->add_option("-o,--output", output, "output file (default stdout)");

    auto* zoo_cmd = app.add_subcommand("zoo", "named interactions");
    zoo_cmd->require_subcommand(1);
    auto* zoo_list = zoo_cmd->add_subcommand("list", "list named interactions");
    std::string zoo_name;
    std::vector<int> zoo_params;
    auto* zoo_build = zoo_cmd->add_subcommand("build", "write a named interaction as JSON");
    zoo_build->add_option("name", zoo_name, "zoo name")->required();
    zoo_build->add_option("params", zoo_params, "integer parameters");
    zoo_build->add_option("-o,--output", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 1;
    }

    try {
        if (analyze->parsed()) {
            const auto report = io::analyze(io::load_interaction(path));
            io::write_output(output, format == "json" ? render(io::to_json(report)) : io::to_text(report));
        } else if (classify_cmd->parsed()) {
            const auto& catalog = classify(kappa, separable_only);
            io::write_output(output, format == "json" ? render(io::to_json(catalog, separable_only))
                                                      : io::to_text(catalog));
        } else if (iq->parsed()) {
            const auto inter = io::load_interaction(path);
            const auto graphs = parse_family(family);
            const auto report = check_iq_bounded(inter, graphs, budget ? budget : default_budget());
            const auto checks = derived_checks(inter);
            io::write_output(output, format == "json" ? render(io::to_json(report, checks))
                                                      : io::to_text(report, checks));
        } else if (combine->parsed()) {
            Interaction result = [&] {
                if (!wedge_args.empty()) {
                    return wedge({io::load_interaction(wedge_args[0]), io::load_interaction(wedge_args[1]),
                                  base_left, base_right});
                }
                if (!box_args.empty()) {
                    return box(io::load_interaction(box_args[0]), io::load_interaction(box_args[1]));
                }
                throw Error(ErrorKind::domain, "combine needs --wedge A B or --box A B");
            }();
            io::save_interaction(result, output);
        } else if (dot->parsed()) {
            io::write_output(output, io::to_dot(io::load_interaction(path)));
        } else if (zoo_list->parsed()) {
            std::string text;
            for (const auto& e : zoo::entries()) {
                std::string head = e.name + (e.params_help.empty() ? "" : " <" + e.params_help + ">");
                head.resize(std::max<std::size_t>(head.size(), 34), ' ');
                text += head + "  " + e.summary + "\n";
            }
            io::write_output("", text);
        } else if (zoo_build->parsed()) {
            io::save_interaction(zoo::build(zoo_name, zoo_params), output);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
