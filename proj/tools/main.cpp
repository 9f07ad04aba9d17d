#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace greenreg::cli;

    CLI::App app{"Regression with the normalized Green's function of -u'' + a^2 u = f"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string data;
    std::string out;
    std::string format = "csv";
    std::vector<double> queries;

    app.add_option("--a", config.a, "operator coefficient a >= 0")->required();
    app.add_option("--delta", config.delta, "grid step in (0, 0.5]")->capture_default_str();
    app.add_option("--data", data, "two-column x,y CSV of observations");
    app.add_option("--queries", queries, "comma-separated query points in (0,1)")
        ->delimiter(',');
    app.add_option("--out", out, "output file (stdout when omitted)");
    app.add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();

    auto* predict = app.add_subcommand("predict", "predictive mean, variance and ±2s band");
    auto* matrix = app.add_subcommand("matrix", "covariance matrix at the data abscissae");
    auto* density = app.add_subcommand("density", "statistics of the density x -> H(x, y)");
    auto* solve = app.add_subcommand("solve", "discretized forward solution u(x)");
    density->add_option("--y", config.y, "column of H in (0,1)")->capture_default_str();
    for (auto* sub : {predict, matrix, density, solve}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    config.data_path = data;
    config.output_path = out;
    config.format = format == "svg" ? OutputFormat::svg : OutputFormat::csv;
    if (!queries.empty()) config.queries = queries;

    if (*predict) return cmd_predict(config, std::cout, std::cerr);
    if (*matrix) return cmd_matrix(config, std::cout, std::cerr);
    if (*density) return cmd_density(config, std::cout, std::cerr);
    return cmd_solve(config, std::cout, std::cerr);
}
