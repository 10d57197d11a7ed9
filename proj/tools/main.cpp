#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    toric::cli::Command cmd;
    CLI::App app{"Rational linear precision, toric fiber products and closed-form MLEs"};
    std::string form = "B", output = "text";
    app.add_option("verb", cmd.verb, "Command")->required()->check(CLI::IsMember(toric::cli::verbs()));
    app.add_option("inputs", cmd.inputs, "Input files");
    app.add_option("--samples", cmd.samples, "Number of sampled points")->capture_default_str();
    app.add_option("--seed", cmd.seed, "Random seed")->capture_default_str();
    app.add_option("--tol", cmd.tol, "IPS tolerance")->capture_default_str();
    app.add_option("--max-iter", cmd.max_iter, "IPS sweep limit")->capture_default_str();
    app.add_option("--form", form, "Denominator form of fiber product functions")
        ->check(CLI::IsMember({"B", "C"}))
        ->capture_default_str();
    app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--data", cmd.data, "Counts: comma list, JSON array or object keyed by labels");
    app.add_option("--horn", cmd.horn, "Horn pair to compare the MLE against");
    app.add_option("--at", cmd.at, "Evaluation point for patch, e.g. 1/2,1/3");
    app.add_option("--control", cmd.control, "JSON file of control points for patch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    cmd.form = form == "C" ? toric::DenominatorForm::C : toric::DenominatorForm::B;
    cmd.json = output == "json";

    auto res = toric::cli::run_command(cmd);
    std::cout << res.output;
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
}
