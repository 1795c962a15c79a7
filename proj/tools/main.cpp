#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gb/basis.hpp"
#include "gb/convergence.hpp"
#include "gb/elevation.hpp"
#include "gb/experiments.hpp"
#include "gb/exponents.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw gb::IoError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// lambda.json: either {"values":[0,...]} or {"generator":{...},"m":N}
gb::ExponentSequence sequence_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw gb::ConfigParseError(std::string("lambda JSON: ") + e.what());
    }
    if (j.contains("values")) {
        if (!j["values"].is_array())
            throw gb::ConfigParseError("values: array of numbers required");
        std::vector<double> vals;
        for (const auto& v : j["values"]) {
            if (!v.is_number()) throw gb::ConfigParseError("values: numbers required");
            vals.push_back(v.get<double>());
        }
        return gb::ExponentSequence(std::move(vals));
    }
    if (j.contains("generator")) {
        const gb::GeneratorSpec gen = gb::generator_from_json_text(j["generator"].dump());
        if (!j.contains("m") || !j["m"].is_number_unsigned())
            throw gb::ConfigParseError("m: nonnegative integer required with generator form");
        return gb::extend(gen, j["m"].get<std::size_t>());
    }
    throw gb::ConfigParseError("lambda JSON: expected 'values' or 'generator'+'m'");
}

int run_figure(const std::string& name, long iterations, const std::string& out_dir) {
    gb::ExperimentConfig cfg = gb::named_experiment(name);
    if (iterations >= 0) cfg.iterations = static_cast<std::size_t>(iterations);
    const gb::ExperimentResult result = gb::run_experiment(cfg, out_dir);
    for (const std::string& f : result.files) std::cout << "wrote " << f << "\n";
    return 0;
}

int run_config_file(const std::string& path, const std::string& out_dir) {
    const gb::ExperimentConfig cfg = gb::load_config(path);
    const gb::ExperimentResult result = gb::run_experiment(cfg, out_dir);
    for (const std::string& f : result.files) std::cout << "wrote " << f << "\n";
    return 0;
}

int run_basis(const std::string& path, std::size_t grid) {
    const gb::ExponentSequence seq = sequence_from_json_text(slurp(path));
    const std::size_t n = seq.order();
    std::cout << "t";
    for (std::size_t k = 0; k <= n; ++k) std::cout << ",H" << k;
    std::cout << "\n";
    for (std::size_t i = 0; i <= grid; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid);
        const std::vector<double> row = gb::basis_row(seq, t);
        std::cout << gb::format_full(t);
        for (double h : row) std::cout << "," << gb::format_full(h);
        std::cout << "\n";
    }
    return 0;
}

int run_muntz(const std::string& path) {
    const gb::GeneratorSpec gen = gb::generator_from_json_text(slurp(path));
    const gb::MuntzReport rep = gb::muntz_condition(gen);
    std::cout << "generator: " << gen.kind_name() << "\n";
    std::cout << "verdict: " << gb::to_string(rep.verdict) << "\n";
    std::cout << "limit_certified: " << (rep.limit_certified ? "true" : "false") << "\n";
    std::cout << "limit_finite: " << (rep.limit_finite ? "true" : "false") << "\n";
    for (const auto& [n, s] : rep.partial_sums)
        std::cout << "partial_sum[N=" << n << "]: " << gb::format_full(s) << "\n";
    if (rep.limit_finite)
        std::cout << "warning: exponents stay bounded; the corner-cutting dichotomy's "
                     "hypothesis (r_s -> infinity) fails\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfond-Bezier corner cutting: experiments, basis dumps, Muntz diagnostics"};
    app.require_subcommand(1);

    std::string fig_name, out_dir = ".";
    long iterations = -1;
    CLI::App* figure = app.add_subcommand("figure", "run a named experiment");
    figure->add_option("name", fig_name, "one of: fig1 fig2 fig3 fig4 fig4alt fig5a fig5b fig6")
        ->required();
    figure->add_option("--iterations", iterations, "override the iteration count");
    figure->add_option("--out", out_dir, "output directory");

    std::string config_path, run_out = ".";
    CLI::App* run = app.add_subcommand("run", "run a JSON experiment config");
    run->add_option("config", config_path, "path to config.json")->required();
    run->add_option("--out", run_out, "output directory");

    std::string lambda_path;
    std::size_t t_grid = 100;
    CLI::App* basis = app.add_subcommand("basis", "dump basis values on a t grid (CSV)");
    basis->add_option("lambda", lambda_path, "path to lambda.json")->required();
    basis->add_option("--t-grid", t_grid, "number of grid intervals")->check(CLI::PositiveNumber);

    std::string gen_path;
    CLI::App* muntz = app.add_subcommand("muntz", "print the Muntz-condition verdict");
    muntz->add_option("generator", gen_path, "path to generator.json")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (figure->parsed()) return run_figure(fig_name, iterations, out_dir);
        if (run->parsed()) return run_config_file(config_path, run_out);
        if (basis->parsed()) return run_basis(lambda_path, t_grid);
        if (muntz->parsed()) return run_muntz(gen_path);
    } catch (const gb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const gb::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const gb::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
