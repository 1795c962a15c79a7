#include "gb/experiments.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gb/basis.hpp"
#include "gb/svg.hpp"

namespace gb {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void ExperimentConfig::validate() const {
    if (generator.prefix.empty())
        throw ConfigParseError("config: generator.prefix must hold at least r_1");
    if (random_points == 0 && control_points.empty())
        throw ConfigParseError("config: control_points missing (or set random_points)");
    const std::size_t count = random_points > 0 ? random_points : control_points.size();
    if (count != generator.prefix.size() + 1)
        throw ConfigParseError(
            "config: control_points length must equal generator.prefix length + 1 (r_0 = 0 "
            "implicit); got " +
            std::to_string(count) + " points for prefix of " +
            std::to_string(generator.prefix.size()));
    for (const std::string& o : outputs)
        if (o != "polygons.csv" && o != "report.csv" && o != "report.json" &&
            o != "figure.svg")
            throw ConfigParseError("config: unknown output '" + o + "'");
}

namespace {

const std::vector<Point> kDefaultQuad = {{0.0, 0.0}, {0.25, 1.0}, {0.75, 1.0}, {1.0, 0.0}};

std::vector<Point> resolve_control_points(const ExperimentConfig& cfg) {
    if (cfg.random_points == 0) return cfg.control_points;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts(cfg.random_points, Point(cfg.random_dim, 0.0));
    for (Point& p : pts)
        for (double& c : p) c = unit(rng);
    return pts;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::string polygons_csv(const ElevationTrace& trace) {
    const std::size_t dim = trace.polygons.front().dimension();
    std::ostringstream out;
    out << "level,index";
    for (std::size_t d = 1; d <= dim; ++d) out << ",x" << d;
    out << "\n";
    for (const ControlPolygon& poly : trace.polygons)
        for (std::size_t i = 0; i < poly.points.size(); ++i) {
            out << poly.level << "," << i;
            for (double c : poly.points[i]) out << "," << format_full(c);
            out << "\n";
        }
    return out.str();
}

std::string report_csv(const ConvergenceReport& rep) {
    std::ostringstream out;
    out << "m,coeff_error,hausdorff,delta_partial,max_eta_gap\n";
    for (std::size_t i = 0; i < rep.levels.size(); ++i)
        out << rep.levels[i] << "," << format_full(rep.coeff_error[i]) << ","
            << format_full(rep.hausdorff[i]) << "," << format_full(rep.delta_partial[i])
            << "," << format_full(rep.max_eta_gap[i]) << "\n";
    return out.str();
}

json generator_to_json(const GeneratorSpec& gen) {
    json params = json::object();
    switch (gen.kind) {
        case GeneratorKind::Linear:
            params["a"] = gen.a;
            params["b"] = gen.b;
            break;
        case GeneratorKind::Power:
            params["p"] = gen.p;
            break;
        case GeneratorKind::Bounded:
            params["c"] = gen.c;
            break;
        case GeneratorKind::Explicit:
            if (!gen.tail.empty()) params["tail"] = gen.tail;
            break;
        case GeneratorKind::Custom:
            break;
    }
    return json{{"kind", gen.kind_name()}, {"prefix", gen.prefix}, {"params", params}};
}

json report_to_json(const ExperimentConfig& cfg, const ConvergenceReport& rep) {
    json j;
    j["experiment"] = cfg.name;
    j["generator"] = generator_to_json(cfg.generator);
    json muntz;
    muntz["verdict"] = to_string(rep.verdict.verdict);
    muntz["limit_certified"] = rep.verdict.limit_certified;
    muntz["limit_finite"] = rep.verdict.limit_finite;
    json sums = json::array();
    for (const auto& [n, s] : rep.verdict.partial_sums)
        sums.push_back(json{{"n", n}, {"sum", s}});
    muntz["partial_sums"] = sums;
    if (rep.verdict.limit_finite)
        muntz["warning"] =
            "exponents stay bounded (r_s does not tend to infinity): the convergence "
            "dichotomy's hypothesis fails, divergence of sum 1/r_i alone decides nothing";
    j["muntz"] = muntz;
    j["levels"] = rep.levels;
    j["coeff_error"] = rep.coeff_error;
    j["hausdorff"] = rep.hausdorff;
    j["delta_partial"] = rep.delta_partial;
    j["max_eta_gap"] = rep.max_eta_gap;
    try {
        j["rate_estimate"] = rate_estimate(rep);
    } catch (const InsufficientData&) {
        j["rate_estimate"] = nullptr;
    }
    return j;
}

std::vector<Point> sample_curve(const GelfondCurve& curve, std::size_t samples) {
    std::vector<Point> pts;
    pts.reserve(samples + 1);
    for (std::size_t i = 0; i <= samples; ++i)
        pts.push_back(eval_curve(curve, static_cast<double>(i) / static_cast<double>(samples)));
    return pts;
}

std::string figure_svg(const ExperimentConfig& cfg, const ElevationTrace& trace,
                       const GelfondCurve& curve) {
    SvgWriter svg;
    for (const ControlPolygon& poly : trace.polygons)
        svg.add_polyline(poly.points, "black", 1.0);
    std::vector<GelfondCurve> curves{curve};
    for (const std::vector<double>& exps : cfg.extra_curve_exponents) {
        std::vector<double> vals{0.0};
        vals.insert(vals.end(), exps.begin(), exps.end());
        curves.emplace_back(ExponentSequence(std::move(vals)), curve.control_points);
    }
    static const char* kMulti[] = {"blue", "red", "green", "orange", "purple"};
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = curves.size() == 1 ? "red" : kMulti[i % 5];
        svg.add_path(sample_curve(curves[i], 256), color, 1.5);
    }
    return svg.str();
}

}  // namespace

ExperimentConfig named_experiment(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.control_points = kDefaultQuad;
    if (name == "fig1") {
        cfg.generator = GeneratorSpec::explicit_list({2.0, 5.0, 7.0}, {14.0});
        cfg.iterations = 1;
    } else if (name == "fig2") {
        cfg.generator = GeneratorSpec::linear({1.0, 2.0, 3.0}, 2.0, 0.0);
        cfg.iterations = 100;
    } else if (name == "fig3") {
        cfg.generator = GeneratorSpec::power({1.0, 2.0, 3.0}, 2.0);
        cfg.iterations = 100;
    } else if (name == "fig4") {
        cfg.generator = GeneratorSpec::linear({2.0, 4.0, 14.0}, 2.0, 10.0);
        cfg.iterations = 100;
    } else if (name == "fig4alt") {
        // alternate parameterization of the fig4 family
        cfg.generator = GeneratorSpec::linear({2.0, 4.0, 5.0}, 2.0, 0.0);
        cfg.iterations = 100;
    } else if (name == "fig5a") {
        cfg.generator = GeneratorSpec::bounded({1.0, 2.0, 3.0}, 5.0);
        cfg.iterations = 100;
    } else if (name == "fig5b") {
        cfg.generator = GeneratorSpec::bounded({1.0, 2.0, 3.0}, 50.0);
        cfg.iterations = 100;
    } else if (name == "fig6") {
        cfg.generator = GeneratorSpec::explicit_list({1.0, 2.0, 3.0});
        cfg.iterations = 0;
        cfg.extra_curve_exponents = {{1.0, 2.0, 20.0}, {2.0, 50.0, 100.0}};
    } else {
        throw ConfigParseError("unknown experiment name '" + name + "'");
    }
    return cfg;
}

std::vector<std::string> named_experiment_list() {
    return {"fig1", "fig2", "fig3", "fig4", "fig4alt", "fig5a", "fig5b", "fig6"};
}

namespace {

double require_number(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number())
        throw ConfigParseError("generator.params." + field + ": number required");
    return j[field].get<double>();
}

GeneratorSpec generator_from_json(const json& j) {
    if (!j.is_object()) throw ConfigParseError("generator: object required");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ConfigParseError("generator.kind: string required");
    const std::string kind = j["kind"].get<std::string>();
    std::vector<double> prefix;
    if (j.contains("prefix")) {
        if (!j["prefix"].is_array()) throw ConfigParseError("generator.prefix: array required");
        for (const auto& v : j["prefix"]) {
            if (!v.is_number()) throw ConfigParseError("generator.prefix: numbers required");
            prefix.push_back(v.get<double>());
        }
    }
    const json params = j.value("params", json::object());
    if (kind == "linear")
        return GeneratorSpec::linear(std::move(prefix), require_number(params, "a"),
                                     params.contains("b") ? require_number(params, "b") : 0.0);
    if (kind == "power") return GeneratorSpec::power(std::move(prefix), require_number(params, "p"));
    if (kind == "bounded")
        return GeneratorSpec::bounded(std::move(prefix), require_number(params, "c"));
    if (kind == "explicit") {
        std::vector<double> tail;
        if (params.contains("tail")) {
            if (!params["tail"].is_array())
                throw ConfigParseError("generator.params.tail: array required");
            for (const auto& v : params["tail"]) tail.push_back(v.get<double>());
        }
        return GeneratorSpec::explicit_list(std::move(prefix), std::move(tail));
    }
    throw ConfigParseError("generator.kind: expected one of linear|power|bounded|explicit, got '" +
                           kind + "'");
}

}  // namespace

GeneratorSpec generator_from_json_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigParseError(std::string("generator JSON: ") + e.what());
    }
    return generator_from_json(j);
}

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigParseError(std::string("config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigParseError("config: object required");
    ExperimentConfig cfg;
    cfg.name = j.value("name", std::string("run"));
    if (!j.contains("generator")) throw ConfigParseError("generator: required field missing");
    cfg.generator = generator_from_json(j["generator"]);
    if (j.contains("control_points")) {
        if (!j["control_points"].is_array())
            throw ConfigParseError("control_points: array of points required");
        for (const auto& pj : j["control_points"]) {
            if (!pj.is_array() || pj.empty())
                throw ConfigParseError("control_points: each point must be a non-empty array");
            Point p;
            for (const auto& c : pj) {
                if (!c.is_number())
                    throw ConfigParseError("control_points: coordinates must be numbers");
                p.push_back(c.get<double>());
            }
            cfg.control_points.push_back(std::move(p));
        }
    }
    if (j.contains("random_control_points")) {
        const json& r = j["random_control_points"];
        if (!r.is_object() || !r.contains("count"))
            throw ConfigParseError("random_control_points.count: required");
        cfg.random_points = r["count"].get<std::size_t>();
        cfg.random_dim = r.value("dim", std::size_t{2});
    }
    if (j.contains("iterations")) {
        if (!j["iterations"].is_number_unsigned())
            throw ConfigParseError("iterations: nonnegative integer required");
        cfg.iterations = j["iterations"].get<std::size_t>();
    }
    cfg.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("outputs")) {
        if (!j["outputs"].is_array()) throw ConfigParseError("outputs: array required");
        cfg.outputs.clear();
        for (const auto& o : j["outputs"]) cfg.outputs.insert(o.get<std::string>());
    }
    if (j.contains("extra_curves")) {
        if (!j["extra_curves"].is_array()) throw ConfigParseError("extra_curves: array required");
        for (const auto& ej : j["extra_curves"]) {
            std::vector<double> exps;
            for (const auto& v : ej) exps.push_back(v.get<double>());
            cfg.extra_curve_exponents.push_back(std::move(exps));
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ExperimentResult run_experiment(const ExperimentConfig& config, const std::string& out_dir) {
    ExperimentConfig cfg = config;
    cfg.validate();
    cfg.control_points = resolve_control_points(cfg);
    cfg.random_points = 0;

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir);

    const std::size_t n = cfg.control_points.size() - 1;
    const std::size_t m = n + cfg.iterations;

    std::vector<double> lam_n{0.0};
    lam_n.insert(lam_n.end(), cfg.generator.prefix.begin(), cfg.generator.prefix.end());
    const GelfondCurve curve(ExponentSequence(lam_n), cfg.control_points);

    ControlPolygon start{cfg.control_points, 0};
    const ElevationTrace trace = elevate_to(start, cfg.generator, m);
    const ConvergenceReport report =
        build_report(curve, cfg.generator, checkpoint_levels(n, m));

    ExperimentResult result;
    result.report = report;
    auto emit = [&](const std::string& file, const std::string& content) {
        if (!cfg.outputs.count(file)) return;
        const std::string path = (fs::path(out_dir) / file).string();
        write_file(path, content);
        result.files.push_back(path);
    };
    emit("polygons.csv", polygons_csv(trace));
    emit("report.csv", report_csv(report));
    emit("report.json", report_to_json(cfg, report).dump(2) + "\n");
    if (cfg.outputs.count("figure.svg") && curve.dimension() == 2)
        emit("figure.svg", figure_svg(cfg, trace, curve));
    return result;
}

}  // namespace gb
