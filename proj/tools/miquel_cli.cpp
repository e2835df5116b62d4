// Command-line front end for the Miquel point kernel: resolves scene files
// into reports, sweeps the locus classification, runs the property suites and
// renders deterministic SVG figures.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "miquel/checks.hpp"
#include "miquel/construct.hpp"
#include "miquel/scene.hpp"
#include "miquel/svg_render.hpp"
#include "miquel/sweep.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_usage = 2;
constexpr int k_exit_kernel = 3;
constexpr int k_exit_property = 4;

int exit_code_for(const miquel::Error& err) {
    switch (err.code()) {
        case miquel::Errc::parse_error:
        case miquel::Errc::unknown_suite:
            return k_exit_usage;
        default:
            return k_exit_kernel;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw miquel::Error(miquel::Errc::parse_error,
                            "line 0, scene, cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw miquel::Error(miquel::Errc::parse_error,
                            "line 0, out, cannot write " + path);
    }
    out << text;
}

struct CommonArgs {
    std::string scene_path;
    std::string vertex;
    std::vector<double> tolerance;  // absolute, relative
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scene", args.scene_path, "scene description file")
        ->required();
    cmd->add_option("--vertex", args.vertex,
                    "override the distinguished vertex (A, B or C)");
    cmd->add_option("--tolerance", args.tolerance,
                    "override absolute and relative epsilon")
        ->expected(2);
    cmd->add_option("--out", args.out_path, "output file (default: stdout)");
}

miquel::Scene load_scene(const CommonArgs& args) {
    miquel::Scene scene = miquel::parse_scene(read_file(args.scene_path));
    if (!args.vertex.empty()) {
        if (args.vertex == "A" || args.vertex == "a") {
            scene.vertex = miquel::VertexLabel::a;
        } else if (args.vertex == "B" || args.vertex == "b") {
            scene.vertex = miquel::VertexLabel::b;
        } else if (args.vertex == "C" || args.vertex == "c") {
            scene.vertex = miquel::VertexLabel::c;
        } else {
            throw miquel::Error(miquel::Errc::parse_error,
                                "line 0, vertex, expected A, B or C");
        }
    }
    if (!args.tolerance.empty()) {
        scene.tolerance.absolute_eps = args.tolerance[0];
        scene.tolerance.relative_eps = args.tolerance[1];
    }
    return scene;
}

int cmd_construct(const CommonArgs& args, double margin) {
    miquel::Scene scene = load_scene(args);
    miquel::ConstructReport report =
        miquel::build_construct_report(scene, margin);
    write_output(args.out_path, miquel::construct_report_text(scene, report));
    return k_exit_ok;
}

int cmd_sweep(const CommonArgs& args, const miquel::SweepSpec& spec) {
    miquel::Scene scene = load_scene(args);
    miquel::SweepResult result = miquel::run_sweep(scene, spec);
    std::ostringstream os;
    os << miquel::sweep_csv(result);
    os << "# agreement " << miquel::real_text(result.agreement(), 12) << " of "
       << result.counted << " counted\n";
    write_output(args.out_path, os.str());
    return k_exit_ok;
}

int cmd_render(const CommonArgs& args, int width) {
    miquel::Scene scene = load_scene(args);
    miquel::RenderOptions options;
    options.width = width;
    int code = k_exit_ok;
    try {
        miquel::build_construct_report(scene);
    } catch (const miquel::Error&) {
        code = k_exit_kernel;  // the figure still renders, as a diagnostic
    }
    write_output(args.out_path, miquel::render_svg(scene, options));
    return code;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int samples,
              bool list, const std::string& out_path) {
    std::ostringstream os;
    if (list) {
        for (const std::string& name : miquel::suite_names()) {
            os << name << ": " << miquel::suite_about(name) << "\n";
        }
        write_output(out_path, os.str());
        return k_exit_ok;
    }
    std::vector<std::string> selected;
    if (suite == "all") {
        selected = miquel::suite_names();
    } else {
        selected.push_back(suite);
    }
    bool all_pass = true;
    for (const std::string& name : selected) {
        miquel::PropertyResult result = miquel::run_suite(name, seed, samples);
        os << miquel::property_result_text(result);
        all_pass = all_pass && result.pass;
    }
    write_output(out_path, os.str());
    return all_pass ? k_exit_ok : k_exit_property;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Miquel point constructions: forward and inverse maps, "
                 "loci, property checks and figures"};
    app.require_subcommand(1);

    CommonArgs construct_args;
    double construct_margin = 1e-9;
    CLI::App* construct = app.add_subcommand(
        "construct", "resolve a scene into a full configuration report");
    add_common(construct, construct_args);
    construct->add_option("--margin", construct_margin,
                          "cevian classification margin");

    CommonArgs sweep_args;
    miquel::SweepSpec sweep_spec;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "compare analytic locus membership with the inverse map");
    add_common(sweep, sweep_args);
    sweep->add_option("--samples", sweep_spec.samples, "number of samples");
    sweep->add_option("--seed", sweep_spec.seed, "random seed");
    sweep->add_option("--margin", sweep_spec.margin,
                      "boundary margin, relative to the triangle diameter");
    sweep->add_option("--box-scale", sweep_spec.box_scale,
                      "sample box half-width in circumradii");

    std::string check_suite = "all";
    std::uint64_t check_seed = 1;
    int check_samples = 0;
    bool check_list = false;
    std::string check_out;
    CLI::App* check =
        app.add_subcommand("check", "run property suites over random scenes");
    check->add_option("--suite", check_suite,
                      "suite name, or 'all' (see --list)");
    check->add_option("--seed", check_seed, "random seed");
    check->add_option("--samples", check_samples,
                      "samples per suite (0 = suite default)");
    check->add_flag("--list", check_list, "list suites and exit");
    check->add_option("--out", check_out, "output file (default: stdout)");

    CommonArgs render_args;
    int render_width = 720;
    CLI::App* render =
        app.add_subcommand("render", "draw a scene as a deterministic SVG");
    add_common(render, render_args);
    render->add_option("--width", render_width, "figure width in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? k_exit_ok : k_exit_usage;
    }

    try {
        if (construct->parsed()) {
            return cmd_construct(construct_args, construct_margin);
        }
        if (sweep->parsed()) return cmd_sweep(sweep_args, sweep_spec);
        if (check->parsed()) {
            return cmd_check(check_suite, check_seed, check_samples,
                             check_list, check_out);
        }
        if (render->parsed()) return cmd_render(render_args, render_width);
    } catch (const miquel::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_code_for(err);
    }
    return k_exit_usage;
}
