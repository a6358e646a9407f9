// minpoly: minimal polynomials and linear complexity of finite sequences.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <minpoly/cli.hpp>

int main(int argc, char** argv) {
    using namespace minpoly;

    CLI::App app{"Minimal polynomial / linear complexity of a finite sequence"};
    std::string field = "gf2", variant = "b0", mode = "minpoly", poly;
    std::string in_path;
    std::size_t count = 0, exhaustive = 0;
    bool json = false;
    std::uint64_t budget = oracle::Budget{}.max_candidates;

    app.add_option("--field", field, "gf2 | gf:<p> | q")->capture_default_str();
    app.add_option("--variant", variant, "initial B: b0 | b1")->capture_default_str();
    app.add_option("--mode", mode, "minpoly | profile | trace | massey | oracle-check | extend")
        ->capture_default_str();
    app.add_option("--in", in_path, "input file (default: stdin)");
    app.add_flag("--json", json, "emit JSON");
    auto* poly_opt = app.add_option("--poly", poly, "characteristic polynomial for extend, e.g. 'x^2 + x + 1'");
    auto* count_opt = app.add_option("--count", count, "number of terms to append for extend");
    auto* exh_opt = app.add_option("--exhaustive", exhaustive,
                                   "oracle-check every sequence of length 1..N instead of reading input");
    app.add_option("--budget", budget, "oracle candidate budget")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    cli::RunConfig cfg;
    try {
        cfg.field = FieldDescriptor::parse(field);
        cfg.variant = cli::parse_variant(variant);
        cfg.mode = cli::parse_mode(mode);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::Exit::usage;
    }
    cfg.json = json;
    cfg.budget = budget;
    if (*poly_opt) cfg.poly = poly;
    if (*count_opt) cfg.count = count;
    if (*exh_opt) cfg.exhaustive = exhaustive;

    std::string input;
    if (!cfg.exhaustive) {
        if (!in_path.empty()) {
            cfg.input_path = in_path;
            std::ifstream f(in_path);
            if (!f) {
                std::cerr << "error: cannot open " << in_path << '\n';
                return cli::Exit::usage;
            }
            input.assign(std::istreambuf_iterator<char>(f), {});
        } else {
            input.assign(std::istreambuf_iterator<char>(std::cin), {});
        }
    }
    return cli::run(cfg, input, std::cout, std::cerr);
}
