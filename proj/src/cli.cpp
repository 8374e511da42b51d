#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "siq/report.hpp"

namespace siq::report {

namespace {

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw Error("unknown format '" + s + "' (valid: table, csv, json)");
}

std::set<std::string> parse_methods(const std::string& s) {
    std::set<std::string> methods;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) methods.insert(item);
    return methods;
}

std::map<std::string, double> parse_sets(const std::vector<std::string>& sets) {
    std::map<std::string, double> overrides;
    for (const auto& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error("--set expects name=value, got '" + kv + "'");
        std::size_t used = 0;
        const double value = std::stod(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1)
            throw Error("--set expects a numeric value, got '" + kv + "'");
        overrides[kv.substr(0, eq)] = value;
    }
    return overrides;
}

void print_catalog(std::ostream& out) {
    for (catalog::FamilyId id : catalog::list_families()) {
        const catalog::FamilyInfo& info = catalog::family_info(id);
        const catalog::PotentialSpec spec = catalog::make_spec(id);
        out << info.name << "  (" << info.title << ")\n";
        out << "    W(x) = " << info.w_formula << "  on " << info.domain_text << '\n';
        out << "    defaults:";
        for (const auto& [name, value] : info.defaults) out << ' ' << name << '=' << value;
        out << '\n';
        out << "    translation: " << info.translation_text << '\n';
        out << "    constraints:";
        for (const auto& c : info.constraints_text) out << "  " << c;
        out << '\n';
        out << "    bound levels at defaults: ";
        if (spec.max_level == catalog::unbounded_levels)
            out << "unbounded";
        else
            out << spec.max_level;
        out << '\n';
    }
}

void print_config_records(std::ostream& out, const std::string& path) {
    for (const auto& rec : catalog::load_config(path)) {
        out << rec.name << "  (" << rec.title << ")\n";
        out << "    W(x) = " << rec.w_formula << "  on " << rec.domain << '\n';
        out << "    defaults:";
        for (const auto& [name, value] : rec.params) out << ' ' << name << '=' << value;
        out << '\n';
        out << "    translation: " << rec.translation << '\n';
        out << "    constraints:";
        for (const auto& c : rec.constraints) out << "  " << c;
        out << '\n';
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"bound-state spectra of shape-invariant potentials by WKB, SWKB and "
                 "phase-corrected (FT) quantization"};
    app.require_subcommand(1);

    auto* cmd_list = app.add_subcommand("list", "print the family catalog");
    std::string config_path;
    cmd_list->add_option("--config", config_path, "enumerate families from a config file");

    auto* cmd_compute = app.add_subcommand("compute", "solve levels for one family");
    std::string family;
    std::vector<std::string> sets;
    int levels = 1;
    std::string methods_text = "exact,wkb,swkb,ft";
    std::string format_text = "table";
    double rel_tol = 1e-12;
    cmd_compute->add_option("--family", family, "family id (see `list`)")->required();
    cmd_compute->add_option("--set", sets, "parameter override name=value (repeatable)");
    cmd_compute->add_option("--levels", levels, "number of levels, n = 0..N-1");
    cmd_compute->add_option("--methods", methods_text, "subset of exact,wkb,swkb,ft");
    cmd_compute->add_option("--format", format_text, "table | csv | json");
    cmd_compute->add_option("--rel-tol", rel_tol, "energy tolerance for the solvers");

    auto* cmd_table2 = app.add_subcommand(
        "table2", "ground-state comparison across all families at default parameters");
    std::string t2_format = "table";
    cmd_table2->add_option("--format", t2_format, "table | csv | json");

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_list->parsed()) {
            if (config_path.empty())
                print_catalog(std::cout);
            else
                print_config_records(std::cout, config_path);
            return 0;
        }
        if (cmd_compute->parsed()) {
            RunConfig cfg;
            try {
                if (levels < 1) throw Error("--levels must be >= 1");
                cfg.families = {family};
                cfg.overrides[family] = parse_sets(sets);
                cfg.n_max = levels - 1;
                cfg.methods = parse_methods(methods_text);
                cfg.format = parse_format(format_text);
                cfg.rel_tol = rel_tol;
                cfg.validate();
            } catch (const Error& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return 2;
            }
            std::cout << emit(run_comparison(cfg), cfg.format);
            return 0;
        }
        if (cmd_table2->parsed()) {
            RunConfig cfg;
            cfg.n_max = 0;
            try {
                cfg.format = parse_format(t2_format);
            } catch (const Error& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return 2;
            }
            std::cout << emit(run_comparison(cfg), cfg.format);
            return 0;
        }
        if (cmd_verify->parsed()) return run_verify(std::cout);
    } catch (const ParamViolation& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace siq::report
