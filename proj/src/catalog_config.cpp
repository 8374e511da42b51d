#include <cstdio>
#include <fstream>
#include <sstream>

#include "siq/catalog.hpp"

namespace siq::catalog {

namespace {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string config_text() {
    std::ostringstream out;
    out << "# shape-invariant potential families\n"
        << "# record format: one 'family' .. 'end' block per entry, 'key = value' lines;\n"
        << "# 'param' values are '<name> <default>'; constraints are informative text.\n";
    for (FamilyId id : list_families()) {
        const FamilyInfo& info = family_info(id);
        out << "\nfamily = " << info.name << "\n";
        out << "title = " << info.title << "\n";
        out << "W = " << info.w_formula << "\n";
        out << "domain = " << info.domain_text << "\n";
        for (const auto& [name, value] : info.defaults)
            out << "param = " << name << " " << format_value(value) << "\n";
        out << "translation = " << info.translation_text << "\n";
        for (const auto& c : info.constraints_text) out << "constraint = " << c << "\n";
        out << "end\n";
    }
    return out.str();
}

std::vector<ConfigRecord> parse_config(const std::string& text) {
    std::vector<ConfigRecord> records;
    ConfigRecord current;
    bool open = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line == "end") {
            if (!open) throw Error("config: 'end' without 'family' at line " +
                                   std::to_string(line_no));
            records.push_back(std::move(current));
            current = {};
            open = false;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config: expected 'key = value' at line " + std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "family") {
            if (open) throw Error("config: missing 'end' before line " + std::to_string(line_no));
            open = true;
            current.name = value;
        } else if (!open) {
            throw Error("config: '" + key + "' outside a family block at line " +
                        std::to_string(line_no));
        } else if (key == "title") {
            current.title = value;
        } else if (key == "W") {
            current.w_formula = value;
        } else if (key == "domain") {
            current.domain = value;
        } else if (key == "param") {
            std::istringstream pv(value);
            std::string name;
            double def = 0;
            if (!(pv >> name >> def))
                throw Error("config: bad param line " + std::to_string(line_no));
            current.params.emplace_back(name, def);
        } else if (key == "translation") {
            current.translation = value;
        } else if (key == "constraint") {
            current.constraints.push_back(value);
        } else {
            throw Error("config: unknown key '" + key + "' at line " + std::to_string(line_no));
        }
    }
    if (open) throw Error("config: unterminated family block");
    return records;
}

std::vector<ConfigRecord> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace siq::catalog
