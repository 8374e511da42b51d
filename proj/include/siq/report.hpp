#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "siq/catalog.hpp"

namespace siq::report {

/// One (family, level) record.  NaN marks an unavailable value: either the
/// method was not requested, the level is unbound for that method, or the
/// percent error is undefined.
struct ComparisonRow {
    std::string family;
    std::string params_text;  // "A=4;B=1;alpha=1"
    catalog::ParamSet params;
    int n = 0;
    double e_exact = 0;
    double e_wkb = 0;
    double e_swkb = 0;
    double e_ft = 0;
    double pct_err_wkb = 0;
    double pct_err_ft = 0;
    double v_minus_min = 0;  // for the V- scale values in the json output
};

enum class Format { table, csv, json };

struct RunConfig {
    std::vector<std::string> families;  // ids; empty means the whole catalog
    std::map<std::string, std::map<std::string, double>> overrides;
    int n_max = 0;  // rows n = 0..n_max
    std::set<std::string> methods{"exact", "wkb", "swkb", "ft"};
    Format format = Format::table;
    double rel_tol = 1e-12;  // energy tolerance handed to the solvers

    void validate() const;
};

std::vector<ComparisonRow> run_comparison(const RunConfig& cfg);
std::string emit(const std::vector<ComparisonRow>& rows, Format format);

/// Full invariant suite; prints one PASS/FAIL line per check.  Returns 0 when
/// everything passes, 1 otherwise.
int run_verify(std::ostream& out);

int cli_main(int argc, const char* const* argv);

}  // namespace siq::report
