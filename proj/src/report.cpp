#include "siq/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "siq/integrals.hpp"
#include "siq/numerics.hpp"
#include "siq/oracle.hpp"
#include "siq/quantizers.hpp"

namespace siq::report {

namespace {

const double nan_marker = std::numeric_limits<double>::quiet_NaN();

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return buf;
}

std::string fmt_short(double v) {
    if (std::isnan(v)) return "--";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string params_to_text(const catalog::FamilyInfo& info, const catalog::ParamSet& params) {
    std::string out;
    for (const auto& [name, unused] : info.defaults) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%g", params.get(name));
        out += (out.empty() ? "" : ";") + name + "=" + buf;
    }
    return out;
}

bool method_ok(const std::set<std::string>& methods, const char* m) {
    return methods.count(m) > 0;
}

}  // namespace

void RunConfig::validate() const {
    if (n_max < 0) throw Error("RunConfig: n_max must be >= 0");
    if (methods.empty()) throw Error("RunConfig: at least one method required");
    if (!(rel_tol > 0) || rel_tol > 1e-2)
        throw Error("RunConfig: rel_tol must lie in (0, 1e-2]");
    for (const auto& m : methods)
        if (m != "exact" && m != "wkb" && m != "swkb" && m != "ft")
            throw Error("RunConfig: unknown method '" + m + "' (valid: exact, wkb, swkb, ft)");
    for (const auto& f : families)
        if (!catalog::find_family(f)) {
            std::string valid;
            for (const auto& n : catalog::family_names())
                valid += (valid.empty() ? "" : ", ") + n;
            throw ParamViolation("unknown family '" + f + "' (valid: " + valid + ")");
        }
}

std::vector<ComparisonRow> run_comparison(const RunConfig& cfg) {
    cfg.validate();
    const std::vector<std::string> fams =
        cfg.families.empty() ? catalog::family_names() : cfg.families;

    std::vector<ComparisonRow> rows;
    for (const auto& name : fams) {
        const catalog::FamilyInfo& info = *catalog::find_family(name);
        std::map<std::string, double> overrides;
        if (auto it = cfg.overrides.find(name); it != cfg.overrides.end())
            overrides = it->second;
        const catalog::PotentialSpec spec = catalog::make_spec(info.id, overrides);

        for (int n = 0; n <= cfg.n_max; ++n) {
            ComparisonRow row;
            row.family = name;
            row.params = spec.params;
            row.params_text = params_to_text(info, spec.params);
            row.n = n;
            row.e_exact = row.e_wkb = row.e_swkb = row.e_ft = nan_marker;
            row.pct_err_wkb = row.pct_err_ft = nan_marker;
            row.v_minus_min = spec.v_minus_min;
            if (n < spec.max_level) {
                if (method_ok(cfg.methods, "exact"))
                    row.e_exact = catalog::exact_spectrum(spec, n).back().e_shifted;
                quantizers::SolverOptions opts;
                opts.energy_rel_tol = cfg.rel_tol;
                opts.action_rel_tol = std::max(1e-12, 0.1 * cfg.rel_tol);
                auto attempt = [&](const char* m, auto solver) -> double {
                    if (!method_ok(cfg.methods, m)) return nan_marker;
                    try {
                        return solver(spec, n, opts).energy;
                    } catch (const Unbound&) {
                        return nan_marker;
                    } catch (const NoTurningPoint&) {
                        return nan_marker;
                    }
                };
                row.e_wkb = attempt("wkb", [](const catalog::PotentialSpec& s, int lvl,
                                              quantizers::SolverOptions o) {
                    return quantizers::solve_wkb(s, lvl, o);
                });
                row.e_swkb = attempt("swkb", [](const catalog::PotentialSpec& s, int lvl,
                                                quantizers::SolverOptions o) {
                    return quantizers::solve_swkb(s, lvl, o);
                });
                row.e_ft = attempt("ft", [](const catalog::PotentialSpec& s, int lvl,
                                            quantizers::SolverOptions o) {
                    return quantizers::solve_ft(s, lvl, o);
                });
                if (std::isfinite(row.e_exact) && row.e_exact > 0) {
                    if (std::isfinite(row.e_wkb))
                        row.pct_err_wkb = 100.0 * (row.e_wkb - row.e_exact) / row.e_exact;
                    if (std::isfinite(row.e_ft))
                        row.pct_err_ft = 100.0 * (row.e_ft - row.e_exact) / row.e_exact;
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string emit(const std::vector<ComparisonRow>& rows, Format format) {
    if (rows.empty()) throw Error("emit: no rows");
    std::ostringstream out;
    switch (format) {
        case Format::csv: {
            out << "family,params,n,e_exact,e_wkb,e_swkb,e_ft,pct_err_wkb,pct_err_ft\n";
            for (const auto& r : rows)
                out << r.family << ',' << r.params_text << ',' << r.n << ',' << fmt_full(r.e_exact)
                    << ',' << fmt_full(r.e_wkb) << ',' << fmt_full(r.e_swkb) << ','
                    << fmt_full(r.e_ft) << ',' << fmt_full(r.pct_err_wkb) << ','
                    << fmt_full(r.pct_err_ft) << '\n';
            break;
        }
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json jr;
                jr["family"] = r.family;
                nlohmann::json jp;
                for (const auto& [name, value] : r.params.values) jp[name] = value;
                jr["params"] = jp;
                jr["n"] = r.n;
                auto put = [&](const char* key, double v) {
                    if (std::isfinite(v))
                        jr[key] = v;
                    else
                        jr[key] = nullptr;
                };
                put("e_exact", r.e_exact);
                put("e_wkb", r.e_wkb);
                put("e_swkb", r.e_swkb);
                put("e_ft", r.e_ft);
                put("pct_err_wkb", r.pct_err_wkb);
                put("pct_err_ft", r.pct_err_ft);
                nlohmann::json jm;
                auto put_minus = [&](const char* key, double v) {
                    if (std::isfinite(v)) jm[key] = v + r.v_minus_min;
                };
                put_minus("exact", r.e_exact);
                put_minus("wkb", r.e_wkb);
                put_minus("swkb", r.e_swkb);
                put_minus("ft", r.e_ft);
                jr["energy_minus"] = jm;
                arr.push_back(std::move(jr));
            }
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::table: {
            const std::vector<std::string> head = {"family", "params",   "n",
                                                   "E_exact", "E_wkb",   "E_swkb",
                                                   "E_ft",    "%err_wkb", "%err_ft"};
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : rows)
                cells.push_back({r.family, r.params_text, std::to_string(r.n),
                                 fmt_short(r.e_exact), fmt_short(r.e_wkb), fmt_short(r.e_swkb),
                                 fmt_short(r.e_ft), fmt_short(r.pct_err_wkb),
                                 fmt_short(r.pct_err_ft)});
            std::vector<std::size_t> width(head.size());
            for (std::size_t c = 0; c < head.size(); ++c) {
                width[c] = head[c].size();
                for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
            }
            auto line = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
                out << '\n';
            };
            line(head);
            for (const auto& row : cells) line(row);
            break;
        }
    }
    return out.str();
}

// --- invariant suite ---

namespace {

struct CheckOutcome {
    std::string name;
    bool pass;
    std::string detail;
};

template <class Body>
CheckOutcome run_check(const std::string& name, Body&& body) {
    try {
        return {name, true, body()};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

std::string worst_text(double worst, double tol) {
    std::ostringstream s;
    s << "worst " << std::scientific << std::setprecision(2) << worst << " (tol " << tol << ")";
    return s.str();
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

}  // namespace

int run_verify(std::ostream& out) {
    std::vector<CheckOutcome> checks;

    std::vector<catalog::PotentialSpec> specs;
    for (catalog::FamilyId id : catalog::list_families()) specs.push_back(catalog::make_spec(id));

    checks.push_back(run_check("integrals: closed forms vs quadrature", [&] {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst = 0;
        auto sample = [&](integrals::Kind kind, auto make_limits) {
            for (int i = 0; i < 20; ++i) {
                const integrals::IntegralLimits lim = make_limits();
                const double cf = integrals::closed_form(kind, lim);
                const double q = integrals::quadrature_reference(kind, lim);
                worst = std::max(worst, std::abs(cf - q) / std::max(1e-12, std::abs(cf)));
            }
        };
        sample(integrals::Kind::i1, [&] {
            const double a = -10 + 20 * unit(rng);
            return integrals::IntegralLimits{a, a + 15 * unit(rng)};
        });
        sample(integrals::Kind::i2, [&] {
            const double a = 0.05 + 5 * unit(rng);
            return integrals::IntegralLimits{a, a + 10 * unit(rng)};
        });
        sample(integrals::Kind::i3, [&] {
            const double a = -10 + 20 * unit(rng);
            return integrals::IntegralLimits{a, a + 15 * unit(rng)};
        });
        sample(integrals::Kind::i4, [&] {
            const double a = -0.95 + 1.9 * unit(rng);
            return integrals::IntegralLimits{a, a + (0.95 - a) * unit(rng)};
        });
        sample(integrals::Kind::i5, [&] {
            const double a = 1.05 + 5 * unit(rng);
            return integrals::IntegralLimits{a, a + 10 * unit(rng)};
        });
        for (auto kind : {integrals::Kind::i1, integrals::Kind::i3})
            expect(integrals::closed_form(kind, {0.7, 0.7}) == 0.0, "degenerate limit != 0");
        expect(worst <= 1e-8, "integral mismatch: " + worst_text(worst, 1e-8));
        return worst_text(worst, 1e-8);
    }));

    checks.push_back(run_check("catalog: shape-invariance residual (V+/V- ladder)", [&] {
        double worst = 0;
        for (const auto& spec : specs) {
            const catalog::PotentialSpec up =
                catalog::make_spec(spec.family, spec.params.at_level(1).values);
            const double r0 = catalog::remainder(spec, 0);
            for (double x : catalog::sample_grid(spec, 500)) {
                if (!up.in_domain(x)) continue;
                const double resid =
                    std::abs(catalog::v_plus(spec, x) - catalog::v_minus(up, x) - r0);
                worst = std::max(worst, resid);
            }
        }
        expect(worst <= 1e-9, "residual too large: " + worst_text(worst, 1e-9));
        return worst_text(worst, 1e-9);
    }));

    checks.push_back(run_check("catalog: ground state reproduces W (log-derivative)", [&] {
        double worst = 0;
        for (const auto& spec : specs) {
            for (double x : catalog::wavefunction_sample_points(spec, 50)) {
                const double h = 3e-5;
                const double dpsi = numerics::derivative(
                    [&](double t) { return catalog::ground_state_wavefunction(spec, t); }, x, h);
                const double ratio = -dpsi / catalog::ground_state_wavefunction(spec, x);
                worst = std::max(worst, std::abs(ratio - spec.w(x)));
            }
        }
        expect(worst <= 1e-6, "log-derivative mismatch: " + worst_text(worst, 1e-6));
        return worst_text(worst, 1e-6);
    }));

    checks.push_back(run_check("catalog: spectra start at zero and increase", [&] {
        for (const auto& spec : specs) {
            const int top = std::min(5, spec.max_level - 1);
            const auto entries = catalog::exact_spectrum(spec, top);
            expect(entries.front().e_minus == 0.0, spec.family_name + ": E0(-) != 0");
            for (std::size_t i = 1; i < entries.size(); ++i)
                expect(entries[i].e_minus > entries[i - 1].e_minus,
                       spec.family_name + ": spectrum not increasing");
        }
        return std::string("10 families");
    }));

    checks.push_back(run_check("swkb: exact on every family (n <= 3)", [&] {
        double worst = 0;
        for (const auto& spec : specs) {
            const int top = std::min(3, spec.max_level - 1);
            const auto entries = catalog::exact_spectrum(spec, top);
            for (int n = 0; n <= top; ++n) {
                const double e = quantizers::solve_swkb(spec, n).energy;
                const double ref = entries[static_cast<std::size_t>(n)].e_shifted;
                worst = std::max(worst, std::abs(e - ref) / std::max(ref, 1.0));
            }
        }
        expect(worst <= 1e-8, "swkb deviates: " + worst_text(worst, 1e-8));
        return worst_text(worst, 1e-8);
    }));

    checks.push_back(run_check("wkb: exact for harmonic oscillator and Morse (n <= 3)", [&] {
        double worst = 0;
        for (const auto& spec : specs) {
            if (spec.family != catalog::FamilyId::harmonic_oscillator &&
                spec.family != catalog::FamilyId::morse)
                continue;
            const auto entries = catalog::exact_spectrum(spec, 3);
            for (int n = 0; n <= 3; ++n) {
                const double e = quantizers::solve_wkb(spec, n).energy;
                const double ref = entries[static_cast<std::size_t>(n)].e_shifted;
                worst = std::max(worst, std::abs(e - ref) / std::max(ref, 1.0));
            }
        }
        expect(worst <= 1e-8, "wkb deviates: " + worst_text(worst, 1e-8));
        return worst_text(worst, 1e-8);
    }));

    checks.push_back(run_check("ft: exact for the harmonic oscillator (n <= 3)", [&] {
        double worst = 0;
        const auto& spec = specs.front();
        const auto entries = catalog::exact_spectrum(spec, 3);
        for (int n = 0; n <= 3; ++n) {
            const double e = quantizers::solve_ft(spec, n).energy;
            const double ref = entries[static_cast<std::size_t>(n)].e_shifted;
            worst = std::max(worst, std::abs(e - ref) / std::max(ref, 1.0));
        }
        expect(worst <= 1e-8, "ft deviates: " + worst_text(worst, 1e-8));
        return worst_text(worst, 1e-8);
    }));

    checks.push_back(run_check("oracle: finite-difference spectra agree (smoke, n <= 1)", [&] {
        double worst = 0;
        for (const auto& spec : specs) {
            const int top = std::min(1, spec.max_level - 1);
            oracle::GridSpec grid = oracle::default_grid(spec, top + 1);
            grid.points = 1200;
            const auto result = oracle::solve_schrodinger(spec, grid, top + 1);
            const auto entries = catalog::exact_spectrum(spec, top);
            for (int n = 0; n <= top; ++n) {
                const double got = result.richardson_estimate[static_cast<std::size_t>(n)];
                const double ref = entries[static_cast<std::size_t>(n)].e_shifted;
                worst = std::max(worst, std::abs(got - ref) / std::max(ref, 1.0));
            }
        }
        expect(worst <= 1e-3, "oracle deviates: " + worst_text(worst, 1e-3));
        return worst_text(worst, 1e-3);
    }));

    bool all = true;
    for (const auto& c : checks) {
        all = all && c.pass;
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        out << '\n';
    }
    out << (all ? "verify: all checks passed\n" : "verify: FAILURES present\n");
    return all ? 0 : 1;
}

}  // namespace siq::report
