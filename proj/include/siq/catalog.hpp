#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "siq/errors.hpp"

namespace siq::catalog {

enum class FamilyId {
    harmonic_oscillator,
    radial_oscillator_3d,
    coulomb,
    morse,
    scarf_2,
    rosen_morse_2,
    eckart,
    scarf_1,
    rosen_morse_1,
    poschl_teller,
};

inline constexpr int unbounded_levels = std::numeric_limits<int>::max();

/// Named real parameters plus the per-level translation a_{k+1} = a_k + step.
/// Units are hbar = 2m = 1 throughout.
struct ParamSet {
    std::map<std::string, double> values;
    std::map<std::string, double> translation_step;

    double get(const std::string& name) const;
    ParamSet at_level(int k) const;
};

/// One shape-invariant family at fixed parameters: superpotential W, its
/// analytic derivative, the domain, and derived spectral data.
/// V- = W^2 - W', V+ = W^2 + W', V = V- - v_minus_min.
struct PotentialSpec {
    FamilyId family{};
    std::string family_name;
    ParamSet params;
    double x_lo = 0, x_hi = 0;  // open interval; +/-inf where unbounded
    std::function<double(double)> w;
    std::function<double(double)> w_prime;
    double v_minus_min = 0;
    double x_at_min = 0;
    double w_zero = 0;  // W changes sign from - to + here (unbroken supersymmetry)
    double w_lim_left = 0, w_lim_right = 0;  // W limits at the domain ends
    int max_level = 0;          // bound levels; unbounded_levels when infinite
    double continuum_minus = 0; // continuum threshold on the V- scale (+inf if confining)

    bool in_domain(double x) const { return x > x_lo && x < x_hi; }
};

struct SpectrumEntry {
    int n = 0;
    double e_minus = 0;    // level of V-, E_0 = 0
    double e_shifted = 0;  // level of the tabulated V = V- - v_minus_min
};

/// Enumeration metadata (also expressible as a config-file record).
struct FamilyInfo {
    FamilyId id{};
    std::string name;
    std::string title;
    std::string w_formula;
    std::string domain_text;
    std::vector<std::pair<std::string, double>> defaults;  // declared order
    std::vector<std::string> constraints_text;
    std::string translation_text;
};

std::vector<FamilyId> list_families();
const FamilyInfo& family_info(FamilyId id);
const FamilyInfo* find_family(const std::string& name);  // nullptr if unknown
std::vector<std::string> family_names();

PotentialSpec make_spec(FamilyId id);
PotentialSpec make_spec(FamilyId id, const std::map<std::string, double>& overrides);

double v_minus(const PotentialSpec& spec, double x);
double v_plus(const PotentialSpec& spec, double x);
/// V(x) = V-(x) - v_minus_min, so min V = 0.
double potential(const PotentialSpec& spec, double x);
/// R(a_k), the shape-invariance remainder after k parameter translations.
double remainder(const PotentialSpec& spec, int k);
std::vector<SpectrumEntry> exact_spectrum(const PotentialSpec& spec, int n_max);
/// Unnormalized ground state exp(-int_{x_at_min}^x W), positive on the domain.
double ground_state_wavefunction(const PotentialSpec& spec, double x);

/// n-point grid covering the well and its near-forbidden region, staying where
/// |V-| stays moderate so invariant checks are not dominated by cancellation.
std::vector<double> sample_grid(const PotentialSpec& spec, int n);

/// Interior points where the ground state is representable (|log psi| <= 25)
/// and W is moderate; finite-difference consistency checks are well posed here.
std::vector<double> wavefunction_sample_points(const PotentialSpec& spec, int count);

// --- declarative family config (one record per family) ---

struct ConfigRecord {
    std::string name;
    std::string title;
    std::string w_formula;
    std::string domain;
    std::vector<std::pair<std::string, double>> params;
    std::vector<std::string> constraints;
    std::string translation;
};

std::string config_text();
std::vector<ConfigRecord> parse_config(const std::string& text);
std::vector<ConfigRecord> load_config(const std::string& path);

}  // namespace siq::catalog
