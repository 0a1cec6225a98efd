#pragma once

#include "lee/bounds.hpp"
#include "lee/codes.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lee {

// Located sign change of (a - b) on a caller-supplied bracket.
struct CrossoverResult {
    std::string curve_a, curve_b;
    double delta_star = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0; // final bisection bracket
    int iterations = 0;
    bool a_above_left = false; // a > b immediately left of delta_star
};

// Pre-scans [lo, hi] (scan_points intervals) for sign changes of a - b,
// requires exactly one, then bisects to a bracket of width <= tol.
// Throws std::invalid_argument when no sign change or more than one is found.
CrossoverResult crossover(const BoundCurve& a, const BoundCurve& b, double lo, double hi,
                          double tol = 1e-10, int scan_points = 1000);

struct DeltaQRow {
    std::int64_t q = 0;
    double delta_q = 0.0; // full precision
    std::string display;  // rounded half-up to 4 decimals
};

// Crossover of the Astola curve with the Victoria curve at gamma = 1/(sqrt(q)-1),
// located on [1e-4, 0.2]; each q must be an odd square of a prime, q >= 25.
std::vector<DeltaQRow> delta_q_table(const std::vector<std::int64_t>& qs);

// decimal string of x rounded half-up to `digits` places
std::string round_half_up(double x, int digits);

// Curve values over a shared grid; NaN marks an out-of-domain cell.
struct ComparisonGrid {
    std::vector<double> delta_values;
    std::vector<std::string> names;
    std::vector<std::vector<double>> values; // values[row][column]
};

// evenly spaced grid with exact endpoints; n >= 2 (n == 1 gives {lo})
std::vector<double> linspace(double lo, double hi, std::int64_t n);

// Grid must be non-empty and strictly increasing.
ComparisonGrid comparison_grid(const std::vector<BoundCurve>& curves,
                               const std::vector<double>& delta_grid);

enum class Dominance { a_dominates, b_dominates, crossing, tied };

struct DominanceReport {
    Dominance outcome = Dominance::tied;
    double min_diff = 0.0, max_diff = 0.0; // of a - b over compared points
    std::int64_t points = 0;               // grid points where both are defined
};

// Pointwise order of two curves over the grid, comparing only where both are
// defined; differences within eps count as equal.
DominanceReport dominance_scan(const BoundCurve& a, const BoundCurve& b,
                               const std::vector<double>& delta_grid, double eps = 1e-12);

struct VerifyConfig {
    std::uint64_t cap = 100'000'000ULL; // enumeration budget per check
    int workers = 1;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::int64_t measured = 0; // brute-forced distance
    std::int64_t bound = 0;    // binding integer bound
    std::int64_t margin = 0;   // measured - bound
    nlohmann::ordered_json detail;
};

struct VerifyReport {
    std::string family;
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Shortened degree-r evaluation codes [p-1, r] over F_p, r = 1..r_max:
// brute-forced minimum Lee distance against ceil((p^2 - r^2)/(4r)).
VerifyReport verify_victorian(std::int64_t p, std::int64_t r_max, const VerifyConfig& cfg = {});

// Expanded shortened codes [2(p^2-1), 2r] over F_p built from F_{p^2}:
// brute-forced d_L against the exact r*W(p^2/r) and its closed-form floor.
VerifyReport verify_descent(std::int64_t p, std::int64_t r_max, const VerifyConfig& cfg = {});

// Inner parity-check codes: dimension >= p-1-t and brute-forced d_L >= 2t.
// k_cap > 0 shortens the code (at position 0) until k <= k_cap first.
VerifyReport verify_bch(std::int64_t p, std::int64_t t, std::int64_t k_cap = 0,
                        const VerifyConfig& cfg = {});

// The [12, 4] concatenation over Z_5 (outer [3,2] over F_25, inner [4,2]):
// brute-forced d_L against d_H(outer) * d_L(inner), both factors brute-forced.
VerifyReport verify_concat(const VerifyConfig& cfg = {});

// All families at desk scale: victorian p=7 r<=5 and p=11 r<=4, descent p=3
// r<=3, the four inner-code instances, and the concatenation instance.
std::vector<VerifyReport> verification_suite(const VerifyConfig& cfg = {});

// CSV: header "delta,<name1>,...", 12 significant digits, empty cell for NaN,
// LF line endings.
std::string grid_to_csv(const ComparisonGrid& grid);
nlohmann::ordered_json grid_to_json(const ComparisonGrid& grid);
nlohmann::ordered_json report_to_json(const VerifyReport& report);

} // namespace lee
