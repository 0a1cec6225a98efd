#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace lee {

enum class CurveDirection { delta_to_rate, rate_to_delta };

struct Interval {
    double lo = 0.0, hi = 0.0;
    bool open_lo = false, open_hi = false;
    bool empty = false;

    bool contains(double x) const {
        if (empty) return false;
        if (x < lo || (open_lo && x == lo)) return false;
        if (x > hi || (open_hi && x == hi)) return false;
        return true;
    }
    static Interval none() { Interval i; i.empty = true; return i; }
};

// A named bound as an evaluable map delta -> R (or R -> delta) with a
// validity domain, the sub-interval where the value is positive, and a
// record of its parameters.
struct BoundCurve {
    std::string name;
    CurveDirection direction = CurveDirection::delta_to_rate;
    Interval domain;            // where evaluation is defined
    Interval effective_domain;  // where the (clipped) value is > 0
    std::vector<std::pair<std::string, double>> params;
    std::function<double(double)> fn;

    // domain-checked evaluation; throws std::domain_error outside
    double operator()(double x) const;
};

// Solution of the two-equation system behind the Astola bound for odd
// q = 2s+1: alpha(1 + 2 sum_i beta^i) = 1 and alpha sum_i i beta^i = delta*s/2,
// solved for beta in (0, 1] by bisection of the eliminated equation.
struct AstolaSolution {
    std::int64_t q = 0, s = 0;
    double delta = 0.0;
    double alpha = 0.0, beta = 0.0;
    double rate = 0.0;
    double residual1 = 0.0, residual2 = 0.0;
};

AstolaSolution astola_solve(double delta, std::int64_t q);
double astola_rate(double delta, std::int64_t q);
// largest admissible delta, (s+1)/(2s+1)
double astola_delta_max(std::int64_t q);

// L_q(x) = x log_q x + log_q(x + sqrt(x^2+1)) - x log_q(sqrt(x^2+1) - 1),
// continuously extended by L_q(0) = 0.
double lee_entropy(double x, std::int64_t q);

// Positive root of L_q(x) = 1 (bisection).
double gardy_sole_root(std::int64_t q);

// R >= 1 - L_q(delta), valid up to the root of L_q = 1.
double gardy_sole_rate(double delta, std::int64_t q);

// Genus-to-length ratio gamma entering the geometric bounds.
struct GenusRatio {
    std::int64_t q = 0;
    double gamma = 0.0;
    enum class Source { square_field, known_lower_bound } source = Source::square_field;
};

// gamma = 1/(sqrt(q) - 1) for q the square of a prime.
GenusRatio genus_ratio_square(std::int64_t q);
// gamma = 1/A from a known lower bound A on the Ihara function at q.
GenusRatio genus_ratio_from_A(std::int64_t q, double A);

// R = max(0, -gamma - 2 delta + sqrt(4 delta^2 + 1)).
double victoria_rate(double delta, double gamma);

// Rate guaranteed by concatenating an outer geometric code with the length
// p-1, distance >= 2t inner code:
// R(d) = ((p-1-t)/(p-1)) (1 - 1/(p^((p-t-1)/2) - 1)) - ((p-1-t)/(2t)) d.
BoundCurve concat_line(std::int64_t p, std::int64_t t);

// Even t values admissible for concat_line at this p.
std::vector<std::int64_t> concat_admissible_t(std::int64_t p);

// max over admissible t of concat_line(p, t) at delta
double concat_envelope(double delta, std::int64_t p);

// f(x) = (x/2) W(1/x), defined for 1/p^2 <= x <= 1.
double profile_f(double x, std::int64_t p);
// g(x) = (x/2) W_approx(1/x) = ((1-x)/6) sqrt((2-x)/x), 0 < x <= 1.
double profile_g(double x);

// Relative distance floor of the descent construction at rate R:
// exact (R+gamma)/2 * W(1/(R+gamma)) and its closed-form floor.
struct DescentDelta {
    double value = 0.0;
    double approx_floor = 0.0;
};
DescentDelta descent_delta(double R, double gamma, std::int64_t p);

// Piecewise-linear inverse of f on [0, f(1/p^2)]; breakpoints C(M) = Wb[M]/(2 B[M]),
// segment value (M+1-2 delta)/((M+1) B[M] - Wb[M]). No gamma shift applied.
double f_inverse(double delta, std::int64_t p);
// breakpoint C(M)
double f_breakpoint(std::int64_t M, std::int64_t p);

// Inverse of g on (0, 1], bisection value (authoritative).
double g_inverse(double delta);

// Both evaluation methods for the g-inverse: the bisection oracle and the
// closed form obtained from the cubic x^3 - 4x^2 + (5 + 36 d^2)x - 2 = 0
// (depressed coefficients u = 36 d^2 - 1/3, v = 48 d^2 - 2/27). The closed
// form is validated by substitution; if its branch lands on a spurious root
// of the squared equation it falls back to the oracle.
struct GInverseResult {
    double bisect = 0.0;
    double cardano = 0.0;
    bool cardano_valid = false; // closed form landed on the true inverse
};
GInverseResult g_inverse_full(double delta);

// max(f_inverse(delta) - gamma, g_inverse(delta) - gamma, 0) with
// gamma = 1/(p-1); total in delta >= 0 (clips at 0).
double alpha_lee_lower(double delta, std::int64_t p);

// Curve factories for the comparison machinery.
BoundCurve make_astola_curve(std::int64_t q);
BoundCurve make_gardy_sole_curve(std::int64_t q);
BoundCurve make_victoria_curve(double gamma);
BoundCurve make_victoria_curve(const GenusRatio& gr);
BoundCurve make_concat_envelope_curve(std::int64_t p);
BoundCurve make_descent_curve(std::int64_t p);
// the large-p concatenation asymptote 2R + delta = 1
BoundCurve make_asymptote_curve();

} // namespace lee
