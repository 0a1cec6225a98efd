#include "lee/bounds.hpp"

#include "lee/fields.hpp"
#include "lee/lee_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lee {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt_name(const char* fmt, ...) {
    char buf[128];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return std::string(buf);
}

Interval closed(double lo, double hi) {
    Interval i;
    i.lo = lo;
    i.hi = hi;
    return i;
}

Interval right_open(double lo, double hi) {
    Interval i = closed(lo, hi);
    i.open_hi = true;
    return i;
}

} // namespace

double BoundCurve::operator()(double x) const {
    if (!domain.contains(x))
        throw std::domain_error("argument outside the domain of curve " + name);
    return fn(x);
}

double astola_delta_max(std::int64_t q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("astola: alphabet size must be odd and >= 3");
    std::int64_t s = (q - 1) / 2;
    return double(s + 1) / double(q);
}

AstolaSolution astola_solve(double delta, std::int64_t q) {
    double dmax = astola_delta_max(q);
    std::int64_t s = (q - 1) / 2;
    if (!(delta >= 0.0 && delta <= dmax))
        throw std::domain_error("astola: delta outside [0, (s+1)/(2s+1)]");

    AstolaSolution sol;
    sol.q = q;
    sol.s = s;
    sol.delta = delta;
    if (delta == 0.0) { // degenerate endpoint of the system: beta -> 0
        sol.alpha = 1.0;
        sol.beta = 0.0;
        sol.rate = 1.0;
        return sol;
    }

    // power sums S1 = sum beta^i, Si = sum i*beta^i over i = 1..s
    auto sums = [s](double beta, double& S1, double& Si) {
        S1 = 0.0;
        Si = 0.0;
        double pw = 1.0;
        for (std::int64_t i = 1; i <= s; ++i) {
            pw *= beta;
            S1 += pw;
            Si += double(i) * pw;
        }
    };
    // eliminated equation: h(beta) = Si/(1+2*S1) = delta*s/2, h increasing on (0,1]
    double target = delta * double(s) / 2.0;
    auto h = [&](double beta) {
        double S1, Si;
        sums(beta, S1, Si);
        return Si / (1.0 + 2.0 * S1);
    };

    double lo = 0.0, hi = 1.0; // h(0) = 0 < target, h(1) >= target on the domain
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (h(mid) < target) lo = mid; else hi = mid;
    }
    double beta = (lo > 0.0 && std::abs(h(lo) - target) < std::abs(h(hi) - target)) ? lo : hi;

    double S1, Si;
    sums(beta, S1, Si);
    double alpha = 1.0 / (1.0 + 2.0 * S1);
    sol.alpha = alpha;
    sol.beta = beta;
    sol.residual1 = alpha * (1.0 + 2.0 * S1) - 1.0;
    sol.residual2 = alpha * Si - target;
    sol.rate = 1.0 + (std::log(alpha) + delta * double(s) * std::log(beta)) / std::log(double(q));
    return sol;
}

double astola_rate(double delta, std::int64_t q) {
    return astola_solve(delta, q).rate;
}

double lee_entropy(double x, std::int64_t q) {
    if (q < 2) throw std::invalid_argument("lee_entropy: base must be >= 2");
    if (!(x >= 0.0)) throw std::domain_error("lee_entropy: argument must be >= 0");
    if (x == 0.0) return 0.0;
    // -x log x + asinh(x) + x log(1 + sqrt(x^2+1)), all over log q;
    // equal to x log x + asinh(x) - x log(sqrt(x^2+1) - 1) without cancellation
    double r = std::sqrt(x * x + 1.0);
    return (-x * std::log(x) + std::asinh(x) + x * std::log(1.0 + r)) / std::log(double(q));
}

double gardy_sole_root(std::int64_t q) {
    if (q < 2) throw std::invalid_argument("gardy_sole_root: base must be >= 2");
    double lo = 0.0, hi = 1.0;
    while (lee_entropy(hi, q) < 1.0) {
        hi *= 2.0;
        if (hi > 1e9) throw std::logic_error("gardy_sole_root: no bracket found");
    }
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (lee_entropy(mid, q) < 1.0) lo = mid; else hi = mid;
    }
    return std::abs(lee_entropy(lo, q) - 1.0) < std::abs(lee_entropy(hi, q) - 1.0) ? lo : hi;
}

double gardy_sole_rate(double delta, std::int64_t q) {
    double root = gardy_sole_root(q);
    if (!(delta >= 0.0 && delta <= root))
        throw std::domain_error("gardy_sole_rate: delta outside [0, root of L_q = 1]");
    return 1.0 - lee_entropy(delta, q);
}

GenusRatio genus_ratio_square(std::int64_t q) {
    std::int64_t r = std::llround(std::sqrt(double(q)));
    if (r * r != q || !is_prime(r))
        throw std::invalid_argument("genus_ratio_square: q must be the square of a prime");
    GenusRatio gr;
    gr.q = q;
    gr.gamma = 1.0 / (double(r) - 1.0);
    gr.source = GenusRatio::Source::square_field;
    return gr;
}

GenusRatio genus_ratio_from_A(std::int64_t q, double A) {
    if (q < 2) throw std::invalid_argument("genus_ratio_from_A: q must be >= 2");
    if (!(A > 0.0)) throw std::invalid_argument("genus_ratio_from_A: A must be positive");
    GenusRatio gr;
    gr.q = q;
    gr.gamma = 1.0 / A;
    gr.source = GenusRatio::Source::known_lower_bound;
    return gr;
}

double victoria_rate(double delta, double gamma) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("victoria_rate: gamma must be >= 0");
    if (!(delta >= 0.0)) throw std::domain_error("victoria_rate: delta must be >= 0");
    // -gamma - 2d + sqrt(4d^2+1) written with the stable reciprocal of the conjugate
    double val = 1.0 / (std::sqrt(4.0 * delta * delta + 1.0) + 2.0 * delta) - gamma;
    return val > 0.0 ? val : 0.0;
}

std::vector<std::int64_t> concat_admissible_t(std::int64_t p) {
    if (p < 7 || !is_prime(p)) throw std::invalid_argument("concat: p must be a prime >= 7");
    std::vector<std::int64_t> out;
    for (std::int64_t t = 2; t <= (p + 1) / 2; t += 2) out.push_back(t);
    return out;
}

BoundCurve concat_line(std::int64_t p, std::int64_t t) {
    if (p < 7 || !is_prime(p)) throw std::invalid_argument("concat: p must be a prime >= 7");
    if (t < 1 || t > (p + 1) / 2)
        throw std::invalid_argument("concat: t must satisfy 1 <= t <= (p+1)/2");
    if ((p - t - 1) % 2 != 0)
        throw std::invalid_argument("concat: p - t - 1 must be even");

    double outer_q = std::pow(double(p), double((p - t - 1) / 2)); // outer field size
    double intercept = (double(p - 1 - t) / double(p - 1)) * (1.0 - 1.0 / (outer_q - 1.0));
    double slope = double(p - 1 - t) / (2.0 * double(t));

    BoundCurve c;
    c.name = fmt_name("concat[p=%lld t=%lld]", (long long)p, (long long)t); // no comma: names become CSV headers
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, kInf);
    c.effective_domain = right_open(0.0, intercept / slope);
    c.params = {{"p", double(p)}, {"t", double(t)}, {"intercept", intercept}, {"slope", slope}};
    c.fn = [intercept, slope](double d) {
        double v = intercept - slope * d;
        return v > 0.0 ? v : 0.0;
    };
    return c;
}

double concat_envelope(double delta, std::int64_t p) {
    if (!(delta >= 0.0)) throw std::domain_error("concat_envelope: delta must be >= 0");
    double best = 0.0;
    for (std::int64_t t : concat_admissible_t(p)) best = std::max(best, concat_line(p, t).fn(delta));
    return best;
}

double profile_f(double x, std::int64_t p) {
    SphereTable st = SphereTable::make(p);
    double p2 = double(p) * double(p);
    if (!(x > 0.0) || x > 1.0 + 1e-12 || x < (1.0 / p2) * (1.0 - 1e-12))
        throw std::domain_error("profile_f: argument outside [1/p^2, 1]");
    double t = 1.0 / x;
    t = std::min(std::max(t, 1.0), p2);
    return 0.5 * x * weight_sum_W(t, st);
}

double profile_g(double x) {
    if (!(x > 0.0) || x > 1.0 + 1e-12)
        throw std::domain_error("profile_g: argument outside (0, 1]");
    x = std::min(x, 1.0);
    return ((1.0 - x) / 6.0) * std::sqrt((2.0 - x) / x);
}

DescentDelta descent_delta(double R, double gamma, std::int64_t p) {
    if (!(R >= 0.0)) throw std::domain_error("descent_delta: rate must be >= 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("descent_delta: gamma must be >= 0");
    DescentDelta out;
    out.value = profile_f(R + gamma, p);
    out.approx_floor = profile_g(R + gamma);
    return out;
}

double f_breakpoint(std::int64_t M, std::int64_t p) {
    SphereTable st = SphereTable::make(p);
    if (M < 0 || M > p - 1) throw std::invalid_argument("f_breakpoint: M outside [0, p-1]");
    return double(st.Wb[M]) / (2.0 * double(st.B[M]));
}

double f_inverse(double delta, std::int64_t p) {
    SphereTable st = SphereTable::make(p);
    double p2 = double(p) * double(p);
    double top = double(st.Wb[p - 1]) / (2.0 * p2); // = f(1/p^2)
    // tolerate the endpoint computed the other way round (0.5 * x * W(1/x), one
    // rounding apart), matching the edge slack profile_f itself allows
    if (delta > top && delta <= top * (1.0 + 1e-12)) delta = top;
    if (!(delta >= 0.0 && delta <= top))
        throw std::domain_error("f_inverse: delta outside [0, f(1/p^2)]");

    // segment M covers delta in [Wb[M]/(2 B[M]), Wb[M+1]/(2 B[M+1])]
    std::int64_t M = 0;
    for (std::int64_t m = 1; m <= p - 2; ++m) {
        if (delta >= double(st.Wb[m]) / (2.0 * double(st.B[m]))) M = m; else break;
    }
    std::int64_t denom = (M + 1) * st.B[M] - st.Wb[M]; // > 0
    return (double(M + 1) - 2.0 * delta) / double(denom);
}

double g_inverse(double delta) {
    if (!(delta >= 0.0)) throw std::domain_error("g_inverse: delta must be >= 0");
    if (delta == 0.0) return 1.0;
    // g is strictly decreasing on (0,1] with g(1) = 0, g(0+) = inf
    double hi = 1.0;
    double lo = std::min(1.0, 1.0 / (18.0 * delta * delta)); // small-x asymptote of g
    while (profile_g(lo) < delta) lo *= 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (profile_g(mid) >= delta) lo = mid; else hi = mid;
    }
    return std::abs(profile_g(lo) - delta) <= std::abs(profile_g(hi) - delta) ? lo : hi;
}

namespace {

// Root of x^3 - 4x^2 + (5 + 36 d^2) x - 2 = 0 lying in (0,1], if the closed
// form lands there. Any cubic root in (0,1] is the true g-inverse (on that
// interval the cubic encodes g(x) = delta, not just g(x)^2 = delta^2).
bool cardano_root(double delta, double& out) {
    double d2 = delta * delta;
    double u = 36.0 * d2 - 1.0 / 3.0;         // depressed cubic y^3 + u y + v
    double v = 48.0 * d2 - 2.0 / 27.0;
    // (v/2)^2 + (u/3)^3 expanded to avoid cancellation near its zero
    double disc = d2 * (1728.0 * d2 * d2 + 528.0 * d2 - 4.0 / 3.0);
    double x;
    if (disc >= 0.0) {
        double rt = std::sqrt(disc);
        x = 4.0 / 3.0 + std::cbrt(-0.5 * v + rt) + std::cbrt(-0.5 * v - rt);
    } else { // three real roots; the one at phase +2*pi/3 is the inverse
        double arg = (1.5 * v / u) * std::sqrt(-3.0 / u); // sign of v matters
        arg = std::clamp(arg, -1.0, 1.0);
        const double pi = std::acos(-1.0);
        double y = 2.0 * std::sqrt(-u / 3.0) * std::cos(std::acos(arg) / 3.0 + 2.0 * pi / 3.0);
        x = y + 4.0 / 3.0;
    }
    if (x > 1.0 && x < 1.0 + 1e-9) x = 1.0;
    if (!(x > 0.0) || x > 1.0) return false;
    double resid = ((x - 4.0) * x + (5.0 + 36.0 * d2)) * x - 2.0;
    if (std::abs(resid) > 1e-9 * (1.0 + 36.0 * d2)) return false;
    if (std::abs(profile_g(x) - delta) > 1e-9 * (1.0 + delta)) return false;
    out = x;
    return true;
}

} // namespace

GInverseResult g_inverse_full(double delta) {
    GInverseResult r;
    r.bisect = g_inverse(delta);
    double c;
    if (cardano_root(delta, c)) {
        if (std::abs(c - r.bisect) > 1e-9 * (1.0 + std::abs(r.bisect)))
            throw std::logic_error("g_inverse: closed form and bisection disagree");
        r.cardano = c;
        r.cardano_valid = true;
    } else {
        r.cardano = r.bisect; // fell back to the bisection value
        r.cardano_valid = false;
    }
    return r;
}

double alpha_lee_lower(double delta, std::int64_t p) {
    SphereTable st = SphereTable::make(p);
    if (!(delta >= 0.0)) throw std::domain_error("alpha_lee_lower: delta must be >= 0");
    double gamma = 1.0 / double(p - 1);
    double top = double(st.Wb[p - 1]) / (2.0 * double(p) * double(p));
    double best = 0.0;
    if (delta <= top) best = std::max(best, f_inverse(delta, p) - gamma);
    best = std::max(best, g_inverse(delta) - gamma);
    return best;
}

BoundCurve make_astola_curve(std::int64_t q) {
    double dmax = astola_delta_max(q);
    BoundCurve c;
    c.name = fmt_name("astola[q=%lld]", (long long)q);
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, dmax);
    c.effective_domain = right_open(0.0, dmax); // rate reaches 0 exactly at dmax
    c.params = {{"q", double(q)}};
    c.fn = [q](double d) { return astola_rate(d, q); };
    return c;
}

BoundCurve make_gardy_sole_curve(std::int64_t q) {
    double root = gardy_sole_root(q);
    BoundCurve c;
    c.name = fmt_name("gardy-sole[q=%lld]", (long long)q);
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, root);
    c.effective_domain = right_open(0.0, root);
    c.params = {{"q", double(q)}, {"root", root}};
    c.fn = [q](double d) { return 1.0 - lee_entropy(d, q); };
    return c;
}

static BoundCurve victoria_curve_impl(std::string name, double gamma, double q) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("victoria: gamma must be >= 0");
    BoundCurve c;
    c.name = std::move(name);
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, kInf);
    if (gamma == 0.0)
        c.effective_domain = right_open(0.0, kInf); // value is positive everywhere
    else if (gamma < 1.0)
        c.effective_domain = right_open(0.0, (1.0 - gamma * gamma) / (4.0 * gamma));
    else
        c.effective_domain = Interval::none();
    c.params = {{"gamma", gamma}};
    if (q > 0) c.params.emplace_back("q", q);
    c.fn = [gamma](double d) { return victoria_rate(d, gamma); };
    return c;
}

BoundCurve make_victoria_curve(double gamma) {
    return victoria_curve_impl(fmt_name("victoria[gamma=%.12g]", gamma), gamma, 0.0);
}

BoundCurve make_victoria_curve(const GenusRatio& gr) {
    return victoria_curve_impl(fmt_name("victoria[q=%lld]", (long long)gr.q), gr.gamma, double(gr.q));
}

BoundCurve make_concat_envelope_curve(std::int64_t p) {
    std::vector<BoundCurve> lines;
    double dmax = 0.0;
    for (std::int64_t t : concat_admissible_t(p)) {
        lines.push_back(concat_line(p, t));
        dmax = std::max(dmax, lines.back().effective_domain.hi);
    }
    BoundCurve c;
    c.name = fmt_name("concat-env[p=%lld]", (long long)p);
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, kInf);
    c.effective_domain = right_open(0.0, dmax);
    c.params = {{"p", double(p)}};
    c.fn = [lines](double d) {
        double best = 0.0;
        for (const auto& ln : lines) best = std::max(best, ln.fn(d));
        return best;
    };
    return c;
}

BoundCurve make_descent_curve(std::int64_t p) {
    SphereTable st = SphereTable::make(p);
    double gamma = 1.0 / double(p - 1);
    double top = double(st.Wb[p - 1]) / (2.0 * double(p) * double(p));
    BoundCurve c;
    c.name = fmt_name("descent[p=%lld]", (long long)p);
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, kInf);
    c.effective_domain = right_open(0.0, profile_f(gamma, p)); // rate 0 once f_inverse = gamma
    c.params = {{"p", double(p)}, {"gamma", gamma}};
    c.fn = [p, top, gamma](double d) {
        if (d > top) return 0.0;
        double v = f_inverse(d, p) - gamma;
        return v > 0.0 ? v : 0.0;
    };
    return c;
}

BoundCurve make_asymptote_curve() {
    BoundCurve c;
    c.name = "asymptote";
    c.direction = CurveDirection::delta_to_rate;
    c.domain = closed(0.0, 1.0);
    c.effective_domain = right_open(0.0, 1.0);
    c.params = {};
    c.fn = [](double d) { return 0.5 * (1.0 - d); };
    return c;
}

} // namespace lee
