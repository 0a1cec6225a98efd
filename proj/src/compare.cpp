#include "lee/compare.hpp"

#include "lee/errors.hpp"
#include "lee/lee_metric.hpp"
#include "lee/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace lee {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("grid must be non-empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("grid must be strictly increasing");
}

// NaN when the curve declines to evaluate there
double eval_or_nan(const BoundCurve& c, double x) {
    try {
        return c(x);
    } catch (const std::domain_error&) {
        return kNaN;
    }
}

} // namespace

CrossoverResult crossover(const BoundCurve& a, const BoundCurve& b, double lo, double hi,
                          double tol, int scan_points) {
    if (!(lo < hi)) throw std::invalid_argument("crossover: bracket must satisfy lo < hi");
    if (scan_points < 2) scan_points = 2;
    auto diff = [&](double x) { return a(x) - b(x); };

    // pre-scan: exactly one sign change allowed
    int prev_sign = 0;
    double prev_x = lo;
    int changes = 0;
    double blo = 0.0, bhi = 0.0;
    for (int i = 0; i <= scan_points; ++i) {
        double x = (i == scan_points) ? hi : lo + (hi - lo) * double(i) / double(scan_points);
        double d = diff(x);
        int s = (d > 0.0) - (d < 0.0);
        if (s == 0) continue; // exact tie at a grid point; carry the last sign
        if (prev_sign != 0 && s != prev_sign) {
            ++changes;
            blo = prev_x;
            bhi = x;
        }
        prev_sign = s;
        prev_x = x;
    }
    if (changes == 0)
        throw std::invalid_argument("crossover: no sign change of " + a.name + " - " + b.name +
                                    " in the bracket");
    if (changes > 1)
        throw std::invalid_argument("crossover: multiple sign changes of " + a.name + " - " +
                                    b.name + " in the bracket (ambiguous)");

    double flo = diff(blo);
    int iters = 0;
    while (bhi - blo > tol && iters < 200) {
        double mid = 0.5 * (blo + bhi);
        if (mid <= blo || mid >= bhi) break;
        double fm = diff(mid);
        if (fm == 0.0) {
            blo = bhi = mid;
            break;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            blo = mid;
            flo = fm;
        } else {
            bhi = mid;
        }
        ++iters;
    }

    CrossoverResult r;
    r.curve_a = a.name;
    r.curve_b = b.name;
    r.delta_star = 0.5 * (blo + bhi);
    r.bracket_lo = blo;
    r.bracket_hi = bhi;
    r.iterations = iters;
    r.a_above_left = flo > 0.0;
    return r;
}

std::string round_half_up(double x, int digits) {
    double scale = std::pow(10.0, digits);
    double y = std::floor(x * scale + 0.5) / scale;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, y);
    return std::string(buf);
}

std::vector<DeltaQRow> delta_q_table(const std::vector<std::int64_t>& qs) {
    std::vector<DeltaQRow> rows;
    for (std::int64_t q : qs) {
        std::int64_t root = std::llround(std::sqrt(double(q)));
        if (q < 25 || q % 2 == 0 || root * root != q || !is_prime(root))
            throw std::invalid_argument("delta_q_table: q must be an odd prime square >= 25");
        BoundCurve a = make_astola_curve(q);
        BoundCurve v = make_victoria_curve(genus_ratio_square(q));
        CrossoverResult cr = crossover(a, v, 1e-4, 0.2);
        DeltaQRow row;
        row.q = q;
        row.delta_q = cr.delta_star;
        row.display = round_half_up(cr.delta_star, 4);
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> linspace(double lo, double hi, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("linspace: need at least one point");
    if (n == 1) return {lo};
    if (!(lo < hi)) throw std::invalid_argument("linspace: lo must be < hi");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        xs[std::size_t(i)] = lo + (hi - lo) * double(i) / double(n - 1);
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

ComparisonGrid comparison_grid(const std::vector<BoundCurve>& curves,
                               const std::vector<double>& delta_grid) {
    check_grid(delta_grid);
    ComparisonGrid g;
    g.delta_values = delta_grid;
    for (const auto& c : curves) g.names.push_back(c.name);
    g.values.reserve(delta_grid.size());
    for (double x : delta_grid) {
        std::vector<double> row;
        row.reserve(curves.size());
        for (const auto& c : curves) row.push_back(eval_or_nan(c, x));
        g.values.push_back(std::move(row));
    }
    return g;
}

DominanceReport dominance_scan(const BoundCurve& a, const BoundCurve& b,
                               const std::vector<double>& delta_grid, double eps) {
    check_grid(delta_grid);
    DominanceReport rep;
    bool has_pos = false, has_neg = false;
    bool first = true;
    for (double x : delta_grid) {
        double va = eval_or_nan(a, x);
        double vb = eval_or_nan(b, x);
        if (std::isnan(va) || std::isnan(vb)) continue;
        double d = va - vb;
        if (first) {
            rep.min_diff = rep.max_diff = d;
            first = false;
        } else {
            rep.min_diff = std::min(rep.min_diff, d);
            rep.max_diff = std::max(rep.max_diff, d);
        }
        ++rep.points;
        if (d > eps) has_pos = true;
        if (d < -eps) has_neg = true;
    }
    if (rep.points == 0)
        throw std::invalid_argument("dominance_scan: curves share no grid point");
    if (has_pos && has_neg) rep.outcome = Dominance::crossing;
    else if (has_pos) rep.outcome = Dominance::a_dominates;
    else if (has_neg) rep.outcome = Dominance::b_dominates;
    else rep.outcome = Dominance::tied;
    return rep;
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::vector<std::int64_t> all_points(const FieldSpec& f) {
    std::vector<std::int64_t> pts(std::size_t(f.order));
    for (std::int64_t i = 0; i < f.order; ++i) pts[std::size_t(i)] = i;
    return pts;
}

std::string fmt_check_name(const char* family, std::int64_t a, std::int64_t b) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s[%lld,%lld]", family, (long long)a, (long long)b);
    return std::string(buf);
}

} // namespace

VerifyReport verify_victorian(std::int64_t p, std::int64_t r_max, const VerifyConfig& cfg) {
    if (!is_prime(p)) throw std::invalid_argument("verify_victorian: p must be prime");
    if (r_max < 1 || r_max >= p - 1)
        throw std::invalid_argument("verify_victorian: need 1 <= r_max <= p-2");
    VerifyReport rep;
    rep.family = "victorian";
    FieldSpec f = FieldSpec::prime(p);
    DistanceOptions opt{cfg.cap, cfg.workers};
    for (std::int64_t r = 1; r <= r_max; ++r) {
        LinearCode full = rs_code({f, all_points(f), r}); // [p, r+1]
        LinearCode sh = shorten_at(full, 0);              // [p-1, r]
        std::int64_t d = min_lee_distance_bruteforce(sh, opt);
        Rational bound_rat(p * p - r * r, 4 * r);
        std::int64_t bound = bound_rat.ceil();
        VerifyCheck ck;
        ck.name = fmt_check_name("victorian", p, r);
        ck.measured = d;
        ck.bound = bound;
        ck.margin = d - bound;
        ck.pass = d >= bound;
        ck.detail = {{"n", sh.n},           {"k", sh.k},
                     {"bound_num", bound_rat.num}, {"bound_den", bound_rat.den},
                     {"messages", std::int64_t(std::llround(std::pow(double(p), double(sh.k))))}};
        rep.checks.push_back(std::move(ck));
    }
    return rep;
}

VerifyReport verify_descent(std::int64_t p, std::int64_t r_max, const VerifyConfig& cfg) {
    FieldSpec ext = FieldSpec::quadratic(p);
    std::int64_t n = ext.order; // p^2 evaluation points
    if (r_max < 1 || r_max >= n - 1)
        throw std::invalid_argument("verify_descent: need 1 <= r_max <= p^2 - 2");
    VerifyReport rep;
    rep.family = "descent";
    DistanceOptions opt{cfg.cap, cfg.workers};
    for (std::int64_t r = 1; r <= r_max; ++r) {
        LinearCode full = rs_code({ext, all_points(ext), r}); // [p^2, r+1]
        LinearCode sh = shorten_at(full, 0);                  // [p^2-1, r]
        LinearCode ex = expand_code(sh);                      // [2(p^2-1), 2r]
        std::int64_t d = min_lee_distance_bruteforce(ex, opt);
        DescentBoundValue bv = descent_bound_value(n, r, p); // r * W(p^2 / r)
        VerifyCheck ck;
        ck.name = fmt_check_name("descent", p, r);
        ck.measured = d;
        ck.bound = bv.exact;
        ck.margin = d - bv.exact;
        ck.pass = d >= bv.exact && double(d) >= bv.approx_floor - 1e-9;
        ck.detail = {{"n", ex.n}, {"k", ex.k}, {"floor", bv.approx_floor}};
        rep.checks.push_back(std::move(ck));
    }
    return rep;
}

VerifyReport verify_bch(std::int64_t p, std::int64_t t, std::int64_t k_cap,
                        const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.family = "bch";
    DistanceOptions opt{cfg.cap, cfg.workers};
    // the distance certificate runs on the (possibly shortened) instance below
    LinearCode inner = bch_lee_inner(p, t, /*certify=*/false, cfg.cap);
    bool dim_ok = inner.k >= p - 1 - t;
    LinearCode probe = inner;
    std::int64_t shortened = 0;
    while (k_cap > 0 && probe.k > k_cap) {
        probe = shorten_at(probe, 0);
        ++shortened;
    }
    std::int64_t d = min_lee_distance_bruteforce(probe, opt);
    VerifyCheck ck;
    ck.name = fmt_check_name("bch", p, t);
    ck.measured = d;
    ck.bound = 2 * t;
    ck.margin = d - 2 * t;
    ck.pass = dim_ok && d >= 2 * t;
    ck.detail = {{"n", inner.n},         {"k", inner.k},
                 {"dim_required", p - 1 - t}, {"shortened", shortened},
                 {"probe_n", probe.n},   {"probe_k", probe.k}};
    rep.checks.push_back(std::move(ck));
    return rep;
}

VerifyReport verify_concat(const VerifyConfig& cfg) {
    VerifyReport rep;
    rep.family = "concat";
    DistanceOptions opt{cfg.cap, cfg.workers};

    LinearCode inner = bch_lee_inner(5, 2, /*certify=*/false, cfg.cap); // [4, 2] over Z_5
    FieldSpec f25 = FieldSpec::quadratic(5);
    LinearCode outer = rs_code({f25, {0, 1, 2}, 1}); // [3, 2] over F_25
    LinearCode cat = concatenate({outer, inner});    // [12, 4]

    std::int64_t d_cat = min_lee_distance_bruteforce(cat, opt);
    std::int64_t d_out = min_hamming_distance_bruteforce(outer, opt);
    std::int64_t d_in = min_lee_distance_bruteforce(inner, opt);

    VerifyCheck ck;
    ck.name = "concat[12,4]";
    ck.measured = d_cat;
    ck.bound = d_out * d_in;
    ck.margin = d_cat - ck.bound;
    ck.pass = d_cat >= ck.bound;
    ck.detail = {{"n", cat.n},          {"k", cat.k},      {"outer_hamming", d_out},
                 {"inner_lee", d_in},   {"outer_n", outer.n}, {"outer_k", outer.k},
                 {"inner_n", inner.n},  {"inner_k", inner.k}};
    rep.checks.push_back(std::move(ck));
    return rep;
}

std::vector<VerifyReport> verification_suite(const VerifyConfig& cfg) {
    std::vector<VerifyReport> reports;
    reports.push_back(verify_victorian(7, 5, cfg));
    reports.push_back(verify_victorian(11, 4, cfg));
    reports.push_back(verify_descent(3, 3, cfg));
    VerifyReport bch;
    bch.family = "bch";
    for (auto [p, t, kcap] : {std::tuple<std::int64_t, std::int64_t, std::int64_t>{5, 2, 0},
                              {7, 2, 0},
                              {7, 3, 0},
                              {11, 2, 6}}) {
        VerifyReport one = verify_bch(p, t, kcap, cfg);
        bch.checks.push_back(one.checks.front());
    }
    reports.push_back(std::move(bch));
    reports.push_back(verify_concat(cfg));
    return reports;
}

std::string grid_to_csv(const ComparisonGrid& grid) {
    std::string out = "delta";
    for (const auto& n : grid.names) {
        out += ',';
        out += n;
    }
    out += '\n';
    for (std::size_t i = 0; i < grid.delta_values.size(); ++i) {
        out += fmt_g(grid.delta_values[i]);
        for (double v : grid.values[i]) {
            out += ',';
            if (!std::isnan(v)) out += fmt_g(v);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json grid_to_json(const ComparisonGrid& grid) {
    nlohmann::ordered_json doc;
    doc["delta"] = grid.delta_values;
    nlohmann::ordered_json cols = nlohmann::ordered_json::object();
    for (std::size_t j = 0; j < grid.names.size(); ++j) {
        nlohmann::ordered_json col = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < grid.delta_values.size(); ++i) {
            double v = grid.values[i][j];
            if (std::isnan(v)) col.push_back(nullptr);
            else col.push_back(v);
        }
        cols[grid.names[j]] = std::move(col);
    }
    doc["curves"] = std::move(cols);
    return doc;
}

nlohmann::ordered_json report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["family"] = report.family;
    doc["all_pass"] = report.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json one;
        one["name"] = c.name;
        one["pass"] = c.pass;
        one["measured"] = c.measured;
        one["bound"] = c.bound;
        one["margin"] = c.margin;
        one["detail"] = c.detail;
        checks.push_back(std::move(one));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

} // namespace lee
