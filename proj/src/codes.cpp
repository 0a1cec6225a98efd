#include "lee/codes.hpp"

#include "lee/errors.hpp"
#include "lee/lee_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

namespace lee {

std::int64_t matrix_rank(const FieldSpec& f, std::vector<std::vector<std::int64_t>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr ? rows[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && rows[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[rank], rows[piv]);
        const std::int64_t inv = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < nc; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const std::int64_t c = rows[i][col];
            for (std::size_t j = col; j < nc; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[rank][j]));
        }
        ++rank;
    }
    return std::int64_t(rank);
}

LinearCode LinearCode::make(FieldSpec field, std::vector<std::vector<std::int64_t>> G,
                            std::string construction, nlohmann::ordered_json params) {
    LinearCode c;
    c.field = field;
    c.k = std::int64_t(G.size());
    if (c.k == 0) throw std::invalid_argument("empty generator matrix");
    c.n = std::int64_t(G[0].size());
    for (const auto& row : G) {
        if (std::int64_t(row.size()) != c.n) throw std::invalid_argument("ragged generator matrix");
        for (std::int64_t v : row)
            if (v < 0 || v >= field.order) throw std::invalid_argument("generator entry out of range");
    }
    if (c.k > c.n) throw std::invalid_argument("dimension exceeds length");
    if (matrix_rank(field, G) != c.k) throw std::invalid_argument("generator matrix is rank-deficient");
    c.G = std::move(G);
    c.construction = std::move(construction);
    c.params = std::move(params);
    return c;
}

LinearCode rs_code(const EvaluationCodeSpec& spec) {
    const FieldSpec& f = spec.field;
    const std::int64_t n = std::int64_t(spec.eval_points.size());
    if (n == 0) throw std::invalid_argument("no evaluation points");
    std::set<std::int64_t> distinct(spec.eval_points.begin(), spec.eval_points.end());
    if (std::int64_t(distinct.size()) != n) throw std::invalid_argument("evaluation points must be distinct");
    for (std::int64_t pt : spec.eval_points)
        if (pt < 0 || pt >= f.order) throw std::invalid_argument("evaluation point out of range");
    if (spec.r < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (spec.r >= n) throw std::invalid_argument("degree bound >= length: dimension would exceed length");

    std::vector<std::vector<std::int64_t>> G(spec.r + 1, std::vector<std::int64_t>(n));
    for (std::int64_t j = 0; j < n; ++j) G[0][j] = 1;
    for (std::int64_t i = 1; i <= spec.r; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            G[i][j] = f.mul(G[i - 1][j], spec.eval_points[j]);

    nlohmann::ordered_json params;
    params["field_order"] = f.order;
    params["r"] = spec.r;
    params["points"] = spec.eval_points;
    return LinearCode::make(f, std::move(G), "rs", std::move(params));
}

LinearCode shorten_at(const LinearCode& code, std::int64_t position) {
    if (position < 0 || position >= code.n) throw std::invalid_argument("position out of range");
    if (code.k < 2) throw std::invalid_argument("cannot shorten a code of dimension < 2");
    const FieldSpec& f = code.field;

    std::vector<std::vector<std::int64_t>> rows = code.G;
    std::size_t piv = 0;
    while (piv < rows.size() && rows[piv][position] == 0) ++piv;
    if (piv == rows.size())
        throw construction_error("all codewords are zero at the position; shortening would not drop the dimension");
    std::swap(rows[0], rows[piv]);
    const std::int64_t inv = f.inv(rows[0][position]);
    for (auto& v : rows[0]) v = f.mul(v, inv);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::int64_t c = rows[i][position];
        if (c == 0) continue;
        for (std::int64_t j = 0; j < code.n; ++j)
            rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[0][j]));
    }
    std::vector<std::vector<std::int64_t>> H;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::vector<std::int64_t> row;
        row.reserve(code.n - 1);
        for (std::int64_t j = 0; j < code.n; ++j)
            if (j != position) row.push_back(rows[i][j]);
        H.push_back(std::move(row));
    }
    nlohmann::ordered_json params;
    params["position"] = position;
    params["of"] = code_to_json(code);
    return LinearCode::make(f, std::move(H), "shorten", std::move(params));
}

LinearCode expand_code(const LinearCode& code) {
    const FieldSpec& f = code.field;
    if (f.deg != 2) throw std::invalid_argument("expansion needs a code over a quadratic extension");
    const FieldSpec base = FieldSpec::prime(f.p);
    const std::int64_t alpha = f.p; // index of 0 + 1*alpha

    std::vector<std::vector<std::int64_t>> G;
    G.reserve(2 * code.G.size());
    for (const auto& row : code.G) {
        for (std::int64_t basis = 0; basis < 2; ++basis) {
            std::vector<std::int64_t> out;
            out.reserve(2 * code.n);
            for (std::int64_t z : row) {
                const std::int64_t s = basis == 0 ? z : f.mul(z, alpha);
                out.push_back(s % f.p);
                out.push_back(s / f.p);
            }
            G.push_back(std::move(out));
        }
    }
    nlohmann::ordered_json params;
    params["of"] = code_to_json(code);
    return LinearCode::make(base, std::move(G), "expand", std::move(params));
}

namespace {

// Null-space basis of the t x n parity matrix H over F_p.
std::vector<std::vector<std::int64_t>> null_space(const FieldSpec& f,
                                                  std::vector<std::vector<std::int64_t>> H) {
    const std::int64_t nr = std::int64_t(H.size());
    const std::int64_t nc = std::int64_t(H[0].size());
    std::vector<std::int64_t> pivot_col;
    std::int64_t rank = 0;
    for (std::int64_t col = 0; col < nc && rank < nr; ++col) {
        std::int64_t piv = rank;
        while (piv < nr && H[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(H[rank], H[piv]);
        const std::int64_t inv = f.inv(H[rank][col]);
        for (std::int64_t j = 0; j < nc; ++j) H[rank][j] = f.mul(H[rank][j], inv);
        for (std::int64_t i = 0; i < nr; ++i) {
            if (i == rank || H[i][col] == 0) continue;
            const std::int64_t c = H[i][col];
            for (std::int64_t j = 0; j < nc; ++j)
                H[i][j] = f.sub(H[i][j], f.mul(c, H[rank][j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(nc, false);
    for (std::int64_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (std::int64_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::int64_t> v(nc, 0);
        v[free] = 1;
        for (std::int64_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = f.neg(H[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

LinearCode bch_lee_inner(std::int64_t p, std::int64_t t, bool certify, std::uint64_t cap) {
    if (!is_prime(p) || p < 5) throw std::invalid_argument("p must be a prime >= 5");
    if (t < 1 || t > (p + 1) / 2) throw std::invalid_argument("t out of range [1, (p+1)/2]");
    const FieldSpec f = FieldSpec::prime(p);
    const std::int64_t g = primitive_element(f);
    const std::int64_t n = p - 1;

    // parity rows evaluate c(x) at t consecutive powers of g starting at g^0 = 1.
    // starting at g^1 instead admits short words built from cube roots of unity
    // (e.g. 1 + x^2 + x^4 over Z_7 has Lee weight 3 < 4); the row of ones rules
    // those out because a word of Lee weight w has coordinate sum in [-w, w].
    std::vector<std::vector<std::int64_t>> H(t, std::vector<std::int64_t>(n));
    for (std::int64_t i = 0; i < t; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            H[i][j] = f.pow(g, i * j);

    std::vector<std::vector<std::int64_t>> G = null_space(f, std::move(H));
    if (std::int64_t(G.size()) < n - t)
        throw construction_error("parity checks cut dimension below p-1-t");

    nlohmann::ordered_json params;
    params["p"] = p;
    params["t"] = t;
    params["generator_of_units"] = g;
    LinearCode code = LinearCode::make(f, std::move(G), "bch", std::move(params));

    if (certify) {
        DistanceOptions opt;
        opt.cap = cap;
        const std::int64_t d = min_lee_distance_bruteforce(code, opt);
        if (d < 2 * t)
            throw construction_error("inner code distance certification failed: d_L = " +
                                     std::to_string(d) + " < " + std::to_string(2 * t));
    }
    return code;
}

LinearCode concatenate(const ConcatenationScheme& scheme) {
    const LinearCode& outer = scheme.outer;
    const LinearCode& inner = scheme.inner;
    const FieldSpec& fi = inner.field;
    if (fi.deg != 1) throw std::invalid_argument("inner code must live over a prime field");
    const std::int64_t kin = inner.k;
    if (kin != 1 && kin != 2)
        throw std::invalid_argument("inner dimension must be 1 or 2 (the supported labelings)");

    std::int64_t Q = 1;
    for (std::int64_t i = 0; i < kin; ++i) Q *= fi.order;
    if (outer.field.order != Q)
        throw std::invalid_argument("outer field order must equal q^(inner dimension)");

    const FieldSpec& fo = outer.field;
    const std::int64_t q = fi.order;

    // Z_q-basis of F_Q under the labeling: 1 for kin=1; {1, alpha} for kin=2.
    std::vector<std::int64_t> basis;
    basis.push_back(1);
    if (kin == 2) basis.push_back(q); // index of alpha

    std::vector<std::vector<std::int64_t>> G;
    G.reserve(outer.k * kin);
    for (std::int64_t i = 0; i < outer.k; ++i) {
        for (std::int64_t j = 0; j < kin; ++j) {
            std::vector<std::int64_t> row;
            row.reserve(outer.n * inner.n);
            for (std::int64_t pos = 0; pos < outer.n; ++pos) {
                const std::int64_t sym = fo.mul(basis[j], outer.G[i][pos]);
                // unlabel sym to (Z_q)^kin, then encode with the inner code
                std::vector<std::int64_t> msg;
                msg.push_back(sym % q);
                if (kin == 2) msg.push_back(sym / q);
                for (std::int64_t c = 0; c < inner.n; ++c) {
                    std::int64_t acc = 0;
                    for (std::int64_t m = 0; m < kin; ++m)
                        acc = fi.add(acc, fi.mul(msg[m], inner.G[m][c]));
                    row.push_back(acc);
                }
            }
            G.push_back(std::move(row));
        }
    }
    nlohmann::ordered_json params;
    params["outer"] = code_to_json(outer);
    params["inner"] = code_to_json(inner);
    return LinearCode::make(fi, std::move(G), "concat", std::move(params));
}

namespace {

// Number of messages q^k, or nullopt-like -1 if it exceeds cap.
std::int64_t message_count(std::int64_t q, std::int64_t k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (total > cap / std::uint64_t(q)) return -1;
        total *= std::uint64_t(q);
    }
    return total > cap ? -1 : std::int64_t(total);
}

// Message digits for the odometer scan. Incrementing an element index is only
// field addition of 1 in a prime field, so a degree-2 coordinate is split into
// its two F_p coefficients over the scalar rows G[i] and alpha*G[i]; the span
// and the message count q^k are unchanged, and base-p digit arithmetic then
// matches field arithmetic.
struct ScanPlan {
    std::int64_t base = 0;                       // p
    std::vector<std::vector<std::int64_t>> rows; // k * deg rows over F_p scalars
};

ScanPlan make_scan_plan(const LinearCode& code) {
    ScanPlan plan;
    plan.base = code.field.p;
    const std::int64_t alpha = code.field.p; // index of alpha for deg 2
    for (const auto& row : code.G) {
        plan.rows.push_back(row);
        if (code.field.deg == 2) {
            std::vector<std::int64_t> arow(row.size());
            for (std::size_t j = 0; j < row.size(); ++j)
                arow[j] = code.field.mul(alpha, row[j]);
            plan.rows.push_back(std::move(arow));
        }
    }
    return plan;
}

// Minimum weight over messages with index in [lo, hi), weights taken from wt.
std::int64_t scan_range(const LinearCode& code, const ScanPlan& plan,
                        const std::vector<std::int64_t>& wt, std::int64_t lo, std::int64_t hi) {
    const std::int64_t q = code.field.order;
    const std::int64_t base = plan.base;
    const FieldSpec& f = code.field;
    const std::int64_t nrows = std::int64_t(plan.rows.size());
    std::vector<std::int64_t> digits(nrows, 0);
    std::vector<std::int64_t> cw(code.n, 0);
    std::int64_t m = lo;
    for (std::int64_t i = 0; i < nrows; ++i) {
        digits[i] = m % base;
        m /= base;
        if (digits[i] == 0) continue; // digit < p is the matching subfield scalar
        for (std::int64_t j = 0; j < code.n; ++j)
            cw[j] = f.add(cw[j], f.mul(digits[i], plan.rows[i][j]));
    }
    // addition table: one flat lookup per symbol step
    std::vector<std::int64_t> add(q * q);
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b) add[a * q + b] = f.add(a, b);

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t idx = lo; idx < hi; ++idx) {
        std::int64_t w = 0;
        for (std::int64_t j = 0; j < code.n; ++j) w += wt[cw[j]];
        if (w < best && idx != 0) best = w; // index 0 is the zero message
        // advance the odometer: bumping digit i adds row i once (mod p)
        for (std::int64_t i = 0; i < nrows; ++i) {
            const std::int64_t* row = plan.rows[i].data();
            for (std::int64_t j = 0; j < code.n; ++j) cw[j] = add[cw[j] * q + row[j]];
            if (++digits[i] < base) break;
            digits[i] = 0;
        }
    }
    return best;
}

std::int64_t min_distance(const LinearCode& code, const std::vector<std::int64_t>& wt,
                          const DistanceOptions& opt) {
    if (code.k == 0) throw std::domain_error("no nonzero codewords");
    const std::int64_t total = message_count(code.field.order, code.k, opt.cap);
    if (total < 0)
        throw resource_error("message count q^k exceeds the enumeration cap");
    const ScanPlan plan = make_scan_plan(code);
    const int workers = std::max(1, opt.workers);
    if (workers == 1 || total < 4096) return scan_range(code, plan, wt, 0, total);

    std::vector<std::int64_t> results(workers, std::numeric_limits<std::int64_t>::max());
    std::vector<std::thread> pool;
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = std::min<std::int64_t>(total, w * chunk);
        const std::int64_t hi = std::min<std::int64_t>(total, lo + chunk);
        pool.emplace_back([&, w, lo, hi] { results[w] = scan_range(code, plan, wt, lo, hi); });
    }
    for (auto& th : pool) th.join();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t r : results) best = std::min(best, r);
    return best;
}

} // namespace

std::int64_t min_lee_distance_bruteforce(const LinearCode& code, const DistanceOptions& opt) {
    std::vector<std::int64_t> wt(code.field.order);
    for (std::int64_t s = 0; s < code.field.order; ++s) wt[s] = code.field.lee_weight(s);
    return min_distance(code, wt, opt);
}

std::int64_t min_hamming_distance_bruteforce(const LinearCode& code, const DistanceOptions& opt) {
    std::vector<std::int64_t> wt(code.field.order, 1);
    wt[0] = 0;
    return min_distance(code, wt, opt);
}

Rational victorian_bound_value(std::int64_t n, std::int64_t r) {
    if (n < 2) throw std::invalid_argument("length must be >= 2");
    if (r < 1 || r >= n) throw std::invalid_argument("degree must satisfy 1 <= r < n");
    return Rational(n * n - r * r, 4 * r);
}

DescentBoundValue descent_bound_value(std::int64_t n, std::int64_t r, std::int64_t p) {
    if (r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
    const SphereTable st = SphereTable::make(p);
    if (n > r * p * p) throw std::invalid_argument("n/r exceeds p^2");
    const std::int64_t M = choose_M_frac(n, r, st);
    DescentBoundValue out;
    // r*W(n/r) = r*Wb[M] + (M+1)(n - r*B[M]), an exact integer
    out.exact = r * st.Wb[M] + (M + 1) * (n - r * st.B[M]);
    out.approx_floor = double(n - r) / 3.0 * std::sqrt(double(2 * n - r) / double(r));
    return out;
}

nlohmann::ordered_json code_to_json(const LinearCode& code) {
    nlohmann::ordered_json doc;
    doc["field_order"] = code.field.order;
    doc["n"] = code.n;
    doc["k"] = code.k;
    doc["generator"] = code.G;
    doc["provenance"] = {{"construction", code.construction}, {"params", code.params}};
    return doc;
}

LinearCode code_from_json(const nlohmann::ordered_json& doc) {
    if (!doc.contains("field_order") || !doc.contains("generator"))
        throw std::invalid_argument("code document needs field_order and generator");
    const FieldSpec f = FieldSpec::of_order(doc.at("field_order").get<std::int64_t>());
    auto G = doc.at("generator").get<std::vector<std::vector<std::int64_t>>>();
    std::string construction = "literal";
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (doc.contains("provenance")) {
        const auto& prov = doc.at("provenance");
        if (prov.contains("construction")) construction = prov.at("construction").get<std::string>();
        if (prov.contains("params")) params = prov.at("params");
    }
    LinearCode code = LinearCode::make(f, std::move(G), std::move(construction), std::move(params));
    if (doc.contains("n") && doc.at("n").get<std::int64_t>() != code.n)
        throw std::invalid_argument("declared n does not match the generator matrix");
    if (doc.contains("k") && doc.at("k").get<std::int64_t>() != code.k)
        throw std::invalid_argument("declared k does not match the generator matrix");
    return code;
}

LinearCode build_code(const nlohmann::ordered_json& spec) {
    if (spec.contains("generator")) return code_from_json(spec); // already a code document
    if (!spec.contains("construction")) throw std::invalid_argument("spec needs a construction field");
    const std::string kind = spec.at("construction").get<std::string>();
    const nlohmann::ordered_json params =
        spec.contains("params") ? spec.at("params") : nlohmann::ordered_json::object();

    LinearCode code = [&]() -> LinearCode {
        if (kind == "rs") {
            EvaluationCodeSpec es;
            es.field = FieldSpec::of_order(params.at("field_order").get<std::int64_t>());
            es.r = params.at("r").get<std::int64_t>();
            if (params.contains("points"))
                es.eval_points = params.at("points").get<std::vector<std::int64_t>>();
            else
                for (std::int64_t x = 0; x < es.field.order; ++x) es.eval_points.push_back(x);
            return rs_code(es);
        }
        if (kind == "bch") {
            const bool certify = params.contains("certify") ? params.at("certify").get<bool>() : true;
            return bch_lee_inner(params.at("p").get<std::int64_t>(),
                                 params.at("t").get<std::int64_t>(), certify);
        }
        if (kind == "expand") return expand_code(build_code(params.at("of")));
        if (kind == "concat")
            return concatenate({build_code(params.at("outer")), build_code(params.at("inner"))});
        if (kind == "literal") return code_from_json(params);
        throw std::invalid_argument("unknown construction: " + kind);
    }();

    if (spec.contains("shorten"))
        for (std::int64_t pos : spec.at("shorten").get<std::vector<std::int64_t>>())
            code = shorten_at(code, pos);
    return code;
}

} // namespace lee
