#include <doctest.h>

#include "lee/codes.hpp"
#include "lee/errors.hpp"
#include "lee/lee_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

using namespace lee;

namespace {

std::vector<std::int64_t> encode(const LinearCode& c, const std::vector<std::int64_t>& msg) {
    REQUIRE(std::int64_t(msg.size()) == c.k);
    std::vector<std::int64_t> out(c.n, 0);
    for (std::int64_t i = 0; i < c.k; ++i)
        for (std::int64_t j = 0; j < c.n; ++j)
            out[j] = c.field.add(out[j], c.field.mul(msg[i], c.G[i][j]));
    return out;
}

// Visit every message of (F_q)^k by plain digit counting, independent of the
// library's enumeration machinery.
template <class F>
void for_each_message(std::int64_t q, std::int64_t k, F&& fn) {
    std::vector<std::int64_t> msg(k, 0);
    while (true) {
        fn(msg);
        std::int64_t i = 0;
        while (i < k && ++msg[i] == q) { msg[i] = 0; ++i; }
        if (i == k) break;
    }
}

std::int64_t oracle_min_lee(const LinearCode& c) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for_each_message(c.field.order, c.k, [&](const std::vector<std::int64_t>& msg) {
        if (std::all_of(msg.begin(), msg.end(), [](std::int64_t v) { return v == 0; })) return;
        const auto cw = encode(c, msg);
        std::int64_t w = 0;
        for (std::int64_t s : cw) w += c.field.lee_weight(s);
        best = std::min(best, w);
    });
    return best;
}

bool is_codeword(const LinearCode& c, const std::vector<std::int64_t>& w) {
    auto rows = c.G;
    rows.push_back(w);
    return matrix_rank(c.field, rows) == c.k;
}

LinearCode full_rs(std::int64_t order, std::int64_t r) {
    EvaluationCodeSpec spec;
    spec.field = FieldSpec::of_order(order);
    for (std::int64_t x = 0; x < order; ++x) spec.eval_points.push_back(x);
    spec.r = r;
    return rs_code(spec);
}

} // namespace

TEST_CASE("evaluation codes have the promised shape and Hamming distance") {
    const LinearCode c = full_rs(7, 1);
    CHECK(c.n == 7);
    CHECK(c.k == 2);
    CHECK(c.G[0] == std::vector<std::int64_t>(7, 1));
    CHECK(c.G[1] == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
    CHECK(min_hamming_distance_bruteforce(c) == 6);

    for (std::int64_t r = 1; r <= 3; ++r)
        CHECK(min_hamming_distance_bruteforce(full_rs(7, r)) == 7 - r);
    const LinearCode c9 = full_rs(9, 2);
    CHECK(c9.n == 9);
    CHECK(c9.k == 3);
    CHECK(min_hamming_distance_bruteforce(c9) == 7);

    EvaluationCodeSpec bad;
    bad.field = FieldSpec::prime(7);
    bad.eval_points = {0, 1, 1};
    bad.r = 1;
    CHECK_THROWS_AS(rs_code(bad), std::invalid_argument);
    bad.eval_points = {0, 1, 9};
    CHECK_THROWS_AS(rs_code(bad), std::invalid_argument);
    bad.eval_points = {0, 1, 2};
    bad.r = 3;
    CHECK_THROWS_AS(rs_code(bad), std::invalid_argument); // dimension would exceed length
    bad.r = 0;
    CHECK_THROWS_AS(rs_code(bad), std::invalid_argument);
}

TEST_CASE("polynomial codewords repeat a value at most deg times") {
    const LinearCode c = full_rs(9, 2);
    for_each_message(9, 3, [&](const std::vector<std::int64_t>& msg) {
        if (msg[1] == 0 && msg[2] == 0) return; // constant words exempt
        const auto cw = encode(c, msg);
        std::map<std::int64_t, int> mult;
        for (std::int64_t s : cw) ++mult[s];
        for (const auto& [sym, cnt] : mult) CHECK(cnt <= 2);
    });
}

TEST_CASE("shortening drops one position and one dimension") {
    const LinearCode c = full_rs(7, 1);
    const LinearCode s = shorten_at(c, 0);
    CHECK(s.n == 6);
    CHECK(s.k == 1);

    const LinearCode c9 = full_rs(9, 2);
    const LinearCode s9 = shorten_at(c9, 0);
    CHECK(s9.n == 8);
    CHECK(s9.k == 2);

    // every shortened word, with a zero re-inserted, is a word of the parent
    // code, and none of the nonzero ones is constant
    for_each_message(9, 2, [&](const std::vector<std::int64_t>& msg) {
        const auto cw = encode(s9, msg);
        std::vector<std::int64_t> lifted;
        lifted.push_back(0);
        lifted.insert(lifted.end(), cw.begin(), cw.end());
        CHECK(is_codeword(c9, lifted));
        if (msg[0] == 0 && msg[1] == 0) return;
        const bool all_zero = std::all_of(cw.begin(), cw.end(),
                                          [](std::int64_t v) { return v == 0; });
        CHECK(!all_zero); // nonzero message -> nonzero word
        const bool constant = std::all_of(cw.begin(), cw.end(),
                                          [&](std::int64_t v) { return v == cw[0]; });
        CHECK(!(constant && cw[0] != 0)); // and never a nonzero constant
    });

    CHECK_THROWS_AS(shorten_at(c, 7), std::invalid_argument);
    CHECK_THROWS_AS(shorten_at(s, 0), std::invalid_argument); // dimension 1
    const LinearCode zcol = LinearCode::make(
        FieldSpec::prime(5), {{1, 0, 0}, {0, 1, 0}}, "literal", nlohmann::ordered_json::object());
    CHECK_THROWS_AS(shorten_at(zcol, 2), construction_error);
}

TEST_CASE("coordinate expansion doubles parameters and preserves Lee weight") {
    const LinearCode c9 = full_rs(9, 2);
    const LinearCode e = expand_code(c9);
    CHECK(e.n == 18);
    CHECK(e.k == 6);
    CHECK(e.field.order == 3);

    const LinearCode s9 = shorten_at(c9, 0); // [8,2] over F_9
    const LinearCode es = expand_code(s9);
    CHECK(es.n == 16);
    CHECK(es.k == 4);
    // message (m0, m1) over F_9 corresponds to coefficient digits
    // (x0, y0, x1, y1) over F_3 under the same basis
    for_each_message(9, 2, [&](const std::vector<std::int64_t>& msg) {
        const auto cw = encode(s9, msg);
        const std::vector<std::int64_t> digits{msg[0] % 3, msg[0] / 3, msg[1] % 3, msg[1] / 3};
        const auto ew = encode(es, digits);
        std::vector<std::int64_t> manual;
        for (std::int64_t s : cw) {
            manual.push_back(s % 3);
            manual.push_back(s / 3);
        }
        CHECK(ew == manual);
        std::int64_t w9 = 0;
        for (std::int64_t s : cw) w9 += s9.field.lee_weight(s);
        CHECK(lee_weight_word(ew, 3) == w9);
    });

    CHECK_THROWS_AS(expand_code(full_rs(7, 1)), std::invalid_argument);
}

TEST_CASE("negacyclic-style inner codes meet their designed Lee distance") {
    const LinearCode c52 = bch_lee_inner(5, 2);
    CHECK(c52.n == 4);
    CHECK(c52.k == 2);
    CHECK(min_lee_distance_bruteforce(c52) == 4);

    const LinearCode c72 = bch_lee_inner(7, 2);
    CHECK(c72.n == 6);
    CHECK(c72.k == 4);
    CHECK(min_lee_distance_bruteforce(c72) == 4);

    const LinearCode c71 = bch_lee_inner(7, 1);
    CHECK(c71.n == 6);
    CHECK(c71.k == 5);
    CHECK(min_lee_distance_bruteforce(c71) == 2);

    const LinearCode c73 = bch_lee_inner(7, 3);
    CHECK(c73.n == 6);
    CHECK(c73.k == 3);
    CHECK(min_lee_distance_bruteforce(c73) == 6);

    // parity checks hold for every codeword: sum_j c_j g^(i*j) = 0, i = 0..t-1
    const FieldSpec f5 = FieldSpec::prime(5);
    const std::int64_t g = c52.params.at("generator_of_units").get<std::int64_t>();
    for_each_message(5, 2, [&](const std::vector<std::int64_t>& msg) {
        const auto cw = encode(c52, msg);
        for (std::int64_t i = 0; i < 2; ++i) {
            std::int64_t acc = 0;
            for (std::int64_t j = 0; j < 4; ++j)
                acc = f5.add(acc, f5.mul(cw[j], f5.pow(g, i * j)));
            CHECK(acc == 0);
        }
    });

    CHECK_THROWS_AS(bch_lee_inner(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(bch_lee_inner(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(bch_lee_inner(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(bch_lee_inner(7, 5), std::invalid_argument);
    CHECK_THROWS_AS(bch_lee_inner(11, 2, true, 1000), resource_error); // certification over cap
}

TEST_CASE("concatenation composes outer and inner codes") {
    EvaluationCodeSpec outer_spec;
    outer_spec.field = FieldSpec::quadratic(5);
    outer_spec.eval_points = {0, 1, 2};
    outer_spec.r = 1;
    const LinearCode outer = rs_code(outer_spec); // [3,2] over F_25
    const LinearCode inner = bch_lee_inner(5, 2); // [4,2] over Z_5

    const LinearCode cat = concatenate({outer, inner});
    CHECK(cat.n == 12);
    CHECK(cat.k == 4);
    CHECK(cat.field.order == 5);

    const std::int64_t d_out = min_hamming_distance_bruteforce(outer);
    const std::int64_t d_in = min_lee_distance_bruteforce(inner);
    const std::int64_t d_cat = min_lee_distance_bruteforce(cat);
    CHECK(d_out == 2);
    CHECK(d_in == 4);
    CHECK(d_cat == 8);
    CHECK(d_cat >= d_out * d_in);

    // with the identity inner code, concatenation is exactly coordinate expansion
    const LinearCode ident = LinearCode::make(FieldSpec::prime(5), {{1, 0}, {0, 1}}, "literal",
                                              nlohmann::ordered_json::object());
    const LinearCode cat_id = concatenate({outer, ident});
    const LinearCode exp = expand_code(outer);
    CHECK(cat_id.G == exp.G);
    CHECK(cat_id.n == exp.n);

    CHECK_THROWS_AS(concatenate({outer, outer}), std::invalid_argument); // inner not prime-field
    const LinearCode wide = LinearCode::make(
        FieldSpec::prime(5), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}, "literal",
        nlohmann::ordered_json::object());
    CHECK_THROWS_AS(concatenate({outer, wide}), std::invalid_argument); // inner dimension 3
    CHECK_THROWS_AS(concatenate({full_rs(7, 1), inner}), std::invalid_argument); // 7 != 5^2
}

TEST_CASE("exhaustive distances agree with a direct enumeration oracle") {
    const LinearCode rep = LinearCode::make(FieldSpec::prime(5), {{1, 1}}, "literal",
                                            nlohmann::ordered_json::object());
    CHECK(min_lee_distance_bruteforce(rep) == 2);
    CHECK(min_hamming_distance_bruteforce(rep) == 2);

    const LinearCode s62 = shorten_at(full_rs(7, 2), 0); // [6,2] over F_7
    CHECK(min_lee_distance_bruteforce(s62) == 8);
    CHECK(min_lee_distance_bruteforce(s62) >= victorian_bound_value(7, 2).ceil());

    // cross-check the scan against the naive oracle, prime and quadratic alike
    const LinearCode c52 = bch_lee_inner(5, 2);
    CHECK(min_lee_distance_bruteforce(c52) == oracle_min_lee(c52));
    const LinearCode s9 = shorten_at(full_rs(9, 2), 0); // [8,2] over F_9
    CHECK(min_lee_distance_bruteforce(s9) == oracle_min_lee(s9));

    // worker count never changes the result
    DistanceOptions one, two, four;
    one.workers = 1;
    two.workers = 2;
    four.workers = 4;
    const LinearCode c72 = bch_lee_inner(7, 2);
    CHECK(min_lee_distance_bruteforce(c72, one) == min_lee_distance_bruteforce(c72, two));
    CHECK(min_lee_distance_bruteforce(c72, one) == min_lee_distance_bruteforce(c72, four));
    CHECK(min_lee_distance_bruteforce(s9, one) == min_lee_distance_bruteforce(s9, four));

    DistanceOptions tiny;
    tiny.cap = 1000;
    CHECK_THROWS_AS(min_lee_distance_bruteforce(c72, tiny), resource_error); // 7^4 > 1000
}

TEST_CASE("closed-form distance guarantees at desk scale") {
    CHECK(victorian_bound_value(7, 2) == Rational(45, 8));
    CHECK(victorian_bound_value(7, 2).ceil() == 6);
    CHECK(victorian_bound_value(7, 1) == Rational(12));
    CHECK_THROWS_AS(victorian_bound_value(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(victorian_bound_value(7, 7), std::invalid_argument);
    CHECK_THROWS_AS(victorian_bound_value(1, 1), std::invalid_argument);

    const DescentBoundValue d92 = descent_bound_value(9, 2, 3);
    CHECK(d92.exact == 7); // 2 * W(4.5) with W(4.5) = 3.5
    CHECK(d92.approx_floor == doctest::Approx(7.0 / 3.0 * std::sqrt(8.0)).epsilon(1e-15));
    CHECK(double(d92.exact) >= d92.approx_floor);

    CHECK(descent_bound_value(9, 9, 3).exact == 0); // length/degree ratio 1
    CHECK(descent_bound_value(9, 1, 3).exact == 12); // full field weight for p=3
    for (std::int64_t r = 1; r <= 9; ++r) {
        const DescentBoundValue v = descent_bound_value(9, r, 3);
        CHECK(double(v.exact) >= v.approx_floor - 1e-12);
    }
    CHECK_THROWS_AS(descent_bound_value(9, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(descent_bound_value(9, 10, 3), std::invalid_argument);
    CHECK_THROWS_AS(descent_bound_value(10, 1, 3), std::invalid_argument); // ratio over p^2
}

TEST_CASE("code documents round-trip through JSON") {
    const LinearCode c = bch_lee_inner(5, 2);
    const auto doc = code_to_json(c);
    CHECK(doc.at("field_order") == 5);
    CHECK(doc.at("n") == 4);
    CHECK(doc.at("k") == 2);
    const LinearCode back = code_from_json(doc);
    CHECK(back.field == c.field);
    CHECK(back.G == c.G);
    CHECK(back.construction == "bch");

    auto broken = doc;
    broken["k"] = 3;
    CHECK_THROWS_AS(code_from_json(broken), std::invalid_argument);
    CHECK_THROWS_AS(code_from_json(nlohmann::ordered_json::object()), std::invalid_argument);

    // rank deficiency is caught at construction
    CHECK_THROWS_AS(LinearCode::make(FieldSpec::prime(5), {{1, 2}, {2, 4}}, "literal",
                                     nlohmann::ordered_json::object()),
                    std::invalid_argument);
    CHECK_THROWS_AS(LinearCode::make(FieldSpec::prime(5), {{1, 5}}, "literal",
                                     nlohmann::ordered_json::object()),
                    std::invalid_argument);
}

TEST_CASE("construction specs build the advertised codes") {
    nlohmann::ordered_json rs_spec;
    rs_spec["construction"] = "rs";
    rs_spec["params"] = {{"field_order", 7}, {"r", 1}};
    const LinearCode c = build_code(rs_spec);
    CHECK(c.n == 7);
    CHECK(c.k == 2);

    rs_spec["shorten"] = {0};
    const LinearCode s = build_code(rs_spec);
    CHECK(s.n == 6);
    CHECK(s.k == 1);

    nlohmann::ordered_json bch_spec;
    bch_spec["construction"] = "bch";
    bch_spec["params"] = {{"p", 5}, {"t", 2}, {"certify", true}};
    CHECK(build_code(bch_spec).n == 4);

    nlohmann::ordered_json cat_spec;
    cat_spec["construction"] = "concat";
    cat_spec["params"]["outer"] = {
        {"construction", "rs"},
        {"params", {{"field_order", 25}, {"r", 1}, {"points", {0, 1, 2}}}}};
    cat_spec["params"]["inner"] = {{"construction", "bch"}, {"params", {{"p", 5}, {"t", 2}}}};
    const LinearCode cat = build_code(cat_spec);
    CHECK(cat.n == 12);
    CHECK(cat.k == 4);

    nlohmann::ordered_json exp_spec;
    exp_spec["construction"] = "expand";
    exp_spec["params"]["of"] = {{"construction", "rs"}, {"params", {{"field_order", 9}, {"r", 2}}}};
    const LinearCode e = build_code(exp_spec);
    CHECK(e.n == 18);
    CHECK(e.k == 6);

    nlohmann::ordered_json lit;
    lit["construction"] = "literal";
    lit["params"] = code_to_json(bch_lee_inner(5, 1));
    CHECK(build_code(lit).n == 4);

    nlohmann::ordered_json bad;
    bad["construction"] = "golay";
    CHECK_THROWS_AS(build_code(bad), std::invalid_argument);
    CHECK_THROWS_AS(build_code(nlohmann::ordered_json::object()), std::invalid_argument);
}
