#include "lee/bounds.hpp"
#include "lee/codes.hpp"
#include "lee/compare.hpp"
#include "lee/errors.hpp"
#include "lee/fields.hpp"
#include "lee/lee_metric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

std::int64_t parse_i64(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

double parse_f64(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: " + s);
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_i64(tok));
    if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
    return out;
}

struct GridSpec {
    double lo = 0, hi = 0;
    std::int64_t n = 0;
};

GridSpec parse_grid(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 3) throw std::invalid_argument("grid must be LO:HI:N");
    GridSpec g;
    g.lo = parse_f64(parts[0]);
    g.hi = parse_f64(parts[1]);
    g.n = parse_i64(parts[2]);
    if (g.n < 1) throw std::invalid_argument("grid point count must be >= 1");
    return g;
}

struct CurveSpec {
    std::string name;
    std::map<std::string, double> kv;
};

// "astola:q=25,victoria:q=25" or "concat:p=7,t=2" -- a comma token opens a
// new curve unless it is a bare key=value pair.
std::vector<CurveSpec> parse_curve_specs(const std::vector<std::string>& args) {
    std::vector<CurveSpec> specs;
    for (const auto& arg : args) {
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            auto eq = tok.find('=');
            auto colon = tok.find(':');
            bool new_curve = (eq == std::string::npos) ||
                             (colon != std::string::npos && colon < eq);
            if (new_curve) {
                CurveSpec cs;
                cs.name = (colon == std::string::npos) ? tok : tok.substr(0, colon);
                specs.push_back(std::move(cs));
                if (colon == std::string::npos) continue;
                tok = tok.substr(colon + 1);
                if (tok.empty()) continue;
            }
            if (specs.empty())
                throw std::invalid_argument("curve parameter before any curve name: " + tok);
            auto e2 = tok.find('=');
            if (e2 == std::string::npos)
                throw std::invalid_argument("expected key=value in curve spec: " + tok);
            specs.back().kv[tok.substr(0, e2)] = parse_f64(tok.substr(e2 + 1));
        }
    }
    if (specs.empty()) throw std::invalid_argument("no curves given");
    return specs;
}

lee::BoundCurve curve_from_spec(const CurveSpec& cs) {
    auto geti = [&](const char* k) -> std::int64_t {
        auto it = cs.kv.find(k);
        if (it == cs.kv.end())
            throw std::invalid_argument("curve " + cs.name + " requires parameter " + k);
        return std::llround(it->second);
    };
    if (cs.name == "astola") return lee::make_astola_curve(geti("q"));
    if (cs.name == "gardy-sole") return lee::make_gardy_sole_curve(geti("q"));
    if (cs.name == "victoria") {
        if (cs.kv.count("gamma")) return lee::make_victoria_curve(cs.kv.at("gamma"));
        return lee::make_victoria_curve(lee::genus_ratio_square(geti("q")));
    }
    if (cs.name == "concat") return lee::concat_line(geti("p"), geti("t"));
    if (cs.name == "concat-env") return lee::make_concat_envelope_curve(geti("p"));
    if (cs.name == "descent") return lee::make_descent_curve(geti("p"));
    if (cs.name == "asymptote") return lee::make_asymptote_curve();
    throw std::invalid_argument("unknown curve name: " + cs.name);
}

std::uint64_t default_cap() {
    if (const char* s = std::getenv("LEEBOUND_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (!end || *end != '\0' || v == 0)
            throw std::invalid_argument("LEEBOUND_ENUM_CAP must be a positive integer");
        return v;
    }
    return 100'000'000ULL;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

int print_report(const lee::VerifyReport& rep, bool as_json) {
    if (as_json) {
        std::fputs((lee::report_to_json(rep).dump(2) + "\n").c_str(), stdout);
    } else {
        for (const auto& c : rep.checks)
            std::printf("%s %s measured=%lld bound=%lld margin=%lld\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), (long long)c.measured,
                        (long long)c.bound, (long long)c.margin);
        std::printf("%s: %s\n", rep.family.c_str(),
                    rep.all_pass() ? "all checks passed" : "FAILED");
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower bounds on the minimum Lee distance of long codes: "
                 "curve evaluation, comparisons, and desk-scale verification"};
    app.require_subcommand(1);
    int rc = 0;

    // weights
    auto* w = app.add_subcommand("weights", "Lee weight of a word over Z_q");
    std::int64_t w_q = 0;
    std::string w_word;
    w->add_option("--q", w_q, "alphabet size")->required();
    w->add_option("--word", w_word, "comma-separated symbols in [0,q)")->required();
    w->callback([&] {
        std::printf("%lld\n", (long long)lee::lee_weight_word(parse_int_list(w_word), w_q));
    });

    // sphere-table
    auto* st = app.add_subcommand("sphere-table",
                                  "sphere sizes, ball sizes, and cumulative weights for F_{p^2}");
    std::int64_t st_p = 0;
    st->add_option("--p", st_p, "odd prime")->required();
    st->callback([&] {
        lee::SphereTable t = lee::SphereTable::make(st_p);
        std::printf("M,S,B,W\n");
        for (std::int64_t m = 0; m <= st_p - 1; ++m)
            std::printf("%lld,%lld,%lld,%lld\n", (long long)m, (long long)t.S[m],
                        (long long)t.B[m], (long long)t.Wb[m]);
    });

    // bound
    auto* bd = app.add_subcommand("bound", "evaluate a named lower-bound curve at one delta");
    std::string bd_name;
    std::int64_t bd_q = 0, bd_p = 0, bd_t = 0;
    double bd_gamma = 0, bd_delta = 0;
    bd->add_option("--name", bd_name,
                   "astola|gardy-sole|victoria|concat|concat-env|descent|asymptote")
        ->required();
    auto* bd_qo = bd->add_option("--q", bd_q, "alphabet size");
    auto* bd_po = bd->add_option("--p", bd_p, "prime");
    auto* bd_to = bd->add_option("--t", bd_t, "inner-code parameter");
    auto* bd_go = bd->add_option("--gamma", bd_gamma, "genus-to-length ratio");
    bd->add_option("--delta", bd_delta, "relative Lee distance")->required();
    bd->callback([&] {
        CurveSpec cs;
        cs.name = bd_name;
        if (bd_qo->count()) cs.kv["q"] = double(bd_q);
        if (bd_po->count()) cs.kv["p"] = double(bd_p);
        if (bd_to->count()) cs.kv["t"] = double(bd_t);
        if (bd_go->count()) cs.kv["gamma"] = bd_gamma;
        lee::BoundCurve c = curve_from_spec(cs);
        std::printf("%s\n", fmt_g(c(bd_delta)).c_str());
    });

    // compare
    auto* cm = app.add_subcommand("compare", "tabulate curves over a delta grid");
    std::vector<std::string> cm_curves;
    std::string cm_grid, cm_out, cm_format = "csv";
    cm->add_option("--curves", cm_curves, "curve specs, e.g. astola:q=25,victoria:q=25")
        ->required();
    cm->add_option("--grid", cm_grid, "LO:HI:N")->required();
    cm->add_option("--out", cm_out, "output file (default stdout)");
    cm->add_option("--format", cm_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cm->callback([&] {
        std::vector<lee::BoundCurve> curves;
        for (const auto& cs : parse_curve_specs(cm_curves)) curves.push_back(curve_from_spec(cs));
        GridSpec gs = parse_grid(cm_grid);
        lee::ComparisonGrid grid =
            lee::comparison_grid(curves, lee::linspace(gs.lo, gs.hi, gs.n));
        if (cm_format == "csv") emit(lee::grid_to_csv(grid), cm_out);
        else emit(lee::grid_to_json(grid).dump(2) + "\n", cm_out);
    });

    // delta-q
    auto* dq = app.add_subcommand(
        "delta-q", "crossover of the Astola and Victoria curves per alphabet size");
    std::string dq_list = "25,49,121,169,289,361,529";
    dq->add_option("--q", dq_list, "comma-separated odd prime squares");
    dq->callback([&] {
        std::printf("q,delta_q,delta_q_display\n");
        for (const auto& row : lee::delta_q_table(parse_int_list(dq_list)))
            std::printf("%lld,%s,%s\n", (long long)row.q, fmt_g(row.delta_q).c_str(),
                        row.display.c_str());
    });

    // invert
    auto* iv = app.add_subcommand("invert", "invert the weight-sum profiles f and g");
    std::string iv_which;
    double iv_delta = 0;
    std::int64_t iv_p = 0;
    iv->add_option("--which", iv_which, "f|g")->required()->check(CLI::IsMember({"f", "g"}));
    iv->add_option("--delta", iv_delta, "target value")->required();
    auto* iv_po = iv->add_option("--p", iv_p, "odd prime (required for f)");
    iv->callback([&] {
        if (iv_which == "f") {
            if (!iv_po->count())
                throw std::invalid_argument("invert --which f requires --p");
            std::printf("f_inverse=%s\n", fmt_g(lee::f_inverse(iv_delta, iv_p)).c_str());
        } else {
            lee::GInverseResult r = lee::g_inverse_full(iv_delta);
            std::printf("bisect=%s\n", fmt_g(r.bisect).c_str());
            std::printf("cardano=%s\n", fmt_g(r.cardano).c_str());
            std::printf("cardano_valid=%d\n", r.cardano_valid ? 1 : 0);
            std::printf("diff=%s\n", fmt_g(r.cardano - r.bisect).c_str());
        }
    });

    // verify
    auto* vf = app.add_subcommand("verify", "desk-scale exhaustive checks of the code bounds");
    vf->require_subcommand(1);
    std::uint64_t vf_cap = 0; // 0 = use default/env
    int vf_workers = 1;
    bool vf_json = false;
    vf->add_option("--cap", vf_cap, "enumeration budget (messages)");
    vf->add_option("--workers", vf_workers, "worker threads");
    vf->add_flag("--json", vf_json, "emit the report as JSON");
    auto make_cfg = [&] {
        lee::VerifyConfig cfg;
        cfg.cap = vf_cap ? vf_cap : default_cap();
        cfg.workers = vf_workers;
        return cfg;
    };

    auto* vv = vf->add_subcommand("victorian", "shortened evaluation codes over F_p");
    std::int64_t vv_p = 7, vv_rmax = 0;
    vv->add_option("--p", vv_p, "prime");
    vv->add_option("--rmax", vv_rmax, "largest degree (default: 5 for p=7, else 4)");
    vv->callback([&] {
        std::int64_t rmax = vv_rmax ? vv_rmax : std::min<std::int64_t>(vv_p == 7 ? 5 : 4, vv_p - 2);
        rc = print_report(lee::verify_victorian(vv_p, rmax, make_cfg()), vf_json);
    });

    auto* vd = vf->add_subcommand("descent", "expanded shortened codes F_{p^2} -> F_p");
    std::int64_t vd_p = 3, vd_rmax = 3;
    vd->add_option("--p", vd_p, "base prime");
    vd->add_option("--rmax", vd_rmax, "largest degree");
    vd->callback([&] { rc = print_report(lee::verify_descent(vd_p, vd_rmax, make_cfg()), vf_json); });

    auto* vb = vf->add_subcommand("bch", "inner parity-check codes of length p-1");
    std::int64_t vb_p = 0, vb_t = 0, vb_kmax = 0;
    vb->add_option("--p", vb_p, "prime")->required();
    vb->add_option("--t", vb_t, "designed parameter")->required();
    vb->add_option("--kmax", vb_kmax, "shorten down to this dimension before enumerating");
    vb->callback([&] { rc = print_report(lee::verify_bch(vb_p, vb_t, vb_kmax, make_cfg()), vf_json); });

    auto* vc = vf->add_subcommand("concat", "the [12,4] concatenation over Z_5");
    vc->callback([&] { rc = print_report(lee::verify_concat(make_cfg()), vf_json); });

    // code
    auto* cd = app.add_subcommand("code", "build codes and measure exact distances");
    cd->require_subcommand(1);
    std::string cd_spec, cd_metric = "lee";
    std::uint64_t cd_cap = 0;
    int cd_workers = 1;

    auto* cb = cd->add_subcommand("build", "materialize a code from a construction spec");
    cb->add_option("--spec", cd_spec, "JSON spec file")->required();
    cb->callback([&] {
        std::ifstream f(cd_spec);
        if (!f) throw std::invalid_argument("cannot open spec file: " + cd_spec);
        auto doc = nlohmann::ordered_json::parse(f);
        lee::LinearCode code = lee::build_code(doc);
        std::fputs((lee::code_to_json(code).dump(2) + "\n").c_str(), stdout);
    });

    auto* cdist = cd->add_subcommand("distance", "exhaustive minimum distance of a code");
    cdist->add_option("--spec", cd_spec, "JSON spec file")->required();
    cdist->add_option("--metric", cd_metric, "lee|hamming")
        ->check(CLI::IsMember({"lee", "hamming"}));
    cdist->add_option("--cap", cd_cap, "enumeration budget (messages)");
    cdist->add_option("--workers", cd_workers, "worker threads");
    cdist->callback([&] {
        std::ifstream f(cd_spec);
        if (!f) throw std::invalid_argument("cannot open spec file: " + cd_spec);
        auto doc = nlohmann::ordered_json::parse(f);
        lee::LinearCode code = lee::build_code(doc);
        lee::DistanceOptions opt;
        opt.cap = cd_cap ? cd_cap : default_cap();
        opt.workers = cd_workers;
        std::int64_t d = cd_metric == "lee" ? lee::min_lee_distance_bruteforce(code, opt)
                                            : lee::min_hamming_distance_bruteforce(code, opt);
        std::printf("%lld\n", (long long)d);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lee::resource_error& e) {
        std::fprintf(stderr, "resource error: %s\n", e.what());
        return 4;
    } catch (const lee::construction_error& e) {
        std::fprintf(stderr, "construction failure: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "json error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
