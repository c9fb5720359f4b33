#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "refab/asymptotics.hpp"
#include "refab/cache.hpp"
#include "refab/errors.hpp"
#include "refab/genus_series.hpp"
#include "refab/invariants.hpp"
#include "refab/json_io.hpp"
#include "refab/quasimodular.hpp"
#include "refab/render.hpp"
#include "refab/verify.hpp"

namespace {

using namespace refab;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

struct GlobalOpts {
    std::string format = "text";
    std::string cache_dir;
    unsigned long seed = 20240101;  // reserved; every command here is deterministic
};

BgMethod parse_method(const std::string& name) {
    return name == "oracle" ? BgMethod::oracle : BgMethod::convolution;
}

struct BgOpts {
    long genus = 0;
    long n = 0;
    long det = 0;
    long divisibility = 1;
    bool star = false;
    std::string method = "convolution";
    bool has_n = false;
    bool has_det = false;
};

int run_bg(const BgOpts& o, const GlobalOpts& g) {
    if (o.has_n == o.has_det)
        throw std::invalid_argument("bg: give exactly one target, --n or --det");
    Format fmt = parse_format(g.format);
    DiskCache cache = DiskCache::resolve(g.cache_dir);

    std::string object = o.star ? "bgstar" : "bg";
    std::string key;
    LaurentPoly value;
    if (o.has_n) {
        key = object + "-g" + std::to_string(o.genus) + "-n" + std::to_string(o.n) + "-ifull-" +
              o.method + ".json";
        if (auto hit = cache.get(key)) {
            value = laurent_from_json(Json::parse(*hit));
        } else {
            value = o.star ? bg_star(o.genus, Polarization(1, o.n), parse_method(o.method))
                           : bg_primitive(o.genus, o.n, parse_method(o.method));
            cache.put(key, canonical_dump(to_json(value)));
        }
    } else {
        if (o.divisibility < 1 || o.det < 1)
            throw std::invalid_argument("bg: --det and --divisibility must be positive");
        long rr = o.divisibility * o.divisibility;
        if (o.det % rr != 0)
            throw std::invalid_argument(
                "bg: --det must be divisible by the square of --divisibility");
        Polarization B(o.divisibility, o.det / rr);
        key = object + "-g" + std::to_string(o.genus) + "-n" + std::to_string(o.det) + "-r" +
              std::to_string(o.divisibility) + "-ifull-" + o.method + ".json";
        if (auto hit = cache.get(key)) {
            value = laurent_from_json(Json::parse(*hit));
        } else {
            value = o.star ? bg_star(o.genus, B, parse_method(o.method))
                           : bg_class(o.genus, B, parse_method(o.method));
            cache.put(key, canonical_dump(to_json(value)));
        }
    }
    std::cout << render(value, fmt);
    return exit_ok;
}

struct ArOpts {
    long genus = 0;
    long xmax = 0;
    bool check = false;
};

int run_ar(const ArOpts& o, const GlobalOpts& g) {
    Format fmt = parse_format(g.format);
    DiskCache cache = DiskCache::resolve(g.cache_dir);

    std::string key =
        "ar-g" + std::to_string(o.genus) + "-i" + std::to_string(o.xmax) + "-closed.json";
    ArInvariant inv;
    if (auto hit = cache.get(key)) {
        inv = ar_from_json(Json::parse(*hit));
    } else {
        inv = ar_star_closed(o.genus, o.xmax);
        cache.put(key, canonical_dump(to_json(inv)));
    }
    std::cout << render(inv, fmt);

    if (o.check) {
        for (long i = 0; i <= o.xmax; ++i) {
            NPoly sampled = q_poly_interpolated(o.genus, i);
            if (sampled != inv.by_codegree[static_cast<std::size_t>(i)]) {
                std::cerr << "check: interpolation disagrees at codegree " << i << "\n";
                return exit_verification_failure;
            }
        }
        std::cerr << "check: interpolation agrees on codegrees 0.." << o.xmax << "\n";
    }
    return exit_ok;
}

struct GmOpts {
    long m = 0;
    long order = 0;
    std::string method = "both";
};

int run_gm(const GmOpts& o, const GlobalOpts& g) {
    Format fmt = parse_format(g.format);
    if (o.method != "both") {
        Series s = (o.method == "direct" ? g_m_direct(o.m, o.order) : g_m_closed(o.m, o.order))
                       .series;
        std::cout << render(s, fmt);
        return exit_ok;
    }

    Series direct = g_m_direct(o.m, o.order).series;
    Series closed = g_m_closed(o.m, o.order).series;
    bool agree = direct == closed;
    switch (fmt) {
        case Format::json: {
            Json j;
            j["m"] = o.m;
            j["order"] = o.order;
            j["direct"] = to_json(direct);
            j["closed"] = to_json(closed);
            j["agree"] = agree;
            std::cout << canonical_dump(j);
            break;
        }
        case Format::csv: {
            std::cout << "method,k,num,den\n";
            for (long k = 0; k <= o.order; ++k)
                std::cout << "direct," << k << "," << direct[k].num().get_str() << ","
                          << direct[k].den().get_str() << "\n";
            for (long k = 0; k <= o.order; ++k)
                std::cout << "closed," << k << "," << closed[k].num().get_str() << ","
                          << closed[k].den().get_str() << "\n";
            break;
        }
        default:
            std::cout << "direct: " << render(direct, fmt);
            std::cout << "closed: " << render(closed, fmt);
            std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
    }
    return agree ? exit_ok : exit_verification_failure;
}

struct SeriesInGenusOpts {
    long codegree = 0;
    long n = 0;
    long umax = 12;
    std::string source = "general";
};

int run_series_in_genus(const SeriesInGenusOpts& o, const GlobalOpts& g) {
    Format fmt = parse_format(g.format);
    Series s = genus_gf(o.codegree, o.n, o.umax,
                        o.source == "closed" ? GfSource::closed : GfSource::general);
    std::cout << render(s, fmt, "u");
    return exit_ok;
}

struct VerifyOpts {
    std::string suite = "all";
    long max_genus = 6;
    long max_trunc = 6;
};

int run_verify(const VerifyOpts& o, const GlobalOpts& g) {
    Format fmt = parse_format(g.format);
    std::vector<CheckResult> results = verify_suite(o.suite, {o.max_genus, o.max_trunc});
    bool ok = suite_passed(results);

    switch (fmt) {
        case Format::json: {
            Json arr = Json::array();
            for (const CheckResult& c : results) {
                Json j;
                j["id"] = c.id;
                j["description"] = c.description;
                j["passed"] = c.passed;
                j["informational"] = c.informational;
                j["detail"] = c.detail;
                arr.push_back(std::move(j));
            }
            Json top;
            top["suite"] = o.suite;
            top["passed"] = ok;
            top["checks"] = std::move(arr);
            std::cout << canonical_dump(top);
            break;
        }
        case Format::csv: {
            std::cout << "id,status\n";
            for (const CheckResult& c : results)
                std::cout << c.id << ","
                          << (c.informational ? "info" : (c.passed ? "pass" : "fail")) << "\n";
            break;
        }
        default: {
            for (const CheckResult& c : results) {
                const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
                std::cout << tag << " " << c.id << ": " << c.description << "\n";
                if (!c.detail.empty() && (c.informational || !c.passed)) {
                    std::istringstream lines(c.detail);
                    for (std::string line; std::getline(lines, line);)
                        std::cout << "    " << line << "\n";
                }
            }
            std::cout << (ok ? "suite passed" : "suite FAILED") << "\n";
        }
    }
    return ok ? exit_ok : exit_verification_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined tropical invariants of abelian surfaces: exact computations,"
                 " asymptotic expansions, and verification suites"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex", "csv"}));
    app.add_option("--cache-dir", g.cache_dir,
                   "Cache directory (or set REFINED_CACHE_DIR); empty disables caching");
    app.add_option("--seed", g.seed, "Seed reserved for randomized tooling; commands are "
                                     "deterministic and ignore it");

    BgOpts bg;
    CLI::App* bg_cmd = app.add_subcommand(
        "bg", "Refined invariant of a class: primitive (--n) or general (--det, --divisibility)");
    bg_cmd->fallthrough();
    bg_cmd->add_option("--genus", bg.genus, "Genus, at least 2")->required();
    CLI::Option* bg_n = bg_cmd->add_option("--n", bg.n, "Primitive class: degree n");
    CLI::Option* bg_det = bg_cmd->add_option("--det", bg.det, "Polarization determinant D");
    CLI::Option* bg_div =
        bg_cmd->add_option("--divisibility", bg.divisibility, "Divisibility r (with --det)");
    bg_n->excludes(bg_det);
    bg_n->excludes(bg_div);
    bg_cmd->add_flag("--star", bg.star, "Apply the star normalization det/(g(g-1))");
    bg_cmd->add_option("--method", bg.method, "Computation method")
        ->check(CLI::IsMember({"oracle", "convolution"}));

    ArOpts ar;
    CLI::App* ar_cmd =
        app.add_subcommand("ar", "Asymptotic invariant: codegree polynomials in n");
    ar_cmd->fallthrough();
    ar_cmd->add_option("--genus", ar.genus, "Genus, at least 2")->required();
    ar_cmd->add_option("--xmax", ar.xmax, "Largest codegree to compute")->required();
    ar_cmd->add_flag("--check", ar.check, "Cross-check against stabilized interpolation");

    GmOpts gm;
    CLI::App* gm_cmd = app.add_subcommand("gm", "Quasi-modular series G_m");
    gm_cmd->fallthrough();
    gm_cmd->add_option("--m", gm.m, "Index m")->required();
    gm_cmd->add_option("--order", gm.order, "Truncation order")->required();
    gm_cmd->add_option("--method", gm.method, "direct, closed, or both (compare)")
        ->check(CLI::IsMember({"direct", "closed", "both"}));

    SeriesInGenusOpts sg;
    CLI::App* sg_cmd =
        app.add_subcommand("series-in-genus", "Fixed-codegree generating series in u");
    sg_cmd->fallthrough();
    sg_cmd->add_option("--codegree", sg.codegree, "Codegree i (0, 1 or 2)")->required();
    sg_cmd->add_option("--n", sg.n, "Degree parameter n")->required();
    sg_cmd->add_option("--umax", sg.umax, "Truncation order in u");
    sg_cmd->add_option("--source", sg.source, "closed form or general machinery")
        ->check(CLI::IsMember({"closed", "general"}));

    VerifyOpts vf;
    CLI::App* vf_cmd = app.add_subcommand("verify", "Run verification suites");
    vf_cmd->fallthrough();
    vf_cmd->add_option("--suite", vf.suite, "paper, oracle, or all")
        ->check(CLI::IsMember({"paper", "oracle", "all"}));
    vf_cmd->add_option("--max-genus", vf.max_genus, "Largest genus to verify");
    vf_cmd->add_option("--max-trunc", vf.max_trunc, "Largest codegree/truncation to verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (bg_cmd->parsed()) {
            bg.has_n = bg_n->count() > 0;
            bg.has_det = bg_det->count() > 0;
            return run_bg(bg, g);
        }
        if (ar_cmd->parsed()) return run_ar(ar, g);
        if (gm_cmd->parsed()) return run_gm(gm, g);
        if (sg_cmd->parsed()) return run_series_in_genus(sg, g);
        if (vf_cmd->parsed()) return run_verify(vf, g);
        std::cerr << "no command given\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
}
