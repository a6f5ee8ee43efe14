// Command-line front end: distance queries, verification runs, constants,
// dilatation estimation, boundary-condition checks.
//
// Exit codes: 0 success / all-pass, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypmet/conformal.hpp"
#include "hypmet/harness.hpp"
#include "hypmet/metrics.hpp"
#include "hypmet/numeric.hpp"
#include "hypmet/parallel.hpp"
#include "hypmet/special_domains.hpp"

using namespace hypmet;

namespace {

std::vector<double> parse_csv(const std::string& s, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "cannot parse '" + tok + "' as a number");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty coordinate list");
    return out;
}

Point parse_point(const std::string& s, const std::string& flag) {
    return Point::from_vector(parse_csv(s, flag));
}

// key=value fields separated by ';' after the variant tag
std::map<std::string, std::string> parse_fields(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

Domain parse_domain(const std::string& spec) {
    const std::string flag = "--domain";
    auto colon = spec.find(':');
    std::string tag = spec.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto kv = parse_fields(body);

    if (tag == "strip") return Domain::strip();
    if (tag == "diskslit") return Domain::disk_with_slit();
    if (tag == "halfspace") {
        int n = kv.count("n") ? std::stoi(kv["n"]) : 2;
        return Domain::half_space(n);
    }
    if (tag == "punctured") {
        if (!kv.count("p")) throw CLI::ValidationError(flag, "punctured needs p=<csv>");
        return Domain::punctured_space(parse_point(kv["p"], flag));
    }
    if (tag == "ball" || tag == "ballcomp" || tag == "pball") {
        if (!kv.count("c") || !kv.count("r"))
            throw CLI::ValidationError(flag, tag + " needs c=<csv>;r=<f>");
        Point c = parse_point(kv["c"], flag);
        double r = std::stod(kv["r"]);
        if (tag == "ball") return Domain::ball(c, r);
        if (tag == "ballcomp") return Domain::ball_complement(c, r);
        return Domain::punctured_ball(c, r);
    }
    if (tag == "koch") {
        if (!kv.count("depth")) throw CLI::ValidationError(flag, "koch needs depth=<int>");
        return Domain::koch(std::stoi(kv["depth"]));
    }
    if (tag == "polygon") {
        if (body.empty() || body[0] != '@')
            throw CLI::ValidationError(flag, "polygon needs @<file.csv>");
        std::ifstream f(body.substr(1));
        if (!f) throw CLI::ValidationError(flag, "cannot open " + body.substr(1));
        std::vector<Point> verts;
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            verts.push_back(parse_point(line, flag));
        }
        return Domain::convex_polygon(std::move(verts));
    }
    throw CLI::ValidationError(flag, "unknown domain variant '" + tag + "'");
}

MetricKind parse_metric(const std::string& m) {
    if (m == "rho") return MetricKind::Rho;
    if (m == "j") return MetricKind::J;
    if (m == "jstar") return MetricKind::JStar;
    if (m == "p") return MetricKind::P;
    if (m == "s") return MetricKind::S;
    if (m == "v") return MetricKind::V;
    if (m == "k") return MetricKind::K;
    throw CLI::ValidationError("--metric", "unknown metric '" + m + "'");
}

MapSpec parse_map(const std::string& spec) {
    const std::string flag = "--map";
    auto colon = spec.find(':');
    std::string tag = spec.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto kv = parse_fields(body);
    if (tag == "identity") return MapSpec::identity(2);
    if (tag == "cayley") return MapSpec::cayley_ball_to_halfspace(2);
    if (tag == "cayleyinv") return MapSpec::cayley_halfspace_to_ball(2);
    if (tag == "square") return MapSpec::planar_square();
    if (tag == "mobius") {
        if (!kv.count("a")) throw CLI::ValidationError(flag, "mobius needs a=<csv>");
        Point a = parse_point(kv["a"], flag);
        if (kv.count("rot")) {
            double th = std::stod(kv["rot"]) * kPi / 180.0;
            std::vector<double> rot = {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)};
            return MapSpec::ball_automorphism(a, rot);
        }
        return MapSpec::ball_automorphism(a);
    }
    if (tag == "radial") {
        if (!kv.count("K")) throw CLI::ValidationError(flag, "radial needs K=<f>");
        return MapSpec::radial_stretch(std::stod(kv["K"]), 2);
    }
    throw CLI::ValidationError(flag, "unknown map '" + tag + "'");
}

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string registry_footer() {
    std::string s = "Registry case ids:";
    for (const auto& c : registry()) s += "\n  " + c.id + "  (" + c.anchor + ")";
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic-type metrics: distances, inequality verification, distortion"};
    app.require_subcommand(1);
    app.footer(registry_footer());

    int threads = 0;
    app.add_option("--threads", threads, "cap worker threads (0 = hardware)");

    // ---- dist ----------------------------------------------------------
    auto* dist_cmd = app.add_subcommand("dist", "evaluate one metric for a point pair");
    std::string d_domain, d_metric, d_x, d_y;
    long d_grid = 0;
    int d_resolution = 128, d_refine = 2;
    std::uint64_t d_seed = 42;
    dist_cmd->add_option("--domain", d_domain, "domain spec, e.g. ball:c=0,0;r=1")->required();
    dist_cmd->add_option("--metric", d_metric, "rho|j|jstar|p|s|v|k")->required();
    dist_cmd->add_option("--x", d_x, "first point, csv")->required();
    dist_cmd->add_option("--y", d_y, "second point, csv")->required();
    dist_cmd->add_option("--grid", d_grid, "use the brute-force boundary oracle (s,v)");
    dist_cmd->add_option("--resolution", d_resolution, "k solver base resolution");
    dist_cmd->add_option("--refine", d_refine, "k solver refinement levels");
    dist_cmd->add_option("--seed", d_seed, "seed echoed in the header");

    // ---- verify --------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string v_suite = "all", v_out, v_format = "json", v_seeds;
    long v_samples = 1000;
    std::uint64_t v_seed = 42;
    verify_cmd->add_option("--suite", v_suite,
                           "all|section2|section3|section4|sharpness|<case id>");
    verify_cmd->add_option("--samples", v_samples, "samples per case and domain");
    verify_cmd->add_option("--seed", v_seed, "base seed");
    verify_cmd->add_option("--seeds", v_seeds, "explicit seed list, csv (overrides --seed)");
    verify_cmd->add_option("--out", v_out, "write report to this path");
    verify_cmd->add_option("--format", v_format, "json|csv");

    // ---- constant ------------------------------------------------------
    auto* const_cmd = app.add_subcommand("constant", "print a named constant");
    std::string c_name;
    const_cmd->add_option("name", c_name, "strip-C")->required();

    // ---- dilatation ----------------------------------------------------
    auto* dil_cmd = app.add_subcommand("dilatation", "linear dilatation estimate of a map");
    std::string m_map, m_z, m_radii = "0.01,0.001,0.0001";
    int m_dirs = 720;
    dil_cmd->add_option("--map", m_map, "mobius:a=..|cayley|cayleyinv|radial:K=..|square")
        ->required();
    dil_cmd->add_option("--z", m_z, "evaluation point, csv")->required();
    dil_cmd->add_option("--directions", m_dirs, "direction samples per radius");
    dil_cmd->add_option("--radii", m_radii, "decreasing radii, csv");

    // ---- estimate-delta --------------------------------------------------
    auto* nd_cmd = app.add_subcommand("estimate-delta", "empirical nonlinearity constant");
    std::string nd_domain = "koch:depth=6";
    long nd_trials = 2000;
    std::uint64_t nd_seed = 42;
    nd_cmd->add_option("--domain", nd_domain, "polygonal domain spec");
    nd_cmd->add_option("--trials", nd_trials, "random (z,r,L) draws");
    nd_cmd->add_option("--seed", nd_seed, "seed");

    // ---- check-hdelta ----------------------------------------------------
    auto* hd_cmd = app.add_subcommand("check-hdelta", "exterior-ball condition H(delta)");
    std::string hd_domain;
    double hd_delta = 0.45, hd_rcap = 10.0;
    long hd_trials = 1000;
    std::uint64_t hd_seed = 42;
    hd_cmd->add_option("--domain", hd_domain, "planar domain spec")->required();
    hd_cmd->add_option("--delta", hd_delta, "condition constant, (0,1/2) per the definition");
    hd_cmd->add_option("--trials", hd_trials, "random (z,r) draws");
    hd_cmd->add_option("--seed", hd_seed, "seed");
    hd_cmd->add_option("--rcap", hd_rcap, "radius cap for unbounded domains");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    thread_cap().store(threads);

    try {
        if (*dist_cmd) {
            Domain G = parse_domain(d_domain);
            Point x = parse_point(d_x, "--x");
            Point y = parse_point(d_y, "--y");
            MetricKind kind = parse_metric(d_metric);
            std::printf("# command=dist domain=%s metric=%s x=%s y=%s seed=%llu grid=%ld "
                        "resolution=%d refine=%d threads=%d\n",
                        G.descriptor().c_str(), d_metric.c_str(), d_x.c_str(), d_y.c_str(),
                        static_cast<unsigned long long>(d_seed), d_grid, d_resolution, d_refine,
                        threads);
            if (d_grid > 0 && (kind == MetricKind::S || kind == MetricKind::V)) {
                double v = kind == MetricKind::S ? s_oracle(G, x, y, d_grid)
                                                 : v_oracle(G, x, y, d_grid);
                std::printf("%s\n# oracle lower bound over %ld boundary points\n", g12(v).c_str(),
                            d_grid);
            } else {
                SupSolverConfig sup;
                GeodesicGraphConfig grid;
                grid.base_resolution = d_resolution;
                grid.refinement_levels = d_refine;
                MetricValue m = eval_metric(G, kind, x, y, sup, grid);
                std::printf("%s\n# error_bound=%s\n", g12(m.value).c_str(),
                            g12(m.error_bound).c_str());
            }
            return 0;
        }

        if (*verify_cmd) {
            HarnessConfig cfg;
            cfg.samples = v_samples;
            if (!v_seeds.empty()) {
                cfg.seeds.clear();
                for (double s : parse_csv(v_seeds, "--seeds"))
                    cfg.seeds.push_back(static_cast<std::uint64_t>(s));
            } else {
                cfg.seeds = {v_seed};
            }
            std::printf("# command=verify suite=%s samples=%ld seeds=", v_suite.c_str(),
                        v_samples);
            for (std::size_t i = 0; i < cfg.seeds.size(); ++i)
                std::printf("%s%llu", i ? "," : "",
                            static_cast<unsigned long long>(cfg.seeds[i]));
            std::printf(" format=%s out=%s threads=%d\n", v_format.c_str(),
                        v_out.empty() ? "-" : v_out.c_str(), threads);

            auto reports = run_suite(v_suite, cfg);
            long failed = 0;
            for (const auto& r : reports) {
                if (!r.pass) ++failed;
                std::printf("%-28s %-22s seed=%-6llu samples=%-6ld max_violation=%-14s %s\n",
                            r.case_id.c_str(), r.domain.c_str(),
                            static_cast<unsigned long long>(r.seed), r.samples,
                            g12(r.max_violation).c_str(), r.pass ? "pass" : "FAIL");
            }
            std::printf("# %zu report(s), %ld failing\n", reports.size(), failed);
            if (!v_out.empty()) emit_report(reports, v_format, v_out);
            return failed == 0 ? 0 : 1;
        }

        if (*const_cmd) {
            if (c_name == "strip-C") {
                std::printf("# command=constant name=strip-C\n%s\n",
                            g12(strip_constant()).c_str());
                return 0;
            }
            std::fprintf(stderr, "unknown constant '%s' (try strip-C)\n", c_name.c_str());
            return 2;
        }

        if (*dil_cmd) {
            MapSpec f = parse_map(m_map);
            Point z = parse_point(m_z, "--z");
            std::vector<double> radii = parse_csv(m_radii, "--radii");
            std::printf("# command=dilatation map=%s z=%s directions=%d radii=%s\n",
                        f.descriptor().c_str(), m_z.c_str(), m_dirs, m_radii.c_str());
            DilatationEstimate est = linear_dilatation(f, z, radii, m_dirs);
            for (std::size_t i = 0; i < est.radii.size(); ++i)
                std::printf("# r=%s ratio=%s\n", g12(est.radii[i]).c_str(),
                            g12(est.ratios[i]).c_str());
            std::printf("%s\n# trend_ok=%s\n", g12(est.H).c_str(),
                        est.trend_ok ? "true" : "false");
            return 0;
        }

        if (*nd_cmd) {
            Domain G = parse_domain(nd_domain);
            std::printf("# command=estimate-delta domain=%s trials=%ld seed=%llu\n",
                        G.descriptor().c_str(), nd_trials,
                        static_cast<unsigned long long>(nd_seed));
            double dh = nonlinearity_delta_estimate(G, nd_trials, nd_seed);
            std::printf("%s\n# ESTIMATE: sampling evidence, not a proof\n", g12(dh).c_str());
            return 0;
        }

        if (*hd_cmd) {
            Domain G = parse_domain(hd_domain);
            std::printf("# command=check-hdelta domain=%s delta=%s trials=%ld seed=%llu rcap=%s\n",
                        G.descriptor().c_str(), g12(hd_delta).c_str(), hd_trials,
                        static_cast<unsigned long long>(hd_seed), g12(hd_rcap).c_str());
            auto trials = h_delta_check(G, hd_delta, hd_trials, hd_seed, hd_rcap);
            long fails = 0;
            for (const auto& t : trials) {
                if (t.pass) continue;
                ++fails;
                if (fails <= 10)
                    std::printf("# fail z=%s,%s r=%s margin=%s\n", g12(t.z[0]).c_str(),
                                g12(t.z[1]).c_str(), g12(t.r).c_str(), g12(t.margin).c_str());
            }
            std::printf("pass=%ld fail=%ld verdict=%s\n",
                        static_cast<long>(trials.size()) - fails, fails,
                        fails == 0 ? "pass" : "fail");
            return fails == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
