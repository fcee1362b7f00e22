// Acceptance run: one PASS/FAIL line per criterion, supporting lines indented.

#include "catkit/angled_complex.hpp"
#include "catkit/cli.hpp"
#include "catkit/complex_io.hpp"
#include "catkit/contraction.hpp"
#include "catkit/cube_links.hpp"
#include "catkit/generators.hpp"
#include "catkit/model.hpp"
#include "catkit/oracle.hpp"
#include "catkit/prop2.hpp"
#include "catkit/random.hpp"
#include "catkit/testers.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

using namespace catkit;

namespace {

// Tolerances and budgets.
constexpr double kGbResidualTol = 1e-9;
constexpr double kGbSeconds = 1.0;
constexpr double kOracleRelTol = 1e-12;
constexpr double kTrigTol = 1e-10;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kMinOrder = 0.8;
constexpr double kMaxRelError = 0.02;
constexpr double kExactRel = 1e-12;
constexpr double kConvergenceSeconds = 30.0;
constexpr double kSentinelFraction = 0.10;
constexpr double kContractionSeconds = 120.0;
constexpr double kProp2Tol = 1e-3;
constexpr double kLipschitzMeshFactor = 6.0;

constexpr int kTrigTrials = 1000;
constexpr int kMonotoneTrials = 1000;
constexpr int kShadowTrials = 1000;
constexpr int kContractionTrials = 500;
constexpr int kGraphTrials = 200;
constexpr int kLipschitzPairs = 300;

constexpr double kContractionMesh = 0.1;
constexpr double kLipschitzMesh = 0.1;

// Seeds.
constexpr std::uint64_t kTrigSeed = 101;
constexpr std::uint64_t kMonotoneSeed = 202;
constexpr std::uint64_t kShadowSeed = 303;
constexpr std::uint64_t kContractionSeed = 404;
constexpr std::uint64_t kGraphSeed = 505;
constexpr std::uint64_t kLipschitzSeed = 606;
constexpr std::uint64_t kCliSeed = 707;

// 60-digit mpmath values (tests/oracles/contraction_oracle.py).
struct EtaFixture {
    double epsilon;
    double eta;
    double bound_L1;
    double bound_L3;
};

constexpr EtaFixture kEtaFixtures[] = {
    {0.1, 1258.73067310871093008488429276, 2521.76134621742186016976858553,
     7564.68403865226558050930575658},
    {0.5, 52.3413985640060049985386671837, 110.182797128012009997077334367,
     327.548391384036029991232003102},
    {1.0, 14.5978228667815584988496309721, 36.1956457335631169976992619442,
     102.586937200689350993097785833},
    {2.0, 5.07723785697033225618161274415, 20.1544757139406645123632254883,
     48.4634271418219935370896764649},
};

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
};

std::string num(double x) { return format_number(x); }

std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Location chart_at(const MetricComplex& m, const ModelPoint& p) { return m.chart_locate(p); }

ModelPoint fermi_point(double u, double v) {
    return ModelPoint{Curvature::hyperbolic(),
                      {std::cosh(v) * std::cosh(u), std::cosh(v) * std::sinh(u), std::sinh(v)}};
}

TriangleSides random_sides(std::mt19937_64& rng) {
    const double a = uniform(rng, 0.1, 3.0);
    const double b = uniform(rng, 0.1, 3.0);
    const double c = uniform(rng, std::abs(a - b) + 0.05, a + b - 0.05);
    return {a, b, c};
}

Outcome gauss_bonnet_identity() {
    const auto t0 = std::chrono::steady_clock::now();
    struct Case {
        std::string name;
        AngledComplex complex;
        std::optional<double> expected;
    };
    const Figure3Complex fig3 = gen_figure3();
    std::vector<Case> cases = {
        {"disc", gen_standard(StandardKind::DiscTriangle).base(), 2.0 * kPi},
        {"sphere", gen_standard(StandardKind::SphereTetrahedron).base(), 4.0 * kPi},
        {"torus", gen_standard(StandardKind::FlatTorus).base(), 0.0},
        {"genus-2", gen_surface(2).base(), -4.0 * kPi},
        {"figure-3", fig3.glued.complex.base(), std::nullopt},
    };
    Outcome o{true, "", {}};
    double worst = 0.0;
    for (const Case& c : cases) {
        const CurvatureReport r = gauss_bonnet(c.complex);
        const double expected = c.expected.value_or(2.0 * kPi * r.euler_characteristic);
        const double residual = std::abs(r.total - expected);
        worst = std::max(worst, residual);
        o.pass = o.pass && residual < kGbResidualTol && std::abs(r.residual) < kGbResidualTol;
        o.details.push_back(c.name + ": chi " + std::to_string(r.euler_characteristic) + ", total " +
                            num(r.total) + ", expected " + num(expected) + ", residual " + num(residual));
    }
    const double secs = seconds_since(t0);
    o.pass = o.pass && secs < kGbSeconds;
    o.summary = "Gauss-Bonnet: max |residual| " + short_num(worst) + " < " + short_num(kGbResidualTol) +
                ", runtime " + short_num(secs) + " s < " + short_num(kGbSeconds) + " s";
    return o;
}

Outcome contraction_constants() {
    Outcome o{true, "", {}};
    double worst = 0.0;
    for (const EtaFixture& f : kEtaFixtures) {
        const double e1 = std::abs(eta(f.epsilon) - f.eta) / f.eta;
        const double e2 = std::abs(contraction_bound(f.epsilon, 1.0) - f.bound_L1) / f.bound_L1;
        const double e3 = std::abs(contraction_bound(f.epsilon, 3.0) - f.bound_L3) / f.bound_L3;
        worst = std::max({worst, e1, e2, e3});
        o.details.push_back("eps " + short_num(f.epsilon) + ": eta " + num(eta(f.epsilon)) + ", B(L=1) " +
                            num(contraction_bound(f.epsilon, 1.0)) + ", B(L=3) " +
                            num(contraction_bound(f.epsilon, 3.0)));
    }
    o.pass = worst < kOracleRelTol;
    std::vector<double> grid;
    for (int p = -10; p <= 4; ++p) {
        grid.push_back(std::ldexp(1.0, p));
    }
    int pairs = 0;
    int decreasing = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            ++pairs;
            decreasing += eta(grid[i]) > eta(grid[j]) ? 1 : 0;
        }
    }
    o.pass = o.pass && decreasing == pairs && grid.size() == 15;
    o.details.push_back("eta strictly decreasing on " + std::to_string(pairs) + " of " +
                        std::to_string(pairs) + " pairs: " + (decreasing == pairs ? "yes" : "no"));
    o.summary = "contraction constants: max relative error " + short_num(worst) + " < " +
                short_num(kOracleRelTol) + ", eta monotone on " + std::to_string(grid.size()) +
                "-point grid " + (decreasing == pairs ? "yes" : "no");
    return o;
}

Outcome trig_round_trip() {
    auto rng = trial_rng(kTrigSeed, 0);
    const Curvature h = Curvature::hyperbolic();
    double worst = 0.0;
    for (int i = 0; i < kTrigTrials; ++i) {
        const TriangleSides s = random_sides(rng);
        const TriangleAngles a = comparison_angles(s, h);
        worst = std::max(worst, std::abs(angle_from_angles_and_side(a.alpha, a.beta, s.c, h) - a.gamma));
    }
    return {worst < kTrigTol,
            "hyperbolic trig round trip: " + std::to_string(kTrigTrials) + " triangles, max error " +
                short_num(worst) + " < " + short_num(kTrigTol),
            {}};
}

Outcome comparison_monotonicity() {
    auto rng = trial_rng(kMonotoneSeed, 0);
    int violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kMonotoneTrials; ++i) {
        const TriangleSides s = random_sides(rng);
        const TriangleAngles hyp = comparison_angles(s, Curvature::hyperbolic());
        const TriangleAngles flat = comparison_angles(s, Curvature::flat());
        const double d = std::max({hyp.alpha - flat.alpha, hyp.beta - flat.beta, hyp.gamma - flat.gamma});
        worst = std::max(worst, d);
        violations += d > kMonotoneSlack ? 1 : 0;
    }
    return {violations == 0,
            "comparison monotonicity: " + std::to_string(kMonotoneTrials) + " side triples, " +
                std::to_string(violations) + " violations, max(hyperbolic - flat) " + short_num(worst),
            {}};
}

Outcome shadow_scale_euclidean() {
    const double delta = 1.0;
    const double eps = 0.5;
    const double R = 2.0;
    const ShadowCheckReport r = shadow_scale_euclidean_check(delta, eps, R, kShadowTrials, kShadowSeed);
    return {r.trials == kShadowTrials && r.counterexamples == 0,
            "Euclidean shadow check: k = " + num(shadow_scale(delta, eps)) + ", " + std::to_string(r.trials) +
                " configurations, " + std::to_string(r.counterexamples) + " counterexamples",
            {"worst distance / epsilon " + num(r.worst_ratio)}};
}

// Least-squares slope of log(error) against log(h).
double observed_order(const std::vector<double>& hs, const std::vector<double>& errs) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        mx += std::log(hs[i]);
        my += std::log(errs[i]);
    }
    mx /= static_cast<double>(hs.size());
    my /= static_cast<double>(hs.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        sxy += (std::log(hs[i]) - mx) * (std::log(errs[i]) - my);
        sxx += (std::log(hs[i]) - mx) * (std::log(hs[i]) - mx);
    }
    return sxy / sxx;
}

Outcome mesh_convergence() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> hs = {0.2, 0.1, 0.05};
    struct Bench {
        std::string name;
        MetricComplex m;
        Location a;
        Location b;
        double exact;
    };
    const StripComplex flat = gen_flat_strip(2.0, 0.5, 1.0);
    const StripComplex hyp = gen_hyperbolic_patch(4.0, 1.5);
    const Location ha = chart_at(hyp.complex, fermi_point(-1.7, -1.2));
    const Location hb = chart_at(hyp.complex, fermi_point(1.6, 1.1));
    const std::vector<Bench> benches = {
        {"flat strip", flat.complex, chart_at(flat.complex, ModelPoint::euclidean(0.0, -0.5)),
         chart_at(flat.complex, ModelPoint::euclidean(2.0, 0.5)), std::sqrt(5.0)},
        {"H2 chart", hyp.complex, ha, hb,
         model_distance(fermi_point(-1.7, -1.2), fermi_point(1.6, 1.1))},
    };
    Outcome o{true, "", {}};
    double worst_order = std::numeric_limits<double>::infinity();
    double worst_rel = 0.0;
    for (const Bench& b : benches) {
        std::vector<double> errs;
        std::string line = b.name + " (exact " + num(b.exact) + "):";
        for (double h : hs) {
            const DistanceMesh mesh(b.m, h);
            const double err = std::abs(approx_distance(mesh, b.a, b.b) - b.exact);
            errs.push_back(err);
            line += " h=" + short_num(h) + " err " + short_num(err) + ";";
        }
        const double rel = errs.back() / b.exact;
        worst_rel = std::max(worst_rel, rel);
        const bool exact = std::all_of(errs.begin(), errs.end(), [&](double e) { return e <= kExactRel * b.exact; });
        if (exact) {
            o.pass = o.pass && rel < kMaxRelError;
            o.details.push_back(line + " exact at every h, no order to observe");
            continue;
        }
        const bool decreasing = errs[0] > errs[1] && errs[1] > errs[2] && errs[2] > 0.0;
        const double order = decreasing ? observed_order(hs, errs) : 0.0;
        worst_order = std::min(worst_order, order);
        o.pass = o.pass && decreasing && order >= kMinOrder && rel < kMaxRelError;
        o.details.push_back(line + " order " + short_num(order) + ", relative error at h=0.05 " + short_num(rel));
    }
    const double secs = seconds_since(t0);
    o.pass = o.pass && secs < kConvergenceSeconds;
    o.summary = "mesh convergence: min order " + short_num(worst_order) + " >= " + short_num(kMinOrder) +
                ", max relative error " + short_num(worst_rel) + " < " + short_num(kMaxRelError) +
                ", runtime " + short_num(secs) + " s";
    return o;
}

Outcome contraction_test() {
    const auto t0 = std::chrono::steady_clock::now();
    const StripComplex strip = gen_beaded_strip(5, 3.0, 0.5);
    const MeshOracle oracle(strip.complex, kContractionMesh);
    const ContractionReport r = contraction_diameter_test(oracle, strip.geodesic, kContractionTrials, kContractionSeed);
    const double bound = contraction_bound(0.5, 3.0);
    const double secs = seconds_since(t0);
    int fallbacks = 0;
    for (const auto& t : r.records) {
        fallbacks += t.fallback ? 1 : 0;
    }
    const bool within = r.max_diameter <= bound;
    const bool sentinel = r.max_diameter < kSentinelFraction * bound;
    return {r.trials == kContractionTrials && within && sentinel && secs < kContractionSeconds,
            "contraction test: " + std::to_string(r.trials) + " trials, max diameter " + short_num(r.max_diameter) +
                " <= B = " + short_num(bound) + ", ratio " + short_num(r.max_diameter / bound) + " < " +
                short_num(kSentinelFraction) + ", runtime " + short_num(secs) + " s",
            {"mesh h " + short_num(kContractionMesh) + ", fallback samples " + std::to_string(fallbacks)}};
}

Outcome prop2_certificates() {
    Outcome o{true, "", {}};
    std::string counts;
    std::optional<Prop2Certificate> first;
    for (int n : {1, 2, 4}) {
        const Prop2Instance inst = make_prop2_instance(n, 0.5);
        const ChartOracle oracle(inst.patch.complex);
        const Prop2Certificate cert = build_prop2_certificate(oracle, inst.patch.geodesic, inst.x, inst.y);
        const Prop2Report r = verify_prop2_certificate(cert, kProp2Tol);
        const bool ok = cert.N() == n && r.verdict == Verdict::Pass;
        o.pass = o.pass && ok;
        std::string line = "N=" + std::to_string(n) + ": " + std::to_string(cert.N()) + " qualifying marks, verdict " +
                           to_string(r.verdict);
        for (const CheckResult& c : r.checks) {
            line += "; " + c.name + " " + to_string(c.verdict) + " (margin " + short_num(c.margin) + ")";
        }
        o.details.push_back(line + (ok ? "" : "  <- instance not realized"));
        counts += (counts.empty() ? "" : ", ") + std::to_string(n) + (ok ? " ok" : " FAIL");
        if (!first) {
            first = cert;
        }
    }
    Prop2Certificate faulty = *first;
    faulty.triangles.front().angles[1] += 0.5;
    const Verdict fault = verify_prop2_certificate(faulty, kProp2Tol).verdict;
    o.pass = o.pass && fault == Verdict::Fail;
    o.details.push_back("fault-injected certificate (one angle + 0.5): " + std::string(to_string(fault)));
    o.summary = "prop2 certificates at tol " + short_num(kProp2Tol) + ": N in {" + counts +
                "}, fault detected " + (fault == Verdict::Fail ? "yes" : "no");
    return o;
}

SimplicialLink cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return SimplicialLink(n, edges);
}

bool brute_force_4cycle(const SimplicialLink& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int s[4] = {a, b, c, d};
                    bool two_regular = true;
                    for (int i = 0; i < 4 && two_regular; ++i) {
                        int deg = 0;
                        for (int j = 0; j < 4; ++j) {
                            deg += (i != j && g.adjacent(s[i], s[j])) ? 1 : 0;
                        }
                        two_regular = deg == 2;
                    }
                    if (two_regular) {
                        return true;
                    }
                }
    return false;
}

Outcome cube_links() {
    int agree = 0;
    for (int i = 0; i < kGraphTrials; ++i) {
        auto rng = trial_rng(kGraphSeed, static_cast<std::uint64_t>(i));
        const int n = 1 + uniform_index(rng, 12);
        const double p = uniform(rng, 0.1, 0.9);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (uniform(rng, 0.0, 1.0) < p) {
                    edges.emplace_back(a, b);
                }
            }
        }
        const SimplicialLink g(n, edges);
        agree += has_induced_4cycle(g) == brute_force_4cycle(g) ? 1 : 0;
    }
    std::vector<std::pair<int, int>> k4;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            k4.emplace_back(a, b);
        }
    }
    const bool c4 = has_induced_4cycle(cycle_graph(4));
    const bool K4 = has_induced_4cycle(SimplicialLink(4, k4));
    const bool c5 = has_induced_4cycle(cycle_graph(5));
    const bool fixtures = c4 && !K4 && !c5;
    return {agree == kGraphTrials && fixtures,
            "cube links: " + std::to_string(agree) + " of " + std::to_string(kGraphTrials) +
                " random graphs agree with exhaustive enumeration; C4/K4/C5 -> " + (c4 ? "true" : "false") +
                "/" + (K4 ? "true" : "false") + "/" + (c5 ? "true" : "false"),
            {}};
}

Outcome projection_lipschitz() {
    const StripComplex strip = gen_beaded_strip(5, 3.0, 0.5);
    const MetricComplex& m = strip.complex;
    const MeshOracle oracle(m, kLipschitzMesh);
    const GeodesicPath& path = strip.geodesic.path;
    const double slack = kLipschitzMeshFactor * kLipschitzMesh;
    int violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < kLipschitzPairs; ++i) {
        auto rng = trial_rng(kLipschitzSeed, static_cast<std::uint64_t>(i));
        const Location x = random_location(m, rng);
        const Location y = random_location(m, rng);
        const Projection px = oracle.project(x, path);
        const double dxy = oracle.distance(x, y);
        const Projection py = oracle.project(y, path);
        const double dp = std::abs(px.t - py.t);
        worst = std::max(worst, dp - dxy);
        violations += dp > dxy + slack ? 1 : 0;
    }
    return {violations == 0,
            "projection near-Lipschitz: " + std::to_string(kLipschitzPairs) + " pairs, " +
                std::to_string(violations) + " with d(proj x, proj y) > d(x, y) + " + short_num(slack) +
                ", max excess " + short_num(worst),
            {"mesh h " + short_num(kLipschitzMesh)}};
}

int call(const std::vector<std::string>& args, std::string& out) {
    std::vector<const char*> argv = {"catkit"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream o;
    std::ostringstream e;
    const int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
    out = o.str() + e.str();
    return code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_round_trip() {
    Outcome o{true, "", {}};
    const std::vector<std::string> kinds = {"disc",         "sphere",           "torus",      "surface",
                                            "figure3",      "beaded-strip",     "hyperbolic-patch",
                                            "flat-strip",   "prop2-instance"};
    int identical = 0;
    for (const std::string& kind : kinds) {
        std::string text;
        const int code = call({"generate", kind}, text);
        bool same = false;
        if (code == kExitPass) {
            // The prop2 instance carries a leading comment line.
            const std::string body = text[0] == '#' ? text.substr(text.find('\n') + 1) : text;
            const ComplexDocument doc = parse_complex(body);
            same = serialize_complex(doc) == body && serialize_complex(parse_complex(serialize_complex(doc))) == body;
        }
        identical += same ? 1 : 0;
    }
    o.pass = identical == static_cast<int>(kinds.size());
    o.details.push_back("parse . serialize identity on " + std::to_string(identical) + " of " +
                        std::to_string(kinds.size()) + " generator outputs");

    const auto dir = std::filesystem::temp_directory_path() / "catkit_acceptance";
    std::filesystem::create_directories(dir);
    const std::string strip = (dir / "strip.cx").string();
    std::string ignored;
    call({"generate", "beaded-strip", "--beads", "3", "--output", strip}, ignored);
    const std::string seed = std::to_string(kCliSeed);
    const std::vector<std::vector<std::string>> runs = {
        {"contract-test", strip, "--trials", "25", "--seed", seed},
        {"shadow-k", "--delta", "1", "--eps", "0.5", "--R", "2", "--trials", "200", "--seed", seed},
        {"shadow-k", strip, "--delta", "1.4", "--eps", "0.5", "--R", "1", "--trials", "25", "--seed", seed},
        {"prop2-verify", "--instance", "2"},
        {"gauss-bonnet", strip},
        {"link-check", strip},
    };
    int byte_identical = 0;
    for (const auto& args : runs) {
        std::vector<std::string> a = args;
        std::vector<std::string> b = args;
        const std::string ra = (dir / "a.jsonl").string();
        const std::string rb = (dir / "b.jsonl").string();
        a.insert(a.end(), {"--out", ra});
        b.insert(b.end(), {"--out", rb});
        std::filesystem::remove(ra);
        std::filesystem::remove(rb);
        std::string out_a, out_b;
        const int ca = call(a, out_a);
        const int cb = call(b, out_b);
        const bool same = ca == cb && out_a == out_b && std::filesystem::exists(ra) == std::filesystem::exists(rb) &&
                          slurp(ra) == slurp(rb);
        byte_identical += same ? 1 : 0;
        o.details.push_back(args[0] + " " + (same ? "byte-identical" : "DIFFERS") + " (exit " +
                            std::to_string(ca) + ")");
    }
    std::filesystem::remove_all(dir);
    o.pass = o.pass && byte_identical == static_cast<int>(runs.size());
    o.summary = "CLI round trip and determinism: " + std::to_string(identical) + "/" +
                std::to_string(kinds.size()) + " round trips, " + std::to_string(byte_identical) + "/" +
                std::to_string(runs.size()) + " repeated seeded runs byte-identical";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app("catkit acceptance criteria");
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail; exit 0 iff exactly these fail");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> criteria = {
        gauss_bonnet_identity, contraction_constants, trig_round_trip,  comparison_monotonicity,
        shadow_scale_euclidean,      mesh_convergence,      contraction_test, prop2_certificates,
        cube_links,            projection_lipschitz,  cli_round_trip,
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        if (!o.pass) {
            failed.insert(id);
        }
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << '\n';
        for (const std::string& d : o.details) {
            std::cout << "    " << d << '\n';
        }
        std::cout.flush();
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << (criteria.size() - failed.size()) << " of " << criteria.size() << " criteria pass";
    if (!expected.empty()) {
        std::cout << "; expected failures {";
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            std::cout << (it == expected.begin() ? "" : ", ") << *it;
        }
        std::cout << "} " << (failed == expected ? "match" : "do not match");
    }
    std::cout << '\n';
    return failed == expected ? 0 : 1;
}
