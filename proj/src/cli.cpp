#include "catkit/cli.hpp"

#include "catkit/complex_io.hpp"
#include "catkit/contraction.hpp"
#include "catkit/error.hpp"
#include "catkit/generators.hpp"
#include "catkit/oracle.hpp"
#include "catkit/prop2.hpp"
#include "catkit/testers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace catkit {

namespace {

using nlohmann::json;

constexpr double kDefaultMesh = 0.1;

struct Options {
    std::string file;
    double mesh = 0.0;
    int trials = -1;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::string out;

    double eps = 0.0;
    double L = 0.0;
    std::optional<double> R;
    double delta = 0.0;

    std::string from;
    std::string to;
    int instance = 0;
    bool inject_fault = false;

    std::string kind;
    std::string output;
    int genus = 2;
    int beads = 5;
    double length = 6.0;
    double half_width = 1.0;
    double cell = 0.25;
    int marks = 1;
};

void kv(std::ostream& o, const std::string& key, double v) { o << key << ' ' << format_number(v) << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    o << text;
    if (!o) {
        throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    }
}

void write_records(const std::string& path, const std::vector<json>& records) {
    if (path.empty()) {
        return;
    }
    std::string text;
    for (const json& r : records) {
        text += r.dump() + '\n';
    }
    write_text(path, text);
}

json number(double x) { return std::isfinite(x) ? json(x) : json(format_number(x)); }

ComplexDocument load(const std::string& path) { return parse_complex(read_file(path)); }

const MarkedGeodesic& marks_of(const ComplexDocument& doc) {
    if (!doc.geodesic) {
        throw Error(ErrorKind::InvalidInput, "complex file has no marks section");
    }
    return *doc.geodesic;
}

/// "face,w0,w1,w2" or "vertex:N".
Location parse_location(const std::string& text, const MetricComplex& m) {
    if (text.rfind("vertex:", 0) == 0) {
        const int v = std::stoi(text.substr(7));
        if (v < 0 || v >= m.base().vertex_count()) {
            throw Error(ErrorKind::InvalidInput, "vertex out of range in '" + text + "'");
        }
        return m.vertex_location(v);
    }
    std::vector<std::string> parts;
    std::stringstream s(text);
    for (std::string p; std::getline(s, p, ',');) {
        parts.push_back(p);
    }
    if (parts.size() != 4) {
        throw Error(ErrorKind::InvalidInput, "location '" + text + "' is not face,w0,w1,w2");
    }
    Location loc;
    try {
        loc.face = std::stoi(parts[0]);
        double sum = 0.0;
        for (int i = 0; i < 3; ++i) {
            loc.weights[i] = std::stod(parts[i + 1]);
            sum += loc.weights[i];
        }
        if (loc.face < 0 || loc.face >= m.face_count() || !(sum > 0.0) ||
            *std::min_element(loc.weights.begin(), loc.weights.end()) < 0.0) {
            throw std::invalid_argument("range");
        }
        for (double& w : loc.weights) {
            w /= sum;
        }
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidInput, "invalid location '" + text + "'");
    }
    return loc;
}

std::string location_text(const Location& loc) {
    return std::to_string(loc.face) + "," + format_number(loc.weights[0]) + "," +
           format_number(loc.weights[1]) + "," + format_number(loc.weights[2]);
}

/// Mesh oracle when --mesh is given or there is no global chart.
std::unique_ptr<MetricOracle> make_oracle(const MetricComplex& m, double mesh, std::ostream& out) {
    if (mesh > 0.0 || !m.global_chart()) {
        const double h = mesh > 0.0 ? mesh : kDefaultMesh;
        out << "oracle mesh\n";
        kv(out, "h", h);
        return std::make_unique<MeshOracle>(m, h);
    }
    out << "oracle chart\n";
    return std::make_unique<ChartOracle>(m);
}

int cmd_gauss_bonnet(const Options& o, std::ostream& out) {
    const ComplexDocument doc = load(o.file);
    const AngledComplex x = doc.complex.angles_complete() || !doc.edge_lengths ? doc.complex
                                                                               : doc.metric().base();
    const CurvatureReport r = gauss_bonnet(x);
    const double tol = o.tol.value_or(kDefaultTol);
    out << "euler_characteristic " << r.euler_characteristic << '\n';
    kv(out, "total", r.total);
    kv(out, "expected", r.expected_total);
    kv(out, "residual", r.residual);
    const bool pass = std::abs(r.residual) <= tol;
    out << (pass ? "PASS" : "FAIL") << '\n';
    std::vector<json> records;
    for (std::size_t v = 0; v < r.vertex_curvature.size(); ++v) {
        records.push_back({{"vertex", v}, {"kappa", r.vertex_curvature[v]}});
    }
    for (std::size_t f = 0; f < r.face_curvature.size(); ++f) {
        records.push_back({{"face", f}, {"kappa", r.face_curvature[f]}});
    }
    write_records(o.out, records);
    return pass ? kExitPass : kExitFail;
}

int cmd_link_check(const Options& o, std::ostream& out) {
    const ComplexDocument doc = load(o.file);
    const AngledComplex x = doc.complex.angles_complete() || !doc.edge_lengths ? doc.complex
                                                                               : doc.metric().base();
    const auto verdicts = classify_vertices(x, o.tol.value_or(kDefaultTol));
    int cat0 = 0;
    int cat1 = 0;
    std::vector<json> records;
    for (const auto& v : verdicts) {
        out << "vertex " << v.vertex << " girth " << format_number(v.girth) << " locally_cat0 "
            << v.locally_cat0 << " cat_minus1 " << v.cat_minus1 << '\n';
        cat0 += v.locally_cat0 ? 1 : 0;
        cat1 += v.cat_minus1 ? 1 : 0;
        records.push_back({{"vertex", v.vertex},
                           {"girth", number(v.girth)},
                           {"margin", number(v.girth - 2.0 * kPi)},
                           {"locally_cat0", v.locally_cat0},
                           {"cat_minus1", v.cat_minus1}});
    }
    out << "locally_cat0 " << cat0 << " of " << verdicts.size() << '\n';
    out << "cat_minus1 " << cat1 << " of " << verdicts.size() << '\n';
    const bool pass = cat0 == static_cast<int>(verdicts.size());
    out << (pass ? "PASS" : "FAIL") << '\n';
    write_records(o.out, records);
    return pass ? kExitPass : kExitFail;
}

int cmd_eta(const Options& o, std::ostream& out) {
    out << format_number(eta(o.eps)) << '\n';
    return kExitPass;
}

int cmd_bound(const Options& o, std::ostream& out) {
    const double b = o.R ? contraction_bound(ContractionParams{o.eps, o.L, *o.R}) : contraction_bound(o.eps, o.L);
    out << format_number(b) << '\n';
    return kExitPass;
}

int cmd_shadow_k(const Options& o, std::ostream& out) {
    const double k = shadow_scale(o.delta, o.eps);
    if (!o.R) {
        out << format_number(k) << '\n';
        return kExitPass;
    }
    kv(out, "k", k);
    const int trials = o.trials < 0 ? 1000 : o.trials;
    if (o.file.empty()) {
        const ShadowCheckReport r = shadow_scale_euclidean_check(o.delta, o.eps, *o.R, trials, o.seed);
        out << "trials " << r.trials << '\n';
        out << "counterexamples " << r.counterexamples << '\n';
        kv(out, "worst_ratio", r.worst_ratio);
        out << (r.counterexamples == 0 ? "PASS" : "FAIL") << '\n';
        return r.counterexamples == 0 ? kExitPass : kExitFail;
    }
    const ComplexDocument doc = load(o.file);
    const MarkedGeodesic& gamma = marks_of(doc);
    const MetricComplex m = doc.metric();
    const auto oracle = make_oracle(m, o.mesh, out);
    const ShadowLemmaReport r = shadow_lemma_test(*oracle, gamma, k, *o.R, o.eps, trials, o.seed);
    std::vector<json> records;
    for (const ShadowTrial& t : r.records) {
        records.push_back({{"trial", t.trial},
                           {"mark", t.mark},
                           {"o_t", t.o_t},
                           {"y_t", t.y_t},
                           {"xy", t.xy},
                           {"distance", t.distance},
                           {"margin", r.threshold - t.distance},
                           {"counterexample", t.counterexample}});
    }
    out << "trials " << r.trials << '\n';
    out << "counterexamples " << r.counterexamples << '\n';
    kv(out, "worst_distance", r.worst_distance);
    kv(out, "threshold", r.threshold);
    out << (r.counterexamples == 0 ? "PASS" : "FAIL") << '\n';
    write_records(o.out, records);
    return r.counterexamples == 0 ? kExitPass : kExitFail;
}

int cmd_contract_test(const Options& o, std::ostream& out) {
    const ComplexDocument doc = load(o.file);
    const MarkedGeodesic& gamma = marks_of(doc);
    const MetricComplex m = doc.metric();
    const auto oracle = make_oracle(m, o.mesh, out);
    const ContractionReport r =
        contraction_diameter_test(*oracle, gamma, o.trials < 0 ? 500 : o.trials, o.seed);
    int fallbacks = 0;
    std::vector<json> records;
    for (const ContractionTrial& t : r.records) {
        fallbacks += t.fallback ? 1 : 0;
        records.push_back({{"trial", t.trial},
                           {"dx", t.dx},
                           {"dxy", t.dxy},
                           {"tz", t.tz},
                           {"tw", t.tw},
                           {"diameter", t.diameter},
                           {"margin", r.bound - t.diameter},
                           {"fallback", t.fallback}});
    }
    out << "trials " << r.trials << '\n';
    out << "fallbacks " << fallbacks << '\n';
    kv(out, "max_diameter", r.max_diameter);
    kv(out, "bound", r.bound);
    kv(out, "ratio", r.bound > 0.0 ? r.max_diameter / r.bound : 0.0);
    out << (r.within_bound ? "PASS" : "FAIL") << '\n';
    write_records(o.out, records);
    return r.within_bound ? kExitPass : kExitFail;
}

int cmd_prop2_verify(const Options& o, std::ostream& out) {
    MetricComplex m;
    MarkedGeodesic gamma;
    Location x;
    Location y;
    if (o.instance > 0) {
        if (!o.file.empty()) {
            throw Error(ErrorKind::InvalidInput, "give either FILE or --instance");
        }
        const Prop2Instance inst = make_prop2_instance(o.instance, o.eps);
        m = inst.patch.complex;
        gamma = inst.patch.geodesic;
        x = inst.x;
        y = inst.y;
    } else {
        if (o.file.empty() || o.from.empty() || o.to.empty()) {
            throw Error(ErrorKind::InvalidInput, "prop2-verify needs FILE with --x and --y, or --instance");
        }
        const ComplexDocument doc = load(o.file);
        gamma = marks_of(doc);
        m = doc.metric();
        x = parse_location(o.from, m);
        y = parse_location(o.to, m);
    }
    const auto oracle = make_oracle(m, o.mesh, out);
    Prop2Certificate cert = build_prop2_certificate(*oracle, gamma, x, y);
    if (o.inject_fault && !cert.triangles.empty()) {
        cert.triangles.front().angles[1] += 0.5;
        out << "fault injected\n";
    }
    const Prop2Report r = verify_prop2_certificate(cert, o.tol.value_or(1e-3));
    out << "N " << r.N << '\n';
    kv(out, "t_z", cert.t_z);
    kv(out, "t_w", cert.t_w);
    kv(out, "d_x_gamma", cert.d_x_gamma);
    kv(out, "d_xy", cert.d_xy);
    out << "ball_disjoint " << cert.ball_disjoint << '\n';
    out << "collapsed " << cert.collapsed << '\n';
    out << "triangles " << cert.triangles.size() << '\n';
    std::vector<json> records;
    for (const CheckResult& c : r.checks) {
        out << "check " << c.name << ' ' << to_string(c.verdict) << ' ' << format_number(c.value) << ' '
            << format_number(c.bound) << ' ' << format_number(c.margin) << '\n';
        records.push_back({{"check", c.name},
                           {"verdict", to_string(c.verdict)},
                           {"value", number(c.value)},
                           {"bound", number(c.bound)},
                           {"margin", number(c.margin)}});
    }
    bool pass = r.verdict == Verdict::Pass;
    if (o.instance > 0 && r.N != o.instance) {
        out << "instance " << r.N << " of " << o.instance << " marks qualify\n";
        pass = false;
    }
    out << "verdict " << to_string(r.verdict) << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
    write_records(o.out, records);
    return pass ? kExitPass : kExitFail;
}

int cmd_cube_links(const Options& o, std::ostream& out) {
    const ComplexDocument doc = load(o.file);
    if (doc.links.empty()) {
        throw Error(ErrorKind::InvalidInput, "complex file has no links section");
    }
    const CubeLinkReport r = classify_cat_minus1_vertices(doc.links);
    for (const CubeVertexVerdict& v : r.verdicts) {
        out << "vertex " << v.vertex << " cat_minus1 " << v.cat_minus1;
        if (v.witness) {
            const auto& w = *v.witness;
            out << " witness " << w[0] << ' ' << w[1] << ' ' << w[2] << ' ' << w[3];
        }
        out << '\n';
    }
    out << r.cat_minus1_count << " CAT(-1) " << (r.cat_minus1_count == 1 ? "vertex" : "vertices") << '\n';
    if (!r.annotation.empty()) {
        out << "note " << r.annotation << '\n';
    }
    return kExitPass;
}

int cmd_generate(const Options& o, std::ostream& out) {
    std::string prefix;
    ComplexDocument doc;
    if (o.kind == "disc") {
        doc = document_of(gen_standard(StandardKind::DiscTriangle));
    } else if (o.kind == "sphere") {
        doc = document_of(gen_standard(StandardKind::SphereTetrahedron));
    } else if (o.kind == "torus") {
        doc = document_of(gen_standard(StandardKind::FlatTorus));
    } else if (o.kind == "surface") {
        doc = document_of(gen_surface(o.genus));
    } else if (o.kind == "figure3") {
        doc = document_of(gen_figure3().glued.complex);
    } else if (o.kind == "beaded-strip") {
        const StripComplex s = gen_beaded_strip(o.beads, o.L, o.eps);
        doc = document_of(s.complex, s.geodesic);
    } else if (o.kind == "hyperbolic-patch") {
        const StripComplex s = gen_hyperbolic_patch(o.length, o.half_width, o.cell);
        doc = document_of(s.complex, s.geodesic);
    } else if (o.kind == "flat-strip") {
        const StripComplex s = gen_flat_strip(o.length, o.half_width, o.cell);
        doc = document_of(s.complex, s.geodesic);
    } else if (o.kind == "prop2-instance") {
        const Prop2Instance inst = make_prop2_instance(o.marks, o.eps);
        doc = document_of(inst.patch.complex, inst.patch.geodesic);
        prefix = "# --x " + location_text(inst.x) + " --y " + location_text(inst.y) + '\n';
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown kind '" + o.kind + "'");
    }
    const std::string text = prefix + serialize_complex(doc);
    if (o.output.empty()) {
        out << text;
    } else {
        write_text(o.output, text);
    }
    return kExitPass;
}

int cmd_distance(const Options& o, std::ostream& out) {
    const ComplexDocument doc = load(o.file);
    const MetricComplex m = doc.metric();
    const Location p = parse_location(o.from, m);
    const Location q = parse_location(o.to, m);
    const auto oracle = make_oracle(m, o.mesh, out);
    kv(out, "distance", oracle->distance(p, q));
    kv(out, "error_bound", oracle->error_bound());
    return kExitPass;
}

void add_file(CLI::App* c, Options& o, bool required = true) {
    c->add_option("FILE", o.file, "complex file")->required(required);
}

void add_trials(CLI::App* c, Options& o) {
    c->add_option("--trials", o.trials, "number of trials");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--out", o.out, "write JSON lines trial records here");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app("Computations on piecewise constant curvature complexes", "catkit");
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    Options o;

    auto* gb = app.add_subcommand("gauss-bonnet", "Curvature totals against 2 pi chi");
    add_file(gb, o);
    gb->add_option("--tol", o.tol, "residual tolerance (default 1e-9)");
    gb->add_option("--out", o.out, "write per-cell curvature records here");

    auto* lc = app.add_subcommand("link-check", "Link girth at every vertex");
    add_file(lc, o);
    lc->add_option("--tol", o.tol, "girth tolerance (default 1e-9)");
    lc->add_option("--out", o.out, "write per-vertex records here");

    auto* et = app.add_subcommand("eta", "Bound on the number of marks in a certificate");
    et->add_option("--eps", o.eps, "epsilon")->required();

    auto* bd = app.add_subcommand("bound", "Contraction bound B(epsilon, L)");
    bd->add_option("--eps", o.eps, "epsilon")->required();
    bd->add_option("--L", o.L, "maximal gap L")->required();
    bd->add_option("--R", o.R, "minimal gap; validates the parameters");

    auto* sk = app.add_subcommand("shadow-k", "Shadow scale k = delta / epsilon + 1");
    sk->add_option("--delta", o.delta, "delta")->required();
    sk->add_option("--eps", o.eps, "epsilon")->required();
    sk->add_option("--R", o.R, "run the shadow test with this radius");
    add_file(sk, o, false);
    sk->add_option("--mesh", o.mesh, "mesh parameter h");
    add_trials(sk, o);

    auto* ct = app.add_subcommand("contract-test", "Projection diameters of disjoint balls");
    add_file(ct, o);
    ct->add_option("--mesh", o.mesh, "mesh parameter h");
    add_trials(ct, o);

    auto* pv = app.add_subcommand("prop2-verify", "Build and check a comparison-disc certificate");
    add_file(pv, o, false);
    pv->add_option("--x", o.from, "face,w0,w1,w2 or vertex:N");
    pv->add_option("--y", o.to, "face,w0,w1,w2 or vertex:N");
    pv->add_option("--instance", o.instance, "use the constructed instance with N marks");
    pv->add_option("--eps", o.eps, "epsilon of the constructed instance")->default_val(0.5);
    pv->add_option("--mesh", o.mesh, "mesh parameter h");
    pv->add_option("--tol", o.tol, "check tolerance (default 1e-3)");
    pv->add_flag("--inject-fault", o.inject_fault, "perturb one certificate angle");
    pv->add_option("--out", o.out, "write per-check records here");

    auto* cl = app.add_subcommand("cube-links", "CAT(-1) vertices of a cube complex from its links");
    add_file(cl, o);

    auto* gen = app.add_subcommand("generate", "Write a generated complex");
    gen->add_option("KIND", o.kind,
                    "disc, sphere, torus, surface, figure3, beaded-strip, hyperbolic-patch, "
                    "flat-strip, prop2-instance")
        ->required();
    gen->add_option("--output", o.output, "file to write instead of standard output");
    gen->add_option("--genus", o.genus, "surface genus")->default_val(2);
    gen->add_option("--beads", o.beads, "beaded strip bead count")->default_val(5);
    gen->add_option("--L", o.L, "beaded strip mark gap")->default_val(3.0);
    gen->add_option("--eps", o.eps, "epsilon")->default_val(0.5);
    gen->add_option("--length", o.length, "patch length")->default_val(6.0);
    gen->add_option("--half-width", o.half_width, "patch half width")->default_val(1.0);
    gen->add_option("--cell", o.cell, "cell size")->default_val(0.25);
    gen->add_option("--marks", o.marks, "prop2 instance mark count")->default_val(1);

    auto* ds = app.add_subcommand("distance", "Distance between two locations");
    add_file(ds, o);
    ds->add_option("--from", o.from, "face,w0,w1,w2 or vertex:N")->required();
    ds->add_option("--to", o.to, "face,w0,w1,w2 or vertex:N")->required();
    ds->add_option("--mesh", o.mesh, "mesh parameter h");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gb) return cmd_gauss_bonnet(o, out);
        if (*lc) return cmd_link_check(o, out);
        if (*et) return cmd_eta(o, out);
        if (*bd) return cmd_bound(o, out);
        if (*sk) return cmd_shadow_k(o, out);
        if (*ct) return cmd_contract_test(o, out);
        if (*pv) return cmd_prop2_verify(o, out);
        if (*cl) return cmd_cube_links(o, out);
        if (*gen) return cmd_generate(o, out);
        if (*ds) return cmd_distance(o, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace catkit
