#include "catkit/complex_io.hpp"

#include "catkit/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace catkit {

namespace {

constexpr const char* kHeader = "catkit-complex";
constexpr int kVersion = 1;

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

[[noreturn]] void fail_at(int line, int column, const std::string& what) {
    throw Error(ErrorKind::Parse,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

[[noreturn]] void fail_at(const Token& t, const std::string& what) { fail_at(t.line, t.column, what); }

class Lexer {
public:
    explicit Lexer(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            last_line_ = line;
            if (const auto hash = raw.find('#'); hash != std::string::npos) {
                raw.resize(hash);
            }
            std::vector<Token> tokens;
            std::size_t i = 0;
            while (i < raw.size()) {
                while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
                    ++i;
                }
                const std::size_t start = i;
                while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
                    ++i;
                }
                if (i > start) {
                    tokens.push_back({raw.substr(start, i - start), line, static_cast<int>(start) + 1});
                }
            }
            if (!tokens.empty()) {
                lines_.push_back(std::move(tokens));
            }
        }
    }

    bool done() const { return pos_ >= lines_.size(); }
    const std::vector<Token>& peek() const { return lines_[pos_]; }

    const std::vector<Token>& next(const std::string& expected) {
        if (done()) {
            fail_at(last_line_ + 1, 1, "unexpected end of file, expected " + expected);
        }
        return lines_[pos_++];
    }

private:
    std::vector<std::vector<Token>> lines_;
    std::size_t pos_ = 0;
    int last_line_ = 0;
};

double to_double(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        fail_at(t, "expected a number, got '" + t.text + "'");
    }
    return value;
}

long to_int(const Token& t, long lo, long hi) {
    long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        fail_at(t, "expected an integer, got '" + t.text + "'");
    }
    if (value < lo || value > hi) {
        fail_at(t, "value " + t.text + " out of range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    return value;
}

void expect_arity(const std::vector<Token>& line, std::size_t n, const std::string& what) {
    if (line.size() != n) {
        const Token& at = line.size() > n ? line[n] : line.back();
        fail_at(at, what + " takes " + std::to_string(n) + " fields, got " +
                        std::to_string(line.size()));
    }
}

int section_count(const std::vector<Token>& line, const std::string& name) {
    expect_arity(line, 2, name);
    return static_cast<int>(to_int(line[1], 0, 100000000));
}

Curvature to_kappa(const Token& t) {
    const double k = to_double(t);
    if (k > 0.0) {
        fail_at(t, "curvature must be <= 0");
    }
    return Curvature(k);
}

ModelPoint to_point(const std::vector<Token>& line, std::size_t at, Curvature kappa) {
    return ModelPoint{kappa, {to_double(line[at]), to_double(line[at + 1]), to_double(line[at + 2])}};
}

struct Sections {
    int vertices = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<std::optional<Curvature>> kappa;
    std::vector<FaceAngles> angles;
    std::optional<std::vector<double>> lengths;
    std::optional<std::vector<ModelPoint>> chart;
    std::optional<MarkedGeodesic> geodesic;
    std::map<int, SimplicialLink> links;
};

void parse_edges(Lexer& lex, const std::vector<Token>& head, Sections& s) {
    const int m = section_count(head, "edges");
    for (int i = 0; i < m; ++i) {
        const auto& line = lex.next("edge");
        expect_arity(line, 2, "edge");
        const int hi = std::max(0, s.vertices - 1);
        s.edges.push_back({static_cast<int>(to_int(line[0], 0, hi)),
                           static_cast<int>(to_int(line[1], 0, hi))});
    }
}

void parse_faces(Lexer& lex, const std::vector<Token>& head, Sections& s) {
    const int f = section_count(head, "faces");
    for (int i = 0; i < f; ++i) {
        const auto& line = lex.next("face");
        Face face;
        std::optional<Curvature> kappa;
        for (std::size_t k = 0; k < line.size(); ++k) {
            const Token& t = line[k];
            if (t.text == "kappa") {
                if (k + 2 != line.size()) {
                    fail_at(t, "kappa must be the last field of a face");
                }
                kappa = to_kappa(line[k + 1]);
                break;
            }
            if (t.text.size() < 2 || (t.text[0] != '+' && t.text[0] != '-')) {
                fail_at(t, "expected a signed edge index like +3 or -3");
            }
            const Token digits{t.text.substr(1), t.line, t.column + 1};
            const long e = to_int(digits, 0, std::max<long>(0, static_cast<long>(s.edges.size()) - 1));
            face.boundary.push_back({static_cast<EdgeId>(e), t.text[0] == '-'});
        }
        if (face.boundary.empty()) {
            fail_at(line[0], "face without edges");
        }
        s.faces.push_back(face);
        s.kappa.push_back(kappa);
    }
}

void parse_angles(Lexer& lex, Sections& s) {
    for (const Face& face : s.faces) {
        const auto& line = lex.next("corner angles");
        expect_arity(line, face.size(), "corner angle line");
        FaceAngles angles;
        for (const Token& t : line) {
            angles.push_back(t.text == "-" ? std::nullopt : std::optional<double>(to_double(t)));
        }
        s.angles.push_back(angles);
    }
}

void parse_lengths(Lexer& lex, Sections& s) {
    std::vector<double> lengths;
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        const auto& line = lex.next("edge length");
        expect_arity(line, 1, "edge length");
        const double len = to_double(line[0]);
        if (!(len > 0.0)) {
            fail_at(line[0], "edge " + std::to_string(e) + " has non-positive length");
        }
        lengths.push_back(len);
    }
    s.lengths = std::move(lengths);
}

void parse_chart(Lexer& lex, const std::vector<Token>& head, Sections& s) {
    const int n = section_count(head, "chart");
    if (n != s.vertices) {
        fail_at(head[1], "chart needs one point per vertex");
    }
    std::vector<ModelPoint> chart;
    for (int i = 0; i < n; ++i) {
        const auto& line = lex.next("chart point");
        expect_arity(line, 4, "chart point");
        chart.push_back(to_point(line, 1, to_kappa(line[0])));
    }
    s.chart = std::move(chart);
}

void parse_marks(Lexer& lex, Sections& s) {
    MarkedGeodesic g;
    auto line = lex.next("params");
    if (line[0].text != "params") {
        fail_at(line[0], "expected 'params'");
    }
    expect_arity(line, 4, "params");
    g.params = {to_double(line[1]), to_double(line[2]), to_double(line[3])};
    line = lex.next("length");
    if (line[0].text != "length") {
        fail_at(line[0], "expected 'length'");
    }
    expect_arity(line, 2, "length");
    g.path.length = to_double(line[1]);
    line = lex.next("mesh");
    if (line[0].text != "mesh") {
        fail_at(line[0], "expected 'mesh'");
    }
    expect_arity(line, 2, "mesh");
    g.path.mesh = to_double(line[1]);
    line = lex.next("legs");
    if (line[0].text != "legs") {
        fail_at(line[0], "expected 'legs'");
    }
    const int k = section_count(line, "legs");
    for (int i = 0; i < k; ++i) {
        const auto& leg = lex.next("leg");
        expect_arity(leg, 9, "leg");
        const int face = static_cast<int>(
            to_int(leg[0], kGlobalChart, std::max<long>(0, static_cast<long>(s.faces.size()) - 1)));
        const Curvature kappa = to_kappa(leg[1]);
        g.path.legs.push_back({face, to_point(leg, 2, kappa), to_point(leg, 5, kappa), to_double(leg[8])});
    }
    line = lex.next("t");
    if (line[0].text != "t") {
        fail_at(line[0], "expected 't'");
    }
    for (std::size_t i = 1; i < line.size(); ++i) {
        g.marks.push_back(to_double(line[i]));
    }
    s.geodesic = std::move(g);
}

void parse_links(Lexer& lex, const std::vector<Token>& head, Sections& s) {
    const int k = section_count(head, "links");
    for (int i = 0; i < k; ++i) {
        const auto& line = lex.next("link");
        if (line[0].text != "link") {
            fail_at(line[0], "expected 'link'");
        }
        expect_arity(line, 3, "link");
        const int vertex = static_cast<int>(to_int(line[1], 0, 100000000));
        const int n = static_cast<int>(to_int(line[2], 0, 100000));
        if (s.links.count(vertex)) {
            fail_at(line[1], "duplicate link for vertex " + line[1].text);
        }
        auto eh = lex.next("link edges");
        if (eh[0].text != "edges") {
            fail_at(eh[0], "expected 'edges'");
        }
        const int m = section_count(eh, "edges");
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < m; ++e) {
            const auto& pair = lex.next("link edge");
            expect_arity(pair, 2, "link edge");
            edges.emplace_back(static_cast<int>(to_int(pair[0], 0, std::max(0, n - 1))),
                               static_cast<int>(to_int(pair[1], 0, std::max(0, n - 1))));
        }
        auto th = lex.next("link triangles");
        if (th[0].text != "triangles") {
            fail_at(th[0], "expected 'triangles'");
        }
        const int t = section_count(th, "triangles");
        std::vector<std::array<int, 3>> tris;
        for (int j = 0; j < t; ++j) {
            const auto& tri = lex.next("link triangle");
            expect_arity(tri, 3, "link triangle");
            tris.push_back({static_cast<int>(to_int(tri[0], 0, std::max(0, n - 1))),
                            static_cast<int>(to_int(tri[1], 0, std::max(0, n - 1))),
                            static_cast<int>(to_int(tri[2], 0, std::max(0, n - 1)))});
        }
        try {
            s.links.emplace(vertex, SimplicialLink(n, edges, tris));
        } catch (const Error& e) {
            fail_at(line[0], "link of vertex " + std::to_string(vertex) + ": " + e.what());
        }
    }
}

std::string point_text(const ModelPoint& p) {
    return format_number(p.coords[0]) + " " + format_number(p.coords[1]) + " " +
           format_number(p.coords[2]);
}

}  // namespace

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

MetricComplex ComplexDocument::metric() const {
    if (!edge_lengths) {
        throw Error(ErrorKind::InvalidInput, "complex file has no edge_lengths section");
    }
    MetricComplex m = MetricComplex::realize(complex, *edge_lengths);
    return chart ? m.with_global_chart(*chart) : m;
}

ComplexDocument document_of(const MetricComplex& m, const std::optional<MarkedGeodesic>& gamma) {
    ComplexDocument doc;
    doc.complex = m.base();
    doc.edge_lengths = m.edge_lengths();
    doc.chart = m.global_chart();
    doc.geodesic = gamma;
    return doc;
}

ComplexDocument parse_complex(const std::string& text) {
    Lexer lex(text);
    const auto& header = lex.next("header");
    if (header[0].text != kHeader) {
        fail_at(header[0], std::string("expected header '") + kHeader + " " +
                               std::to_string(kVersion) + "'");
    }
    expect_arity(header, 2, "header");
    if (to_int(header[1], 0, 1000) != kVersion) {
        fail_at(header[1], "unsupported version " + header[1].text);
    }
    Sections s;
    std::set<std::string> seen;
    bool ended = false;
    while (!ended) {
        const auto& line = lex.next("a section or 'end'");
        const Token& key = line[0];
        if (!seen.insert(key.text).second) {
            fail_at(key, "duplicate section '" + key.text + "'");
        }
        if (key.text == "end") {
            expect_arity(line, 1, "end");
            ended = true;
        } else if (key.text == "vertices") {
            s.vertices = section_count(line, "vertices");
        } else if (key.text == "edges") {
            parse_edges(lex, line, s);
        } else if (key.text == "faces") {
            parse_faces(lex, line, s);
        } else if (key.text == "corner_angles") {
            expect_arity(line, 1, "corner_angles");
            parse_angles(lex, s);
        } else if (key.text == "edge_lengths") {
            expect_arity(line, 1, "edge_lengths");
            parse_lengths(lex, s);
        } else if (key.text == "chart") {
            parse_chart(lex, line, s);
        } else if (key.text == "marks") {
            expect_arity(line, 1, "marks");
            parse_marks(lex, s);
        } else if (key.text == "links") {
            parse_links(lex, line, s);
        } else {
            fail_at(key, "unknown section '" + key.text + "'");
        }
    }
    if (!lex.done()) {
        fail_at(lex.peek()[0], "content after 'end'");
    }
    ComplexDocument doc;
    doc.complex = AngledComplex(s.vertices, std::move(s.edges), std::move(s.faces),
                                std::move(s.angles), std::move(s.kappa));
    doc.edge_lengths = std::move(s.lengths);
    doc.chart = std::move(s.chart);
    doc.geodesic = std::move(s.geodesic);
    doc.links = std::move(s.links);
    return doc;
}

std::string serialize_complex(const ComplexDocument& doc) {
    const AngledComplex& x = doc.complex;
    std::ostringstream out;
    out << kHeader << ' ' << kVersion << '\n';
    out << "vertices " << x.vertex_count() << '\n';
    out << "edges " << x.edge_count() << '\n';
    for (const Edge& e : x.edges()) {
        out << e.tail << ' ' << e.head << '\n';
    }
    out << "faces " << x.face_count() << '\n';
    for (FaceId f = 0; f < x.face_count(); ++f) {
        const Face& face = x.face(f);
        for (std::size_t i = 0; i < face.size(); ++i) {
            out << (i ? " " : "") << (face.boundary[i].reversed ? '-' : '+') << face.boundary[i].edge;
        }
        if (const auto k = x.face_kappa(f)) {
            out << " kappa " << format_number(k->value());
        }
        out << '\n';
    }
    bool any_angle = false;
    for (const FaceAngles& a : x.angles()) {
        for (const auto& v : a) {
            any_angle = any_angle || v.has_value();
        }
    }
    if (any_angle) {
        out << "corner_angles\n";
        for (const FaceAngles& a : x.angles()) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                out << (i ? " " : "") << (a[i] ? format_number(*a[i]) : "-");
            }
            out << '\n';
        }
    }
    if (doc.edge_lengths) {
        out << "edge_lengths\n";
        for (double len : *doc.edge_lengths) {
            out << format_number(len) << '\n';
        }
    }
    if (doc.chart) {
        out << "chart " << doc.chart->size() << '\n';
        for (const ModelPoint& p : *doc.chart) {
            out << format_number(p.kappa.value()) << ' ' << point_text(p) << '\n';
        }
    }
    if (doc.geodesic) {
        const MarkedGeodesic& g = *doc.geodesic;
        out << "marks\n";
        out << "params " << format_number(g.params.epsilon) << ' ' << format_number(g.params.L)
            << ' ' << format_number(g.params.R_min) << '\n';
        out << "length " << format_number(g.path.length) << '\n';
        out << "mesh " << format_number(g.path.mesh) << '\n';
        out << "legs " << g.path.legs.size() << '\n';
        for (const PathLeg& leg : g.path.legs) {
            out << leg.face << ' ' << format_number(leg.from.kappa.value()) << ' '
                << point_text(leg.from) << ' ' << point_text(leg.to) << ' '
                << format_number(leg.length) << '\n';
        }
        out << 't';
        for (double t : g.marks) {
            out << ' ' << format_number(t);
        }
        out << '\n';
    }
    if (!doc.links.empty()) {
        out << "links " << doc.links.size() << '\n';
        for (const auto& [v, link] : doc.links) {
            out << "link " << v << ' ' << link.vertex_count() << '\n';
            out << "edges " << link.edges().size() << '\n';
            for (const auto& [a, b] : link.edges()) {
                out << a << ' ' << b << '\n';
            }
            out << "triangles " << link.triangles().size() << '\n';
            for (const auto& t : link.triangles()) {
                out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
            }
        }
    }
    out << "end\n";
    return out.str();
}

}  // namespace catkit
