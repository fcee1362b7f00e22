#include "catkit/complex_io.hpp"
#include "catkit/error.hpp"
#include "catkit/generators.hpp"

#include <doctest.h>

#include <string>

using namespace catkit;

namespace {

std::vector<ComplexDocument> corpus() {
    std::vector<ComplexDocument> docs;
    docs.push_back(document_of(gen_standard(StandardKind::DiscTriangle)));
    docs.push_back(document_of(gen_standard(StandardKind::SphereTetrahedron)));
    docs.push_back(document_of(gen_standard(StandardKind::FlatTorus)));
    docs.push_back(document_of(gen_surface(2)));
    docs.push_back(document_of(gen_figure3().glued.complex));
    const auto strip = gen_beaded_strip(3, 3.0, 0.5);
    docs.push_back(document_of(strip.complex, strip.geodesic));
    const auto patch = gen_hyperbolic_patch(4.0, 1.0);
    docs.push_back(document_of(patch.complex, patch.geodesic));
    const auto flat = gen_flat_strip(3.0, 1.0, 0.5);
    docs.push_back(document_of(flat.complex, flat.geodesic));
    return docs;
}

std::string parse_error(const std::string& text) {
    try {
        parse_complex(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        return e.what();
    }
    FAIL("expected a parse error");
    return {};
}

const char* kSquare =
    "catkit-complex 1\n"
    "vertices 4\n"
    "edges 4\n"
    "0 1\n1 2\n2 3\n3 0\n"
    "faces 1\n"
    "+0 +1 +2 +3 # square\n"
    "corner_angles\n"
    "1.5707963267948966 1.5707963267948966 1.5707963267948966 1.5707963267948966\n"
    "edge_lengths\n1\n1\n1\n1\n"
    "end\n";

}  // namespace

TEST_CASE("round trip of generator output") {
    for (const ComplexDocument& doc : corpus()) {
        const std::string text = serialize_complex(doc);
        const ComplexDocument back = parse_complex(text);
        CHECK(back.complex == doc.complex);
        CHECK(back.edge_lengths == doc.edge_lengths);
        CHECK(back.chart.has_value() == doc.chart.has_value());
        CHECK(back.geodesic.has_value() == doc.geodesic.has_value());
        CHECK(serialize_complex(back) == text);
        const MetricComplex m = back.metric();
        CHECK(m.edge_lengths() == *doc.edge_lengths);
    }
}

TEST_CASE("marks survive bit-exactly") {
    const auto strip = gen_beaded_strip(5, 3.0, 0.5);
    const auto back = parse_complex(serialize_complex(document_of(strip.complex, strip.geodesic)));
    REQUIRE(back.geodesic);
    CHECK(back.geodesic->marks == strip.geodesic.marks);
    CHECK(back.geodesic->path.length == strip.geodesic.path.length);
    CHECK(back.geodesic->params.epsilon == strip.geodesic.params.epsilon);
    REQUIRE(back.geodesic->path.legs.size() == strip.geodesic.path.legs.size());
    for (std::size_t i = 0; i < back.geodesic->path.legs.size(); ++i) {
        CHECK(back.geodesic->path.legs[i].from.coords == strip.geodesic.path.legs[i].from.coords);
        CHECK(back.geodesic->path.legs[i].face == strip.geodesic.path.legs[i].face);
    }
}

TEST_CASE("hand-written file") {
    const auto doc = parse_complex(kSquare);
    CHECK(doc.complex.face_count() == 1);
    CHECK(doc.complex.angles_complete());
    CHECK_FALSE(doc.chart);
    CHECK(parse_complex(serialize_complex(doc)).complex == doc.complex);
}

TEST_CASE("links section") {
    ComplexDocument doc = document_of(gen_standard(StandardKind::FlatTorus));
    doc.links.emplace(0, SimplicialLink(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    doc.links.emplace(3, SimplicialLink(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}}));
    const std::string text = serialize_complex(doc);
    const auto back = parse_complex(text);
    REQUIRE(back.links.size() == 2);
    CHECK(back.links.at(0).edges() == doc.links.at(0).edges());
    CHECK(back.links.at(3).triangles() == doc.links.at(3).triangles());
    CHECK(serialize_complex(back) == text);
}

TEST_CASE("invalid angle is rejected with its corner") {
    std::string text = kSquare;
    text.replace(text.find("1.5707963267948966"), 18, "7.0");
    try {
        parse_complex(text);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidComplex);
        CHECK(std::string(e.what()).find("face 0") != std::string::npos);
    }
}

TEST_CASE("parse errors carry positions") {
    CHECK(parse_error("catkit-complx 1\n").find("line 1, column 1") != std::string::npos);
    CHECK(parse_error("catkit-complex 2\n").find("line 1, column 16") != std::string::npos);
    CHECK(parse_error("catkit-complex 1\nvertices 2\nedges 1\n0 x\n").find("line 4, column 3") !=
          std::string::npos);
    CHECK(parse_error("catkit-complex 1\nvertices 2\nedges 1\n0 5\n").find("out of range") !=
          std::string::npos);
    CHECK(parse_error("catkit-complex 1\nvertices 2\n").find("line 3, column 1: unexpected end") !=
          std::string::npos);
    CHECK(parse_error("catkit-complex 1\nbogus\nend\n").find("unknown section 'bogus'") !=
          std::string::npos);
    CHECK(parse_error("catkit-complex 1\nvertices 1\nvertices 1\nend\n").find("duplicate") !=
          std::string::npos);
    CHECK(parse_error("catkit-complex 1\nend\nvertices 1\n").find("after 'end'") != std::string::npos);
    CHECK(parse_error(std::string(kSquare).replace(std::string(kSquare).find("+2"), 2, "*2"))
              .find("line 9, column 7") != std::string::npos);
}

TEST_CASE("metric needs edge lengths") {
    const auto doc = parse_complex("catkit-complex 1\nvertices 1\nend\n");
    CHECK_THROWS_AS(doc.metric(), Error);
}

TEST_CASE("format_number") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
