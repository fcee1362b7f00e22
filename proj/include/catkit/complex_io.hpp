#pragma once

#include "catkit/angled_complex.hpp"
#include "catkit/cube_links.hpp"
#include "catkit/metric.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catkit {

/// Contents of a complex file. Every section is optional except the header.
///
///   catkit-complex 1
///   vertices <n>
///   edges <m>            then m lines "tail head"
///   faces <f>            then f lines of signed edges "+e" / "-e", optionally
///                        followed by "kappa <k>"
///   corner_angles        then f lines, one angle or "-" per corner
///   edge_lengths         then m lines
///   chart <n>            then n lines "kappa x0 x1 x2"
///   marks                then "params eps L R", "length l", "mesh h",
///                        "legs <k>" with k lines "face kappa a0 a1 a2 b0 b1 b2 len",
///                        and "t t1 t2 ..."
///   links <k>            then k blocks "link <v> <n>", "edges <m>" with m
///                        pairs, "triangles <t>" with t triples
///   end
///
/// '#' starts a comment. Numbers are written with 17 significant digits.
struct ComplexDocument {
    AngledComplex complex;
    std::optional<std::vector<double>> edge_lengths;
    std::optional<std::vector<ModelPoint>> chart;
    std::optional<MarkedGeodesic> geodesic;
    std::map<int, SimplicialLink> links;

    /// Realizes the complex; needs edge lengths. Attaches the chart if present.
    MetricComplex metric() const;
};

ComplexDocument document_of(const MetricComplex& m, const std::optional<MarkedGeodesic>& gamma = {});

/// Throws Parse errors of the form "line L, column C: ..." and validation
/// errors from the complex constructors.
ComplexDocument parse_complex(const std::string& text);
std::string serialize_complex(const ComplexDocument& doc);

/// %.17g
std::string format_number(double x);

}  // namespace catkit
