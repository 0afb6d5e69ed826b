#pragma once

#include <array>
#include <vector>

#include "friezelink/laurent.hpp"
#include "friezelink/rational.hpp"

namespace friezelink {

/// Explicit diagram of the denominator closure D(T(alpha)), built twist
/// region by twist region with the same conventions as the skein recursion.
/// Crossing slots are 0 = NW, 1 = NE, 2 = SW, 3 = SE in local coordinates;
/// the strand through NW exits at SE and the one through NE exits at SW.
struct PlanarDiagram {
    struct Crossing {
        std::array<int, 4> port{};
        long long region = 0; // 1-based continued fraction index
        bool over_main = true; // true: NW-SE strand passes over
    };

    int node_count = 0;
    std::vector<Crossing> crossings;
    std::vector<std::pair<int, int>> edges;
    int west_edge = -1; // closure arc nw-sw
    int east_edge = -1; // closure arc ne-se
    int nw_node = -1, ne_node = -1, sw_node = -1, se_node = -1;
    int free_loops = 0;
    ContinuedFraction cf;

    long long crossing_count() const { return static_cast<long long>(crossings.size()); }
};

PlanarDiagram build_diagram(const Fraction& alpha);
PlanarDiagram build_diagram_cf(const ContinuedFraction& cf);

int component_count(const PlanarDiagram& d);

/// Full 2^c Kauffman state sum; loop counting by union-find.
LaurentPoly state_sum_bracket(const PlanarDiagram& d);

enum class OrientationKind { Principal, PlusMinus, MinusMinus, MinusPlus };

/// Diagram plus per-crossing signs under the chosen orientation. Principal
/// traverses the west closure arc upward (sw to nw) and, for two-component
/// links, the east closure arc upward as well; the other kinds reverse the
/// corresponding components.
struct OrientedDiagram {
    PlanarDiagram diagram;
    OrientationKind kind = OrientationKind::Principal;
    int components = 0;
    std::vector<int> crossing_signs;
};

OrientedDiagram orient_diagram(const PlanarDiagram& d, OrientationKind kind);

Int writhe_of(const OrientedDiagram& od);

/// Per twist region, the common sign of its crossings (throws if a region is
/// mixed). Entry j-1 belongs to continued fraction term a_j.
std::vector<int> region_signs(const OrientedDiagram& od);

/// Crossing-list export: one X(a,b,c,d) per crossing, arcs labelled along the
/// principal orientation, slots counterclockwise from the incoming under arc.
std::string export_pd(const PlanarDiagram& d);

} // namespace friezelink
