#ifndef JCSC_GEOMETRY_HPP
#define JCSC_GEOMETRY_HPP

#include <compare>
#include <set>
#include <vector>

#include "jcsc/rng.hpp"

namespace jcsc {

using NodeId = int;

struct Position {
    double x = 0.0;  // meters
    double y = 0.0;  // meters

    friend bool operator==(const Position&, const Position&) = default;
};

// Deployment rectangle anchored at the origin.
struct Rect {
    double width = 0.0;   // meters
    double height = 0.0;  // meters
};

// Directional beam discretized into equal angular sectors anchored at the
// +x axis. sector_count = ceil(2*pi / beamwidth), with near-integer ratios
// snapped so that e.g. pi/6 gives exactly 12 sectors.
struct BeamConfig {
    double beamwidth = 0.0;  // radians, (0, 2*pi]
    int sector_count = 0;

    static BeamConfig from_beamwidth(double beamwidth);

    friend bool operator==(const BeamConfig&, const BeamConfig&) = default;
};

// A neighbor position known through sensing.
struct SensedNeighbor {
    NodeId id = 0;
    Position estimate;

    friend bool operator==(const SensedNeighbor&, const SensedNeighbor&) = default;
};

struct NodeState {
    NodeId id = 0;
    Position pos;
    std::vector<SensedNeighbor> sensed_neighbors;
    BeamConfig beam;
};

// Unordered node pair, normalized so a < b. Self-pairs are rejected.
struct Link {
    NodeId a;
    NodeId b;

    Link(NodeId i, NodeId j);

    auto operator<=>(const Link&) const = default;
};

using LinkSet = std::set<Link>;

double distance(const Position& a, const Position& b);

// Bearing of `to` seen from `from`, counterclockwise from the +x axis,
// in [0, 2*pi). Coincident points have no bearing.
double bearing(const Position& from, const Position& to);

// i.i.d. uniform positions over the rectangle; fully determined by the
// stream's seed. Draw order is x then y per node.
std::vector<Position> place_nodes(int n, const Rect& area, RandomStream& rng);

// Index of the sector containing the bearing from `from` to `to`.
int sector_of(const Position& from, const Position& to, const BeamConfig& beam);

// Euclidean distance <= radius; boundary inclusive.
bool in_range(const Position& a, const Position& b, double radius);

// All pairs within communication range. Ground truth for discovery.
LinkSet feasible_links(const std::vector<Position>& positions, double radius);

}  // namespace jcsc

#endif  // JCSC_GEOMETRY_HPP
