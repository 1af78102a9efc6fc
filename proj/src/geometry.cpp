#include "jcsc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcsc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BeamConfig BeamConfig::from_beamwidth(double beamwidth) {
    if (!(beamwidth > 0.0) || beamwidth > kTwoPi * (1.0 + 1e-12)) {
        throw std::invalid_argument("beamwidth must be in (0, 2*pi]");
    }
    beamwidth = std::min(beamwidth, kTwoPi);
    const double ratio = kTwoPi / beamwidth;
    const double nearest = std::round(ratio);
    int count;
    if (std::abs(ratio - nearest) < 1e-9) {
        count = static_cast<int>(nearest);
    } else {
        count = static_cast<int>(std::ceil(ratio));
    }
    return BeamConfig{beamwidth, std::max(count, 1)};
}

Link::Link(NodeId i, NodeId j) : a(std::min(i, j)), b(std::max(i, j)) {
    if (i == j) {
        throw std::invalid_argument("link endpoints must differ");
    }
}

double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double bearing(const Position& from, const Position& to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    if (dx == 0.0 && dy == 0.0) {
        throw std::domain_error("bearing undefined for coincident points");
    }
    double b = std::atan2(dy, dx);
    if (b < 0.0) {
        b += kTwoPi;
    }
    if (b >= kTwoPi) {
        b = 0.0;
    }
    return b;
}

std::vector<Position> place_nodes(int n, const Rect& area, RandomStream& rng) {
    if (n < 0) {
        throw std::invalid_argument("node count must be nonnegative");
    }
    if (!(area.width > 0.0) || !(area.height > 0.0)) {
        throw std::invalid_argument("area dimensions must be positive");
    }
    std::vector<Position> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = rng.uniform(0.0, area.width);
        const double y = rng.uniform(0.0, area.height);
        out.push_back(Position{x, y});
    }
    return out;
}

int sector_of(const Position& from, const Position& to, const BeamConfig& beam) {
    const double b = bearing(from, to);
    const int k = static_cast<int>(b / beam.beamwidth);
    return std::min(k, beam.sector_count - 1);
}

bool in_range(const Position& a, const Position& b, double radius) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }
    return distance(a, b) <= radius;
}

LinkSet feasible_links(const std::vector<Position>& positions, double radius) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }
    LinkSet links;
    const int n = static_cast<int>(positions.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (in_range(positions[i], positions[j], radius)) {
                links.insert(Link(i, j));
            }
        }
    }
    return links;
}

}  // namespace jcsc
