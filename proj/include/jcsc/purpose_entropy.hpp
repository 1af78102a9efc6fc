#ifndef JCSC_PURPOSE_ENTROPY_HPP
#define JCSC_PURPOSE_ENTROPY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jcsc/geometry.hpp"

namespace jcsc {

// Instantaneous undirected link set over node ids [0, node_count).
struct Topology {
    int node_count = 0;
    LinkSet links;

    friend bool operator==(const Topology&, const Topology&) = default;
};

void validate_topology(const Topology& topology);

// Shannon entropy (base 2) of the empirical node-degree distribution.
double degree_distribution_entropy(const Topology& topology);

// Fraction of links changed between snapshots: |symmetric difference| /
// |union|, 0 when both are empty.
double link_churn(const Topology& current, const Topology& previous);

// One order metric: current snapshot plus optional previous snapshot
// (nullptr = no history).
using OrderMetric = std::function<double(const Topology&, const Topology*)>;

// Named order metrics. The defaults register "degree_entropy" and
// "link_churn"; additional levels plug in by name.
class MetricRegistry {
public:
    MetricRegistry();

    void add(const std::string& name, OrderMetric metric);
    const OrderMetric* find(const std::string& name) const;

private:
    std::map<std::string, OrderMetric> metrics_;
};

const MetricRegistry& default_registry();

// Ordered list of metric names with matching nonnegative weights.
struct OrderParameters {
    std::vector<std::string> levels;
    std::vector<double> weights;

    friend bool operator==(const OrderParameters&, const OrderParameters&) = default;
};

OrderParameters default_order_parameters();

// Weighted sum of the named order metrics over the topology.
double system_entropy(const Topology& topology, const OrderParameters& params,
                      const Topology* previous = nullptr,
                      const MetricRegistry& registry = default_registry());

// A communication purpose: who wants to talk, in which bearing window, and
// out to what range.
struct Purpose {
    NodeId origin = 0;
    double bearing_center = 0.0;      // radians
    double bearing_half_width = 0.0;  // radians, (0, pi]
    double max_range_m = 0.0;
    std::string intent_tag;
};

// Sensed nodes inside the purpose's range and bearing window (closed on
// both edges), excluding the origin itself.
std::vector<NodeId> candidate_set(const Purpose& purpose,
                                  const std::vector<SensedNeighbor>& sensed,
                                  const Position& origin_pos);

// The candidate whose hypothetical link to the origin yields the smallest
// system entropy; ties broken by lowest node id.
NodeId select_target(NodeId origin, const std::vector<NodeId>& candidates,
                     const Topology& base_topology, const OrderParameters& params,
                     const MetricRegistry& registry = default_registry());

}  // namespace jcsc

#endif  // JCSC_PURPOSE_ENTROPY_HPP
