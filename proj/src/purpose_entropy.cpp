#include "jcsc/purpose_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jcsc/errors.hpp"

namespace jcsc {

void validate_topology(const Topology& topology) {
    if (topology.node_count < 0) {
        throw std::invalid_argument("node count must be nonnegative");
    }
    for (const Link& link : topology.links) {
        if (link.a < 0 || link.b >= topology.node_count) {
            throw std::invalid_argument("link endpoint outside node range");
        }
    }
}

double degree_distribution_entropy(const Topology& topology) {
    if (topology.node_count < 1) {
        throw std::invalid_argument("degree entropy requires at least one node");
    }
    validate_topology(topology);

    std::vector<int> degree(static_cast<std::size_t>(topology.node_count), 0);
    for (const Link& link : topology.links) {
        ++degree[static_cast<std::size_t>(link.a)];
        ++degree[static_cast<std::size_t>(link.b)];
    }

    std::map<int, int> histogram;
    for (int d : degree) {
        ++histogram[d];
    }

    const double n = static_cast<double>(topology.node_count);
    double entropy = 0.0;
    for (const auto& [value, count] : histogram) {
        const double p = static_cast<double>(count) / n;
        entropy -= p * std::log2(p);
    }
    return std::max(entropy, 0.0);  // -0.0 guard for degenerate distributions
}

double link_churn(const Topology& current, const Topology& previous) {
    std::size_t shared = 0;
    for (const Link& link : current.links) {
        shared += previous.links.count(link);
    }
    const std::size_t sym_diff =
        current.links.size() + previous.links.size() - 2 * shared;
    const std::size_t united =
        current.links.size() + previous.links.size() - shared;
    if (united == 0) {
        return 0.0;
    }
    return static_cast<double>(sym_diff) / static_cast<double>(united);
}

MetricRegistry::MetricRegistry() {
    add("degree_entropy", [](const Topology& t, const Topology*) {
        return degree_distribution_entropy(t);
    });
    add("link_churn", [](const Topology& t, const Topology* prev) {
        return prev == nullptr ? 0.0 : link_churn(t, *prev);
    });
}

void MetricRegistry::add(const std::string& name, OrderMetric metric) {
    metrics_[name] = std::move(metric);
}

const OrderMetric* MetricRegistry::find(const std::string& name) const {
    const auto it = metrics_.find(name);
    return it == metrics_.end() ? nullptr : &it->second;
}

const MetricRegistry& default_registry() {
    static const MetricRegistry registry;
    return registry;
}

OrderParameters default_order_parameters() {
    return OrderParameters{{"degree_entropy", "link_churn"}, {1.0, 1.0}};
}

namespace {

void check_params(const OrderParameters& params) {
    if (params.levels.size() != params.weights.size()) {
        throw ConfigError("entropy.weights", "weights must match levels");
    }
    if (params.levels.empty()) {
        throw ConfigError("entropy.weights", "at least one level required");
    }
    bool any_positive = false;
    for (double w : params.weights) {
        if (w < 0.0) {
            throw ConfigError("entropy.weights", "weights must be nonnegative");
        }
        any_positive = any_positive || w > 0.0;
    }
    if (!any_positive) {
        throw ConfigError("entropy.weights", "weights must not all be zero");
    }
}

}  // namespace

double system_entropy(const Topology& topology, const OrderParameters& params,
                      const Topology* previous, const MetricRegistry& registry) {
    check_params(params);
    double total = 0.0;
    for (std::size_t i = 0; i < params.levels.size(); ++i) {
        const OrderMetric* metric = registry.find(params.levels[i]);
        if (metric == nullptr) {
            throw ConfigError("entropy.levels", "unknown order metric: " + params.levels[i]);
        }
        total += params.weights[i] * (*metric)(topology, previous);
    }
    return total;
}

std::vector<NodeId> candidate_set(const Purpose& purpose,
                                  const std::vector<SensedNeighbor>& sensed,
                                  const Position& origin_pos) {
    if (!(purpose.bearing_half_width > 0.0) ||
        purpose.bearing_half_width > std::numbers::pi) {
        throw std::invalid_argument("bearing half width must be in (0, pi]");
    }
    if (!(purpose.max_range_m > 0.0)) {
        throw std::invalid_argument("max range must be positive");
    }

    std::vector<NodeId> out;
    for (const SensedNeighbor& neighbor : sensed) {
        if (neighbor.id == purpose.origin) {
            continue;
        }
        if (distance(origin_pos, neighbor.estimate) > purpose.max_range_m) {
            continue;
        }
        // A node at the exact origin position has no bearing; range alone
        // decides then.
        if (!(neighbor.estimate == origin_pos)) {
            const double b = bearing(origin_pos, neighbor.estimate);
            const double delta =
                std::remainder(b - purpose.bearing_center, 2.0 * std::numbers::pi);
            if (std::abs(delta) > purpose.bearing_half_width) {
                continue;
            }
        }
        out.push_back(neighbor.id);
    }
    return out;
}

NodeId select_target(NodeId origin, const std::vector<NodeId>& candidates,
                     const Topology& base_topology, const OrderParameters& params,
                     const MetricRegistry& registry) {
    if (candidates.empty()) {
        throw std::invalid_argument("no candidate targets");
    }
    bool have_best = false;
    NodeId best_id = 0;
    double best_value = 0.0;
    for (NodeId candidate : candidates) {
        Topology hypothetical = base_topology;
        hypothetical.links.insert(Link(origin, candidate));
        const double value =
            system_entropy(hypothetical, params, &base_topology, registry);
        if (!have_best || value < best_value ||
            (value == best_value && candidate < best_id)) {
            have_best = true;
            best_id = candidate;
            best_value = value;
        }
    }
    return best_id;
}

}  // namespace jcsc
