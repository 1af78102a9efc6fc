#include "jcsc/discovery.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace jcsc {

namespace {

void check_nodes(const std::vector<NodeState>& nodes) {
    if (nodes.empty()) {
        throw std::invalid_argument("discovery requires at least one node");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].id != static_cast<NodeId>(i)) {
            throw std::invalid_argument("node ids must be dense and start at 0");
        }
        if (nodes[i].beam != nodes[0].beam) {
            throw std::invalid_argument("all nodes must share one beam configuration");
        }
    }
}

std::vector<std::vector<NodeId>> adjacency_of(const LinkSet& links, std::size_t n) {
    std::vector<std::vector<NodeId>> adjacency(n);
    for (const Link& link : links) {
        adjacency[static_cast<std::size_t>(link.a)].push_back(link.b);
        adjacency[static_cast<std::size_t>(link.b)].push_back(link.a);
    }
    return adjacency;
}

}  // namespace

std::vector<TransmissionRecord> resolve_blind_slot(
    const std::vector<NodeState>& nodes,
    const std::vector<std::vector<NodeId>>& neighbors,
    const std::vector<SlotChoice>& choices, LinkSet& discovered) {
    const std::size_t n = nodes.size();
    std::vector<TransmissionRecord> records;
    std::vector<int> record_of(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (choices[i].transmitting) {
            record_of[i] = static_cast<int>(records.size());
            records.push_back(TransmissionRecord{static_cast<NodeId>(i),
                                                 choices[i].sector,
                                                 {},
                                                 false});
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (choices[j].transmitting) {
            continue;
        }
        // Arrivals at listener j: feasible transmitters whose beam covers j
        // while j's listening beam covers them.
        std::vector<NodeId> arrivals;
        for (NodeId i : neighbors[j]) {
            const auto ui = static_cast<std::size_t>(i);
            if (!choices[ui].transmitting) {
                continue;
            }
            if (sector_of(nodes[ui].pos, nodes[j].pos, nodes[ui].beam) !=
                choices[ui].sector) {
                continue;
            }
            if (sector_of(nodes[j].pos, nodes[ui].pos, nodes[j].beam) !=
                choices[j].sector) {
                continue;
            }
            arrivals.push_back(i);
        }
        if (arrivals.size() == 1) {
            const NodeId i = arrivals.front();
            const Link link(i, static_cast<NodeId>(j));
            if (discovered.insert(link).second) {
                records[static_cast<std::size_t>(record_of[static_cast<std::size_t>(i)])]
                    .receivers_reached.push_back(static_cast<NodeId>(j));
            }
        } else if (arrivals.size() >= 2) {
            for (NodeId i : arrivals) {
                records[static_cast<std::size_t>(record_of[static_cast<std::size_t>(i)])]
                    .collision = true;
            }
        }
    }
    return records;
}

std::vector<NodeState> make_nodes(const std::vector<Position>& positions,
                                  const BeamConfig& beam, double radius_m,
                                  double position_noise_m, RandomStream* noise_rng) {
    if (position_noise_m < 0.0) {
        throw std::invalid_argument("position noise must be nonnegative");
    }
    if (position_noise_m > 0.0 && noise_rng == nullptr) {
        throw std::invalid_argument("position noise requires a random stream");
    }
    const LinkSet feasible = feasible_links(positions, radius_m);
    const auto adjacency = adjacency_of(feasible, positions.size());

    std::vector<NodeState> nodes;
    nodes.reserve(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        NodeState node;
        node.id = static_cast<NodeId>(i);
        node.pos = positions[i];
        node.beam = beam;
        for (NodeId j : adjacency[i]) {
            Position estimate = positions[static_cast<std::size_t>(j)];
            if (position_noise_m > 0.0) {
                estimate.x = noise_rng->gaussian(estimate.x, position_noise_m);
                estimate.y = noise_rng->gaussian(estimate.y, position_noise_m);
            }
            node.sensed_neighbors.push_back(SensedNeighbor{j, estimate});
        }
        nodes.push_back(std::move(node));
    }
    return nodes;
}

DiscoveryResult run_blind_discovery(const std::vector<NodeState>& nodes,
                                    double radius_m, const DiscoveryPolicy& policy,
                                    RandomStream& rng, std::uint64_t slot_cap) {
    check_nodes(nodes);
    if (!(policy.transmit_probability > 0.0) || !(policy.transmit_probability < 1.0)) {
        throw std::invalid_argument("transmit probability must be in (0, 1)");
    }

    std::vector<Position> positions;
    positions.reserve(nodes.size());
    for (const NodeState& node : nodes) {
        positions.push_back(node.pos);
    }
    const LinkSet feasible = feasible_links(positions, radius_m);
    const auto neighbors = adjacency_of(feasible, nodes.size());
    const auto sectors = static_cast<std::uint64_t>(nodes[0].beam.sector_count);

    DiscoveryResult result;
    std::vector<SlotChoice> choices(nodes.size());
    while (result.discovered_links != feasible) {
        if (result.slots_used >= slot_cap) {
            result.completed = false;
            throw DiscoveryTimeoutError(std::move(result));
        }
        // Fixed draw order per node: role first, then sector.
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            choices[i].transmitting = rng.bernoulli(policy.transmit_probability);
            choices[i].sector = static_cast<int>(rng.uniform_int(sectors));
        }
        result.slot_log.push_back(
            resolve_blind_slot(nodes, neighbors, choices, result.discovered_links));
        ++result.slots_used;
    }
    return result;
}

DiscoveryResult run_sensing_assisted_discovery(const std::vector<NodeState>& nodes,
                                               double radius_m,
                                               [[maybe_unused]] RandomStream& rng,
                                               std::uint64_t slot_cap) {
    check_nodes(nodes);
    if (!(radius_m > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }

    std::vector<Position> positions;
    positions.reserve(nodes.size());
    for (const NodeState& node : nodes) {
        positions.push_back(node.pos);
    }
    const LinkSet feasible = feasible_links(positions, radius_m);

    // What the nodes know: a pair is a handshake candidate when both ends
    // sense each other within range. With exact priors this equals the
    // feasible set.
    struct Estimates {
        Position at_a;  // a's estimate of b
        Position at_b;  // b's estimate of a
        bool has_a = false;
        bool has_b = false;
    };
    std::map<Link, Estimates> knowledge;
    for (const NodeState& node : nodes) {
        for (const SensedNeighbor& neighbor : node.sensed_neighbors) {
            if (neighbor.id == node.id) {
                throw std::invalid_argument("sensed neighbors must not include self");
            }
            if (distance(node.pos, neighbor.estimate) > radius_m) {
                continue;
            }
            const Link link(node.id, neighbor.id);
            Estimates& estimates = knowledge[link];
            if (node.id == link.a) {
                estimates.at_a = neighbor.estimate;
                estimates.has_a = true;
            } else {
                estimates.at_b = neighbor.estimate;
                estimates.has_b = true;
            }
        }
    }

    struct Candidate {
        Link link;
        Position estimate_at_a;
        Position estimate_at_b;
    };
    // Matching order is (a, b) lexicographic; the map already yields it.
    std::vector<Candidate> candidates;
    for (const auto& [link, estimates] : knowledge) {
        if (estimates.has_a && estimates.has_b) {
            candidates.push_back(Candidate{link, estimates.at_a, estimates.at_b});
        }
    }

    DiscoveryResult result;
    while (result.discovered_links != feasible) {
        if (result.slots_used >= slot_cap) {
            result.completed = false;
            throw DiscoveryTimeoutError(std::move(result));
        }
        // Greedy node-disjoint matching over undiscovered candidate pairs.
        std::vector<char> busy(nodes.size(), 0);
        std::vector<const Candidate*> scheduled;
        for (const Candidate& candidate : candidates) {
            if (result.discovered_links.contains(candidate.link)) {
                continue;
            }
            const auto a = static_cast<std::size_t>(candidate.link.a);
            const auto b = static_cast<std::size_t>(candidate.link.b);
            if (busy[a] || busy[b]) {
                continue;
            }
            busy[a] = busy[b] = 1;
            scheduled.push_back(&candidate);
        }
        if (scheduled.empty()) {
            // No schedulable pair left but feasible links remain: the
            // priors missed them. Equivalent to running out the cap.
            result.completed = false;
            throw DiscoveryTimeoutError(std::move(result));
        }

        std::vector<TransmissionRecord> slot_records;
        for (const Candidate* candidate : scheduled) {
            const NodeState& tx = nodes[static_cast<std::size_t>(candidate->link.a)];
            const NodeState& rx = nodes[static_cast<std::size_t>(candidate->link.b)];
            const int tx_sector = sector_of(tx.pos, candidate->estimate_at_a, tx.beam);
            const int rx_sector = sector_of(rx.pos, candidate->estimate_at_b, rx.beam);
            const bool aligned =
                in_range(tx.pos, rx.pos, radius_m) &&
                sector_of(tx.pos, rx.pos, tx.beam) == tx_sector &&
                sector_of(rx.pos, tx.pos, rx.beam) == rx_sector;
            TransmissionRecord record{tx.id, tx_sector, {}, false};
            if (aligned && result.discovered_links.insert(candidate->link).second) {
                record.receivers_reached.push_back(rx.id);
            }
            slot_records.push_back(std::move(record));
        }
        result.slot_log.push_back(std::move(slot_records));
        ++result.slots_used;
    }
    return result;
}

double reduction_ratio(const DiscoveryResult& blind, const DiscoveryResult& assisted) {
    if (blind.slots_used == 0) {
        throw std::domain_error("reduction ratio undefined for zero blind slots");
    }
    return (static_cast<double>(blind.slots_used) -
            static_cast<double>(assisted.slots_used)) /
           static_cast<double>(blind.slots_used);
}

}  // namespace jcsc
