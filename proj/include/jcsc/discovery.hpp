#ifndef JCSC_DISCOVERY_HPP
#define JCSC_DISCOVERY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "jcsc/geometry.hpp"
#include "jcsc/rng.hpp"

namespace jcsc {

enum class PolicyKind { blind, sensing_assisted };

struct DiscoveryPolicy {
    PolicyKind kind = PolicyKind::blind;
    double transmit_probability = 0.5;  // blind only, (0, 1)
};

// One transmission in one slot: who sent, where the beam pointed, which
// listeners logged a new link from it, and whether it collided somewhere.
struct TransmissionRecord {
    NodeId transmitter = 0;
    int sector = 0;
    std::vector<NodeId> receivers_reached;
    bool collision = false;

    friend bool operator==(const TransmissionRecord&, const TransmissionRecord&) = default;
};

using SlotLog = std::vector<std::vector<TransmissionRecord>>;

struct DiscoveryResult {
    std::uint64_t slots_used = 0;
    LinkSet discovered_links;
    SlotLog slot_log;
    bool completed = true;

    friend bool operator==(const DiscoveryResult&, const DiscoveryResult&) = default;
};

// Slot cap exceeded before every feasible link was discovered. Carries the
// partial result (completed = false).
class DiscoveryTimeoutError : public std::runtime_error {
public:
    explicit DiscoveryTimeoutError(DiscoveryResult partial)
        : std::runtime_error("discovery slot cap exceeded"),
          partial_(std::move(partial)) {}

    const DiscoveryResult& partial() const { return partial_; }

private:
    DiscoveryResult partial_;
};

// Per-node decision for one blind slot: transmit or listen, and the sector
// the beam points into.
struct SlotChoice {
    bool transmitting = false;
    int sector = 0;
};

// Resolves one blind slot against the feasible adjacency. A transmission
// arrives at listener j when the transmitter lies in j's listening sector
// and j lies in the transmitter's beam; exactly one arrival decodes, two or
// more collide and the listener learns nothing. Newly discovered links are
// inserted into `discovered`. Split out from the run loop so the collision
// rules are testable without sampling.
std::vector<TransmissionRecord> resolve_blind_slot(
    const std::vector<NodeState>& nodes,
    const std::vector<std::vector<NodeId>>& neighbors,
    const std::vector<SlotChoice>& choices, LinkSet& discovered);

// Builds nodes with sensing priors covering every feasible neighbor.
// position_noise_m > 0 perturbs each estimate with i.i.d. Gaussian noise.
std::vector<NodeState> make_nodes(const std::vector<Position>& positions,
                                  const BeamConfig& beam, double radius_m,
                                  double position_noise_m = 0.0,
                                  RandomStream* noise_rng = nullptr);

inline constexpr std::uint64_t kDefaultSlotCap = 1'000'000;

// Synchronous random transmit/listen directional discovery. Each slot every
// node independently transmits with the policy probability into a uniformly
// random sector, otherwise listens in a uniformly random sector. Runs until
// every feasible link is discovered.
DiscoveryResult run_blind_discovery(const std::vector<NodeState>& nodes,
                                    double radius_m, const DiscoveryPolicy& policy,
                                    RandomStream& rng,
                                    std::uint64_t slot_cap = kDefaultSlotCap);

// Prior-position-driven discovery. Per slot a greedy matching over the
// undiscovered pairs (ties broken by lowest node id, then lowest neighbor
// id) assigns each node at most one role; the lower id points and
// transmits, the higher id points and listens. With exact priors every
// pointed pair completes in one slot.
DiscoveryResult run_sensing_assisted_discovery(const std::vector<NodeState>& nodes,
                                               double radius_m, RandomStream& rng,
                                               std::uint64_t slot_cap = kDefaultSlotCap);

// (blind - assisted) / blind, over runs of the same scenario and seed pairing.
double reduction_ratio(const DiscoveryResult& blind, const DiscoveryResult& assisted);

}  // namespace jcsc

#endif  // JCSC_DISCOVERY_HPP
