#ifndef JCSC_SCENARIO_HPP
#define JCSC_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jcsc/jcs_link.hpp"
#include "jcsc/semantics.hpp"

namespace jcsc {

struct GeometryConfig {
    double area_width_m = 2000.0;
    double area_height_m = 2000.0;
    double radius_m = 200.0;
    double beamwidth_rad = 0.5235987755982988;  // pi/6

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

struct DiscoveryConfig {
    double transmit_probability = 0.5;
    std::uint64_t slot_cap = 1'000'000;
    double position_noise_m = 0.0;

    friend bool operator==(const DiscoveryConfig&, const DiscoveryConfig&) = default;
};

struct RfConfig {
    RfParams params;
    double comm_distance_m = 200.0;
    double target_distance_m = 100.0;
    double capacity_gap = 1.0;  // divides comm SNR before the rate computation

    friend bool operator==(const RfConfig&, const RfConfig&) = default;
};

struct EntropyConfig {
    double degree_entropy_weight = 1.0;
    double link_churn_weight = 1.0;

    friend bool operator==(const EntropyConfig&, const EntropyConfig&) = default;
};

struct ExperimentConfig {
    std::vector<int> node_counts = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
    int replications = 30;
    std::uint64_t master_seed = 42;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Every tunable parameter of a run. Defaults reproduce the bundled
// experiment setup; see the config reference in the README for units.
struct ScenarioConfig {
    GeometryConfig geometry;
    DiscoveryConfig discovery;
    RfConfig rf;
    std::vector<PayloadSpec> payloads = default_payloads();
    EntropyConfig entropy;
    ExperimentConfig experiment;

    static std::vector<PayloadSpec> default_payloads();

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Parses the sectioned key-value config format. Unknown sections or keys
// and out-of-range values raise ConfigError naming the offending key.
// An empty document yields all defaults.
ScenarioConfig parse_config(const std::string& text);

// Canonical serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

// Range validation for a fully assembled config; throws ConfigError.
void validate_config(const ScenarioConfig& config);

}  // namespace jcsc

#endif  // JCSC_SCENARIO_HPP
