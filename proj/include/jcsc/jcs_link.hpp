#ifndef JCSC_JCS_LINK_HPP
#define JCSC_JCS_LINK_HPP

#include <utility>
#include <vector>

#include "jcsc/errors.hpp"

namespace jcsc {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K

struct RfParams {
    double transmit_power_w = 10.0;
    double carrier_frequency_hz = 28.0e9;
    double bandwidth_hz = 800.0e6;
    double antenna_gain_dbi = 18.0;  // per end for communication, squared for radar
    double frame_duration_s = 0.03;
    double noise_figure_db = 10.0;
    double radar_cross_section_m2 = 10.0;
    double system_temperature_k = 290.0;

    friend bool operator==(const RfParams&, const RfParams&) = default;
};

// Time-division split of one frame between communication and sensing,
// with the link metrics that produced it.
struct FrameBudget {
    double comm_time_s = 0.0;
    double sensing_time_s = 0.0;
    double comm_rate_bps = 0.0;
    double comm_snr = 0.0;      // linear
    double radar_snr = 0.0;     // linear
    double radar_mi_bits = 0.0;
};

// Free-space path loss, 20*log10(4*pi*d*f/c) dB.
double fspl_db(double distance_m, double frequency_hz);

// Thermal noise floor plus noise figure, 10*log10(k*T*B*1000) + NF dBm.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db, double temperature_k);

// Link-budget SNR for the communication leg (antenna gain applied per end).
double comm_snr(const RfParams& rf, double distance_m);

// B*log2(1+snr) bit/s.
double shannon_rate(double snr_linear, double bandwidth_hz);

// (comm_time, sensing_time): payload/rate for communication, the rest of the
// frame for sensing. Throws FrameOverflowError when the payload cannot fit.
std::pair<double, double> split_frame(double payload_bits, double rate_bps,
                                      double frame_duration_s);

// Monostatic radar-equation SNR: Pt*G^2*lambda^2*sigma / ((4*pi)^3*d^4*k*T*B*F).
double radar_snr(const RfParams& rf, double distance_m);

// (sensing_time*B/2)*log2(1+snr) bits.
double radar_mutual_information(double sensing_time_s, double bandwidth_hz,
                                double radar_snr_linear);

// One FrameBudget per payload at fixed geometry. capacity_gap divides the
// comm SNR before the rate computation (1.0 = Shannon capacity).
std::vector<FrameBudget> jcs_sweep(const std::vector<double>& payload_bits,
                                   const RfParams& rf, double comm_distance_m,
                                   double target_distance_m, double capacity_gap = 1.0);

}  // namespace jcsc

#endif  // JCSC_JCS_LINK_HPP
