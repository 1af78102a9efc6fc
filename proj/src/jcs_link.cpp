#include "jcsc/jcs_link.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jcsc {

namespace {

void check_rf(const RfParams& rf) {
    if (!(rf.transmit_power_w > 0.0) || !(rf.carrier_frequency_hz > 0.0) ||
        !(rf.bandwidth_hz > 0.0) || !(rf.frame_duration_s > 0.0) ||
        !(rf.system_temperature_k > 0.0)) {
        throw std::invalid_argument("RF parameters must be positive");
    }
    if (rf.antenna_gain_dbi < 0.0 || rf.noise_figure_db < 0.0 ||
        rf.radar_cross_section_m2 < 0.0) {
        throw std::invalid_argument("RF gains and cross section must be nonnegative");
    }
}

}  // namespace

double fspl_db(double distance_m, double frequency_hz) {
    if (!(distance_m > 0.0) || !(frequency_hz > 0.0)) {
        throw std::domain_error("fspl requires positive distance and frequency");
    }
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz /
                             kSpeedOfLight);
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db, double temperature_k) {
    if (!(bandwidth_hz > 0.0) || !(temperature_k > 0.0)) {
        throw std::domain_error("noise power requires positive bandwidth and temperature");
    }
    return 10.0 * std::log10(kBoltzmann * temperature_k * bandwidth_hz * 1000.0) +
           noise_figure_db;
}

double comm_snr(const RfParams& rf, double distance_m) {
    check_rf(rf);
    const double pt_dbm = 10.0 * std::log10(rf.transmit_power_w * 1000.0);
    const double snr_db = pt_dbm + 2.0 * rf.antenna_gain_dbi -
                          fspl_db(distance_m, rf.carrier_frequency_hz) -
                          noise_power_dbm(rf.bandwidth_hz, rf.noise_figure_db,
                                          rf.system_temperature_k);
    return std::pow(10.0, snr_db / 10.0);
}

double shannon_rate(double snr_linear, double bandwidth_hz) {
    if (snr_linear < 0.0) {
        throw std::invalid_argument("snr must be nonnegative");
    }
    return bandwidth_hz * std::log2(1.0 + snr_linear);
}

std::pair<double, double> split_frame(double payload_bits, double rate_bps,
                                      double frame_duration_s) {
    if (!(rate_bps > 0.0)) {
        throw std::invalid_argument("rate must be positive");
    }
    if (payload_bits < 0.0) {
        throw std::invalid_argument("payload must be nonnegative");
    }
    const double capacity_bits = rate_bps * frame_duration_s;
    if (payload_bits > capacity_bits) {
        throw FrameOverflowError(payload_bits, capacity_bits);
    }
    double comm = payload_bits / rate_bps;
    if (comm > frame_duration_s) {
        comm = frame_duration_s;  // capacity boundary, rounding artefact
    }
    double sensing = frame_duration_s - comm;
    if (comm + sensing != frame_duration_s) {
        comm = frame_duration_s - sensing;  // enforce exact frame conservation
    }
    return {comm, sensing};
}

double radar_snr(const RfParams& rf, double distance_m) {
    check_rf(rf);
    if (!(distance_m > 0.0)) {
        throw std::domain_error("radar snr requires positive distance");
    }
    const double gain = std::pow(10.0, rf.antenna_gain_dbi / 10.0);
    const double noise_factor = std::pow(10.0, rf.noise_figure_db / 10.0);
    const double wavelength = kSpeedOfLight / rf.carrier_frequency_hz;
    const double numerator = rf.transmit_power_w * gain * gain * wavelength *
                             wavelength * rf.radar_cross_section_m2;
    const double denominator = std::pow(4.0 * std::numbers::pi, 3) *
                               std::pow(distance_m, 4) * kBoltzmann *
                               rf.system_temperature_k * rf.bandwidth_hz * noise_factor;
    return numerator / denominator;
}

double radar_mutual_information(double sensing_time_s, double bandwidth_hz,
                                double radar_snr_linear) {
    if (sensing_time_s < 0.0) {
        throw std::invalid_argument("sensing time must be nonnegative");
    }
    if (radar_snr_linear < 0.0) {
        throw std::invalid_argument("radar snr must be nonnegative");
    }
    return sensing_time_s * bandwidth_hz / 2.0 * std::log2(1.0 + radar_snr_linear);
}

std::vector<FrameBudget> jcs_sweep(const std::vector<double>& payload_bits,
                                   const RfParams& rf, double comm_distance_m,
                                   double target_distance_m, double capacity_gap) {
    if (!(capacity_gap > 0.0)) {
        throw std::invalid_argument("capacity gap must be positive");
    }
    const double snr = comm_snr(rf, comm_distance_m);
    const double rate = shannon_rate(snr / capacity_gap, rf.bandwidth_hz);
    const double rsnr = radar_snr(rf, target_distance_m);

    std::vector<FrameBudget> budgets;
    budgets.reserve(payload_bits.size());
    for (double payload : payload_bits) {
        const auto [comm_time, sensing_time] =
            split_frame(payload, rate, rf.frame_duration_s);
        FrameBudget budget;
        budget.comm_time_s = comm_time;
        budget.sensing_time_s = sensing_time;
        budget.comm_rate_bps = rate;
        budget.comm_snr = snr;
        budget.radar_snr = rsnr;
        budget.radar_mi_bits =
            radar_mutual_information(sensing_time, rf.bandwidth_hz, rsnr);
        budgets.push_back(budget);
    }
    return budgets;
}

}  // namespace jcsc
