#ifndef JCSC_ERRORS_HPP
#define JCSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jcsc {

// Invalid or out-of-range configuration value. Carries the offending key
// ("section.key") so diagnostics can name it.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

// Payload cannot be delivered within one frame at the computed rate.
class FrameOverflowError : public std::runtime_error {
public:
    FrameOverflowError(double payload_bits, double capacity_bits)
        : std::runtime_error("payload of " + std::to_string(payload_bits) +
                             " bits exceeds frame capacity of " +
                             std::to_string(capacity_bits) + " bits"),
          payload_bits_(payload_bits),
          capacity_bits_(capacity_bits) {}

    double payload_bits() const { return payload_bits_; }
    double capacity_bits() const { return capacity_bits_; }

private:
    double payload_bits_;
    double capacity_bits_;
};

}  // namespace jcsc

#endif  // JCSC_ERRORS_HPP
