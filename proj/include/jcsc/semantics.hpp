#ifndef JCSC_SEMANTICS_HPP
#define JCSC_SEMANTICS_HPP

#include <cstdint>
#include <string>

namespace jcsc {

enum class PayloadSource { cityscapes_frame, camvid_frame, custom };

std::string to_string(PayloadSource source);
PayloadSource payload_source_from_string(const std::string& text);

// Parametric raw-vs-semantic payload model. A frame of width x height pixels
// at bits_per_pixel is the raw payload; the semantic payload is smaller by
// semantic_ratio (raw bits per semantic bit).
struct PayloadSpec {
    PayloadSource source = PayloadSource::custom;
    int width = 0;              // pixels
    int height = 0;             // pixels
    int bits_per_pixel = 0;
    double semantic_ratio = 1.0;  // >= 1

    friend bool operator==(const PayloadSpec&, const PayloadSpec&) = default;
};

std::uint64_t raw_payload_bits(const PayloadSpec& spec);

// ceil(raw / semantic_ratio)
std::uint64_t semantic_payload_bits(const PayloadSpec& spec);

// Channel uses are proportional to bits at fixed rate, so the spectrum
// efficiency gain equals the bit ratio.
double efficiency_gain(std::uint64_t raw_bits, std::uint64_t semantic_bits);

}  // namespace jcsc

#endif  // JCSC_SEMANTICS_HPP
