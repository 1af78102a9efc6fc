#include "jcsc/semantics.hpp"

#include <cmath>
#include <stdexcept>

namespace jcsc {

std::string to_string(PayloadSource source) {
    switch (source) {
        case PayloadSource::cityscapes_frame: return "cityscapes_frame";
        case PayloadSource::camvid_frame: return "camvid_frame";
        case PayloadSource::custom: return "custom";
    }
    throw std::logic_error("unhandled payload source");
}

PayloadSource payload_source_from_string(const std::string& text) {
    if (text == "cityscapes_frame") return PayloadSource::cityscapes_frame;
    if (text == "camvid_frame") return PayloadSource::camvid_frame;
    if (text == "custom") return PayloadSource::custom;
    throw std::invalid_argument("unknown payload source: " + text);
}

namespace {

void check_spec(const PayloadSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0 || spec.bits_per_pixel <= 0) {
        throw std::invalid_argument("payload dimensions must be positive");
    }
    if (!(spec.semantic_ratio >= 1.0)) {
        throw std::invalid_argument("semantic_ratio must be >= 1");
    }
}

}  // namespace

std::uint64_t raw_payload_bits(const PayloadSpec& spec) {
    check_spec(spec);
    return static_cast<std::uint64_t>(spec.width) *
           static_cast<std::uint64_t>(spec.height) *
           static_cast<std::uint64_t>(spec.bits_per_pixel);
}

std::uint64_t semantic_payload_bits(const PayloadSpec& spec) {
    const std::uint64_t raw = raw_payload_bits(spec);
    const double scaled = std::ceil(static_cast<double>(raw) / spec.semantic_ratio);
    return static_cast<std::uint64_t>(scaled);
}

double efficiency_gain(std::uint64_t raw_bits, std::uint64_t semantic_bits) {
    if (semantic_bits == 0) {
        throw std::domain_error("efficiency gain undefined for zero semantic bits");
    }
    return static_cast<double>(raw_bits) / static_cast<double>(semantic_bits);
}

}  // namespace jcsc
