#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sentmark {

// User-chosen watermark key. The key alone determines the infinite message
// bit sequence, so detection reduces to a prefix comparison.
struct WatermarkKey {
    std::vector<std::uint8_t> seed;

    static WatermarkKey from_bytes(std::vector<std::uint8_t> bytes);
    static WatermarkKey from_hex(const std::string& hex); // throws on malformed input
    std::string to_hex() const;

    bool operator==(const WatermarkKey&) const = default;
};

// bit i of the keyed pseudo-random message stream, i >= 0.
std::uint8_t key_bit(const WatermarkKey& key, std::uint64_t index);

// First n bits of the stream. Prefix-stable in n.
std::vector<std::uint8_t> bits(const WatermarkKey& key, std::size_t n);

// Message source for encoding: either the keyed stream or an explicit
// payload that cycles when exhausted (the wrap is observable).
class MessageSource {
public:
    static MessageSource keyed(WatermarkKey key);
    static MessageSource payload(std::vector<std::uint8_t> bits); // throws if empty

    std::uint8_t bit(std::uint64_t index) const;
    // True iff an explicit payload would have wrapped to serve indices
    // 0..count-1.
    bool wraps_at(std::size_t count) const;
    bool is_keyed() const { return keyed_; }
    const WatermarkKey& key() const; // throws if not keyed

private:
    MessageSource() = default;
    bool keyed_ = true;
    WatermarkKey key_{};
    std::vector<std::uint8_t> payload_{};
};

// Per-segment decode result: one bit and one class-1 probability per segment.
struct DecodedMessage {
    std::vector<std::uint8_t> bits;
    std::vector<double> probs;

    std::size_t size() const { return bits.size(); }
};

struct MatchStats {
    std::size_t matches = 0;
    std::size_t n = 0;
    double bit_acc = 0.0; // meaningless when !defined
    bool defined = false; // false iff n == 0
};

MatchStats match_stats(const DecodedMessage& decoded, const WatermarkKey& key);
MatchStats match_stats(const DecodedMessage& decoded, const MessageSource& msg);

// Confidence-weighted per-text detection score in [0,1]:
// mean over i of (probs[i] if key bit i is 1 else 1 - probs[i]).
// Throws on an empty message.
double detection_score(const DecodedMessage& decoded, const WatermarkKey& key);
double detection_score(const DecodedMessage& decoded, const MessageSource& msg);

// One-sided binomial tail P[Binomial(n, 1/2) >= matches]. Exact for n <= 64,
// normal approximation with continuity correction above. Throws if
// matches > n.
double p_value(std::size_t matches, std::size_t n);

} // namespace sentmark
