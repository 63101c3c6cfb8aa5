#include "sentmark/keystream.hpp"

#include <cmath>
#include <stdexcept>

namespace sentmark {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

WatermarkKey WatermarkKey::from_bytes(std::vector<std::uint8_t> bytes) {
    if (bytes.empty()) throw std::invalid_argument("watermark key must be non-empty");
    return WatermarkKey{std::move(bytes)};
}

WatermarkKey WatermarkKey::from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() % 2 != 0) {
        throw std::invalid_argument("watermark key hex string must be non-empty with even length");
    }
    std::vector<std::uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_digit(hex[i]);
        int lo = hex_digit(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("watermark key contains a non-hex character");
        }
        bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return WatermarkKey{std::move(bytes)};
}

std::string WatermarkKey::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(seed.size() * 2);
    for (std::uint8_t b : seed) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::uint8_t key_bit(const WatermarkKey& key, std::uint64_t index) {
    std::uint64_t k0 = fnv1a64(key.seed);
    std::uint64_t mixed = splitmix64(k0 ^ splitmix64(index + 0x51ED2701A9E5C371ULL));
    return static_cast<std::uint8_t>(mixed >> 63);
}

std::vector<std::uint8_t> bits(const WatermarkKey& key, std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(key_bit(key, i));
    return out;
}

MessageSource MessageSource::keyed(WatermarkKey key) {
    MessageSource m;
    m.keyed_ = true;
    m.key_ = std::move(key);
    return m;
}

MessageSource MessageSource::payload(std::vector<std::uint8_t> bits) {
    if (bits.empty()) throw std::invalid_argument("explicit payload must be non-empty");
    for (auto b : bits) {
        if (b > 1) throw std::invalid_argument("payload bits must be 0 or 1");
    }
    MessageSource m;
    m.keyed_ = false;
    m.payload_ = std::move(bits);
    return m;
}

std::uint8_t MessageSource::bit(std::uint64_t index) const {
    if (keyed_) return key_bit(key_, index);
    return payload_[index % payload_.size()];
}

bool MessageSource::wraps_at(std::size_t count) const {
    return !keyed_ && count > payload_.size();
}

const WatermarkKey& MessageSource::key() const {
    if (!keyed_) throw std::logic_error("message source carries an explicit payload, not a key");
    return key_;
}

namespace {

MatchStats match_against(const DecodedMessage& decoded, const MessageSource& msg) {
    MatchStats s;
    s.n = decoded.bits.size();
    for (std::size_t i = 0; i < s.n; ++i) {
        if (decoded.bits[i] == msg.bit(i)) ++s.matches;
    }
    if (s.n > 0) {
        s.bit_acc = static_cast<double>(s.matches) / static_cast<double>(s.n);
        s.defined = true;
    }
    return s;
}

} // namespace

MatchStats match_stats(const DecodedMessage& decoded, const WatermarkKey& key) {
    return match_against(decoded, MessageSource::keyed(key));
}

MatchStats match_stats(const DecodedMessage& decoded, const MessageSource& msg) {
    return match_against(decoded, msg);
}

double detection_score(const DecodedMessage& decoded, const MessageSource& msg) {
    if (decoded.probs.empty()) throw std::invalid_argument("detection_score: no segments");
    double acc = 0.0;
    for (std::size_t i = 0; i < decoded.probs.size(); ++i) {
        acc += msg.bit(i) == 1 ? decoded.probs[i] : 1.0 - decoded.probs[i];
    }
    return acc / static_cast<double>(decoded.probs.size());
}

double detection_score(const DecodedMessage& decoded, const WatermarkKey& key) {
    return detection_score(decoded, MessageSource::keyed(key));
}

double p_value(std::size_t matches, std::size_t n) {
    if (matches > n) throw std::invalid_argument("p_value: matches > n");
    if (n == 0) return 1.0;
    if (n <= 64) {
        // Pascal's triangle in 128-bit integers; every C(n,k) with n <= 64
        // fits in 64 bits and the tail sum fits in 128.
        std::vector<unsigned __int128> row(n + 1, 0);
        row[0] = 1;
        for (std::size_t r = 1; r <= n; ++r) {
            for (std::size_t k = r; k > 0; --k) row[k] += row[k - 1];
        }
        unsigned __int128 tail = 0;
        for (std::size_t k = matches; k <= n; ++k) tail += row[k];
        long double denom = std::ldexp(1.0L, static_cast<int>(n));
        return static_cast<double>(static_cast<long double>(tail) / denom);
    }
    // Normal approximation with continuity correction.
    double nd = static_cast<double>(n);
    double z = (static_cast<double>(matches) - 0.5 - nd / 2.0) / std::sqrt(nd / 2.0);
    return 0.5 * std::erfc(z);
}

} // namespace sentmark
