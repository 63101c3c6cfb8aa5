#pragma once

#include "sentmark/text.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sentmark {

// One sentence-level unit of a parent text.
struct Segment {
    std::size_t start_token; // inclusive
    std::size_t end_token;   // exclusive
    std::string text;

    bool operator==(const Segment&) const = default;
};

// True when s, after stripping trailing closing quotes/brackets, ends with
// '.', '!' or '?'.
bool ends_sentence(std::string_view s);

// Incremental segment-boundary tracker. Encoding and decoding both run this
// exact machine over the token stream, so the boundary positions seen during
// generation and the splits computed afterwards always agree. A boundary
// fires at the first token that makes the *current segment's* text a
// finished sentence; the segment state then resets, so every emitted segment
// re-splits to itself.
class SegmentCursor {
public:
    // Feeds one token; returns true when this token closes a segment
    // (the next token, if any, starts a new one).
    bool push(std::string_view token);

    std::size_t tokens_seen() const { return tokens_seen_; }

private:
    std::string segment_text_;
    bool segment_closed_ = false;
    std::size_t tokens_seen_ = 0;
};

// Encode-mode query: would the next generated token begin a new segment?
// False for an empty prefix.
bool boundary_after(const Text& prefix);

// Decode-mode split. Segments are contiguous, cover the text exactly, and
// trailing unterminated text forms a final segment. Empty text -> empty.
std::vector<Segment> split(const Text& text);
std::vector<Segment> split(std::string_view raw);

} // namespace sentmark
