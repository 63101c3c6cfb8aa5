#include "sentmark/textseg.hpp"

namespace sentmark {

namespace {

bool is_closer(char c) {
    switch (c) {
        case '"': case '\'': case ')': case ']': case '}':
            return true;
        default:
            return false;
    }
}

bool is_terminator(char c) {
    return c == '.' || c == '!' || c == '?';
}

} // namespace

bool ends_sentence(std::string_view s) {
    std::size_t n = s.size();
    while (n > 0 && is_closer(s[n - 1])) --n;
    return n > 0 && is_terminator(s[n - 1]);
}

bool SegmentCursor::push(std::string_view token) {
    if (segment_closed_) {
        segment_text_.clear();
        segment_closed_ = false;
    }
    segment_text_.append(token);
    ++tokens_seen_;
    if (ends_sentence(segment_text_)) {
        segment_closed_ = true;
        return true;
    }
    return false;
}

bool boundary_after(const Text& prefix) {
    if (prefix.tokens.empty()) return false;
    SegmentCursor cur;
    bool fired = false;
    for (const auto& tok : prefix.tokens) fired = cur.push(tok);
    return fired;
}

std::vector<Segment> split(const Text& text) {
    std::vector<Segment> out;
    if (text.tokens.empty()) return out;

    SegmentCursor cur;
    std::size_t seg_start_tok = 0;
    std::size_t seg_start_char = 0;
    std::size_t char_pos = 0;
    for (std::size_t t = 0; t < text.tokens.size(); ++t) {
        char_pos += text.tokens[t].size();
        if (cur.push(text.tokens[t])) {
            out.push_back(Segment{seg_start_tok, t + 1,
                                  text.raw.substr(seg_start_char, char_pos - seg_start_char)});
            seg_start_tok = t + 1;
            seg_start_char = char_pos;
        }
    }
    if (seg_start_tok < text.tokens.size()) {
        out.push_back(Segment{seg_start_tok, text.tokens.size(), text.raw.substr(seg_start_char)});
    }
    return out;
}

std::vector<Segment> split(std::string_view raw) {
    return split(Text::from_raw(raw));
}

} // namespace sentmark
