#include "sentmark/text.hpp"

#include <cctype>
#include <stdexcept>

namespace sentmark {

namespace {

enum class CharClass { Space, Word, SentPunct, Other };

CharClass classify(char c) {
    if (std::isspace(static_cast<unsigned char>(c))) return CharClass::Space;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return CharClass::Word;
    switch (c) {
        case '.': case '!': case '?':
        case '"': case '\'': case ')': case ']': case '}':
            return CharClass::SentPunct;
        default:
            return CharClass::Other;
    }
}

} // namespace

std::vector<std::string> tokenize(std::string_view raw) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        CharClass cls = classify(raw[i]);
        std::size_t j = i + 1;
        if (cls != CharClass::Other) {
            while (j < raw.size() && classify(raw[j]) == cls) ++j;
        }
        out.emplace_back(raw.substr(i, j - i));
        i = j;
    }
    return out;
}

bool is_whitespace_token(std::string_view tok) {
    return !tok.empty() && classify(tok.front()) == CharClass::Space;
}

bool is_word_token(std::string_view tok) {
    return !tok.empty() && classify(tok.front()) == CharClass::Word;
}

Text Text::from_raw(std::string_view raw) {
    Text t;
    t.raw.assign(raw);
    t.tokens = tokenize(raw);
    return t;
}

Text Text::from_tokens(std::vector<std::string> tokens) {
    Text t;
    for (const auto& tok : tokens) t.raw += tok;
    t.tokens = std::move(tokens);
    return t;
}

Vocabulary::Vocabulary() {
    add("<eos>");
    add("<bos>");
    add("<unk>");
    add("<pad>");
}

int Vocabulary::add(const std::string& tok) {
    auto it = index_.find(tok);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(tokens_.size());
    tokens_.push_back(tok);
    index_.emplace(tok, id);
    return id;
}

int Vocabulary::id(const std::string& tok) const {
    auto it = index_.find(tok);
    return it == index_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string& tok) const {
    return index_.count(tok) > 0;
}

const std::string& Vocabulary::token(int id) const {
    if (id < 0 || id >= size()) throw std::out_of_range("Vocabulary::token: bad id " + std::to_string(id));
    return tokens_[static_cast<std::size_t>(id)];
}

std::uint64_t Vocabulary::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& tok : tokens_) {
        for (char c : tok) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ULL;
        }
        h ^= 0xFF; // token separator
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<int> Vocabulary::ids(const std::vector<std::string>& toks) const {
    std::vector<int> out;
    out.reserve(toks.size());
    for (const auto& t : toks) out.push_back(id(t));
    return out;
}

} // namespace sentmark
