#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sentmark {

// Lossless tokenizer. Token classes:
//   - whitespace runs
//   - word runs [A-Za-z0-9_]
//   - sentence-punctuation runs over {. ! ? " ' ) ] }} so that a terminator
//     and its trailing closers form one token
//   - any other character, alone
// Concatenating the tokens reproduces the input byte for byte.
std::vector<std::string> tokenize(std::string_view raw);

bool is_whitespace_token(std::string_view tok);
bool is_word_token(std::string_view tok);

// A piece of text together with its token sequence. Invariant:
// join(tokens) == raw. Enforced by the factory functions.
struct Text {
    std::string raw;
    std::vector<std::string> tokens;

    static Text from_raw(std::string_view raw);
    static Text from_tokens(std::vector<std::string> tokens);

    bool empty() const { return raw.empty(); }
    std::size_t num_tokens() const { return tokens.size(); }
};

// Token-string interning table shared by every learned component of a
// bundle. Ids are dense and stable; id 0..3 are reserved specials.
class Vocabulary {
public:
    static constexpr int kEos = 0;
    static constexpr int kBos = 1;
    static constexpr int kUnk = 2;
    static constexpr int kPad = 3;

    Vocabulary();

    // Interns a token, returning its id (existing or new).
    int add(const std::string& tok);

    // Id lookup; unknown strings map to kUnk.
    int id(const std::string& tok) const;
    bool contains(const std::string& tok) const;

    const std::string& token(int id) const;
    int size() const { return static_cast<int>(tokens_.size()); }

    bool is_special(int id) const { return id < 4; }

    // FNV-1a over the ordered token list; used to guard checkpoint loads.
    std::uint64_t hash() const;

    std::vector<int> ids(const std::vector<std::string>& toks) const;

    const std::vector<std::string>& all_tokens() const { return tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

} // namespace sentmark
