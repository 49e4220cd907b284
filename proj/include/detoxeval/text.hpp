#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace detoxeval::text {

// Canonical composition (NFC). All corpus and lexicon text goes through this
// once at load time so matching and metrics see one byte form per string.
std::string nfc(const std::string& utf8);

// Root-locale full lowercase. Identity for caseless scripts (Arabic,
// Devanagari, Ethiopic, Han).
std::string lower(const std::string& utf8);

// nfc + lower, the key form used for lexicon lookups.
std::string match_key(const std::string& utf8);

struct Token {
    std::string surface;     // bytes copied from the input
    std::size_t byte_begin;  // offset into the input string
    std::size_t byte_end;
    bool is_word;            // letters/digits/ideographs vs punctuation
};

// UAX-29 word segmentation. Whitespace segments are dropped; punctuation
// segments are kept as their own tokens. Segments containing Han ideographs
// are split into one token per ideograph so lexicon collocations can be
// matched as contiguous character sequences.
std::vector<Token> tokenize(const std::string& utf8);

// Convenience: just the surfaces.
std::vector<std::string> token_surfaces(const std::string& utf8);

// Code-point decoding for character-level metrics.
std::u32string to_u32(const std::string& utf8);
std::string to_utf8(const std::u32string& s);

bool is_space(char32_t cp);

// Removes all whitespace code points (chrF operates on these).
std::u32string strip_whitespace(const std::u32string& s);

// True when the string is empty or whitespace-only.
bool is_blank(const std::string& utf8);

}  // namespace detoxeval::text
