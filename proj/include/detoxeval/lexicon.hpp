#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "detoxeval/lang.hpp"
#include "detoxeval/text.hpp"

namespace detoxeval {

// Token span over the tokenization of some text: [token_start, token_end).
struct TokenSpan {
    std::size_t token_start = 0;
    std::size_t token_end = 0;
};

// Per-language set of toxic words and collocations. Entries are stored as
// normalized (NFC + lowercase) token sequences; matching is longest-first,
// left to right, over the same tokenizer the rest of the toolkit uses.
class Lexicon {
  public:
    explicit Lexicon(Lang lang) : lang_(lang) {}

    Lang lang() const { return lang_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t raw_line_count() const { return raw_line_count_; }

    // Canonical entry surfaces, lexicographically sorted.
    std::vector<std::string> entries() const;

    void add(const std::string& surface);

    std::vector<TokenSpan> match_spans(const std::string& utf8) const;
    std::vector<TokenSpan> match_spans(const std::vector<text::Token>& tokens) const;

    // The canonical entry surface a matched span corresponds to.
    std::string span_entry(const std::vector<text::Token>& tokens, const TokenSpan& span) const;

  private:
    Lang lang_;
    std::size_t raw_line_count_ = 0;
    // first normalized token -> candidate entries as token sequences, longest first
    std::map<std::string, std::vector<std::vector<std::string>>> entries_by_head_;
    std::map<std::string, std::string> entries_;  // token-sequence key -> canonical surface

    friend Lexicon load_lexicon(const std::string& path, Lang lang);
};

// Plain-text lexicon: one entry per line, '#' comments and blank lines
// ignored. Throws on unreadable files and on lexicons with zero surviving
// entries.
Lexicon load_lexicon(const std::string& path, Lang lang);

}  // namespace detoxeval
