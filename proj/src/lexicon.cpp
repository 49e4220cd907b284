#include "detoxeval/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "detoxeval/error.hpp"

namespace detoxeval {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string key;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) key.push_back('\x1f');
        key += tokens[i];
    }
    return key;
}

// Trim and collapse internal whitespace runs to a single space.
std::string canonical_surface(const std::string& normalized) {
    std::u32string out;
    bool pending_space = false;
    for (char32_t cp : text::to_u32(normalized)) {
        if (text::is_space(cp)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(U' ');
            pending_space = false;
        }
        out.push_back(cp);
    }
    return text::to_utf8(out);
}

}  // namespace

std::vector<std::string> Lexicon::entries() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [key, surface] : entries_) out.push_back(surface);
    std::sort(out.begin(), out.end());
    return out;
}

void Lexicon::add(const std::string& surface) {
    std::string canonical = canonical_surface(text::match_key(surface));
    std::vector<std::string> tokens = text::token_surfaces(canonical);
    if (tokens.empty()) return;
    std::string key = join_tokens(tokens);
    if (!entries_.emplace(key, canonical).second) return;
    auto& bucket = entries_by_head_[tokens.front()];
    bucket.push_back(std::move(tokens));
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

std::vector<TokenSpan> Lexicon::match_spans(const std::string& utf8) const {
    return match_spans(text::tokenize(utf8));
}

std::vector<TokenSpan> Lexicon::match_spans(const std::vector<text::Token>& tokens) const {
    std::vector<std::string> keys;
    keys.reserve(tokens.size());
    for (const auto& tok : tokens) keys.push_back(text::match_key(tok.surface));

    std::vector<TokenSpan> spans;
    std::size_t i = 0;
    while (i < keys.size()) {
        auto bucket = entries_by_head_.find(keys[i]);
        std::size_t matched_len = 0;
        if (bucket != entries_by_head_.end()) {
            for (const auto& entry : bucket->second) {  // longest first
                if (i + entry.size() > keys.size()) continue;
                bool ok = true;
                for (std::size_t k = 1; k < entry.size(); ++k) {
                    if (keys[i + k] != entry[k]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    matched_len = entry.size();
                    break;
                }
            }
        }
        if (matched_len > 0) {
            spans.push_back(TokenSpan{i, i + matched_len});
            i += matched_len;
        } else {
            ++i;
        }
    }
    return spans;
}

std::string Lexicon::span_entry(const std::vector<text::Token>& tokens,
                                const TokenSpan& span) const {
    std::vector<std::string> keys;
    keys.reserve(span.token_end - span.token_start);
    for (std::size_t i = span.token_start; i < span.token_end; ++i) {
        keys.push_back(text::match_key(tokens[i].surface));
    }
    auto it = entries_.find(join_tokens(keys));
    return it == entries_.end() ? std::string() : it->second;
}

Lexicon load_lexicon(const std::string& path, Lang lang) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open lexicon: " + path);
    Lexicon lexicon(lang);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || text::is_blank(line)) continue;
        ++lexicon.raw_line_count_;
        lexicon.add(line);
    }
    if (lexicon.size() == 0) throw ValidationError(path + ": empty lexicon");
    return lexicon;
}

}  // namespace detoxeval
