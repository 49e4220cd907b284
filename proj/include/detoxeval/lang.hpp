#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace detoxeval {

// The nine languages covered by the parallel corpora.
enum class Lang { en, es, de, zh, ar, hi, uk, ru, am };

inline constexpr std::array<Lang, 9> kAllLangs = {
    Lang::en, Lang::es, Lang::de, Lang::zh, Lang::ar,
    Lang::hi, Lang::uk, Lang::ru, Lang::am};

constexpr std::string_view to_string(Lang lang) {
    switch (lang) {
        case Lang::en: return "en";
        case Lang::es: return "es";
        case Lang::de: return "de";
        case Lang::zh: return "zh";
        case Lang::ar: return "ar";
        case Lang::hi: return "hi";
        case Lang::uk: return "uk";
        case Lang::ru: return "ru";
        case Lang::am: return "am";
    }
    return "en";
}

inline std::optional<Lang> parse_lang(std::string_view code) {
    for (Lang lang : kAllLangs) {
        if (code == to_string(lang)) return lang;
    }
    return std::nullopt;
}

}  // namespace detoxeval
