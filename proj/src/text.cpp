#include "detoxeval/text.hpp"

#include <unicode/ubrk.h>
#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utext.h>
#include <unicode/utf8.h>

#include <stdexcept>

#include "detoxeval/error.hpp"

namespace detoxeval::text {

namespace {

void check(UErrorCode status, const char* what) {
    if (U_FAILURE(status)) {
        throw ValidationError(std::string(what) + ": " + u_errorName(status));
    }
}

std::u16string utf8_to_u16(const std::string& utf8) {
    if (utf8.empty()) return {};
    UErrorCode status = U_ZERO_ERROR;
    int32_t len = 0;
    u_strFromUTF8(nullptr, 0, &len, utf8.data(), static_cast<int32_t>(utf8.size()), &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
        throw ValidationError(std::string("invalid UTF-8: ") + u_errorName(status));
    }
    status = U_ZERO_ERROR;
    std::u16string out(static_cast<std::size_t>(len), u'\0');
    u_strFromUTF8(out.data(), len, nullptr, utf8.data(), static_cast<int32_t>(utf8.size()),
                  &status);
    check(status, "utf8 decode");
    return out;
}

std::string u16_to_utf8(const std::u16string& u16) {
    if (u16.empty()) return {};
    UErrorCode status = U_ZERO_ERROR;
    int32_t len = 0;
    u_strToUTF8(nullptr, 0, &len, u16.data(), static_cast<int32_t>(u16.size()), &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
        throw ValidationError(std::string("utf8 encode: ") + u_errorName(status));
    }
    status = U_ZERO_ERROR;
    std::string out(static_cast<std::size_t>(len), '\0');
    u_strToUTF8(out.data(), len, nullptr, u16.data(), static_cast<int32_t>(u16.size()), &status);
    check(status, "utf8 encode");
    return out;
}

bool is_han(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) ||
           (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x20000 && cp <= 0x2FA1F);
}

// Splits one UAX-29 segment into per-ideograph tokens; non-Han runs inside
// the segment stay grouped.
void append_segment(std::vector<Token>& out, const std::string& utf8, std::size_t begin,
                    std::size_t end, bool is_word) {
    bool has_han = false;
    {
        int32_t i = static_cast<int32_t>(begin);
        while (i < static_cast<int32_t>(end)) {
            UChar32 cp;
            U8_NEXT(utf8.data(), i, static_cast<int32_t>(end), cp);
            if (cp >= 0 && is_han(static_cast<char32_t>(cp))) {
                has_han = true;
                break;
            }
        }
    }
    if (!has_han) {
        out.push_back(Token{utf8.substr(begin, end - begin), begin, end, is_word});
        return;
    }
    int32_t i = static_cast<int32_t>(begin);
    std::size_t run_begin = begin;
    while (i < static_cast<int32_t>(end)) {
        std::size_t cp_begin = static_cast<std::size_t>(i);
        UChar32 cp;
        U8_NEXT(utf8.data(), i, static_cast<int32_t>(end), cp);
        std::size_t cp_end = static_cast<std::size_t>(i);
        if (cp >= 0 && is_han(static_cast<char32_t>(cp))) {
            if (run_begin < cp_begin) {
                out.push_back(
                    Token{utf8.substr(run_begin, cp_begin - run_begin), run_begin, cp_begin,
                          is_word});
            }
            out.push_back(Token{utf8.substr(cp_begin, cp_end - cp_begin), cp_begin, cp_end, true});
            run_begin = cp_end;
        }
    }
    if (run_begin < end) {
        out.push_back(Token{utf8.substr(run_begin, end - run_begin), run_begin, end, is_word});
    }
}

}  // namespace

std::string nfc(const std::string& utf8) {
    if (utf8.empty()) return {};
    UErrorCode status = U_ZERO_ERROR;
    const UNormalizer2* norm = unorm2_getNFCInstance(&status);
    check(status, "nfc instance");
    std::u16string u16 = utf8_to_u16(utf8);
    int32_t len = unorm2_normalize(norm, u16.data(), static_cast<int32_t>(u16.size()), nullptr, 0,
                                   &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
        throw ValidationError(std::string("nfc: ") + u_errorName(status));
    }
    status = U_ZERO_ERROR;
    std::u16string norm16(static_cast<std::size_t>(len), u'\0');
    unorm2_normalize(norm, u16.data(), static_cast<int32_t>(u16.size()), norm16.data(), len,
                     &status);
    check(status, "nfc");
    return u16_to_utf8(norm16);
}

std::string lower(const std::string& utf8) {
    if (utf8.empty()) return {};
    std::u16string u16 = utf8_to_u16(utf8);
    UErrorCode status = U_ZERO_ERROR;
    int32_t len = u_strToLower(nullptr, 0, u16.data(), static_cast<int32_t>(u16.size()), "",
                               &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status)) {
        throw ValidationError(std::string("lowercase: ") + u_errorName(status));
    }
    status = U_ZERO_ERROR;
    std::u16string low(static_cast<std::size_t>(len), u'\0');
    u_strToLower(low.data(), len, u16.data(), static_cast<int32_t>(u16.size()), "", &status);
    check(status, "lowercase");
    return u16_to_utf8(low);
}

std::string match_key(const std::string& utf8) { return lower(nfc(utf8)); }

std::vector<Token> tokenize(const std::string& utf8) {
    std::vector<Token> out;
    if (utf8.empty()) return out;

    UErrorCode status = U_ZERO_ERROR;
    UText ut = UTEXT_INITIALIZER;
    utext_openUTF8(&ut, utf8.data(), static_cast<int64_t>(utf8.size()), &status);
    check(status, "utext");

    UBreakIterator* bi = ubrk_open(UBRK_WORD, "", nullptr, 0, &status);
    if (U_FAILURE(status)) {
        utext_close(&ut);
        check(status, "break iterator");
    }
    ubrk_setUText(bi, &ut, &status);
    if (U_FAILURE(status)) {
        ubrk_close(bi);
        utext_close(&ut);
        check(status, "break iterator text");
    }

    int32_t start = ubrk_first(bi);
    for (int32_t end = ubrk_next(bi); end != UBRK_DONE; start = end, end = ubrk_next(bi)) {
        int32_t rule = ubrk_getRuleStatus(bi);
        bool is_word = rule >= UBRK_WORD_NUMBER;
        std::string segment = utf8.substr(static_cast<std::size_t>(start),
                                          static_cast<std::size_t>(end - start));
        if (!is_word && is_blank(segment)) continue;
        append_segment(out, utf8, static_cast<std::size_t>(start), static_cast<std::size_t>(end),
                       is_word);
    }
    ubrk_close(bi);
    utext_close(&ut);
    return out;
}

std::vector<std::string> token_surfaces(const std::string& utf8) {
    std::vector<std::string> out;
    for (auto& tok : tokenize(utf8)) out.push_back(std::move(tok.surface));
    return out;
}

std::u32string to_u32(const std::string& utf8) {
    std::u32string out;
    out.reserve(utf8.size());
    int32_t i = 0;
    const int32_t n = static_cast<int32_t>(utf8.size());
    while (i < n) {
        UChar32 cp;
        U8_NEXT(utf8.data(), i, n, cp);
        if (cp < 0) throw ValidationError("invalid UTF-8 sequence");
        out.push_back(static_cast<char32_t>(cp));
    }
    return out;
}

std::string to_utf8(const std::u32string& s) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char32_t cp : s) {
        char buf[U8_MAX_LENGTH];
        int32_t len = 0;
        UBool err = false;
        U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
        if (err) throw ValidationError("invalid code point");
        out.append(buf, static_cast<std::size_t>(len));
    }
    return out;
}

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0; }

std::u32string strip_whitespace(const std::u32string& s) {
    std::u32string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (!is_space(cp)) out.push_back(cp);
    }
    return out;
}

bool is_blank(const std::string& utf8) {
    for (char32_t cp : to_u32(utf8)) {
        if (!is_space(cp)) return false;
    }
    return true;
}

}  // namespace detoxeval::text
