#include "ocrpost/textnorm.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "ocrpost/errors.hpp"
#include "ocrpost/utf8.hpp"

namespace ocrpost::textnorm {

Language language_from_code(std::string_view code) {
    if (code == "en") return Language::English;
    if (code == "fi") return Language::Finnish;
    return Language::Other;
}

std::string language_code(Language lang) {
    switch (lang) {
        case Language::English: return "en";
        case Language::Finnish: return "fi";
        default: return "other";
    }
}

void NormalizationPolicy::validate() const {
    if (finnish_w_to_v && language != Language::Finnish)
        throw PolicyError("finnish_w_to_v requires language = Finnish");
}

NormalizationPolicy NormalizationPolicy::english() {
    return NormalizationPolicy{true, true, false, Language::English};
}

NormalizationPolicy NormalizationPolicy::finnish() {
    return NormalizationPolicy{true, true, true, Language::Finnish};
}

NormalizationPolicy NormalizationPolicy::for_language(Language lang) {
    switch (lang) {
        case Language::English: return english();
        case Language::Finnish: return finnish();
        default: return NormalizationPolicy{true, true, false, Language::Other};
    }
}

bool is_unicode_space(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

std::string collapse_whitespace(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    std::u32string out;
    out.reserve(cps.size());
    bool pending_space = false;
    for (char32_t cp : cps) {
        if (is_unicode_space(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(cp);
        }
    }
    return utf8::encode(out);
}

std::string apply_nfkc(std::string_view text) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfkc = icu::Normalizer2::getNFKCInstance(status);
    if (U_FAILURE(status) || nfkc == nullptr)
        throw Error("ICU NFKC normalizer unavailable");
    const icu::UnicodeString input =
        icu::UnicodeString::fromUTF8(icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    const icu::UnicodeString normalized = nfkc->normalize(input, status);
    if (U_FAILURE(status)) throw Error("NFKC normalization failed");
    std::string out;
    normalized.toUTF8String(out);
    return out;
}

std::string finnish_w_to_v(std::string_view text) {
    // 'w'/'W' are single bytes in UTF-8 and never occur inside multi-byte
    // sequences, so a byte-level pass is safe.
    std::string out(text);
    for (char& c : out) {
        if (c == 'w') c = 'v';
        else if (c == 'W') c = 'V';
    }
    return out;
}

std::string normalize_for_eval(std::string_view text, const NormalizationPolicy& policy) {
    policy.validate();
    std::string out(text);
    if (policy.collapse_whitespace) out = collapse_whitespace(out);
    if (policy.apply_nfkc) {
        out = apply_nfkc(out);
        if (policy.collapse_whitespace) out = collapse_whitespace(out);
    }
    if (policy.finnish_w_to_v) out = finnish_w_to_v(out);
    return out;
}

std::vector<ByteSpan> word_spans(std::string_view text) {
    const utf8::DecodedText dec = utf8::decode_with_offsets(text);
    std::vector<ByteSpan> spans;
    std::size_t i = 0;
    const std::size_t n = dec.codepoints.size();
    while (i < n) {
        while (i < n && is_unicode_space(dec.codepoints[i])) ++i;
        if (i >= n) break;
        const std::size_t begin = dec.byte_begin[i];
        while (i < n && !is_unicode_space(dec.codepoints[i])) ++i;
        spans.push_back(ByteSpan{begin, dec.byte_end[i - 1]});
    }
    return spans;
}

std::size_t word_count(std::string_view text) {
    return word_spans(text).size();
}

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> words;
    for (const ByteSpan& s : word_spans(text))
        words.emplace_back(text.substr(s.begin, s.end - s.begin));
    return words;
}

}  // namespace ocrpost::textnorm
