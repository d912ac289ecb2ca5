#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ocrpost::textnorm {

enum class Language { English, Finnish, Other };

Language language_from_code(std::string_view code);  // "en", "fi", anything else -> Other
std::string language_code(Language lang);

// Normalization applied to GT, OCR and model output alike before any metric
// is computed. Raw texts are never modified in place anywhere else.
struct NormalizationPolicy {
    bool collapse_whitespace = true;
    bool apply_nfkc = true;
    bool finnish_w_to_v = false;
    Language language = Language::Other;

    // Throws PolicyError if finnish_w_to_v is set for a non-Finnish language.
    void validate() const;

    static NormalizationPolicy english();
    static NormalizationPolicy finnish();
    static NormalizationPolicy for_language(Language lang);
};

bool is_unicode_space(char32_t cp);

// Every maximal run of Unicode whitespace becomes a single ' '; leading and
// trailing whitespace is dropped.
std::string collapse_whitespace(std::string_view text);

// Unicode NFKC normalization (long s -> s, ligature expansion, ...).
std::string apply_nfkc(std::string_view text);

// w -> v and W -> V; every other code point passes through unchanged.
std::string finnish_w_to_v(std::string_view text);

// Composition, in order: whitespace collapse, NFKC, a second whitespace
// collapse (NFKC can emit compatibility whitespace), then w->v if enabled.
std::string normalize_for_eval(std::string_view text, const NormalizationPolicy& policy);

// Byte span [begin, end) into the string a word was sliced from.
struct ByteSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Maximal non-whitespace runs, as byte spans into `text`.
std::vector<ByteSpan> word_spans(std::string_view text);

std::size_t word_count(std::string_view text);

// Whitespace-delimited tokens.
std::vector<std::string> tokenize_words(std::string_view text);

}  // namespace ocrpost::textnorm
