#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ocrpost/textnorm.hpp"

namespace ocrpost::metrics {

// Character error rate: minimal substitutions + deletions + insertions
// divided by the ground-truth length. Throws EmptyReferenceError on empty gt.
double cer(std::string_view gt, std::string_view hyp);

// Word error rate over whitespace-delimited tokens.
double wer(std::string_view gt, std::string_view hyp);

// (orig - post) / orig * 100, clipped below at -100. The orig = 0 degenerate
// case maps to 0 when post = 0 and -100 otherwise.
double relative_improvement(double orig, double post);

struct PairScore {
    std::string example_id;
    double cer_orig = 0, cer_post = 0;
    double wer_orig = 0, wer_post = 0;
    double cer_pct = 0, wer_pct = 0;
    std::size_t ocr_char_len = 0;  // normalized OCR code point count (weighting basis)
    std::size_t gt_char_len = 0;   // normalized GT code point count
};

// Normalizes gt/ocr/corrected identically, then scores before and after.
PairScore score_pair(std::string_view example_id, std::string_view gt, std::string_view ocr,
                     std::string_view corrected, const textnorm::NormalizationPolicy& policy);

struct Quantiles {
    double min = 0, p25 = 0, median = 0, p75 = 0, max = 0;
};

struct AggregateReport {
    std::size_t n_examples = 0;
    double weighted_cer_pct = 0;  // weighted by OCR character count
    double weighted_wer_pct = 0;
    double mean_cer_orig = 0;
    double mean_cer_post = 0;
    Quantiles cer_orig_quantiles;
    Quantiles cer_post_quantiles;
};

AggregateReport aggregate(const std::vector<PairScore>& scores);

enum class Side { Left, Right };

struct BoundaryWindowScore {
    double cer_window = 0;
    std::size_t gt_window_chars = 0;  // weighting basis for boundary tables
    textnorm::ByteSpan gt_span;       // window span in gt
    textnorm::ByteSpan hyp_span;      // located span in hyp
};

// CER inside the window_words GT words left or right of a word boundary.
// The hypothesis region is located through a global character alignment of
// gt and hyp. Throws WindowOutOfRangeError when gt is too short on the
// requested side.
BoundaryWindowScore boundary_window_cer(std::string_view gt, std::string_view hyp,
                                        std::size_t boundary_gt_word_index,
                                        std::size_t window_words, Side side);

// Edit distance over code points / whitespace tokens; exposed for reuse.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t word_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace ocrpost::metrics
