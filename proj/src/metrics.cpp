#include "ocrpost/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ocrpost/align.hpp"
#include "ocrpost/errors.hpp"
#include "ocrpost/utf8.hpp"

namespace ocrpost::metrics {

namespace {

template <typename Seq, typename Eq>
std::size_t levenshtein(const Seq& a, const Seq& b, Eq eq) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::size_t> row(m + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t save = row[j];
            const std::size_t sub = diag + (eq(a[i - 1], b[j - 1]) ? 0 : 1);
            row[j] = std::min({sub, row[j] + 1, row[j - 1] + 1});
            diag = save;
        }
    }
    return row[m];
}

Quantiles quantiles_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    auto at = [&](double q) {
        if (values.empty()) return 0.0;
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, values.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    Quantiles q;
    q.min = at(0.0);
    q.p25 = at(0.25);
    q.median = at(0.5);
    q.p75 = at(0.75);
    q.max = at(1.0);
    return q;
}

}  // namespace

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
    return levenshtein(a, b, [](char32_t x, char32_t y) { return x == y; });
}

std::size_t word_edit_distance(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
    return levenshtein(a, b, [](const std::string& x, const std::string& y) { return x == y; });
}

double cer(std::string_view gt, std::string_view hyp) {
    const std::u32string g = utf8::decode(gt);
    if (g.empty()) throw EmptyReferenceError("CER undefined for empty reference");
    const std::u32string h = utf8::decode(hyp);
    return static_cast<double>(edit_distance(g, h)) / static_cast<double>(g.size());
}

double wer(std::string_view gt, std::string_view hyp) {
    const std::vector<std::string> g = textnorm::tokenize_words(gt);
    if (g.empty()) throw EmptyReferenceError("WER undefined for empty reference");
    const std::vector<std::string> h = textnorm::tokenize_words(hyp);
    return static_cast<double>(word_edit_distance(g, h)) / static_cast<double>(g.size());
}

double relative_improvement(double orig, double post) {
    if (orig == 0.0) return post == 0.0 ? 0.0 : -100.0;
    return std::max(-100.0, (orig - post) / orig * 100.0);
}

PairScore score_pair(std::string_view example_id, std::string_view gt, std::string_view ocr,
                     std::string_view corrected, const textnorm::NormalizationPolicy& policy) {
    const std::string gt_n = textnorm::normalize_for_eval(gt, policy);
    const std::string ocr_n = textnorm::normalize_for_eval(ocr, policy);
    const std::string cor_n = textnorm::normalize_for_eval(corrected, policy);
    PairScore s;
    s.example_id = std::string(example_id);
    s.cer_orig = cer(gt_n, ocr_n);
    s.cer_post = cer(gt_n, cor_n);
    s.wer_orig = wer(gt_n, ocr_n);
    s.wer_post = wer(gt_n, cor_n);
    s.cer_pct = relative_improvement(s.cer_orig, s.cer_post);
    s.wer_pct = relative_improvement(s.wer_orig, s.wer_post);
    s.ocr_char_len = utf8::length(ocr_n);
    s.gt_char_len = utf8::length(gt_n);
    return s;
}

AggregateReport aggregate(const std::vector<PairScore>& scores) {
    if (scores.empty()) throw EmptyCorpusError("no scores to aggregate");
    AggregateReport r;
    r.n_examples = scores.size();
    double wsum = 0, cer_acc = 0, wer_acc = 0;
    std::vector<double> cer_orig_all, cer_post_all;
    cer_orig_all.reserve(scores.size());
    cer_post_all.reserve(scores.size());
    for (const PairScore& s : scores) {
        const double w = static_cast<double>(s.ocr_char_len);
        wsum += w;
        cer_acc += w * s.cer_pct;
        wer_acc += w * s.wer_pct;
        r.mean_cer_orig += s.cer_orig;
        r.mean_cer_post += s.cer_post;
        cer_orig_all.push_back(s.cer_orig);
        cer_post_all.push_back(s.cer_post);
    }
    r.weighted_cer_pct = wsum > 0 ? cer_acc / wsum : 0.0;
    r.weighted_wer_pct = wsum > 0 ? wer_acc / wsum : 0.0;
    r.mean_cer_orig /= static_cast<double>(scores.size());
    r.mean_cer_post /= static_cast<double>(scores.size());
    r.cer_orig_quantiles = quantiles_of(std::move(cer_orig_all));
    r.cer_post_quantiles = quantiles_of(std::move(cer_post_all));
    return r;
}

BoundaryWindowScore boundary_window_cer(std::string_view gt, std::string_view hyp,
                                        std::size_t boundary_gt_word_index,
                                        std::size_t window_words, Side side) {
    const std::vector<textnorm::ByteSpan> gt_words = textnorm::word_spans(gt);
    std::size_t first_word, last_word;  // inclusive word range of the window
    if (side == Side::Left) {
        if (boundary_gt_word_index < window_words)
            throw WindowOutOfRangeError("not enough GT words left of the boundary");
        first_word = boundary_gt_word_index - window_words;
        last_word = boundary_gt_word_index - 1;
    } else {
        if (boundary_gt_word_index + window_words > gt_words.size())
            throw WindowOutOfRangeError("not enough GT words right of the boundary");
        first_word = boundary_gt_word_index;
        last_word = boundary_gt_word_index + window_words - 1;
    }
    const textnorm::ByteSpan gt_span{gt_words[first_word].begin, gt_words[last_word].end};
    const std::string gt_window(gt.substr(gt_span.begin, gt_span.end - gt_span.begin));

    // Locate the corresponding hyp region through a whitespace-stripped
    // global alignment of the full texts.
    const align::IgnoreSet ws = align::IgnoreSet::whitespace_only();
    const align::StripResult gs = align::strip_and_map(gt, ws);
    const align::StripResult hs = align::strip_and_map(hyp, ws);
    const align::AlignmentResult alignment =
        align::align_global(gs.stripped, hs.stripped, align::AlignConfig::global_filter_defaults());

    std::int64_t hyp_first = -1, hyp_last = -1;
    for (const align::Column& c : alignment.columns) {
        if (c.a_index < 0 || c.b_index < 0) continue;
        const std::size_t abyte = gs.map.byte_begin[static_cast<std::size_t>(c.a_index)];
        if (abyte < gt_span.begin || abyte >= gt_span.end) continue;
        if (hyp_first < 0) hyp_first = c.b_index;
        hyp_last = c.b_index;
    }

    BoundaryWindowScore out;
    out.gt_span = gt_span;
    out.gt_window_chars = utf8::length(gt_window);
    if (hyp_first < 0) {
        // Hypothesis lost the window entirely: all characters count as deleted.
        out.hyp_span = textnorm::ByteSpan{0, 0};
        out.cer_window = 1.0;
        return out;
    }
    out.hyp_span = textnorm::ByteSpan{hs.map.byte_begin[static_cast<std::size_t>(hyp_first)],
                                      hs.map.byte_end[static_cast<std::size_t>(hyp_last)]};
    const std::string hyp_window(
        hyp.substr(out.hyp_span.begin, out.hyp_span.end - out.hyp_span.begin));
    out.cer_window = cer(gt_window, hyp_window);
    return out;
}

}  // namespace ocrpost::metrics
