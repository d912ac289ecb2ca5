#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ocrpost/textnorm.hpp"

namespace ocrpost::align {

// Scores are integers at 2x scale so the -0.5 extend penalty stays exact
// (-0.5 is stored as -1).
using Score = long long;

constexpr Score score_from_points(double points) {
    return static_cast<Score>(points * 2.0);
}
constexpr double score_to_points(Score s) { return static_cast<double>(s) / 2.0; }

enum class AlignMode { Global, Local };

struct AlignConfig {
    AlignMode mode = AlignMode::Global;
    Score match_score = 2;      // +1.0
    Score mismatch_score = -2;  // -1.0
    Score gap_open = -2;        // -1.0, charged on the first character of a gap
    Score gap_extend = -1;      // -0.5, charged on each further character
    // Inputs longer than this are rejected with SizeLimitError.
    std::size_t max_len = 50000;
    // Full DP tables are used up to this many cells; larger problems switch
    // to the linear-space divide-and-conquer traceback.
    std::size_t max_table_cells = 8'000'000;

    void validate() const;  // gap scores <= 0, match > mismatch

    // Filtering alignment (page OCR vs GT on non-whitespace characters).
    static AlignConfig global_filter_defaults();
    // Overgeneration trimming: match +1, mismatch 0, open -1, extend -0.5.
    static AlignConfig local_trim_defaults();
};

enum class ColumnOp : std::uint8_t { Match, Substitute, GapInA, GapInB };

struct Column {
    ColumnOp op;
    std::int32_t a_index;  // position in (stripped) A, -1 for GapInA
    std::int32_t b_index;  // position in (stripped) B, -1 for GapInB
};

struct AlignmentResult {
    std::vector<Column> columns;
    Score score = 0;
    // [start, end) spans in the input strings. Global alignments cover both
    // inputs fully; local alignments delimit the matched region. An empty
    // local optimum has empty columns and zero-length spans.
    std::size_t a_start = 0, a_end = 0;
    std::size_t b_start = 0, b_end = 0;

    bool empty() const { return columns.empty(); }
};

// Characters removed before alignment. `whitespace` covers the full Unicode
// whitespace class; `chars` lists further code points (e.g. '-').
struct IgnoreSet {
    bool whitespace = false;
    std::u32string chars;

    bool contains(char32_t cp) const;
    static IgnoreSet none() { return {}; }
    static IgnoreSet whitespace_only() { return IgnoreSet{true, U""}; }
    static IgnoreSet whitespace_and_hyphen() { return IgnoreSet{true, U"-"}; }
};

// Maps positions in a stripped string back to the original UTF-8 string.
struct IndexMap {
    std::vector<std::size_t> cp_index;     // original code point index
    std::vector<std::size_t> byte_begin;   // original byte offset
    std::vector<std::size_t> byte_end;     // original byte offset, exclusive

    std::size_t size() const { return cp_index.size(); }
};

struct StripResult {
    std::u32string stripped;
    IndexMap map;
};

// Removes ignored characters, keeping a position map into the original.
StripResult strip_and_map(std::string_view text, const IgnoreSet& ignore);

// Optimal global alignment (Needleman-Wunsch with affine gaps). Ties prefer
// Match/Substitute over GapInB over GapInA, deterministically.
AlignmentResult align_global(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg);

// Optimal local alignment (Smith-Waterman with affine gaps). An all-negative
// optimum yields an empty result rather than an error.
AlignmentResult align_local(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg);

// Fraction of Match columns in every `window`-column window (stride 1).
// Shorter alignments yield a single ratio over all columns; an empty
// alignment yields an empty list.
std::vector<double> window_match_ratios(const AlignmentResult& alignment, std::size_t window = 100);

enum class Side { A, B };

// Byte span in the original text covering the first through last aligned
// character on the requested side. Throws NoAlignedRegionError when the
// alignment carries no such column.
textnorm::ByteSpan aligned_region(const AlignmentResult& alignment, const IndexMap& map, Side side);

// Re-scores a column sequence under the affine gap rule (open on the first
// character of each maximal gap run, extend afterwards). Used to cross-check
// DP scores; exposed for tests.
Score score_columns(const std::vector<Column>& columns, std::u32string_view a, std::u32string_view b,
                    const AlignConfig& cfg);

// Validates column monotonicity and span bookkeeping; throws Error on
// violation. Called internally in debug builds.
void check_alignment(const AlignmentResult& result, std::size_t a_len, std::size_t b_len,
                     AlignMode mode);

}  // namespace ocrpost::align
