#include "ocrpost/align.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "ocrpost/errors.hpp"
#include "ocrpost/utf8.hpp"

namespace ocrpost::align {

namespace {

constexpr Score kNegInf = std::numeric_limits<Score>::min() / 4;

// Whether a gap-in-B run is already open when a block begins. Used by the
// divide-and-conquer traceback to stitch runs across block boundaries.
enum class EdgeState : std::uint8_t { Fresh, GapBOpen };

inline Score sub_score(char32_t x, char32_t y, const AlignConfig& cfg) {
    return x == y ? cfg.match_score : cfg.mismatch_score;
}

// argmax over {m, ix, iy} with deterministic ties: m, then ix, then iy.
inline int best3(Score m, Score ix, Score iy, Score& out) {
    out = m;
    int which = 0;
    if (ix > out) { out = ix; which = 1; }
    if (iy > out) { out = iy; which = 2; }
    return which;
}

// Traceback byte layout: bits 0-1 source of M, 2-3 source of Ix, 4-5 source
// of Iy. Source codes: 0 = M, 1 = Ix, 2 = Iy, 3 = local restart (M only).
constexpr std::uint8_t kSrcRestart = 3;

struct VectorPassResult {
    std::vector<Score> any;   // best over states per column
    std::vector<Score> gapb;  // best ending in a gap-in-B state per column
};

// Linear-space forward DP over all rows of the block; returns the last row's
// score vectors. `ss` controls whether an inherited gap-in-B run waives its
// opening charge at the block start.
VectorPassResult forward_vectors(std::u32string_view a, std::u32string_view b,
                                 const AlignConfig& cfg, EdgeState ss) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<Score> vm(m + 1), vix(m + 1), viy(m + 1);
    vm[0] = 0;
    vix[0] = (ss == EdgeState::GapBOpen) ? 0 : kNegInf;
    viy[0] = kNegInf;
    for (std::size_t j = 1; j <= m; ++j) {
        vm[j] = kNegInf;
        vix[j] = kNegInf;
        Score best;
        best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open, viy[j - 1] + cfg.gap_extend, best);
        viy[j] = best;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        Score diag_m = vm[0], diag_ix = vix[0], diag_iy = viy[0];
        {
            Score best;
            best3(vm[0] + cfg.gap_open, vix[0] + cfg.gap_extend, viy[0] + cfg.gap_open, best);
            vix[0] = best;
        }
        vm[0] = kNegInf;
        viy[0] = kNegInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const Score save_m = vm[j], save_ix = vix[j], save_iy = viy[j];
            Score diag_best;
            best3(diag_m, diag_ix, diag_iy, diag_best);
            const Score new_m = diag_best + sub_score(a[i - 1], b[j - 1], cfg);
            Score new_ix;
            best3(save_m + cfg.gap_open, save_ix + cfg.gap_extend, save_iy + cfg.gap_open, new_ix);
            Score new_iy;
            best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open, viy[j - 1] + cfg.gap_extend,
                  new_iy);
            vm[j] = new_m;
            vix[j] = new_ix;
            viy[j] = new_iy;
            diag_m = save_m;
            diag_ix = save_ix;
            diag_iy = save_iy;
        }
    }
    VectorPassResult out;
    out.any.resize(m + 1);
    out.gapb = vix;
    for (std::size_t j = 0; j <= m; ++j) {
        Score best;
        best3(vm[j], vix[j], viy[j], best);
        out.any[j] = best;
    }
    return out;
}

// Full-table global Gotoh with packed traceback. Emits columns with indices
// offset by a_off/b_off.
void gotoh_full_global(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg,
                       EdgeState ss, std::size_t a_off, std::size_t b_off,
                       std::vector<Column>& out) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::uint8_t> tb((n + 1) * (m + 1), 0);
    std::vector<Score> vm(m + 1), vix(m + 1), viy(m + 1);
    auto tb_at = [&](std::size_t i, std::size_t j) -> std::uint8_t& { return tb[i * (m + 1) + j]; };

    vm[0] = 0;
    vix[0] = (ss == EdgeState::GapBOpen) ? 0 : kNegInf;
    viy[0] = kNegInf;
    for (std::size_t j = 1; j <= m; ++j) {
        vm[j] = kNegInf;
        vix[j] = kNegInf;
        Score best;
        const int src =
            best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open, viy[j - 1] + cfg.gap_extend, best);
        viy[j] = best;
        tb_at(0, j) = static_cast<std::uint8_t>(src << 4);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        Score diag_m = vm[0], diag_ix = vix[0], diag_iy = viy[0];
        {
            Score best;
            const int src =
                best3(vm[0] + cfg.gap_open, vix[0] + cfg.gap_extend, viy[0] + cfg.gap_open, best);
            // The three Ix sources are encoded as 0=M, 1=Ix, 2=Iy.
            const int code = (src == 0) ? 0 : (src == 1 ? 1 : 2);
            vix[0] = best;
            tb_at(i, 0) = static_cast<std::uint8_t>(code << 2);
        }
        vm[0] = kNegInf;
        viy[0] = kNegInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const Score save_m = vm[j], save_ix = vix[j], save_iy = viy[j];
            Score diag_best;
            const int msrc = best3(diag_m, diag_ix, diag_iy, diag_best);
            const Score new_m = diag_best + sub_score(a[i - 1], b[j - 1], cfg);
            Score new_ix;
            const int ixsrc =
                best3(save_m + cfg.gap_open, save_ix + cfg.gap_extend, save_iy + cfg.gap_open, new_ix);
            Score new_iy;
            const int iysrc = best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open,
                                    viy[j - 1] + cfg.gap_extend, new_iy);
            tb_at(i, j) = static_cast<std::uint8_t>(msrc | (ixsrc << 2) | (iysrc << 4));
            vm[j] = new_m;
            vix[j] = new_ix;
            viy[j] = new_iy;
            diag_m = save_m;
            diag_ix = save_ix;
            diag_iy = save_iy;
        }
    }

    Score final_best;
    int state = best3(vm[m], vix[m], viy[m], final_best);
    std::size_t i = n, j = m;
    const std::size_t first = out.size();
    while (i > 0 || j > 0) {
        const std::uint8_t t = tb_at(i, j);
        if (state == 0) {
            const ColumnOp op = (a[i - 1] == b[j - 1]) ? ColumnOp::Match : ColumnOp::Substitute;
            out.push_back(Column{op, static_cast<std::int32_t>(a_off + i - 1),
                                 static_cast<std::int32_t>(b_off + j - 1)});
            state = t & 3;
            --i;
            --j;
        } else if (state == 1) {
            out.push_back(
                Column{ColumnOp::GapInB, static_cast<std::int32_t>(a_off + i - 1), -1});
            state = (t >> 2) & 3;
            --i;
        } else {
            out.push_back(
                Column{ColumnOp::GapInA, -1, static_cast<std::int32_t>(b_off + j - 1)});
            state = (t >> 4) & 3;
            --j;
        }
    }
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
}

constexpr std::size_t kLeafCells = 1 << 16;

// Myers-Miller linear-space divide and conquer. Splits the A slice in half,
// joins forward and reverse score vectors, and pins the two gap columns when
// the optimum crosses the split inside a gap-in-B run.
void mm_global(std::u32string_view a_full, std::u32string_view b_full, std::size_t al,
               std::size_t ah, std::size_t bl, std::size_t bh, const AlignConfig& cfg, EdgeState ss,
               std::vector<Column>& out) {
    const std::size_t n = ah - al, m = bh - bl;
    if (n == 0 && m == 0) return;
    if (n == 0) {
        for (std::size_t j = bl; j < bh; ++j)
            out.push_back(Column{ColumnOp::GapInA, -1, static_cast<std::int32_t>(j)});
        return;
    }
    if (m == 0) {
        for (std::size_t i = al; i < ah; ++i)
            out.push_back(Column{ColumnOp::GapInB, static_cast<std::int32_t>(i), -1});
        return;
    }
    if (n == 1 || (n + 1) * (m + 1) <= kLeafCells) {
        gotoh_full_global(a_full.substr(al, n), b_full.substr(bl, m), cfg, ss, al, bl, out);
        return;
    }

    const std::size_t rmid = al + n / 2;
    const std::u32string a_top(a_full.substr(al, rmid - al));
    const std::u32string b_slice(b_full.substr(bl, m));
    const VectorPassResult fwd = forward_vectors(a_top, b_slice, cfg, ss);

    std::u32string a_bot_rev(a_full.substr(rmid, ah - rmid));
    std::reverse(a_bot_rev.begin(), a_bot_rev.end());
    std::u32string b_rev(b_slice);
    std::reverse(b_rev.begin(), b_rev.end());
    const VectorPassResult rev = forward_vectors(a_bot_rev, b_rev, cfg, EdgeState::Fresh);

    // A run spanning the split was charged gap_open on both sides; stitching
    // it back replaces one opening charge with an extension.
    const Score span_fix = cfg.gap_extend - cfg.gap_open;
    Score best = kNegInf;
    std::size_t best_j = 0;
    bool best_crossing = false;
    for (std::size_t j = 0; j <= m; ++j) {
        const Score c1 = fwd.any[j] + rev.any[m - j];
        if (c1 > best) {
            best = c1;
            best_j = j;
            best_crossing = false;
        }
        const Score c2 = fwd.gapb[j] + rev.gapb[m - j] + span_fix;
        if (c2 > best) {
            best = c2;
            best_j = j;
            best_crossing = true;
        }
    }

    const std::size_t jabs = bl + best_j;
    if (!best_crossing) {
        mm_global(a_full, b_full, al, rmid, bl, jabs, cfg, ss, out);
        mm_global(a_full, b_full, rmid, ah, jabs, bh, cfg, EdgeState::Fresh, out);
    } else {
        // The optimum consumes a[rmid-1] and a[rmid] inside one gap-in-B run.
        mm_global(a_full, b_full, al, rmid - 1, bl, jabs, cfg, ss, out);
        out.push_back(Column{ColumnOp::GapInB, static_cast<std::int32_t>(rmid - 1), -1});
        out.push_back(Column{ColumnOp::GapInB, static_cast<std::int32_t>(rmid), -1});
        mm_global(a_full, b_full, rmid + 1, ah, jabs, bh, cfg, EdgeState::GapBOpen, out);
    }
}

void enforce_size_limit(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg) {
    if (a.size() > cfg.max_len || b.size() > cfg.max_len)
        throw SizeLimitError("alignment input exceeds " + std::to_string(cfg.max_len) +
                             " characters");
}

struct LocalBest {
    Score score = 0;
    std::size_t i = 0, j = 0;
};

// Forward Smith-Waterman score pass; returns the first best cell in row-major
// order (exclusive ends: zero-score edge columns are not extended over).
LocalBest local_score_pass(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<Score> vm(m + 1, kNegInf), vix(m + 1, kNegInf), viy(m + 1, kNegInf);
    LocalBest best;
    for (std::size_t i = 1; i <= n; ++i) {
        Score diag_m = vm[0], diag_ix = vix[0], diag_iy = viy[0];
        vm[0] = kNegInf;
        vix[0] = kNegInf;
        viy[0] = kNegInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const Score save_m = vm[j], save_ix = vix[j], save_iy = viy[j];
            Score cont;
            best3(diag_m, diag_ix, diag_iy, cont);
            const Score new_m = sub_score(a[i - 1], b[j - 1], cfg) + std::max<Score>(cont, 0);
            Score new_ix;
            best3(save_m + cfg.gap_open, save_ix + cfg.gap_extend, save_iy + cfg.gap_open, new_ix);
            Score new_iy;
            best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open, viy[j - 1] + cfg.gap_extend,
                  new_iy);
            vm[j] = new_m;
            vix[j] = new_ix;
            viy[j] = new_iy;
            diag_m = save_m;
            diag_ix = save_ix;
            diag_iy = save_iy;
            if (new_m > best.score) best = LocalBest{new_m, i, j};
        }
    }
    return best;
}

// Anchored extension: global-style DP from the origin, best over M cells.
// Used to locate the start of the optimal local alignment.
LocalBest extension_pass(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<Score> vm(m + 1), vix(m + 1), viy(m + 1);
    vm[0] = 0;
    vix[0] = kNegInf;
    viy[0] = kNegInf;
    for (std::size_t j = 1; j <= m; ++j) {
        vm[j] = kNegInf;
        vix[j] = kNegInf;
        viy[j] = (j == 1) ? cfg.gap_open : viy[j - 1] + cfg.gap_extend;
    }
    LocalBest best{kNegInf, 0, 0};
    for (std::size_t i = 1; i <= n; ++i) {
        Score diag_m = vm[0], diag_ix = vix[0], diag_iy = viy[0];
        vix[0] = (i == 1) ? cfg.gap_open : vix[0] + cfg.gap_extend;
        vm[0] = kNegInf;
        viy[0] = kNegInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const Score save_m = vm[j], save_ix = vix[j], save_iy = viy[j];
            Score diag_best;
            best3(diag_m, diag_ix, diag_iy, diag_best);
            const Score new_m = diag_best + sub_score(a[i - 1], b[j - 1], cfg);
            Score new_ix;
            best3(save_m + cfg.gap_open, save_ix + cfg.gap_extend, save_iy + cfg.gap_open, new_ix);
            Score new_iy;
            best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open, viy[j - 1] + cfg.gap_extend,
                  new_iy);
            vm[j] = new_m;
            vix[j] = new_ix;
            viy[j] = new_iy;
            diag_m = save_m;
            diag_ix = save_ix;
            diag_iy = save_iy;
            if (new_m > best.score) best = LocalBest{new_m, i, j};
        }
    }
    return best;
}

// Full-table local Smith-Waterman with traceback, for problems that fit the
// table cap.
AlignmentResult local_full_table(std::u32string_view a, std::u32string_view b,
                                 const AlignConfig& cfg) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::uint8_t> tb((n + 1) * (m + 1), 0);
    std::vector<Score> vm(m + 1, kNegInf), vix(m + 1, kNegInf), viy(m + 1, kNegInf);
    auto tb_at = [&](std::size_t i, std::size_t j) -> std::uint8_t& { return tb[i * (m + 1) + j]; };
    LocalBest best;
    for (std::size_t i = 1; i <= n; ++i) {
        Score diag_m = vm[0], diag_ix = vix[0], diag_iy = viy[0];
        vm[0] = kNegInf;
        vix[0] = kNegInf;
        viy[0] = kNegInf;
        for (std::size_t j = 1; j <= m; ++j) {
            const Score save_m = vm[j], save_ix = vix[j], save_iy = viy[j];
            // Restart is preferred on ties so zero-score edge columns are
            // left out of the matched region.
            Score cont;
            const int csrc = best3(diag_m, diag_ix, diag_iy, cont);
            int msrc;
            Score mbase;
            if (cont > 0) {
                mbase = cont;
                msrc = csrc;
            } else {
                mbase = 0;
                msrc = kSrcRestart;
            }
            const Score new_m = sub_score(a[i - 1], b[j - 1], cfg) + mbase;
            Score new_ix;
            const int ixsrc =
                best3(save_m + cfg.gap_open, save_ix + cfg.gap_extend, save_iy + cfg.gap_open, new_ix);
            Score new_iy;
            const int iysrc = best3(vm[j - 1] + cfg.gap_open, vix[j - 1] + cfg.gap_open,
                                    viy[j - 1] + cfg.gap_extend, new_iy);
            tb_at(i, j) = static_cast<std::uint8_t>(msrc | (ixsrc << 2) | (iysrc << 4));
            vm[j] = new_m;
            vix[j] = new_ix;
            viy[j] = new_iy;
            diag_m = save_m;
            diag_ix = save_ix;
            diag_iy = save_iy;
            if (new_m > best.score) best = LocalBest{new_m, i, j};
        }
    }

    AlignmentResult result;
    if (best.score <= 0) return result;

    std::size_t i = best.i, j = best.j;
    int state = 0;
    std::vector<Column> cols;
    while (true) {
        const std::uint8_t t = tb_at(i, j);
        if (state == 0) {
            const ColumnOp op = (a[i - 1] == b[j - 1]) ? ColumnOp::Match : ColumnOp::Substitute;
            cols.push_back(Column{op, static_cast<std::int32_t>(i - 1),
                                  static_cast<std::int32_t>(j - 1)});
            const int src = t & 3;
            --i;
            --j;
            if (src == kSrcRestart) break;
            state = src;
        } else if (state == 1) {
            cols.push_back(Column{ColumnOp::GapInB, static_cast<std::int32_t>(i - 1), -1});
            state = (t >> 2) & 3;
            --i;
        } else {
            cols.push_back(Column{ColumnOp::GapInA, -1, static_cast<std::int32_t>(j - 1)});
            state = (t >> 4) & 3;
            --j;
        }
    }
    std::reverse(cols.begin(), cols.end());
    result.columns = std::move(cols);
    result.score = best.score;
    result.a_start = i;
    result.a_end = best.i;
    result.b_start = j;
    result.b_end = best.j;
    return result;
}

}  // namespace

void AlignConfig::validate() const {
    if (gap_open > 0 || gap_extend > 0) throw Error("gap scores must be <= 0");
    if (gap_open > gap_extend)
        throw Error("gap_open must be <= gap_extend (opening at least as costly as extending)");
    if (match_score <= mismatch_score) throw Error("match_score must exceed mismatch_score");
    if (max_len == 0) throw Error("max_len must be positive");
}

AlignConfig AlignConfig::global_filter_defaults() {
    AlignConfig cfg;
    cfg.mode = AlignMode::Global;
    cfg.match_score = score_from_points(1.0);
    cfg.mismatch_score = score_from_points(-1.0);
    cfg.gap_open = score_from_points(-1.0);
    cfg.gap_extend = score_from_points(-0.5);
    return cfg;
}

AlignConfig AlignConfig::local_trim_defaults() {
    AlignConfig cfg;
    cfg.mode = AlignMode::Local;
    cfg.match_score = score_from_points(1.0);
    cfg.mismatch_score = score_from_points(0.0);
    cfg.gap_open = score_from_points(-1.0);
    cfg.gap_extend = score_from_points(-0.5);
    return cfg;
}

bool IgnoreSet::contains(char32_t cp) const {
    if (whitespace && textnorm::is_unicode_space(cp)) return true;
    return chars.find(cp) != std::u32string::npos;
}

StripResult strip_and_map(std::string_view text, const IgnoreSet& ignore) {
    const utf8::DecodedText dec = utf8::decode_with_offsets(text);
    StripResult out;
    out.stripped.reserve(dec.codepoints.size());
    for (std::size_t i = 0; i < dec.codepoints.size(); ++i) {
        const char32_t cp = dec.codepoints[i];
        if (ignore.contains(cp)) continue;
        out.stripped.push_back(cp);
        out.map.cp_index.push_back(i);
        out.map.byte_begin.push_back(dec.byte_begin[i]);
        out.map.byte_end.push_back(dec.byte_end[i]);
    }
    return out;
}

AlignmentResult align_global(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg) {
    cfg.validate();
    enforce_size_limit(a, b, cfg);
    AlignmentResult result;
    if ((a.size() + 1) * (b.size() + 1) <= cfg.max_table_cells) {
        gotoh_full_global(a, b, cfg, EdgeState::Fresh, 0, 0, result.columns);
    } else {
        mm_global(a, b, 0, a.size(), 0, b.size(), cfg, EdgeState::Fresh, result.columns);
    }
    result.score = score_columns(result.columns, a, b, cfg);
    result.a_start = 0;
    result.a_end = a.size();
    result.b_start = 0;
    result.b_end = b.size();
#ifndef NDEBUG
    check_alignment(result, a.size(), b.size(), AlignMode::Global);
    const VectorPassResult chk = forward_vectors(std::u32string(a), std::u32string(b), cfg,
                                                 EdgeState::Fresh);
    assert(result.score == chk.any[b.size()]);
#endif
    return result;
}

AlignmentResult align_local(std::u32string_view a, std::u32string_view b, const AlignConfig& cfg) {
    cfg.validate();
    enforce_size_limit(a, b, cfg);
    AlignmentResult result;
    if ((a.size() + 1) * (b.size() + 1) <= cfg.max_table_cells) {
        result = local_full_table(a, b, cfg);
    } else {
        const LocalBest end = local_score_pass(a, b, cfg);
        if (end.score <= 0) return result;
        std::u32string a_rev(a.substr(0, end.i));
        std::reverse(a_rev.begin(), a_rev.end());
        std::u32string b_rev(b.substr(0, end.j));
        std::reverse(b_rev.begin(), b_rev.end());
        const LocalBest start = extension_pass(a_rev, b_rev, cfg);
        const std::size_t a_start = end.i - start.i;
        const std::size_t b_start = end.j - start.j;
        mm_global(a, b, a_start, end.i, b_start, end.j, cfg, EdgeState::Fresh, result.columns);
        result.score = score_columns(result.columns, a, b, cfg);
        result.a_start = a_start;
        result.a_end = end.i;
        result.b_start = b_start;
        result.b_end = end.j;
        assert(result.score == end.score);
    }
#ifndef NDEBUG
    check_alignment(result, a.size(), b.size(), AlignMode::Local);
#endif
    return result;
}

std::vector<double> window_match_ratios(const AlignmentResult& alignment, std::size_t window) {
    const std::vector<Column>& cols = alignment.columns;
    std::vector<double> ratios;
    if (cols.empty() || window == 0) return ratios;
    if (cols.size() < window) {
        std::size_t matches = 0;
        for (const Column& c : cols) matches += (c.op == ColumnOp::Match);
        ratios.push_back(static_cast<double>(matches) / static_cast<double>(cols.size()));
        return ratios;
    }
    std::size_t matches = 0;
    for (std::size_t i = 0; i < window; ++i) matches += (cols[i].op == ColumnOp::Match);
    ratios.push_back(static_cast<double>(matches) / static_cast<double>(window));
    for (std::size_t i = window; i < cols.size(); ++i) {
        matches += (cols[i].op == ColumnOp::Match);
        matches -= (cols[i - window].op == ColumnOp::Match);
        ratios.push_back(static_cast<double>(matches) / static_cast<double>(window));
    }
    return ratios;
}

textnorm::ByteSpan aligned_region(const AlignmentResult& alignment, const IndexMap& map, Side side) {
    std::int32_t first = -1, last = -1;
    for (const Column& c : alignment.columns) {
        const std::int32_t idx = (side == Side::A) ? c.a_index : c.b_index;
        if (idx < 0) continue;
        if (first < 0) first = idx;
        last = idx;
    }
    if (first < 0) throw NoAlignedRegionError("alignment carries no aligned characters");
    return textnorm::ByteSpan{map.byte_begin[static_cast<std::size_t>(first)],
                              map.byte_end[static_cast<std::size_t>(last)]};
}

Score score_columns(const std::vector<Column>& columns, std::u32string_view a,
                    std::u32string_view b, const AlignConfig& cfg) {
    Score total = 0;
    ColumnOp prev = ColumnOp::Match;
    bool have_prev = false;
    for (const Column& c : columns) {
        switch (c.op) {
            case ColumnOp::Match:
            case ColumnOp::Substitute:
                total += sub_score(a[static_cast<std::size_t>(c.a_index)],
                                   b[static_cast<std::size_t>(c.b_index)], cfg);
                break;
            case ColumnOp::GapInA:
                total += (have_prev && prev == ColumnOp::GapInA) ? cfg.gap_extend : cfg.gap_open;
                break;
            case ColumnOp::GapInB:
                total += (have_prev && prev == ColumnOp::GapInB) ? cfg.gap_extend : cfg.gap_open;
                break;
        }
        prev = c.op;
        have_prev = true;
    }
    return total;
}

void check_alignment(const AlignmentResult& result, std::size_t a_len, std::size_t b_len,
                     AlignMode mode) {
    std::int64_t prev_a = -1, prev_b = -1;
    for (const Column& c : result.columns) {
        const bool has_a = c.a_index >= 0, has_b = c.b_index >= 0;
        switch (c.op) {
            case ColumnOp::Match:
            case ColumnOp::Substitute:
                if (!has_a || !has_b) throw Error("diagonal column missing an index");
                break;
            case ColumnOp::GapInA:
                if (has_a || !has_b) throw Error("GapInA column index mismatch");
                break;
            case ColumnOp::GapInB:
                if (!has_a || has_b) throw Error("GapInB column index mismatch");
                break;
        }
        if (has_a) {
            if (c.a_index <= prev_a) throw Error("a_index not strictly increasing");
            prev_a = c.a_index;
        }
        if (has_b) {
            if (c.b_index <= prev_b) throw Error("b_index not strictly increasing");
            prev_b = c.b_index;
        }
    }
    if (mode == AlignMode::Global) {
        std::size_t a_cols = 0, b_cols = 0;
        for (const Column& c : result.columns) {
            a_cols += (c.a_index >= 0);
            b_cols += (c.b_index >= 0);
        }
        if (a_cols != a_len || b_cols != b_len)
            throw Error("global alignment does not cover both inputs");
    } else if (!result.columns.empty()) {
        if (result.a_start >= result.a_end || result.b_start >= result.b_end)
            throw Error("local alignment spans empty despite columns");
        if (result.a_end > a_len || result.b_end > b_len)
            throw Error("local alignment span out of range");
    }
}

}  // namespace ocrpost::align
