#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ocrpost::utf8 {

// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD,
// consuming one byte at a time, so decode never fails.
std::u32string decode(std::string_view text);

// Decodes and records, for each code point, its byte offset range in `text`.
struct DecodedText {
    std::u32string codepoints;
    std::vector<std::size_t> byte_begin;  // per code point
    std::vector<std::size_t> byte_end;    // per code point, exclusive
};
DecodedText decode_with_offsets(std::string_view text);

std::string encode(std::u32string_view codepoints);
std::string encode(char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view text);

}  // namespace ocrpost::utf8
