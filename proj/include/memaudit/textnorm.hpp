#ifndef MEMAUDIT_TEXTNORM_HPP
#define MEMAUDIT_TEXTNORM_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace memaudit {

// Half-open byte range [begin, end) into some source string.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const ByteSpan &) const = default;
};

// Word tokens plus, for each token, the byte span of the maximal
// non-whitespace run it was cut from (before punctuation stripping and
// case folding). Spans index into the normalized source text.
struct TokenSeq {
  std::vector<std::string> tokens;
  std::vector<ByteSpan> offsets;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

// Canonical text form used everywhere downstream: NFKC, curly quotes and
// apostrophes mapped to straight ASCII equivalents, whitespace runs
// collapsed to single spaces, ends trimmed. Throws InvalidEncoding if the
// input is not well-formed UTF-8. Idempotent.
std::string normalize_text(std::string_view raw);

// normalize_text plus a per-output-byte map back to source byte ranges.
// src.size() == text.size(); src[i] is the source span the i-th normalized
// byte was derived from.
struct NormalizedText {
  std::string text;
  std::vector<ByteSpan> src;
};
NormalizedText normalize_text_mapped(std::string_view raw);

// Splits normalized text into word tokens: maximal non-whitespace runs,
// case-folded, with leading/trailing punctuation stripped (internal
// apostrophes, hyphens etc. are kept). Runs that strip to nothing are
// dropped. Empty input yields an empty TokenSeq.
TokenSeq tokenize_words(std::string_view normalized);

// Full Unicode case folding of UTF-8 text.
std::string fold_case(std::string_view text);

bool is_valid_utf8(std::string_view bytes);

// Number of Unicode code points in well-formed UTF-8.
std::size_t count_codepoints(std::string_view utf8);

} // namespace memaudit

#endif // MEMAUDIT_TEXTNORM_HPP
