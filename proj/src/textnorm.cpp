#include "memaudit/textnorm.hpp"
#include "memaudit/errors.hpp"

#include <unicode/bytestream.h>
#include <unicode/edits.h>
#include <unicode/normalizer2.h>
#include <unicode/stringpiece.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace memaudit {

namespace {

const icu::Normalizer2 *nfkc() {
  UErrorCode status = U_ZERO_ERROR;
  static const icu::Normalizer2 *instance =
      icu::Normalizer2::getNFKCInstance(status);
  if (U_FAILURE(status) || instance == nullptr)
    throw std::runtime_error("ICU NFKC normalizer unavailable");
  return instance;
}

// Curly quote / apostrophe variants folded to their straight equivalents.
char straight_quote(UChar32 cp) {
  switch (cp) {
  case 0x2018: // left single quotation mark
  case 0x2019: // right single quotation mark
  case 0x201A: // single low-9 quotation mark
  case 0x201B: // single high-reversed-9 quotation mark
    return '\'';
  case 0x201C: // left double quotation mark
  case 0x201D: // right double quotation mark
  case 0x201E: // double low-9 quotation mark
  case 0x201F: // double high-reversed-9 quotation mark
    return '"';
  default:
    return 0;
  }
}

// NFKC with a per-output-byte map back to input byte ranges, derived from
// the ICU edit record.
void nfkc_mapped(std::string_view raw, std::string &out,
                 std::vector<ByteSpan> &map) {
  icu::Edits edits;
  icu::StringByteSink<std::string> sink(&out);
  UErrorCode status = U_ZERO_ERROR;
  nfkc()->normalizeUTF8(0, icu::StringPiece(raw.data(), (int32_t)raw.size()),
                        sink, &edits, status);
  if (U_FAILURE(status))
    throw std::runtime_error("ICU normalizeUTF8 failed");

  map.reserve(out.size());
  icu::Edits::Iterator it = edits.getFineIterator();
  UErrorCode iterStatus = U_ZERO_ERROR;
  while (it.next(iterStatus)) {
    const std::size_t src = (std::size_t)it.sourceIndex();
    const std::size_t old_len = (std::size_t)it.oldLength();
    const std::size_t new_len = (std::size_t)it.newLength();
    if (it.hasChange()) {
      for (std::size_t k = 0; k < new_len; ++k)
        map.push_back({src, src + old_len});
    } else {
      for (std::size_t k = 0; k < old_len; ++k)
        map.push_back({src + k, src + k + 1});
    }
  }
  if (U_FAILURE(iterStatus) || map.size() != out.size())
    throw std::runtime_error("ICU edit record inconsistent");
}

} // namespace

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = (unsigned char)bytes[i];
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return false;
    }
    if (i + len > n)
      return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto bk = (unsigned char)bytes[i + k];
      if ((bk & 0xC0) != 0x80)
        return false;
      cp = (cp << 6) | (bk & 0x3F);
    }
    // overlong forms, surrogates, out of range
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000))
      return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

std::size_t count_codepoints(std::string_view utf8) {
  std::size_t count = 0;
  int32_t i = 0;
  const auto len = (int32_t)utf8.size();
  while (i < len) {
    UChar32 cp;
    U8_NEXT(utf8.data(), i, len, cp);
    ++count;
  }
  return count;
}

NormalizedText normalize_text_mapped(std::string_view raw) {
  if (!is_valid_utf8(raw))
    raise(Err::InvalidEncoding, "input is not well-formed UTF-8");

  std::string nfkc_text;
  std::vector<ByteSpan> nfkc_map;
  nfkc_mapped(raw, nfkc_text, nfkc_map);

  NormalizedText out;
  out.text.reserve(nfkc_text.size());
  out.src.reserve(nfkc_text.size());

  bool pending_space = false;
  ByteSpan pending_span{0, 0};

  int32_t i = 0;
  const auto len = (int32_t)nfkc_text.size();
  while (i < len) {
    const int32_t start = i;
    UChar32 cp;
    U8_NEXT(nfkc_text.data(), i, len, cp);
    const std::size_t src_begin = nfkc_map[(std::size_t)start].begin;
    const std::size_t src_end = nfkc_map[(std::size_t)i - 1].end;

    if (u_isUWhiteSpace(cp)) {
      if (!pending_space) {
        pending_space = true;
        pending_span = {src_begin, src_end};
      } else {
        pending_span.end = src_end;
      }
      continue;
    }
    if (pending_space) {
      if (!out.text.empty()) { // leading whitespace is trimmed
        out.text.push_back(' ');
        out.src.push_back(pending_span);
      }
      pending_space = false;
    }
    if (const char q = straight_quote(cp)) {
      out.text.push_back(q);
      out.src.push_back({src_begin, src_end});
    } else {
      for (int32_t k = start; k < i; ++k) {
        out.text.push_back(nfkc_text[(std::size_t)k]);
        out.src.push_back(nfkc_map[(std::size_t)k]);
      }
    }
  }
  // trailing whitespace is dropped
  return out;
}

std::string normalize_text(std::string_view raw) {
  return normalize_text_mapped(raw).text;
}

std::string fold_case(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), (int32_t)text.size()));
  u.foldCase(U_FOLD_CASE_DEFAULT);
  std::string out;
  u.toUTF8String(out);
  return out;
}

TokenSeq tokenize_words(std::string_view text) {
  TokenSeq seq;
  int32_t i = 0;
  const auto len = (int32_t)text.size();
  while (i < len) {
    // find the next non-whitespace run
    int32_t run_begin = i;
    UChar32 cp;
    {
      int32_t probe = i;
      U8_NEXT(text.data(), probe, len, cp);
      if (u_isUWhiteSpace(cp)) {
        i = probe;
        continue;
      }
    }
    int32_t run_end = run_begin;
    while (run_end < len) {
      int32_t probe = run_end;
      U8_NEXT(text.data(), probe, len, cp);
      if (u_isUWhiteSpace(cp))
        break;
      run_end = probe;
    }
    i = run_end;

    // strip leading/trailing punctuation, keep internal characters
    int32_t tok_begin = run_begin;
    while (tok_begin < run_end) {
      int32_t probe = tok_begin;
      U8_NEXT(text.data(), probe, len, cp);
      if (!u_ispunct(cp))
        break;
      tok_begin = probe;
    }
    int32_t tok_end = run_end;
    while (tok_end > tok_begin) {
      int32_t probe = tok_end;
      U8_PREV(text.data(), run_begin, probe, cp);
      if (!u_ispunct(cp))
        break;
      tok_end = probe;
    }
    if (tok_begin >= tok_end)
      continue; // punctuation-only run

    seq.tokens.push_back(fold_case(text.substr(
        (std::size_t)tok_begin, (std::size_t)(tok_end - tok_begin))));
    seq.offsets.push_back({(std::size_t)run_begin, (std::size_t)run_end});
  }
  return seq;
}

} // namespace memaudit
