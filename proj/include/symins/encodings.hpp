#pragma once

// Odd encodings of subsequence windows on block words, and the involution
// that pairs them up.
//
// An encoding (b; s, l; t, m) marks the window on the word of b that starts
// l symbols into block s and stops m symbols before the end of block t. On a
// block word a window has distinct boundary symbols exactly when s and t have
// different parity, and odd length exactly when l and m do. Those windows are
// the only ones contributing to D_{2k+1}.
//
// phi reverses b between positions s and t and swaps l with m. The image
// window is the reversed subsequence with the same quotient, so the two terms
// cancel under reversal of paths.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "symins/coaction.hpp"
#include "symins/words.hpp"

namespace symins {

/// Raised when a proven structural property fails at runtime.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct OddEncoding {
  BlockVector word;
  int start_block = 0;    // s
  int offset_before = 0;  // l: symbols of block s before the window
  int end_block = 0;      // t
  int offset_after = 0;   // m: symbols of block t after the window

  /// Encoded window length, boundaries included.
  int length() const {
    int span = 0;
    for (int i = start_block; i <= end_block; ++i) span += word.block_length(static_cast<std::size_t>(i));
    return span - offset_before - offset_after;
  }

  Window window() const {
    const int start = word.block_offset(static_cast<std::size_t>(start_block)) + offset_before;
    return Window{static_cast<std::size_t>(start), static_cast<std::size_t>(length() - 2)};
  }

  std::string to_string() const {
    return "(" + word.to_string() + "; " + std::to_string(start_block) + ", " +
           std::to_string(offset_before) + "; " + std::to_string(end_block) + ", " +
           std::to_string(offset_after) + ")";
  }

  friend auto operator<=>(const OddEncoding&, const OddEncoding&) = default;
  friend bool operator==(const OddEncoding&, const OddEncoding&) = default;
};

inline bool is_valid(const OddEncoding& e) {
  const int blocks = static_cast<int>(e.word.size());
  const int s = e.start_block;
  const int t = e.end_block;
  if (s < 0 || t >= blocks || s >= t) return false;
  if ((s - t) % 2 == 0) return false;
  if (e.offset_before < 0 || e.offset_after < 0) return false;
  if (e.offset_before >= e.word.block_length(static_cast<std::size_t>(s))) return false;
  if (e.offset_after >= e.word.block_length(static_cast<std::size_t>(t))) return false;
  if ((e.offset_before - e.offset_after) % 2 == 0) return false;
  return e.length() >= 3;
}

inline void require_valid(const OddEncoding& e) {
  if (!is_valid(e)) throw PreconditionError("not an odd encoding: " + e.to_string());
}

/// All odd encodings of window length L on b, ordered by window start.
inline std::vector<OddEncoding> enumerate_odd_encodings(const BlockVector& b, int length) {
  if (length % 2 == 0) {
    throw PreconditionError("odd encodings have odd length, got " + std::to_string(length));
  }
  if (length < 3 || length > weight_of(b) + 1) {
    throw PreconditionError("encoding length " + std::to_string(length) + " outside [3, " +
                            std::to_string(weight_of(b) + 1) + "] for " + b.to_string());
  }
  std::vector<OddEncoding> out;
  const int blocks = static_cast<int>(b.size());
  for (int s = 0; s < blocks; ++s) {
    const int len_s = b.block_length(static_cast<std::size_t>(s));
    int span = len_s;
    for (int t = s + 1; t < blocks; ++t) {
      const int len_t = b.block_length(static_cast<std::size_t>(t));
      span += len_t;
      if ((t - s) % 2 == 0) continue;
      for (int l = 0; l < len_s; ++l) {
        const int m = span - l - length;
        if (m < 0 || m >= len_t || (l - m) % 2 == 0) continue;
        out.push_back(OddEncoding{b, s, l, t, m});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OddEncoding& x, const OddEncoding& y) {
    return x.window().start < y.window().start;
  });
  return out;
}

/// (b; s, l; t, m) -> (c; s, m; t, l) with c = b reversed on [s, t].
inline OddEncoding phi(const OddEncoding& e) {
  require_valid(e);
  std::vector<int> c = e.word.entries();
  std::reverse(c.begin() + e.start_block, c.begin() + e.end_block + 1);
  return OddEncoding{BlockVector(std::move(c)), e.start_block, e.offset_after, e.end_block,
                     e.offset_before};
}

/// Blocks s..t of the word with the first l and last m symbols removed.
inline BinaryWord subsequence_of(const OddEncoding& e) {
  require_valid(e);
  std::vector<Symbol> blocks;
  for (int i = e.start_block; i <= e.end_block; ++i) {
    const Symbol first = i % 2 == 0 ? 0 : 1;
    for (int k = 0; k <= e.word[static_cast<std::size_t>(i)]; ++k) {
      blocks.push_back(first);
      blocks.push_back(static_cast<Symbol>(1 - first));
    }
  }
  return BinaryWord(std::vector<Symbol>(blocks.begin() + e.offset_before, blocks.end() - e.offset_after));
}

/// The full word with the window's strict interior deleted.
inline BinaryWord quotient_of(const OddEncoding& e) {
  require_valid(e);
  return quotient_at(blockvector_to_word(e.word), e.window());
}

/// Blocks before s, an alternating run of l + m + 2 symbols starting with
/// block s's first symbol, then blocks after t.
inline BinaryWord quotient_closed_form(const OddEncoding& e) {
  require_valid(e);
  const BinaryWord full = blockvector_to_word(e.word);
  const auto s = static_cast<std::size_t>(e.start_block);
  const auto t = static_cast<std::size_t>(e.end_block);
  std::vector<Symbol> out(full.symbols().begin(), full.symbols().begin() + e.word.block_offset(s));
  Symbol next = s % 2 == 0 ? 0 : 1;
  for (int k = 0; k < e.offset_before + e.offset_after + 2; ++k) {
    out.push_back(next);
    next = static_cast<Symbol>(1 - next);
  }
  out.insert(out.end(), full.symbols().begin() + e.word.block_offset(t + 1), full.symbols().end());
  return BinaryWord(std::move(out));
}

/// An orbit {alpha, phi(alpha)}; `first` is the smaller element.
struct Orbit {
  OddEncoding first;
  OddEncoding second;
};

/// Splits a phi-closed set of encodings into its two-element orbits, ordered
/// by their smaller element.
inline std::vector<Orbit> pair_orbits(const std::vector<OddEncoding>& encodings) {
  const std::set<OddEncoding> pool(encodings.begin(), encodings.end());
  std::vector<Orbit> out;
  for (const OddEncoding& e : pool) {
    OddEncoding image = phi(e);
    if (image == e) throw InvariantViolation("phi fixes " + e.to_string());
    if (!pool.contains(image)) {
      throw PreconditionError("encoding set is not closed under phi: image of " + e.to_string() +
                              " is " + image.to_string());
    }
    if (e < image) out.push_back(Orbit{e, std::move(image)});
  }
  return out;
}

}  // namespace symins
