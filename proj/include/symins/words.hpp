#pragma once

// Compositions, binary words and block vectors.
//
// A composition (n_1, ..., n_r) denotes the multiple zeta value
//
//     zeta(n_1, ..., n_r) = sum_{0 < k_1 < ... < k_r} 1 / (k_1^n_1 ... k_r^n_r)
//
// so zeta(1, 3) converges and the last part carries the convergence. Its
// binary word is the Kontsevich word with both boundary symbols included:
//
//     0 ; 1 0^{n_1 - 1} , 1 0^{n_2 - 1} , ... , 1 0^{n_r - 1} ; 1
//
// A block vector [b_0, ..., b_2n] names the word
// (01)^{b_0+1} (10)^{b_1+1} (01)^{b_2+1} ... (01)^{b_2n+1}, which is the word of
// zeta({2}^{b_0}, 1, {2}^{b_1}, 3, ..., 1, {2}^{b_{2n-1}}, 3, {2}^{b_2n}).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symins {

/// Signed integer coefficients: depth signs, multiplicities, tensor coefficients.
using SignedInteger = std::int64_t;

/// Raised when an input violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Symbol = std::uint8_t;

/// A word over {0, 1}, boundary symbols included. Index 0 is the left
/// boundary, index size()-1 the right boundary.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
      if (s > 1) throw PreconditionError("binary word symbols must be 0 or 1");
    }
  }

  /// Parses "0101"; '|' and whitespace are ignored so block bars may be kept.
  static BinaryWord parse(std::string_view text) {
    std::vector<Symbol> out;
    for (char ch : text) {
      if (ch == '0' || ch == '1') {
        out.push_back(static_cast<Symbol>(ch - '0'));
      } else if (ch != '|' && ch != ' ') {
        throw PreconditionError("unexpected character in binary word: " + std::string(1, ch));
      }
    }
    return BinaryWord(std::move(out));
  }

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol front() const { return symbols_.front(); }
  Symbol back() const { return symbols_.back(); }

  /// Number of symbols strictly between the two boundaries.
  std::size_t interior_length() const noexcept {
    return symbols_.size() < 2 ? 0 : symbols_.size() - 2;
  }

  BinaryWord reversed() const {
    return BinaryWord(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend()));
  }

  /// Symbols [first, first + count).
  BinaryWord slice(std::size_t first, std::size_t count) const {
    if (first + count > symbols_.size()) throw std::out_of_range("BinaryWord::slice");
    return BinaryWord(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(first),
                                          symbols_.begin() + static_cast<std::ptrdiff_t>(first + count)));
  }

  void push_back(Symbol s) { symbols_.push_back(s); }

  std::string to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
  }

  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Argument list (n_1, ..., n_r) of a multiple zeta value.
struct Composition {
  std::vector<int> parts;

  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int depth() const { return static_cast<int>(parts.size()); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts[i]);
    }
    return out;
  }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// [b_0, ..., b_2n]; always an odd number of non-negative entries.
class BlockVector {
 public:
  BlockVector() : entries_{0} {}
  explicit BlockVector(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() % 2 == 0) {
      throw PreconditionError("block vector needs an odd number of entries, got " +
                              std::to_string(entries_.size()));
    }
    for (int b : entries_) {
      if (b < 0) throw PreconditionError("block vector entries must be non-negative");
    }
  }

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  /// The n of [b_0, ..., b_2n].
  int n() const noexcept { return static_cast<int>(entries_.size() / 2); }
  int total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

  /// Symbols in block i.
  int block_length(std::size_t i) const { return 2 * (entries_[i] + 1); }

  /// Offset of block i in the expanded word.
  int block_offset(std::size_t i) const {
    int offset = 0;
    for (std::size_t j = 0; j < i; ++j) offset += block_length(j);
    return offset;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  friend auto operator<=>(const BlockVector&, const BlockVector&) = default;
  friend bool operator==(const BlockVector&, const BlockVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Word of a composition including both boundaries. The empty composition
/// maps to "01".
inline BinaryWord kontsevich_word(const Composition& c) {
  std::vector<Symbol> out{0};
  for (int part : c.parts) {
    if (part < 1) throw PreconditionError("composition parts must be positive");
    out.push_back(1);
    out.insert(out.end(), static_cast<std::size_t>(part - 1), Symbol{0});
  }
  out.push_back(1);
  return BinaryWord(std::move(out));
}

/// The iterated integral I(0; a_1, ..., a_n; 1) converges iff a_1 = 1 and a_n = 0,
/// i.e. the word begins 01 and ends 01. For compositions this means the last
/// part is at least 2.
inline bool is_admissible(const BinaryWord& w) {
  if (w.size() < 2 || w.front() != 0 || w.back() != 1) return false;
  if (w.size() == 2) return true;
  return w[1] == 1 && w[w.size() - 2] == 0;
}

inline bool is_admissible(const Composition& c) {
  if (std::any_of(c.parts.begin(), c.parts.end(), [](int p) { return p < 1; })) return false;
  return is_admissible(kontsevich_word(c));
}

inline BinaryWord composition_to_word(const Composition& c) {
  BinaryWord w = kontsevich_word(c);
  if (!is_admissible(w)) {
    throw PreconditionError("composition (" + c.to_string() + ") is not admissible: word " +
                            w.to_string() + " must begin and end with 01");
  }
  return w;
}

/// Z(b_0, ..., b_2n) = zeta({2}^{b_0}, 1, {2}^{b_1}, 3, ..., {2}^{b_2n}).
inline Composition blockvector_to_composition(const BlockVector& b) {
  Composition c;
  const std::size_t last = b.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    c.parts.insert(c.parts.end(), static_cast<std::size_t>(b[i]), 2);
    if (i < last) c.parts.push_back(i % 2 == 0 ? 1 : 3);
  }
  return c;
}

/// Block i is (01)^{b_i+1} for even i and (10)^{b_i+1} for odd i.
inline BinaryWord blockvector_to_word(const BlockVector& b) {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(b.block_offset(b.size())));
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Symbol first = i % 2 == 0 ? 0 : 1;
    for (int k = 0; k <= b[i]; ++k) {
      out.push_back(first);
      out.push_back(static_cast<Symbol>(1 - first));
    }
  }
  return BinaryWord(std::move(out));
}

/// 4n + 2 * sum(b_i); the word length minus 2.
inline int weight_of(const BlockVector& b) { return 4 * b.n() + 2 * b.total(); }

/// (-1)^depth, the sign relating zeta(c) to its iterated integral.
inline SignedInteger sign_of(const Composition& c) { return c.depth() % 2 == 0 ? 1 : -1; }

}  // namespace symins
