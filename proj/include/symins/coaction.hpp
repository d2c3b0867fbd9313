#pragma once

// The derivation operators D_r on iterated-integral words, and the two
// relations used to simplify their left factors:
//
//   I(a; ...; a) = 0 for a non-empty interior       (equal boundaries vanish)
//   I(0; a_1, ..., a_n; 1) = (-1)^n I(1; a_n, ..., a_1; 0)   (reversal of paths)
//
// D_r cuts every length-r interior segment out of a word:
//
//   D_r I(a_0; a_1..a_n; a_{n+1}) =
//     sum_{p=0}^{n-r} I^L(a_p; a_{p+1}..a_{p+r}; a_{p+r+1})
//                     (x) I(a_0; a_1..a_p, a_{p+r+1}..a_n; a_{n+1})
//
// Left factors are kept as raw words modulo reversal only; products and
// zeta(2) are never quotiented out.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symins/words.hpp"

namespace symins {

/// A cut at full-word index `start` (the left boundary symbol) with `length`
/// interior symbols.
struct Window {
  std::size_t start = 0;
  std::size_t length = 0;

  friend auto operator<=>(const Window&, const Window&) = default;
  friend bool operator==(const Window&, const Window&) = default;
};

/// One summand subsequence (x) quotient of a D_r expansion.
struct TensorTerm {
  BinaryWord left;   // subsequence, boundaries included
  BinaryWord right;  // quotient sequence
  SignedInteger coefficient = 1;
  Window window;
};

inline BinaryWord subsequence_at(const BinaryWord& w, Window win) {
  return w.slice(win.start, win.length + 2);
}

/// Deletes the symbols strictly inside the window; both boundaries stay.
inline BinaryWord quotient_at(const BinaryWord& w, Window win) {
  std::vector<Symbol> out;
  out.reserve(w.size() - win.length);
  const auto& s = w.symbols();
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(win.start + 1));
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(win.start + win.length + 1), s.end());
  return BinaryWord(std::move(out));
}

/// Candidate windows of D_r on w, before dropping vanishing ones.
inline std::size_t dr_window_count(const BinaryWord& w, std::size_t r) {
  return w.interior_length() + 1 - r;
}

inline void check_cut_length(const BinaryWord& w, std::size_t r) {
  if (r < 1 || r > w.interior_length()) {
    throw PreconditionError("D_" + std::to_string(r) + " needs 1 <= r <= " +
                            std::to_string(w.interior_length()) + " on word " + w.to_string());
  }
}

/// Non-vanishing terms of D_r w, each with coefficient +1.
inline std::vector<TensorTerm> dr_terms(const BinaryWord& w, std::size_t r) {
  check_cut_length(w, r);
  std::vector<TensorTerm> out;
  const std::size_t windows = dr_window_count(w, r);
  for (std::size_t p = 0; p < windows; ++p) {
    if (w[p] == w[p + r + 1]) continue;
    const Window win{p, r};
    out.push_back(TensorTerm{subsequence_at(w, win), quotient_at(w, win), 1, win});
  }
  return out;
}

/// Representative of {w, reverse(w)} under the reversal relation.
struct CanonicalForm {
  BinaryWord word;
  /// w = sign * word. Zero when the relation forces w = -w.
  SignedInteger sign = 1;
};

inline CanonicalForm reversal_canonical(const BinaryWord& w) {
  BinaryWord rev = w.reversed();
  const SignedInteger flip = w.interior_length() % 2 == 0 ? 1 : -1;
  if (rev == w) return {w, flip == 1 ? SignedInteger{1} : SignedInteger{0}};
  if (w < rev) return {w, 1};
  return {std::move(rev), flip};
}

/// Formal sum of left (x) right terms with integer coefficients; zero entries
/// are never stored.
class TermMultiset {
 public:
  using Key = std::pair<BinaryWord, BinaryWord>;

  void add(const BinaryWord& left, const BinaryWord& right, SignedInteger coefficient) {
    if (coefficient == 0) return;
    // A left factor with equal boundaries and non-empty interior is zero.
    if (left.interior_length() >= 1 && left.front() == left.back()) return;
    CanonicalForm canon = reversal_canonical(left);
    if (canon.sign == 0) return;
    Key key{std::move(canon.word), right};
    auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
    it->second += canon.sign * coefficient;
    if (it->second == 0) terms_.erase(it);
  }

  void add(const TensorTerm& term, SignedInteger scale = 1) {
    add(term.left, term.right, term.coefficient * scale);
  }

  void merge(const TermMultiset& other) {
    for (const auto& [key, coefficient] : other.terms_) add(key.first, key.second, coefficient);
  }

  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Key, SignedInteger>& entries() const noexcept { return terms_; }

  friend bool operator==(const TermMultiset&, const TermMultiset&) = default;

 private:
  std::map<Key, SignedInteger> terms_;
};

inline TermMultiset accumulate(std::span<const TensorTerm> terms) {
  TermMultiset out;
  for (const TensorTerm& t : terms) out.add(t);
  return out;
}

}  // namespace symins
