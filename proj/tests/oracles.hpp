#pragma once

// Test-only reference implementations. Nothing here calls into the encoding
// or coaction code it is used to check.

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symins/words.hpp"

namespace symins::oracle {

/// Word of a block vector, spelled out from the zeta arguments the hard way:
/// 0, then 1 0^{n-1} for each part, then 1.
inline std::string word_by_hand(const std::vector<int>& b) {
  std::string w = "0";
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (int k = 0; k < b[i]; ++k) w += "10";
    if (i + 1 < b.size()) w += (i % 2 == 0) ? "1" : "100";
  }
  return w + "1";
}

/// Start indices of all windows of `length` symbols on `word` whose two end
/// symbols differ.
inline std::set<std::size_t> nontrivial_window_starts(const std::string& word, std::size_t length) {
  std::set<std::size_t> out;
  for (std::size_t p = 0; p + length <= word.size(); ++p) {
    if (word[p] != word[p + length - 1]) out.insert(p);
  }
  return out;
}

/// Every window (start, length) on the word, trivial or not.
inline std::vector<std::pair<std::size_t, std::size_t>> all_windows(const std::string& word, std::size_t length) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p + length <= word.size(); ++p) out.emplace_back(p, length);
  return out;
}

inline std::string reverse_of(std::string s) { return {s.rbegin(), s.rend()}; }

/// All block vectors with 2n+1 entries for n in [1, max_n] and entry sum <= max_sum.
inline std::vector<std::vector<int>> small_block_vectors(int max_n, int max_sum) {
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= max_n; ++n) {
    const int len = 2 * n + 1;
    std::vector<int> v(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
      if (i == len) {
        out.push_back(v);
        return;
      }
      for (int x = 0; x <= remaining; ++x) {
        v[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, remaining - x);
      }
      v[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, max_sum);
  }
  return out;
}

}  // namespace symins::oracle
