#include "rcalab/words.hpp"

#include <algorithm>
#include <functional>

#include "rcalab/error.hpp"

namespace rcalab {

namespace {

// Nonempty proper suffix of `a` of length `len` equals the prefix of `b` of the same length.
bool suffix_matches_prefix(const Word& a, const Word& b, int len) {
  const int off = a.length() - len;
  for (int k = 0; k < len; ++k) {
    if (a[off + k] != b[k]) return false;
  }
  return true;
}

}  // namespace

Word::Word(std::vector<int> symbols, int alphabet_size) : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (symbols_.empty()) throw ParameterOutOfRange("words are nonempty");
  if (alphabet_size_ < 2) throw ParameterOutOfRange("alphabet size must be >= 2");
  for (int s : symbols_) {
    if (s < 0 || s >= alphabet_size_) throw ParameterOutOfRange("word symbol outside alphabet");
  }
}

Word Word::parse(const std::string& text, int alphabet_size) {
  std::vector<int> symbols;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("word", "expected digits, got '" + text + "'");
    symbols.push_back(c - '0');
  }
  if (symbols.empty()) throw ParseError("word", "empty word");
  return Word(std::move(symbols), alphabet_size);
}

Word Word::concat(const Word& other) const {
  std::vector<int> s = symbols_;
  s.insert(s.end(), other.symbols_.begin(), other.symbols_.end());
  return Word(std::move(s), std::max(alphabet_size_, other.alphabet_size_));
}

std::uint32_t Word::to_point() const {
  std::uint32_t v = 0;
  for (int s : symbols_) v = v * static_cast<std::uint32_t>(alphabet_size_) + static_cast<std::uint32_t>(s);
  return v;
}

std::string Word::to_string() const {
  std::string out;
  for (int s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

bool is_unbordered(const Word& w) {
  for (int len = 1; len < w.length(); ++len) {
    if (suffix_matches_prefix(w, w, len)) return false;
  }
  return true;
}

int min_occurrence_gap(const Word& w) {
  for (int d = 1; d < w.length(); ++d) {
    if (suffix_matches_prefix(w, w, w.length() - d)) return d;
  }
  return w.length();
}

std::vector<int> cyclic_occurrences(const Word& w, const std::vector<int>& cyclic) {
  std::vector<int> out;
  const int n = static_cast<int>(cyclic.size());
  for (int p = 0; p < n; ++p) {
    bool hit = true;
    for (int k = 0; k < w.length() && hit; ++k) hit = cyclic[static_cast<std::size_t>((p + k) % n)] == w[k];
    if (hit) out.push_back(p);
  }
  return out;
}

std::vector<Word> enumerate_unbordered(int length, int alphabet_size, std::uint64_t budget) {
  if (length < 1) throw ParameterOutOfRange("length must be >= 1");
  auto n = checked_power(static_cast<std::uint64_t>(alphabet_size), length);
  if (!n || *n > budget) throw BudgetExceeded("enumerate_unbordered: alphabet_size^length exceeds budget");
  std::vector<Word> out;
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  for (std::uint64_t idx = 0; idx < *n; ++idx) {
    Word w(digits, alphabet_size);
    if (is_unbordered(w)) out.push_back(std::move(w));
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < alphabet_size) break;
      digits[k] = 0;
    }
  }
  return out;
}

MutuallyUnborderedFamily::MutuallyUnborderedFamily(std::vector<Word> words, std::optional<int> k)
    : words_(std::move(words)), k_(k) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  for (const auto& w : words_) {
    if (w.length() != words_.front().length()) throw ParameterOutOfRange("family words must have equal length");
  }
  if (auto check = check_mutually_unbordered(words_); !check) {
    throw PreconditionViolation("family is not mutually unbordered: suffix of " + check.witness->first.to_string() +
                                " overlaps prefix of " + check.witness->second.to_string());
  }
}

std::vector<std::uint32_t> MutuallyUnborderedFamily::points() const {
  std::vector<std::uint32_t> out;
  for (const auto& w : words_) out.push_back(w.to_point());
  return out;
}

MutuallyUnborderedFamily MutuallyUnborderedFamily::prefix(int count) const {
  if (count < 0 || count > size()) throw ParameterOutOfRange("prefix size out of range");
  return MutuallyUnborderedFamily(std::vector<Word>(words_.begin(), words_.begin() + count));
}

MutuallyUnborderedFamily formula_family(int length, int k) {
  if (k < 0 || 2 * k >= length - 4) {
    throw ParameterOutOfRange("formula_family needs 0 <= k < (l-4)/2; got l=" + std::to_string(length) +
                              ", k=" + std::to_string(k));
  }
  std::vector<Word> words;
  for (int v = 0; v < (1 << k); ++v) {
    std::vector<int> s(static_cast<std::size_t>(length - k - 2), 0);
    s.push_back(1);
    for (int b = k - 1; b >= 0; --b) s.push_back((v >> b) & 1);
    s.push_back(1);
    words.emplace_back(std::move(s));
  }
  return MutuallyUnborderedFamily(std::move(words), k);
}

OverlapCheck check_mutually_unbordered(const std::vector<Word>& family) {
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (a.length() != b.length()) throw ParameterOutOfRange("family words must have equal length");
      for (int len = 1; len < a.length(); ++len) {
        if (suffix_matches_prefix(a, b, len)) return {false, OverlapWitness{a, b, len}};
      }
    }
  }
  return {};
}

MutuallyUnborderedFamily search_mutually_unbordered(int length, int target_size, std::uint64_t budget) {
  auto candidates = enumerate_unbordered(length, 2, budget);
  std::vector<Word> best;
  std::vector<Word> cur;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (cur.size() > best.size()) best = cur;
    if (static_cast<int>(best.size()) >= target_size || ++nodes > budget) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      cur.push_back(candidates[i]);
      if (check_mutually_unbordered(cur)) dfs(i + 1);
      cur.pop_back();
      if (static_cast<int>(best.size()) >= target_size || nodes > budget) return;
    }
  };
  dfs(0);
  return MutuallyUnborderedFamily(std::move(best));
}

}  // namespace rcalab
