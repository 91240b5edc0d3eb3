#include "stt/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stt {

std::string show_word(const Word& w) {
  if (w.empty()) return "e";
  bool digits = std::all_of(w.begin(), w.end(),
                            [](Letter x) { return x >= 0 && x <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!digits && i > 0) os << ',';
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string& s, int n) {
  Word w;
  if (s == "e" || s.empty()) return w;
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty letter in word: " + s);
      w.push_back(std::stoi(item));
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word: " + s);
      w.push_back(c - '0');
    }
  }
  for (Letter x : w)
    if (x < 0 || x >= n)
      throw std::invalid_argument("letter out of range in word: " + s);
  return w;
}

Word lcp(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return Word(a.begin(), a.begin() + k);
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

long long block_index(const Word& block, int n) {
  long long v = 0;
  for (Letter x : block) v = v * n + x;
  return v;
}

Word block_at(long long index, int n, int width) {
  Word w(width);
  for (int i = width - 1; i >= 0; --i) {
    w[i] = static_cast<Letter>(index % n);
    index /= n;
  }
  return w;
}

Word rotate_left(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  r %= w.size();
  Word out(w.begin() + r, w.end());
  out.insert(out.end(), w.begin(), w.begin() + r);
  return out;
}

Word least_rotation(const Word& w) {
  if (w.empty()) throw std::invalid_argument("least_rotation: empty word");
  const std::size_t m = w.size();
  auto at = [&](std::size_t i) { return w[i % m]; };
  std::size_t i = 0, j = 1, k = 0;
  while (i < m && j < m && k < m) {
    Letter a = at(i + k), b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return rotate_left(w, std::min(i, j));
}

Word primitive_root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_root: empty word");
  const std::size_t m = w.size();
  for (std::size_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < m && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return Word(w.begin(), w.begin() + d);
  }
  return w;
}

bool is_prime_word(const Word& w) { return primitive_root(w).size() == w.size(); }

Word necklace_of(const Word& w) { return least_rotation(primitive_root(w)); }

std::vector<Word> all_words(int n, int len) {
  if (len < 0) throw std::invalid_argument("all_words: negative length");
  std::vector<Word> out;
  Word w(len, 0);
  for (;;) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::vector<Word> prime_necklaces(int n, int len) {
  std::set<Word> seen;
  for (const Word& w : all_words(n, len))
    if (is_prime_word(w)) seen.insert(least_rotation(w));
  return std::vector<Word>(seen.begin(), seen.end());
}

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace stt
