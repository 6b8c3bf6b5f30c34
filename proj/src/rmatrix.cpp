#include "brm/rmatrix.hpp"

#include <algorithm>
#include <cctype>

namespace brm {

Tuple<ModP> point_tuple(const FieldPoint& pt) {
  Tuple<ModP> t(pt.n(), pt.m());
  for (int i = 1; i <= pt.m(); ++i)
    for (int r = 1; r <= pt.n(); ++r) t.at(i, r) = pt.at(Variable{i, r});
  return t;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation word_to_permutation(const Word& w, int m) {
  Permutation p(m);
  for (int i = 0; i < m; ++i) p[i] = i + 1;
  for (int letter : w) {
    if (letter < 1 || letter >= m) throw std::out_of_range("letter out of range");
    std::swap(p[letter - 1], p[letter]);
  }
  return p;
}

int inversions(const Permutation& p) {
  int c = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) c += p[a] > p[b];
  return c;
}

// Sorting p by swaps t_1..t_L means p * t_1 * ... * t_L = id, so the reversed
// swap list rebuilds p from the identity.
Word reduced_word(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  Permutation q = p;
  Word swaps;
  const int m = static_cast<int>(q.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k + 1 < m; ++k)
      if (q[k] > q[k + 1]) {
        std::swap(q[k], q[k + 1]);
        swaps.push_back(k + 1);
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Word reduced_word_rtl(const Permutation& p) {
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation");
  Permutation q = p;
  Word swaps;
  const int m = static_cast<int>(q.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = m - 2; k >= 0; --k)
      if (q[k] > q[k + 1]) {
        std::swap(q[k], q[k + 1]);
        swaps.push_back(k + 1);
        changed = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Word parse_word(std::string_view text, bool letters_first) {
  Word w;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&] { throw std::invalid_argument("cannot parse word '" + std::string(text) + "'"); };
  auto number = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 6) bad();
    return std::stoi(s.substr(start, pos - start));
  };
  if (s.empty() || s == "[]" || s == "e" || s == "id") return w;
  std::size_t pos = 0;
  if (s.front() == '[') {
    if (s.back() != ']') bad();
    s = s.substr(1, s.size() - 2);
    while (pos < s.size()) {
      w.push_back(number(pos));
      if (pos < s.size() && s[pos++] != ',') bad();
      if (pos == s.size() && s.back() == ',') bad();
    }
  } else {
    while (pos < s.size()) {
      if (s[pos] != 's') bad();
      ++pos;
      if (pos < s.size() && s[pos] == '_') ++pos;
      w.push_back(number(pos));
      if (pos < s.size() && s[pos++] != '*') bad();
      if (pos == s.size() && s.back() == '*') bad();
    }
  }
  for (int letter : w)
    if (letter < 1) bad();
  if (!letters_first) std::reverse(w.begin(), w.end());
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += "s" + std::to_string(*it);
  }
  return out;
}

}  // namespace brm
