#include "curveplex/letters.hpp"

#include <cctype>
#include <sstream>

#include "curveplex/errors.hpp"

namespace curveplex {

Letter parse_letter(const std::string& token, int genus) {
  if (token.size() < 2) throw BadInput("bad letter token '" + token + "'");
  char c = token[0];
  char base = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (base != 'a' && base != 'b') throw BadInput("bad letter token '" + token + "'");
  int idx = 0;
  for (size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw BadInput("bad letter token '" + token + "'");
    idx = idx * 10 + (token[i] - '0');
  }
  if (idx < 1 || idx > genus) throw BadInput("handle index out of range in '" + token + "'");
  Letter x = (base == 'a') ? gen_a(idx) : gen_b(idx);
  return std::isupper(static_cast<unsigned char>(c)) ? -x : x;
}

Word parse_word(const std::string& text, int genus) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(parse_letter(tok, genus));
  return w;
}

std::string letter_name(Letter x) {
  int k = x > 0 ? x : -x;
  int idx = (k + 1) / 2;
  char base = (k % 2 == 1) ? 'a' : 'b';
  if (x < 0) base = static_cast<char>(std::toupper(base));
  return std::string(1, base) + std::to_string(idx);
}

std::string word_name(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (Letter& x : r) x = -x;
  return r;
}

Word rotated(const Word& w, int start) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  start = ((start % n) + n) % n;
  Word r;
  r.reserve(w.size());
  for (int i = 0; i < n; ++i) r.push_back(w[(start + i) % n]);
  return r;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_free_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi));
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != -w.back();
}

Word concat(const Word& u, const Word& v) {
  Word r = u;
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

Word power(const Word& w, int n) {
  Word base = n >= 0 ? w : inverse(w);
  int k = n >= 0 ? n : -n;
  Word r;
  r.reserve(base.size() * static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) r.insert(r.end(), base.begin(), base.end());
  return r;
}

std::string word_key(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(static_cast<char>(64 + x));
  return s;
}

}  // namespace curveplex
