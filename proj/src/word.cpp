#include "daw/word.hpp"

#include <sstream>

namespace daw {

int Alphabet::intern(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  int i = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, i);
  return i;
}

int Alphabet::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownLetterError("unknown letter: " + name);
  return it->second;
}

bool Alphabet::contains(const std::string& name) const {
  return index_.count(name) != 0;
}

Word parse_word(const Alphabet& a, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    long power = 1;
    std::string base = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      try {
        power = std::stol(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw UnknownLetterError("bad exponent in token: " + tok);
      }
      if (power == 0) throw UnknownLetterError("zero exponent in token: " + tok);
    }
    int gen = a.index(base);
    int sign = power > 0 ? 1 : -1;
    for (long k = 0; k < (power > 0 ? power : -power); ++k)
      w.push_back({gen, sign});
  }
  return w;
}

std::string format_word(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << a.name(w[i].gen);
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->sign});
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) return false;
  return true;
}

}  // namespace daw
