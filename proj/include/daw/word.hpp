#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace daw {

struct UnknownLetterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interned generator names; words store indices into an Alphabet.
class Alphabet {
 public:
  int intern(const std::string& name);
  int index(const std::string& name) const;  // throws UnknownLetterError
  bool contains(const std::string& name) const;
  const std::string& name(int i) const { return names_.at(i); }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

struct Letter {
  int gen;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Space-separated tokens "g", "g^-1", "g^k" (k a nonzero integer).
Word parse_word(const Alphabet& a, const std::string& text);
std::string format_word(const Alphabet& a, const Word& w);

Word free_reduce(Word w);
Word invert_word(const Word& w);
Word concat(const Word& x, const Word& y);
bool is_freely_reduced(const Word& w);

}  // namespace daw
