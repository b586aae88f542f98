#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subshift {

// Symbols are indices into an Alphabet; their order is the alphabet order.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& name(Symbol s) const;
  std::optional<Symbol> find(std::string_view name) const;
  Symbol at(std::string_view name) const;

  // Parses a word by greedy longest match against the symbol names.
  // Whitespace separates symbols and is otherwise ignored.
  Word parse(std::string_view text) const;

  // Concatenates symbol names; multi-character names are wrapped in
  // parentheses so the result stays readable.
  std::string format(const Word& w) const;

  // Throws unless every symbol of w is a valid index.
  void validate(const Word& w) const;

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> symbols_;
};

bool is_subword(const Word& needle, const Word& haystack);
Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);
Word reversed(Word w);

// All words of length n over an alphabet of the given size, in lex order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n);

}  // namespace subshift
