#include "subshift/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw InvalidArgument("alphabet must not be empty");
  }
  std::set<std::string> seen;
  for (auto const& s : symbols_) {
    if (s.empty()) {
      throw InvalidArgument("alphabet symbols must be non-empty strings");
    }
    if (!seen.insert(s).second) {
      throw InvalidArgument("duplicate alphabet symbol '" + s + "'");
    }
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= symbols_.size()) {
    throw InvalidArgument("symbol index " + std::to_string(s) + " outside alphabet");
  }
  return symbols_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) {
      return static_cast<Symbol>(i);
    }
  }
  return std::nullopt;
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) {
    return *s;
  }
  throw InvalidArgument("unknown symbol '" + std::string(name) + "'");
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t best_len = 0;
    Symbol best = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      auto const& s = symbols_[i];
      if (s.size() > best_len && text.substr(pos, s.size()) == s) {
        best_len = s.size();
        best = static_cast<Symbol>(i);
      }
    }
    if (best_len == 0) {
      throw InvalidArgument("cannot parse '" + std::string(text) + "' at position " +
                            std::to_string(pos));
    }
    w.push_back(best);
    pos += best_len;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Symbol s : w) {
    auto const& n = name(s);
    if (n.size() == 1) {
      out += n;
    } else {
      out += "(" + n + ")";
    }
  }
  return out;
}

void Alphabet::validate(const Word& w) const {
  for (Symbol s : w) {
    if (s >= symbols_.size()) {
      throw InvalidArgument("symbol index " + std::to_string(s) + " outside alphabet");
    }
  }
}

bool is_subword(const Word& needle, const Word& haystack) {
  if (needle.empty()) {
    return true;
  }
  return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
         haystack.end();
}

Word concat(const Word& a, const Word& b) {
  Word r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  return concat(concat(a, b), c);
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t n) {
  std::vector<Word> out;
  if (alphabet_size == 0) {
    if (n == 0) {
      out.emplace_back();
    }
    return out;
  }
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++w[i] < alphabet_size) {
        break;
      }
      w[i] = 0;
      if (i == 0) {
        return out;
      }
    }
    if (n == 0) {
      return out;
    }
  }
}

}  // namespace subshift
