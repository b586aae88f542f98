#pragma once

// Rule-based membership tests and brute-force context computations that do
// not go through the library's graph machinery.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

using Member = std::function<bool(const std::string&)>;

inline bool even(const std::string& w) {
  auto first = w.find('1');
  if (first == std::string::npos) {
    return true;
  }
  std::size_t run = 0;
  for (std::size_t i = first + 1; i < w.size(); ++i) {
    if (w[i] == '0') {
      ++run;
    } else {
      if (run % 2 != 0) {
        return false;
      }
      run = 0;
    }
  }
  return true;
}

inline bool golden(const std::string& w) { return w.find("11") == std::string::npos; }

inline bool full(const std::string&) { return true; }

// Heights on the spine, a only at the bottom.
inline bool gicar(const std::string& w) {
  for (long h0 = 0; h0 <= static_cast<long>(w.size()); ++h0) {
    long h = h0;
    bool ok = true;
    for (char ch : w) {
      if (ch == 'a') {
        ok = h == 0;
      } else if (ch == 'b') {
        ++h;
      } else {
        ok = --h >= 0;
      }
      if (!ok) {
        break;
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

// States (upper, i) = v_i and (lower, i) = w_i, i >= 1.
inline bool anbn(const std::string& w) {
  long const top = static_cast<long>(w.size()) + 2;
  for (int upper = 0; upper <= 1; ++upper) {
    for (long i0 = 1; i0 <= top; ++i0) {
      bool up = upper == 1;
      long i = i0;
      bool ok = true;
      for (char ch : w) {
        if (ch == 'a') {
          if (up) {
            ++i;
          } else if (i == 1) {
            up = true;
          } else {
            ok = false;
          }
        } else {
          if (up) {
            up = false;
          } else if (i > 1) {
            --i;
          } else {
            ok = false;
          }
        }
        if (!ok) {
          break;
        }
      }
      if (ok) {
        return true;
      }
    }
  }
  return false;
}

// Charges "+" and "-" (one character per symbol); partial sums stay in a
// window of width c.
inline Member charge(long c) {
  return [c](const std::string& w) {
    long s = 0;
    long lo = 0;
    long hi = 0;
    for (char ch : w) {
      s += ch == '+' ? 1 : -1;
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return hi - lo <= c;
  };
}

// Fixed point of a substitution on single-character symbols.
inline std::string fixed_point(const std::vector<std::string>& images, const std::string& symbols,
                               std::size_t length) {
  std::string m(1, symbols[0]);
  while (m.size() < length) {
    std::string next;
    for (char ch : m) {
      next += images[symbols.find(ch)];
    }
    if (next.size() <= m.size()) {
      break;
    }
    m = next;
  }
  return m.substr(0, length);
}

// Words read along G(m): an arbitrary factor of m, then e-separated
// prefixes of m.
class MinimalLanguage {
 public:
  explicit MinimalLanguage(std::string m, std::size_t max_factor = 32) : m_(std::move(m)) {
    for (std::size_t len = 0; len <= max_factor; ++len) {
      for (std::size_t i = 0; i + len <= m_.size(); ++i) {
        factors_.insert(m_.substr(i, len));
      }
    }
  }

  bool operator()(const std::string& w) const {
    auto first_e = w.find('e');
    if (first_e == std::string::npos) {
      return factors_.count(w) > 0;
    }
    if (factors_.count(w.substr(0, first_e)) == 0) {
      return false;
    }
    std::size_t i = first_e;
    while (i < w.size()) {
      while (i < w.size() && w[i] == 'e') {
        ++i;
      }
      std::size_t j = w.find('e', i);
      std::string block = w.substr(i, j == std::string::npos ? std::string::npos : j - i);
      if (m_.compare(0, block.size(), block) != 0) {
        return false;
      }
      if (j == std::string::npos) {
        break;
      }
      i = j;
    }
    return true;
  }

  std::vector<std::string> factors(std::size_t n) const {
    std::vector<std::string> out;
    for (auto const& f : factors_) {
      if (f.size() == n) {
        out.push_back(f);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::string m_;
  std::unordered_set<std::string> factors_;
};

inline std::vector<std::string> words(const std::string& symbols, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (auto const& w : out) {
      for (char ch : symbols) {
        next.push_back(w + ch);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::string> words_up_to(const std::string& symbols, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n <= k; ++n) {
    auto layer = words(symbols, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline std::vector<std::string> language(const Member& in, const std::string& symbols, std::size_t n) {
  std::vector<std::string> out;
  for (auto const& w : words(symbols, n)) {
    if (in(w)) {
      out.push_back(w);
    }
  }
  return out;
}

using Context = std::set<std::pair<std::string, std::string>>;

inline Context context(const Member& in, const std::string& symbols, const std::string& w,
                       std::size_t k) {
  Context c;
  auto ext = words_up_to(symbols, k);
  for (auto const& u : ext) {
    if (!in(u + w)) {
      continue;
    }
    for (auto const& v : ext) {
      if (in(u + w + v)) {
        c.emplace(u, v);
      }
    }
  }
  return c;
}

inline std::set<std::string> right_context(const Member& in, const std::string& symbols,
                                           const std::string& w, std::size_t k) {
  std::set<std::string> c;
  for (auto const& v : words_up_to(symbols, k)) {
    if (in(w + v)) {
      c.insert(v);
    }
  }
  return c;
}

inline std::set<std::string> left_context(const Member& in, const std::string& symbols,
                                          const std::string& w, std::size_t k) {
  std::set<std::string> c;
  for (auto const& u : words_up_to(symbols, k)) {
    if (in(u + w)) {
      c.insert(u);
    }
  }
  return c;
}

// Least k <= k_max with uw, wv in L and uwv not in L for |u|, |v| <= k;
// 0 when none exists.
inline std::size_t refuting_k(const Member& in, const std::string& symbols, const std::string& w,
                              std::size_t k_max) {
  // Extension sets are suffix/prefix closed, so grow them one symbol at a time.
  std::vector<std::vector<std::string>> left{{""}};
  std::vector<std::vector<std::string>> right{{""}};
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::string> l;
    std::vector<std::string> r;
    for (auto const& u : left.back()) {
      for (char ch : symbols) {
        if (in(ch + u + w)) {
          l.push_back(ch + u);
        }
      }
    }
    for (auto const& v : right.back()) {
      for (char ch : symbols) {
        if (in(w + v + ch)) {
          r.push_back(v + ch);
        }
      }
    }
    left.push_back(std::move(l));
    right.push_back(std::move(r));
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j <= k; ++j) {
        if (i != k && j != k) {
          continue;
        }
        for (auto const& u : left[i]) {
          for (auto const& v : right[j]) {
            if (!in(u + w + v)) {
              return k;
            }
          }
        }
      }
    }
  }
  return 0;
}

}  // namespace oracle
