#include "monodromy/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace monodromy {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxStrands) {
    throw PreconditionError("degree " + std::to_string(degree) +
                            " outside [1, " + std::to_string(kMaxStrands) +
                            "]");
  }
}

void check_strands(int strands) {
  if (strands < 2 || strands > kMaxStrands) {
    throw PreconditionError("strand count " + std::to_string(strands) +
                            " outside [2, " + std::to_string(kMaxStrands) +
                            "]");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int degree) : degree_(degree) {
  check_degree(degree);
  for (int i = 0; i < degree; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::array<bool, kMaxStrands> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > p.degree_ || seen[v - 1]) {
      throw PreconditionError("images do not form a bijection");
    }
    seen[v - 1] = true;
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p(degree);
  if (i < 1 || j < 1 || i > degree || j > degree || i == j) {
    throw PreconditionError("bad transposition indices");
  }
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::reversal(int degree) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i) {
    p.img_[i] = static_cast<std::uint8_t>(degree - 1 - i);
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree_ != rhs.degree_) throw PreconditionError("degree mismatch");
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < degree_; ++i) {
    for (int j = i + 1; j < degree_; ++j) {
      if (img_[i] > img_[j]) ++inv;
    }
  }
  return inv;
}

std::pair<int, int> Permutation::as_transposition() const {
  int first = -1, second = -1, moved = 0;
  for (int i = 0; i < degree_; ++i) {
    if (img_[i] != i) {
      ++moved;
      if (first < 0) {
        first = i;
      } else {
        second = i;
      }
    }
  }
  if (moved != 2 || img_[first] != second) return {0, 0};
  return {first + 1, second + 1};
}

Permutation Permutation::times_adjacent(int i) const {
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation Permutation::adjacent_times(int i) const {
  Permutation r = *this;
  for (int k = 0; k < degree_; ++k) {
    if (r.img_[k] == i - 1) {
      r.img_[k] = static_cast<std::uint8_t>(i);
    } else if (r.img_[k] == i) {
      r.img_[k] = static_cast<std::uint8_t>(i - 1);
    }
  }
  return r;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = static_cast<std::uint64_t>(degree_);
  for (int i = 0; i < degree_ && i < 15; ++i) {
    c |= static_cast<std::uint64_t>(img_[i] & 0xF) << (4 * (i + 1));
  }
  return c;
}

std::string Permutation::to_string() const {
  std::string out;
  std::array<bool, kMaxStrands> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0 || x >= strands || -x >= strands) {
      throw PreconditionError("letter " + std::to_string(x) +
                              " outside generator range for m=" +
                              std::to_string(strands));
    }
    push_reduced(x);
  }
}

BraidWord::BraidWord(int strands, std::initializer_list<int> letters)
    : BraidWord(strands, std::vector<int>(letters)) {}

void BraidWord::push_reduced(int letter) {
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strands_ = strands_;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    r.letters_.push_back(-*it);
  }
  return r;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (strands_ != rhs.strands_) {
    throw PreconditionError("strand-count mismatch: " + std::to_string(strands_) +
                            " vs " + std::to_string(rhs.strands_));
  }
  letters_.reserve(letters_.size() + rhs.letters_.size());
  for (int x : rhs.letters_) push_reduced(x);
  return *this;
}

BraidWord BraidWord::power(int exponent) const {
  BraidWord base = exponent < 0 ? inverse() : *this;
  BraidWord r(strands_);
  for (int i = 0; i < std::abs(exponent); ++i) r *= base;
  return r;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) { return w1 * w2; }
BraidWord invert(const BraidWord& w) { return w.inverse(); }

BraidWord generator(int strands, int i, int exponent) {
  return BraidWord(strands, {i}).power(exponent);
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(w.strands());
  for (int x : w.letters()) p = p.times_adjacent(std::abs(x));
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord permutation_braid(const Permutation& p) {
  // Peel descents from the right: if p(i) > p(i+1) then p = p' s_i.
  std::vector<int> rev;
  Permutation cur = p;
  for (;;) {
    int i = 0;
    for (int k = 0; k + 1 < cur.degree(); ++k) {
      if (cur.raw(k) > cur.raw(k + 1)) {
        i = k + 1;
        break;
      }
    }
    if (i == 0) break;
    rev.push_back(i);
    cur = cur.times_adjacent(i);
  }
  std::reverse(rev.begin(), rev.end());
  return BraidWord(std::max(p.degree(), 2), rev);
}

BraidWord garside_delta(int strands) {
  if (strands < 2) throw PreconditionError("garside_delta needs m >= 2");
  std::vector<int> letters;
  for (int top = strands - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(strands, letters);
}

namespace {

void check_pair(int strands, int k, int l) {
  if (!(1 <= k && k < l && l <= strands)) {
    throw PreconditionError("band index (" + std::to_string(k) + "," +
                            std::to_string(l) + ") invalid for m=" +
                            std::to_string(strands));
  }
}

BraidWord descending_run(int strands, int hi, int lo) {
  std::vector<int> letters;
  for (int i = hi; i >= lo; --i) letters.push_back(i);
  return BraidWord(strands, letters);
}

}  // namespace

BraidWord band_generator(int strands, int k, int l) {
  check_pair(strands, k, l);
  BraidWord w = descending_run(strands, l - 1, k + 1);
  return w * BraidWord(strands, {k}) * w.inverse();
}

BraidWord band_conjugator(int strands, int k, int l) {
  check_pair(strands, k, l);
  BraidWord w = descending_run(strands, l - 1, k + 1);
  for (int j = k - 1; j >= 1; --j) w *= BraidWord(strands, {j, j + 1});
  return w;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (!s.empty() && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e) {
    throw ParseError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

BraidWord parse_braid_word(std::string_view text, int default_strands,
                           bool allow_letters) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<std::string> tokens;
  while (in >> tok) tokens.push_back(tok);

  int strands = default_strands;
  std::size_t start = 0;
  if (!tokens.empty() && tokens[0].rfind("m=", 0) == 0) {
    strands = parse_int(std::string_view(tokens[0]).substr(2));
    start = 1;
  }
  if (strands < 2 || strands > kMaxStrands) {
    throw ParseError("strand count missing or out of range");
  }

  std::vector<int> letters;
  for (std::size_t t = start; t < tokens.size(); ++t) {
    std::string_view s = tokens[t];
    bool numeric = std::isdigit(static_cast<unsigned char>(s[0])) ||
                   ((s[0] == '-' || s[0] == '+') && s.size() > 1);
    if (numeric) {
      int x = parse_int(s);
      if (x == 0 || std::abs(x) >= strands) {
        throw ParseError("letter " + std::string(s) + " out of range for m=" +
                         std::to_string(strands));
      }
      letters.push_back(x);
      continue;
    }
    if (!allow_letters) throw ParseError("unexpected token '" + std::string(s) + "'");
    // Runs of letters, each optionally followed by ^<int>.
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c < 'a' || c > 'z') {
        throw ParseError("unexpected character in '" + std::string(s) + "'");
      }
      int gen = c - 'a' + 1;
      if (gen >= strands) {
        throw ParseError(std::string("letter '") + c + "' out of range for m=" +
                         std::to_string(strands));
      }
      ++i;
      int exponent = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        exponent = parse_int(s.substr(i + 1, j - i - 1));
        i = j;
      }
      for (int r = 0; r < std::abs(exponent); ++r) {
        letters.push_back(exponent < 0 ? -gen : gen);
      }
    }
  }
  return BraidWord(strands, letters);
}

std::string format_letters(const BraidWord& w) {
  if (w.strands() > 27) throw PreconditionError("letter aliasing needs m <= 27");
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    int x = ls[i];
    std::size_t j = i;
    while (j < ls.size() && ls[j] == x) ++j;
    int run = static_cast<int>(j - i) * (x > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += static_cast<char>('a' + std::abs(x) - 1);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace monodromy
