#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monodromy {

// Hard ceiling on strand count; permutations live in fixed-size arrays.
inline constexpr int kMaxStrands = 32;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition is violated by its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised on malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A bijection of {1..m}. Composition follows function notation:
/// (p * q)(x) = p(q(x)), so in a product the right operand acts first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);
  /// Images given 1-based; images[i-1] is the image of i.
  static Permutation from_images(std::span<const int> images);
  static Permutation transposition(int degree, int i, int j);
  static Permutation reversal(int degree);

  int degree() const { return degree_; }
  /// 1-based evaluation.
  int operator()(int point) const { return img_[point - 1] + 1; }
  std::vector<int> images() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Number of inversions, i.e. Coxeter length in the adjacent transpositions.
  int length() const;
  /// If this is a transposition (a,b) with a<b returns it, otherwise {0,0}.
  std::pair<int, int> as_transposition() const;

  /// Right multiplication by the adjacent transposition s_i (1-based i).
  Permutation times_adjacent(int i) const;
  Permutation adjacent_times(int i) const;

  /// Dense code suitable for hashing (degree <= 16).
  std::uint64_t code() const;
  std::string to_string() const;  // cycle notation, "()" for identity

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.img_ == b.img_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.img_ < b.img_;
  }

  // Raw 0-based access for hot loops.
  std::uint8_t raw(int i) const { return img_[i]; }
  void set_raw(int i, std::uint8_t v) { img_[i] = v; }

 private:
  int degree_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// A word in the standard generators a_1..a_{m-1} of Br_m. Letter i > 0 is
/// a_i, letter -i is its inverse. Composition performs free reduction, so
/// stored words are always freely reduced when built through this API.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);
  BraidWord(int strands, std::initializer_list<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord& operator*=(const BraidWord& rhs);
  BraidWord power(int exponent) const;

  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) {
    lhs *= rhs;
    return lhs;
  }
  /// Literal equality of letter sequences (not group equality).
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

  std::string to_string() const;  // signed integers separated by spaces

 private:
  void push_reduced(int letter);
  int strands_ = 2;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord invert(const BraidWord& w);
BraidWord generator(int strands, int i, int exponent = 1);

/// Image under the projection onto the symmetric group; the rightmost letter
/// acts first.
Permutation permutation_of(const BraidWord& w);
bool is_pure(const BraidWord& w);

/// Positive braid word of the permutation braid of p (a reduced word).
BraidWord permutation_braid(const Permutation& p);

/// Garside element (a_1..a_{m-1})...(a_1 a_2)(a_1).
BraidWord garside_delta(int strands);
/// z_{k,l} = (a_{l-1}..a_{k+1}) a_k (a_{l-1}..a_{k+1})^{-1}.
BraidWord band_generator(int strands, int k, int l);
/// A word w with w a_1 w^{-1} = z_{k,l} letter-for-letter as braids:
/// (a_{l-1}..a_{k+1})(a_{k-1}a_k)(a_{k-2}a_{k-1})..(a_1a_2).
BraidWord band_conjugator(int strands, int k, int l);

/// Parses "m=4 1 -2 3" or, with letters enabled, "m=4 a b^-1 c".
/// If the text carries no header, default_strands is used.
BraidWord parse_braid_word(std::string_view text, int default_strands,
                           bool allow_letters = true);
/// Renders with letters a,b,c,... and "^-1" suffixes.
std::string format_letters(const BraidWord& w);

}  // namespace monodromy
