#include "monodromy/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "monodromy/garside.hpp"
#include "monodromy/pure.hpp"

namespace monodromy {

SingClass SingClass::A(int i) {
  if (i < 0) throw PreconditionError("class index must be non-negative");
  return SingClass{false, i};
}

SingClass SingClass::Abar1() { return SingClass{true, 1}; }

SingClass SingClass::parse(std::string_view tag) {
  if (tag == "Abar1") return Abar1();
  if (tag.size() >= 2 && tag[0] == 'A') {
    int i = 0;
    auto [end, ec] = std::from_chars(tag.data() + 1, tag.data() + tag.size(), i);
    if (ec == std::errc() && end == tag.data() + tag.size() && i >= 0 && i < 1000) return A(i);
  }
  throw ParseError("unknown factor class '" + std::string(tag) + "'");
}

std::string SingClass::tag() const { return bar ? "Abar1" : "A" + std::to_string(index); }

Factorization::Factorization(int m, std::vector<Factor> fs) : strands(m), factors(std::move(fs)) {
  for (const auto& f : factors) {
    if (f.conj.strands() != m) throw PreconditionError("factor strand count mismatch");
  }
}

int MultiDegree::count(int i) const {
  auto it = d.find(i);
  return it == d.end() ? 0 : it->second;
}

int MultiDegree::total() const {
  int t = d_bar1;
  for (auto [i, c] : d) t += c;
  return t;
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << "d_bar1=" << d_bar1;
  for (auto [i, c] : d) os << " d" << i << '=' << c;
  return os.str();
}

BraidWord factor_value(const Factor& f, int strands) {
  if (f.conj.strands() != strands) throw PreconditionError("factor strand count mismatch");
  return f.conj * generator(strands, 1, f.cls.exponent()) * f.conj.inverse();
}

BraidWord factor_value(const Factor& f) { return factor_value(f, f.conj.strands()); }

BraidWord alpha(const Factorization& s) {
  BraidWord out(s.strands);
  for (const auto& f : s.factors) out *= factor_value(f, s.strands);
  return out;
}

namespace {

void check_position(const Factorization& s, int i, const char* what) {
  if (i < 1 || static_cast<std::size_t>(i) >= s.size()) {
    throw PreconditionError(std::string(what) + ": index out of range");
  }
}

// Long conjugators are replaced by a shorter word for the same braid.
BraidWord trimmed(BraidWord q) {
  constexpr std::size_t kTrimLength = 24;
  if (q.size() <= kTrimLength) return q;
  BraidWord r = shorter_representative(q);
  return r.size() < q.size() ? r : q;
}

}  // namespace

Factorization hurwitz_R(const Factorization& s, int i) {
  check_position(s, i, "hurwitz_R");
  Factorization out = s;
  const Factor& x = s.factors[i - 1];
  const Factor& y = s.factors[i];
  out.factors[i - 1] = y;
  out.factors[i] = Factor{x.cls, trimmed(factor_value(y, s.strands).inverse() * x.conj)};
  return out;
}

Factorization hurwitz_L(const Factorization& s, int i) {
  check_position(s, i, "hurwitz_L");
  Factorization out = s;
  const Factor& x = s.factors[i - 1];
  const Factor& y = s.factors[i];
  out.factors[i - 1] = Factor{y.cls, trimmed(factor_value(x, s.strands) * y.conj)};
  out.factors[i] = x;
  return out;
}

Factorization hurwitz_move(const Factorization& s, int i, Direction d) {
  return d == Direction::R ? hurwitz_R(s, i) : hurwitz_L(s, i);
}

Factorization simultaneous_conjugate(const Factorization& s, const BraidWord& g) {
  if (g.strands() != s.strands) throw PreconditionError("simultaneous_conjugate: strand mismatch");
  Factorization out = s;
  for (auto& f : out.factors) f.conj = g * f.conj;
  return out;
}

MultiDegree multi_degree(const Factorization& s) {
  MultiDegree md;
  for (const auto& f : s.factors) {
    if (f.cls.bar) {
      ++md.d_bar1;
    } else {
      ++md.d[f.cls.index];
    }
  }
  return md;
}

std::vector<int> c_multi_degree(const Factorization& s) {
  const MultiDegree md = multi_degree(s);
  int k = 1;
  if (!md.d.empty()) k = std::max(k, md.d.rbegin()->first);
  std::vector<int> out(k + 1, 0);
  for (auto [i, c] : md.d) out[i] = c;
  out[1] -= md.d_bar1;
  return out;
}

MarkedSymFactorization sym_image(const Factorization& s) {
  MarkedSymFactorization out;
  out.degree = s.strands;
  for (const auto& f : s.factors) {
    out.entries.push_back({permutation_of(factor_value(f, s.strands)), f.cls.index});
  }
  return out;
}

SymSubgroup generated_sym_subgroup(const Factorization& s) {
  std::vector<Permutation> gens;
  for (const auto& e : sym_image(s).entries) {
    if (!e.perm.is_identity()) gens.push_back(e.perm);
  }
  return closure(s.strands, gens);
}

Factorization insert_pair(const Factorization& s, int i, const BraidWord& g) {
  if (i < 1 || static_cast<std::size_t>(i) > s.size() + 1) {
    throw PreconditionError("insert_pair: index out of range");
  }
  if (g.strands() != s.strands) throw PreconditionError("insert_pair: strand mismatch");
  Factorization out = s;
  auto at = out.factors.begin() + (i - 1);
  at = out.factors.insert(at, Factor{SingClass::Abar1(), g});
  out.factors.insert(at, Factor{SingClass::A(1), g});
  return out;
}

Factorization cancel_pair(const Factorization& s, int i) {
  check_position(s, i, "cancel_pair");
  const Factor& x = s.factors[i - 1];
  const Factor& y = s.factors[i];
  const bool node_pair = (x.cls == SingClass::A(1) && y.cls == SingClass::Abar1()) ||
                         (x.cls == SingClass::Abar1() && y.cls == SingClass::A(1));
  if (!node_pair) throw PreconditionError("cancel_pair: factors are not an A1/Abar1 pair");
  if (!is_trivial(factor_value(x, s.strands) * factor_value(y, s.strands))) {
    throw PreconditionError("cancel_pair: factor values are not mutually inverse");
  }
  Factorization out = s;
  out.factors.erase(out.factors.begin() + (i - 1), out.factors.begin() + (i + 1));
  return out;
}

Factorization delta_squared(int m) {
  if (m < 2) throw PreconditionError("delta_squared: m < 2");
  Factorization out(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 1; j < m; ++j) {
      out.factors.push_back({SingClass::A(0), band_conjugator(m, j, j + 1)});
    }
  }
  return out;
}

Factorization delta_tilde_squared(int m) {
  if (m < 2) throw PreconditionError("delta_tilde_squared: m < 2");
  Factorization out(m);
  for (auto [k, l] : delta_squared_pairs(m)) {
    out.factors.push_back({SingClass::A(1), band_conjugator(m, k, l)});
  }
  return out;
}

Factorization delta_tilde_inv_squared(int m) {
  if (m < 2) throw PreconditionError("delta_tilde_inv_squared: m < 2");
  Factorization out(m);
  for (int l = 2; l <= m; ++l) {
    for (int k = l - 1; k >= 1; --k) {
      out.factors.push_back({SingClass::Abar1(), band_conjugator(m, k, l)});
    }
  }
  return out;
}

Factorization power(const Factorization& s, int n) {
  if (n < 0) throw PreconditionError("power: negative exponent");
  Factorization out(s.strands);
  for (int r = 0; r < n; ++r) {
    out.factors.insert(out.factors.end(), s.factors.begin(), s.factors.end());
  }
  return out;
}

Factorization concat(const Factorization& s, const Factorization& t) {
  if (s.strands != t.strands) throw PreconditionError("concat: strand mismatch");
  Factorization out = s;
  out.factors.insert(out.factors.end(), t.factors.begin(), t.factors.end());
  return out;
}

Factorization embed(const Factorization& s, int m) {
  if (m < s.strands) throw PreconditionError("embed: cannot drop strands");
  Factorization out(m);
  for (const auto& f : s.factors) out.factors.push_back({f.cls, BraidWord(m, f.conj.letters())});
  return out;
}

bool factors_equal(const Factor& f, const Factor& g, int strands) {
  if (!(f.cls == g.cls)) return false;
  if (f.conj == g.conj) return true;
  return words_equal(factor_value(f, strands), factor_value(g, strands));
}

bool factorizations_equal(const Factorization& s, const Factorization& t) {
  if (s.strands != t.strands || s.size() != t.size()) return false;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!factors_equal(s.factors[j], t.factors[j], s.strands)) return false;
  }
  return true;
}

Factorization compact(const Factorization& s) {
  Factorization out = s;
  for (auto& f : out.factors) {
    BraidWord shorter = shorter_representative(f.conj);
    if (shorter.size() < f.conj.size()) f.conj = std::move(shorter);
  }
  return out;
}

MoveCertificate cl1_moves(std::size_t s_length, std::size_t t_length) {
  MoveCertificate cert;
  const int n = static_cast<int>(s_length);
  for (int j = 1; j <= static_cast<int>(t_length); ++j) {
    // The j-th factor of t sits at n + j; walk it down to position j.
    for (int i = n + j - 1; i >= j; --i) cert.moves.push_back(HurwitzL{i});
  }
  return cert;
}

std::string factorization_key(const Factorization& s) {
  std::string key = std::to_string(s.strands);
  for (const auto& f : s.factors) {
    key += '|';
    key += f.cls.tag();
    key += ':';
    key += normal_form(factor_value(f, s.strands)).key();
  }
  return key;
}

std::string to_string(const Factorization& s) {
  std::ostringstream os;
  os << "m=" << s.strands << " [";
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) os << ", ";
    os << s.factors[j].cls.tag() << '(' << s.factors[j].conj.to_string() << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace monodromy
