#include "monodromy/sym.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "monodromy/detail/bidirectional_search.hpp"

namespace monodromy {

namespace {

void check_entry(int degree, const MarkedEntry& e) {
  if (e.perm.degree() != degree) throw PreconditionError("marked entry has wrong degree");
  if (!e.perm.is_identity() && e.perm.as_transposition().first == 0) {
    throw PreconditionError("marked entry is neither a transposition nor the identity");
  }
  if (e.mark < 0) throw PreconditionError("marks must be non-negative");
}

void check_factorization(const MarkedSymFactorization& f) {
  if (f.degree < 1 || f.degree > kMaxStrands) throw PreconditionError("bad degree");
  for (const auto& e : f.entries) check_entry(f.degree, e);
}

// Both moves only ever conjugate one involution (or identity) by another.
Permutation conj_inv(const Permutation& x, const Permutation& by) { return by * x * by; }

std::multiset<int> transposition_marks(const MarkedSymFactorization& f) {
  std::multiset<int> out;
  for (const auto& e : f.entries) {
    if (!e.perm.is_identity()) out.insert(e.mark);
  }
  return out;
}

std::multiset<int> identity_marks(const MarkedSymFactorization& f) {
  std::multiset<int> out;
  for (const auto& e : f.entries) {
    if (e.perm.is_identity()) out.insert(e.mark);
  }
  return out;
}

std::string state_key(const MarkedSymFactorization& f) {
  std::string key;
  key.reserve(f.entries.size() * 4);
  for (const auto& e : f.entries) {
    auto [a, b] = e.perm.as_transposition();
    key.push_back(static_cast<char>(a));
    key.push_back(static_cast<char>(b));
    key.push_back(static_cast<char>(e.mark & 0xff));
    key.push_back(static_cast<char>((e.mark >> 8) & 0xff));
  }
  return key;
}

}  // namespace

Permutation MarkedSymFactorization::product() const {
  Permutation p(degree);
  for (const auto& e : entries) p = p * e.perm;
  return p;
}

std::string MarkedSymFactorization::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    if (j) os << " . ";
    os << entries[j].perm.to_string() << '_' << entries[j].mark;
  }
  return os.str();
}

std::string transposition_list(const MarkedSymFactorization& f) {
  std::string out;
  for (const auto& e : f.entries) {
    const auto [a, b] = e.perm.as_transposition();
    out += a == 0 ? "()" : "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

MarkedSymFactorization make_marked(int degree,
                                   const std::vector<std::pair<int, int>>& transpositions,
                                   int mark) {
  MarkedSymFactorization f;
  f.degree = degree;
  for (auto [a, b] : transpositions) {
    Permutation p = (a == b) ? Permutation(degree) : Permutation::transposition(degree, a, b);
    f.entries.push_back({p, mark});
  }
  check_factorization(f);
  return f;
}

bool SymSubgroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

SymSubgroup SymSubgroup::conjugated(const Permutation& by) const {
  SymSubgroup out{degree, {}};
  const Permutation inv = by.inverse();
  out.elements.reserve(elements.size());
  for (const auto& e : elements) out.elements.push_back(by * e * inv);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

SymSubgroup closure(int degree, const std::vector<Permutation>& generators,
                    std::size_t max_order) {
  if (degree < 1 || degree > kMaxStrands) throw PreconditionError("closure: bad degree");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("closure: degree mismatch");
  }
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> queue{Permutation(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Permutation cur = queue[head];
    for (const auto& g : generators) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > max_order) throw Error("closure: size guard exceeded");
        queue.push_back(next);
      }
    }
  }
  return SymSubgroup{degree, {seen.begin(), seen.end()}};
}

bool subgroups_conjugate(const SymSubgroup& h, const SymSubgroup& k) {
  if (h.degree != k.degree) return false;
  if (h.order() != k.order()) return false;
  if (h.degree > 8) throw PreconditionError("subgroups_conjugate: degree above 8");
  std::vector<int> img(h.degree);
  for (int i = 0; i < h.degree; ++i) img[i] = i + 1;
  do {
    if (h.conjugated(Permutation::from_images(img)) == k) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

MarkedSymFactorization hurwitz_element(int degree, int genus) {
  if (degree < 2 || genus < 0) throw PreconditionError("hurwitz_element: need m >= 2, g >= 0");
  std::vector<std::pair<int, int>> ts;
  for (int r = 0; r <= genus; ++r) {
    ts.emplace_back(1, 2);
    ts.emplace_back(1, 2);
  }
  for (int i = 2; i < degree; ++i) {
    ts.emplace_back(i, i + 1);
    ts.emplace_back(i, i + 1);
  }
  return make_marked(degree, ts, 0);
}

MarkedSymFactorization sym_hurwitz_move(const MarkedSymFactorization& f, int i,
                                        Direction direction) {
  if (i < 1 || static_cast<std::size_t>(i) >= f.entries.size()) {
    throw PreconditionError("sym_hurwitz_move: index out of range");
  }
  MarkedSymFactorization out = f;
  const MarkedEntry x = f.entries[i - 1];
  const MarkedEntry y = f.entries[i];
  if (direction == Direction::R) {
    out.entries[i - 1] = y;
    out.entries[i] = {conj_inv(x.perm, y.perm), x.mark};
  } else {
    out.entries[i - 1] = {conj_inv(y.perm, x.perm), y.mark};
    out.entries[i] = x;
  }
  return out;
}

MarkedSymFactorization lambda_conjugate(const MarkedSymFactorization& f,
                                        const Permutation& sigma) {
  if (sigma.degree() != f.degree) throw PreconditionError("lambda_conjugate: degree mismatch");
  MarkedSymFactorization out = f;
  const Permutation inv = sigma.inverse();
  for (auto& e : out.entries) e.perm = sigma * e.perm * inv;
  return out;
}

MarkedSymFactorization apply_sym_moves(const MarkedSymFactorization& f,
                                       const MoveCertificate& cert) {
  MarkedSymFactorization cur = f;
  for (std::size_t k = 0; k < cert.moves.size(); ++k) {
    const Move& m = cert.moves[k];
    try {
      if (auto* r = std::get_if<HurwitzR>(&m)) {
        cur = sym_hurwitz_move(cur, r->i, Direction::R);
      } else if (auto* l = std::get_if<HurwitzL>(&m)) {
        cur = sym_hurwitz_move(cur, l->i, Direction::L);
      } else if (auto* c = std::get_if<Conj>(&m)) {
        cur = lambda_conjugate(cur, permutation_of(c->g));
      } else {
        throw PreconditionError("insert/cancel moves have no symmetric-group meaning");
      }
    } catch (const PreconditionError& e) {
      throw PreconditionError("step " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return cur;
}

SearchResult marked_equiv(const MarkedSymFactorization& f1,
                          const MarkedSymFactorization& f2,
                          const SearchLimits& limits) {
  check_factorization(f1);
  check_factorization(f2);
  if (f1.degree != f2.degree) throw PreconditionError("marked_equiv: degree mismatch");
  if (f1.size() != f2.size()) throw PreconditionError("marked_equiv: length mismatch");
  if (!(f1.product() == f2.product())) throw PreconditionError("marked_equiv: products differ");
  if (transposition_marks(f1) != transposition_marks(f2)) {
    throw PreconditionError("marked_equiv: mark multisets differ");
  }
  for (const auto& e : f1.entries) {
    if (e.mark > 0xffff) throw PreconditionError("marked_equiv: mark too large");
  }
  SearchResult result;
  if (identity_marks(f1) != identity_marks(f2)) {
    result.verdict = Verdict::Inequivalent;
    result.reason = "identity letters carry different marks";
    return result;
  }
  detail::HurwitzSearchSpace<MarkedSymFactorization> space{
      state_key,
      [](const MarkedSymFactorization& f) { return static_cast<int>(f.size()); },
      [](const MarkedSymFactorization& f, int i, Direction d) {
        return std::optional<MarkedSymFactorization>(sym_hurwitz_move(f, i, d));
      }};
  return detail::bidirectional_hurwitz_search(space, f1, f2, limits);
}

namespace {

// Hurwitz orbit enumeration on sequences packed into 64-bit integers. Each
// entry is (letter index) * marks + (mark index), letters being the identity
// followed by the transpositions in lexicographic order.
class PackedOrbit {
 public:
  explicit PackedOrbit(const MarkedSymFactorization& f) : n_(static_cast<int>(f.size())) {
    check_factorization(f);
    const int m = f.degree;
    std::vector<Permutation> perms{Permutation(m)};
    for (int a = 1; a <= m; ++a) {
      for (int b = a + 1; b <= m; ++b) perms.push_back(Permutation::transposition(m, a, b));
    }
    for (const auto& e : f.entries) marks_.push_back(e.mark);
    std::sort(marks_.begin(), marks_.end());
    marks_.erase(std::unique(marks_.begin(), marks_.end()), marks_.end());
    np_ = static_cast<int>(perms.size());
    nm_ = static_cast<int>(marks_.size());
    while ((1 << bits_) < np_ * nm_) ++bits_;
    if (bits_ * n_ > 64) throw PreconditionError("orbit enumeration: state does not fit 64 bits");
    mask_ = (1ULL << bits_) - 1;

    std::map<Permutation, int> index;
    for (int j = 0; j < np_; ++j) index[perms[j]] = j;
    conj_.resize(np_ * np_);
    for (int x = 0; x < np_; ++x) {
      for (int y = 0; y < np_; ++y) conj_[x * np_ + y] = index.at(conj_inv(perms[x], perms[y]));
    }
    for (int j = 0; j < n_; ++j) {
      const auto& e = f.entries[j];
      const int mi = static_cast<int>(
          std::lower_bound(marks_.begin(), marks_.end(), e.mark) - marks_.begin());
      start_ = put(start_, j, index.at(e.perm) * nm_ + mi);
    }
  }

  int length() const { return n_; }
  std::uint64_t start() const { return start_; }

  /// Successor under move at 0-based position j (d = 0 for R, 1 for L).
  std::uint64_t step(std::uint64_t s, int j, int d) const {
    const int x = get(s, j), y = get(s, j + 1);
    const int xp = x / nm_, xm = x % nm_, yp = y / nm_, ym = y % nm_;
    if (d == 0) return put(put(s, j, y), j + 1, conj_[xp * np_ + yp] * nm_ + xm);
    return put(put(s, j, conj_[yp * np_ + xp] * nm_ + ym), j + 1, x);
  }

 private:
  int get(std::uint64_t s, int j) const { return static_cast<int>((s >> (bits_ * j)) & mask_); }
  std::uint64_t put(std::uint64_t s, int j, int v) const {
    s &= ~(mask_ << (bits_ * j));
    return s | (static_cast<std::uint64_t>(v) << (bits_ * j));
  }

  int n_;
  int np_ = 0, nm_ = 0, bits_ = 1;
  std::uint64_t mask_ = 0, start_ = 0;
  std::vector<int> marks_;
  std::vector<int> conj_;
};

}  // namespace

std::size_t hurwitz_orbit_size(const MarkedSymFactorization& f, std::size_t limit) {
  const PackedOrbit orbit(f);
  std::unordered_set<std::uint64_t> seen{orbit.start()};
  std::vector<std::uint64_t> queue{orbit.start()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int j = 0; j + 1 < orbit.length(); ++j) {
      for (int d = 0; d < 2; ++d) {
        const std::uint64_t t = orbit.step(queue[head], j, d);
        if (seen.insert(t).second) {
          if (seen.size() > limit) return 0;
          queue.push_back(t);
        }
      }
    }
  }
  return seen.size();
}

TwoMarkCensus two_mark_census(const MarkedSymFactorization& base, std::size_t limit) {
  MarkedSymFactorization plain = base;
  for (auto& e : plain.entries) e.mark = 0;
  const PackedOrbit orbit(plain);
  const int n = orbit.length();
  if (n > 20) throw PreconditionError("two_mark_census: length above 20");
  const int moves = 2 * std::max(0, n - 1);

  // Unmarked orbit with a dense transition table.
  std::unordered_map<std::uint64_t, std::uint32_t> index{{orbit.start(), 0}};
  std::vector<std::uint64_t> states{orbit.start()};
  std::vector<std::uint32_t> trans;
  for (std::size_t head = 0; head < states.size(); ++head) {
    for (int j = 0; j + 1 < n; ++j) {
      for (int d = 0; d < 2; ++d) {
        const std::uint64_t t = orbit.step(states[head], j, d);
        auto [it, fresh] = index.emplace(t, static_cast<std::uint32_t>(states.size()));
        if (fresh) {
          if (states.size() >= limit) return {};
          states.push_back(t);
        }
        trans.push_back(it->second);
      }
    }
  }

  // Both moves swap the marks at positions j, j+1.
  TwoMarkCensus census;
  census.orbit_size = states.size();
  census.marked_states = states.size() << n;
  const std::uint64_t total = census.marked_states;
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  auto test_and_set = [&](std::uint64_t v) {
    std::uint64_t& w = visited[v >> 6];
    const std::uint64_t bit = 1ULL << (v & 63);
    if (w & bit) return true;
    w |= bit;
    return false;
  };
  std::vector<std::uint64_t> stack;
  for (std::uint64_t root = 0; root < total; ++root) {
    if (test_and_set(root)) continue;
    ++census.components;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::uint64_t v = stack.back();
      stack.pop_back();
      const std::uint64_t u = v >> n;
      const std::uint64_t marks = v & ((1ULL << n) - 1);
      for (int k = 0; k < moves; ++k) {
        const int j = k / 2;
        const std::uint64_t a = (marks >> j) & 1, b = (marks >> (j + 1)) & 1;
        const std::uint64_t swapped = (a == b) ? marks : (marks ^ (3ULL << j));
        const std::uint64_t w = (static_cast<std::uint64_t>(trans[u * moves + k]) << n) | swapped;
        if (!test_and_set(w)) stack.push_back(w);
      }
    }
  }
  return census;
}

}  // namespace monodromy
