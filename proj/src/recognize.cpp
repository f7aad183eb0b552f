#include <array>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "monodromy/equiv.hpp"
#include "monodromy/garside.hpp"

namespace monodromy {

namespace {

constexpr const char* kPathCacheVersion = "delta-tilde-paths-v1";

std::filesystem::path cache_file(int m, int j) {
  const char* env = std::getenv("MONODROMY_CACHE_DIR");
  std::filesystem::path dir = (env && *env) ? env : ".cache";
  return dir / ("delta_tilde_path_v1_m" + std::to_string(m) + "_j" + std::to_string(j) + ".txt");
}

std::optional<MoveCertificate> load_path(int m, int j) {
  std::ifstream in(cache_file(m, j));
  if (!in) return std::nullopt;
  std::string header;
  if (!(in >> header) || header != kPathCacheVersion) return std::nullopt;
  MoveCertificate cert;
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'R' && tok[0] != 'L')) return std::nullopt;
    const int i = std::atoi(tok.c_str() + 1);
    if (i < 1) return std::nullopt;
    cert.moves.push_back(hurwitz(i, tok[0] == 'R' ? Direction::R : Direction::L));
  }
  return cert;
}

void store_path(int m, int j, const MoveCertificate& cert) {
  std::error_code ec;
  const auto file = cache_file(m, j);
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) return;
  std::ofstream out(file);
  if (!out) return;
  out << kPathCacheVersion << '\n';
  for (const auto& mv : cert.moves) {
    if (auto* r = std::get_if<HurwitzR>(&mv)) out << 'R' << r->i << ' ';
    if (auto* l = std::get_if<HurwitzL>(&mv)) out << 'L' << l->i << ' ';
  }
  out << '\n';
}

MoveCertificate reversed_hurwitz(const MoveCertificate& cert) {
  MoveCertificate out;
  for (auto it = cert.moves.rbegin(); it != cert.moves.rend(); ++it) {
    if (auto* r = std::get_if<HurwitzR>(&*it)) out.moves.push_back(HurwitzL{r->i});
    if (auto* l = std::get_if<HurwitzL>(&*it)) out.moves.push_back(HurwitzR{l->i});
  }
  return out;
}

MoveCertificate compute_path(int m, int j) {
  const Factorization d = delta_tilde_squared(m);
  const Factorization src = simultaneous_conjugate(d, generator(m, j));
  if (auto cached = load_path(m, j)) {
    if (check_certificate(src, d, *cached)) return *cached;
  }
  SearchLimits limits;
  limits.max_depth = 60;
  limits.max_states = 4'000'000;
  SearchResult r = bfs_hurwitz_equiv(src, d, limits);
  if (!r.found()) {
    throw Error("generator path for m=" + std::to_string(m) + ", j=" + std::to_string(j) +
                " not found: " + r.reason);
  }
  store_path(m, j, r.certificate);
  return r.certificate;
}


// Three strands: an A1 factor q a1^2 q^-1 is determined by the primitive
// vector +-rho(q) e1, where rho sends a1, a2 to the twists about e1, e2 in
// SL(2, Z). Moves act on the vectors by squared twists.
using Vec = std::array<long long, 2>;

bool twist(const Vec& v, long long k, const Vec& w, Vec& out) {
  long long det, c, x, y;
  if (__builtin_mul_overflow(v[0], w[1], &x) || __builtin_mul_overflow(v[1], w[0], &y) ||
      __builtin_sub_overflow(x, y, &det) || __builtin_mul_overflow(det, k, &c) ||
      __builtin_mul_overflow(c, v[0], &x) || __builtin_mul_overflow(c, v[1], &y) ||
      __builtin_add_overflow(w[0], x, &out[0]) || __builtin_add_overflow(w[1], y, &out[1])) {
    return false;
  }
  if (out[0] < 0 || (out[0] == 0 && out[1] < 0)) out = {-out[0], -out[1]};
  return true;
}

std::optional<Vec> vector_of(const BraidWord& q) {
  // Column rho(q) e1, computed right to left.
  Vec v{1, 0};
  const auto& l = q.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    const Vec axis = std::abs(*it) == 1 ? Vec{1, 0} : Vec{0, 1};
    Vec out;
    if (!twist(axis, *it > 0 ? 1 : -1, v, out)) return std::nullopt;
    v = out;
  }
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) v = {-v[0], -v[1]};
  return v;
}

long long weight(const Vec& v) { return std::llabs(v[0]) + std::llabs(v[1]); }

struct VecTape {
  std::vector<Vec> v;
  MoveCertificate cert;

  bool push(int i, Direction d) {
    Vec& x = v[i - 1];
    Vec& y = v[i];
    Vec out;
    if (d == Direction::R) {
      if (!twist(y, -2, x, out)) return false;
      x = y;
      y = out;
    } else {
      if (!twist(x, 2, y, out)) return false;
      y = x;
      x = out;
    }
    cert.moves.push_back(hurwitz(i, d));
    return true;
  }
};

// Change in total weight caused by one move, or nullopt on overflow.
std::optional<long long> gain(const std::vector<Vec>& v, int i, Direction d) {
  VecTape t{{v[i - 1], v[i]}, {}};
  if (!t.push(1, d)) return std::nullopt;
  return weight(t.v[0]) + weight(t.v[1]) - weight(v[i - 1]) - weight(v[i]);
}

constexpr int kPlateauDepth = 5;

long long total_weight(const std::vector<Vec>& v) {
  long long s = 0;
  for (const auto& x : v) s += weight(x);
  return s;
}

// Depth-first search for a sequence of at most `depth` moves within two
// positions of `centre` that lowers the total weight.
bool escape(VecTape& t, int centre, int depth) {
  const int n = static_cast<int>(t.v.size());
  const long long before = total_weight(t.v);
  const int lo = std::max(1, centre - 2), hi = std::min(n - 1, centre + 2);
  std::vector<std::pair<int, Direction>> path;
  std::function<bool(VecTape&)> dfs = [&](VecTape& u) -> bool {
    if (!path.empty() && total_weight(u.v) < before) {
      for (const auto& [i, d] : path) t.push(i, d);
      return true;
    }
    if (static_cast<int>(path.size()) == depth) return false;
    for (int i = lo; i <= hi; ++i) {
      for (Direction d : {Direction::R, Direction::L}) {
        // Skip the move that undoes the previous one.
        if (!path.empty() && path.back().first == i && path.back().second != d) continue;
        VecTape w = u;
        if (!w.push(i, d)) continue;
        path.emplace_back(i, d);
        if (dfs(w)) return true;
        path.pop_back();
      }
    }
    return false;
  };
  VecTape start{t.v, {}};
  return dfs(start);
}

// A factor moved across its neighbours is twisted by each of them while the
// neighbours keep their values. Moves one factor to the place where its
// weight is smallest, if that lowers the weight.
bool travel(VecTape& t) {
  const int n = static_cast<int>(t.v.size());
  long long best = 0;
  int from = 0, to = 0;
  for (int p = 0; p < n; ++p) {
    const long long w0 = weight(t.v[p]);
    for (int dir : {1, -1}) {
      Vec h = t.v[p];
      for (int q = p + dir; q >= 0 && q < n; q += dir) {
        Vec out;
        if (!twist(t.v[q], dir == 1 ? -2 : 2, h, out)) break;
        h = out;
        if (weight(h) - w0 < best) best = weight(h) - w0, from = p, to = q;
      }
    }
  }
  if (best == 0) return false;
  if (to > from) {
    for (int i = from + 1; i <= to; ++i) t.push(i, Direction::R);
  } else {
    for (int i = from; i > to; --i) t.push(i, Direction::L);
  }
  return true;
}

// Lowers the total weight by single moves, then by short move sequences
// inside a window when single moves stall.
bool descend(VecTape& t, long long floor) {
  const int n = static_cast<int>(t.v.size());
  while (total_weight(t.v) > floor) {
    int best_i = 0;
    Direction best_d = Direction::R;
    long long best = 0;
    for (int i = 1; i < n; ++i) {
      for (Direction d : {Direction::R, Direction::L}) {
        auto g = gain(t.v, i, d);
        if (g && *g < best) best = *g, best_i = i, best_d = d;
      }
    }
    if (best_i != 0) {
      t.push(best_i, best_d);
      continue;
    }
    if (travel(t)) continue;
    // Plateau: short move sequences near each position.
    bool moved = false;
    for (int depth = 2; depth <= kPlateauDepth && !moved; ++depth) {
      for (int c = 1; c < n && !moved; ++c) moved = escape(t, c, depth);
    }
    if (!moved) return false;
  }
  return true;
}

// Product of the squared twists about u, v, w is +-I.
bool central_triple(const Vec& u, const Vec& v, const Vec& w) {
  for (Vec e : {Vec{1, 0}, Vec{0, 1}}) {
    Vec a, b, c;
    // Rightmost factor acts first.
    if (!twist(w, 2, e, a) || !twist(v, 2, a, b) || !twist(u, 2, b, c)) return false;
    // twist() normalizes the sign, so compare up to sign.
    if (!(c == e)) return false;
  }
  return true;
}

// Moves inside a block of three that turn `from` into `to`.
std::optional<MoveCertificate> block_moves(const std::array<Vec, 3>& from,
                                           const std::array<Vec, 3>& to, int depth) {
  std::map<std::array<Vec, 3>, MoveCertificate> seen{{from, {}}};
  std::vector<std::array<Vec, 3>> layer{from};
  for (int k = 0; k <= depth; ++k) {
    std::vector<std::array<Vec, 3>> next;
    for (const auto& st : layer) {
      if (st == to) return seen[st];
      for (int i : {1, 2}) {
        for (Direction d : {Direction::R, Direction::L}) {
          VecTape t{{st.begin(), st.end()}, seen[st]};
          if (!t.push(i, d)) continue;
          std::array<Vec, 3> nb{t.v[0], t.v[1], t.v[2]};
          if (weight(nb[0]) + weight(nb[1]) + weight(nb[2]) > 40) continue;
          if (seen.emplace(nb, t.cert).second) next.push_back(nb);
        }
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

// Reorders vectors of minimal weight into copies of `unit`.
bool arrange(VecTape& t, const std::array<Vec, 3>& unit) {
  const int n = static_cast<int>(t.v.size());
  for (int p = 0; p < n; p += 3) {
    int s = p;
    while (s + 2 < n && !central_triple(t.v[s], t.v[s + 1], t.v[s + 2])) ++s;
    if (s + 2 >= n) return false;
    for (int k = s - 1; k >= p; --k) {
      for (int i = k + 1; i <= k + 3; ++i) t.push(i, Direction::R);
    }
    auto moves = block_moves({t.v[p], t.v[p + 1], t.v[p + 2]}, unit, 8);
    if (!moves) return false;
    for (const auto& mv : moves->moves) {
      if (auto* r = std::get_if<HurwitzR>(&mv)) t.push(p + r->i, Direction::R);
      if (auto* l = std::get_if<HurwitzL>(&mv)) t.push(p + l->i, Direction::L);
    }
  }
  return true;
}

std::optional<MoveCertificate> reduce_three_strands(const Factorization& s, const Factorization& d) {
  VecTape t;
  for (const auto& f : s.factors) {
    auto v = vector_of(f.conj);
    if (!v) return std::nullopt;
    t.v.push_back(*v);
  }
  std::array<Vec, 3> unit;
  long long floor = 0;
  for (int k = 0; k < 3; ++k) {
    unit[k] = *vector_of(d.factors[k].conj);
    floor += weight(unit[k]);
  }
  floor *= static_cast<long long>(s.size() / 3);
  if (!descend(t, floor) || !arrange(t, unit)) return std::nullopt;
  return t.cert;
}

}  // namespace

MoveCertificate generator_path(int m, int j, int sign) {
  if (m < 2 || j < 1 || j >= m || (sign != 1 && sign != -1)) {
    throw PreconditionError("generator_path: bad arguments");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, MoveCertificate> memo;
  MoveCertificate forward;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({m, j});
    if (it == memo.end()) it = memo.emplace(std::make_pair(m, j), compute_path(m, j)).first;
    forward = it->second;
  }
  // The moves commute with simultaneous conjugation, so the same path read
  // backwards takes lambda(a_j^-1)(d) to d.
  return sign == 1 ? forward : reversed_hurwitz(forward);
}

MoveCertificate conjugated_block_path(int m, const BraidWord& h) {
  if (h.strands() != m) throw PreconditionError("conjugated_block_path: strand mismatch");
  BraidWord g = h;
  BraidWord shorter = shorter_representative(h);
  if (shorter.size() < g.size()) g = shorter;
  // lambda(c b)(d) -> lambda(c)(d) by the path of b conjugated by c.
  MoveCertificate cert;
  const auto& letters = g.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    cert.append(generator_path(m, std::abs(*it), *it > 0 ? 1 : -1));
  }
  return cert;
}

SearchResult delta_tilde_recognize(const Factorization& s, const SearchLimits& limits,
                                   const std::vector<BraidWord>& block_conjugators) {
  const int m = s.strands;
  for (const auto& f : s.factors) {
    if (!(f.cls == SingClass::A(1))) {
      throw PreconditionError("delta_tilde_recognize: all factors must be of class A1");
    }
  }
  const Factorization d = delta_tilde_squared(m);
  const std::size_t block = d.size();
  if (s.size() % block != 0) {
    throw PreconditionError("delta_tilde_recognize: length is not a multiple of m(m-1)/2");
  }
  const int n = static_cast<int>(s.size() / block);
  const auto power_n = delta_squared_power(s);
  if (!power_n || *power_n != n) {
    throw PreconditionError("delta_tilde_recognize: product is not Delta^{2N}");
  }
  const Factorization target = power(d, n);
  SearchResult result;
  if (s == target || factorizations_equal(s, target)) {
    result.verdict = Verdict::Equivalent;
    return result;
  }
  if (!block_conjugators.empty() && block_conjugators.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("delta_tilde_recognize: one conjugator per copy expected");
  }

  // Each copy that is a literal conjugate of d is undone along generator paths.
  const BraidWord first_inv = d.factors[0].conj.inverse();
  MoveCertificate cert;
  bool blocks_ok = true;
  for (int c = 0; c < n && blocks_ok; ++c) {
    const std::size_t off = static_cast<std::size_t>(c) * block;
    BraidWord h = block_conjugators.empty() ? s.factors[off].conj * first_inv
                                            : block_conjugators[c];
    const Factorization expect = simultaneous_conjugate(d, h);
    for (std::size_t k = 0; k < block && blocks_ok; ++k) {
      blocks_ok = factors_equal(s.factors[off + k], expect.factors[k], m);
    }
    if (blocks_ok) cert.append(shifted(conjugated_block_path(m, h), static_cast<int>(off)));
  }
  if (blocks_ok && check_certificate(s, target, cert)) {
    result.verdict = Verdict::Equivalent;
    result.certificate = std::move(cert);
    result.reason = "conjugated copies undone along generator paths";
    return result;
  }

  if (m == 3) {
    if (auto reduced = reduce_three_strands(s, d)) {
      if (check_certificate(s, target, *reduced)) {
        result.verdict = Verdict::Equivalent;
        result.certificate = std::move(*reduced);
        result.reason = "reduced by weight descent of the twist vectors";
        return result;
      }
    }
  }

  result = bfs_hurwitz_equiv(s, target, limits);
  if (result.verdict == Verdict::Inequivalent) {
    result.verdict = Verdict::Inconclusive;
    result.reason = "search ended without reaching the target: " + result.reason;
  }
  return result;
}

}  // namespace monodromy
