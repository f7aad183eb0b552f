#include "monodromy/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "monodromy/garside.hpp"

namespace monodromy {

std::string describe(const Move& m) {
  std::ostringstream os;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, HurwitzR>) {
          os << "R(" << mv.i << ")";
        } else if constexpr (std::is_same_v<T, HurwitzL>) {
          os << "L(" << mv.i << ")";
        } else if constexpr (std::is_same_v<T, Conj>) {
          os << "conj[" << mv.g.to_string() << "]";
        } else if constexpr (std::is_same_v<T, Insert>) {
          os << "insert(" << mv.i << ")[" << mv.g.to_string() << "]";
        } else {
          os << "cancel(" << mv.i << ")";
        }
      },
      m);
  return os.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "equivalent";
    case Verdict::Inequivalent:
      return "inequivalent";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

Factorization apply_move(const Factorization& s, const Move& m) {
  if (auto* r = std::get_if<HurwitzR>(&m)) return hurwitz_R(s, r->i);
  if (auto* l = std::get_if<HurwitzL>(&m)) return hurwitz_L(s, l->i);
  if (auto* c = std::get_if<Conj>(&m)) return simultaneous_conjugate(s, c->g);
  if (auto* in = std::get_if<Insert>(&m)) return insert_pair(s, in->i, in->g);
  return cancel_pair(s, std::get<Cancel>(m).i);
}

Factorization apply_certificate(const Factorization& s, const MoveCertificate& cert) {
  Factorization cur = s;
  for (std::size_t k = 0; k < cert.moves.size(); ++k) {
    try {
      cur = apply_move(cur, cert.moves[k]);
    } catch (const Error& e) {
      throw CertificateError(k + 1, e.what());
    }
  }
  return cur;
}

CertificateCheck check_certificate(const Factorization& s1, const Factorization& s2,
                                   const MoveCertificate& cert) {
  CertificateCheck out;
  Factorization end;
  try {
    end = apply_certificate(s1, cert);
  } catch (const Error& e) {
    out.diagnostic = e.what();
    return out;
  }
  if (end.strands != s2.strands) {
    out.diagnostic = "strand counts differ";
    return out;
  }
  if (end.size() != s2.size()) {
    out.diagnostic = "lengths differ: " + std::to_string(end.size()) + " vs " +
                     std::to_string(s2.size());
    return out;
  }
  for (std::size_t j = 0; j < end.size(); ++j) {
    if (!(end.factors[j].cls == s2.factors[j].cls)) {
      out.diagnostic = "factor " + std::to_string(j + 1) + ": classes differ";
      return out;
    }
    if (!factors_equal(end.factors[j], s2.factors[j], end.strands)) {
      out.diagnostic = "factor " + std::to_string(j + 1) + ": values differ";
      return out;
    }
  }
  out.ok = true;
  return out;
}

MoveCertificate invert_certificate(const Factorization& s, const MoveCertificate& cert) {
  std::vector<std::vector<Move>> pieces;
  pieces.reserve(cert.size());
  Factorization cur = s;
  for (std::size_t k = 0; k < cert.moves.size(); ++k) {
    const Move& m = cert.moves[k];
    std::vector<Move> inv;
    if (auto* r = std::get_if<HurwitzR>(&m)) {
      inv.push_back(HurwitzL{r->i});
    } else if (auto* l = std::get_if<HurwitzL>(&m)) {
      inv.push_back(HurwitzR{l->i});
    } else if (auto* c = std::get_if<Conj>(&m)) {
      inv.push_back(Conj{c->g.inverse()});
    } else if (auto* in = std::get_if<Insert>(&m)) {
      inv.push_back(Cancel{in->i});
    } else {
      const int i = std::get<Cancel>(m).i;
      if (i < 1 || static_cast<std::size_t>(i) >= cur.size()) {
        throw CertificateError(k + 1, "cancel position out of range");
      }
      const Factor& x = cur.factors[i - 1];
      if (!x.cls.bar) {
        inv.push_back(Insert{i, x.conj});
      } else {
        // Recreate the (Abar1, A1) order from an (A1, Abar1) insertion.
        inv.push_back(Insert{i, cur.factors[i].conj});
        inv.push_back(HurwitzR{i});
      }
    }
    try {
      cur = apply_move(cur, m);
    } catch (const Error& e) {
      throw CertificateError(k + 1, e.what());
    }
    pieces.push_back(std::move(inv));
  }
  MoveCertificate out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    out.moves.insert(out.moves.end(), it->begin(), it->end());
  }
  return out;
}

MoveCertificate shifted(const MoveCertificate& cert, int offset) {
  MoveCertificate out = cert;
  for (auto& m : out.moves) {
    std::visit(
        [&](auto& mv) {
          if constexpr (requires { mv.i; }) mv.i += offset;
        },
        m);
  }
  return out;
}

MoveCounts count_moves(const MoveCertificate& cert) {
  MoveCounts c;
  for (const auto& m : cert.moves) {
    if (std::holds_alternative<HurwitzR>(m) || std::holds_alternative<HurwitzL>(m)) {
      ++c.hurwitz;
    } else if (std::holds_alternative<Conj>(m)) {
      ++c.conj;
    } else if (std::holds_alternative<Insert>(m)) {
      ++c.insert;
    } else {
      ++c.cancel;
    }
  }
  return c;
}

}  // namespace monodromy
