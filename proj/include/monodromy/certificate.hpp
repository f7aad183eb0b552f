#pragma once

#include <cstddef>
#include <string>

#include "monodromy/moves.hpp"
#include "monodromy/semigroup.hpp"

namespace monodromy {

/// A certificate step that cannot be applied; step is 1-based.
class CertificateError : public PreconditionError {
 public:
  CertificateError(std::size_t step, const std::string& what)
      : PreconditionError("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

Factorization apply_move(const Factorization& s, const Move& m);
Factorization apply_certificate(const Factorization& s, const MoveCertificate& cert);

struct CertificateCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Replays cert on s1 and compares with s2 factor by factor (class tags and
/// values in Br_m). Never throws on bad certificates.
CertificateCheck check_certificate(const Factorization& s1, const Factorization& s2,
                                   const MoveCertificate& cert);

/// Given cert taking s to t, returns a certificate taking (anything value-equal
/// to) t back to s.
MoveCertificate invert_certificate(const Factorization& s, const MoveCertificate& cert);

/// Shifts every position in cert by offset (Conj moves are kept as they are).
MoveCertificate shifted(const MoveCertificate& cert, int offset);

struct MoveCounts {
  std::size_t hurwitz = 0;
  std::size_t conj = 0;
  std::size_t insert = 0;
  std::size_t cancel = 0;
};
MoveCounts count_moves(const MoveCertificate& cert);

}  // namespace monodromy
