#pragma once

#include <string_view>

#include "mcda/error.hpp"

namespace mcda {

/// Triangular fuzzy number (a, b, c): support [a, c], modal value b.
///
/// The regular constructor enforces 0 <= a <= b <= c. `Tfn::unordered` admits
/// non-monotone triples, which occur in transcribed survey tables; it still
/// requires finite, non-negative components. Values are immutable.
class Tfn {
 public:
  Tfn() = default;  // (0, 0, 0)
  Tfn(double a, double b, double c);

  /// Builds a triple without the a <= b <= c check.
  static Tfn unordered(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  bool ordered() const { return a_ <= b_ && b_ <= c_; }

  friend bool operator==(const Tfn&, const Tfn&) = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
};

/// Component-wise product. For ordered non-negative operands the result is
/// ordered; unordered operands propagate their disorder.
Tfn operator*(const Tfn& p, const Tfn& q);

/// Vertex distance sqrt((1/3) * sum of squared component differences).
double distance(const Tfn& p, const Tfn& q);

/// Six-term linguistic vocabulary of the triangular rating scale.
enum class Linguistic {
  JustEqual,                  // JE
  EquallyImportant,           // EI
  WeaklyImportant,            // WI
  StronglyMoreImportant,      // SMI
  VeryStronglyMoreImportant,  // VSMI
  AbsolutelyMoreImportant,    // AMI
};

/// Fixed scale value of a linguistic term, e.g. JE -> (1, 1, 1).
Tfn to_tfn(Linguistic term);

/// Parses a short code ("JE", "EI", ...); unknown codes raise DomainError.
Linguistic linguistic_from_code(std::string_view code);

std::string_view linguistic_code(Linguistic term);

}  // namespace mcda
