#include "mcda/tfn.hpp"

#include <cmath>

namespace mcda {

namespace {

void check_components(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError(detail::cat("non-finite fuzzy triple (", a, ", ", b, ", ", c, ")"));
  }
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw DomainError(detail::cat("negative fuzzy triple (", a, ", ", b, ", ", c, ")"));
  }
}

}  // namespace

Tfn::Tfn(double a, double b, double c) : a_(a), b_(b), c_(c) {
  check_components(a, b, c);
  if (!(a <= b && b <= c)) {
    throw DomainError(detail::cat("unordered fuzzy triple (", a, ", ", b, ", ", c,
                                  "): components must satisfy a <= b <= c"));
  }
}

Tfn Tfn::unordered(double a, double b, double c) {
  check_components(a, b, c);
  Tfn t;
  t.a_ = a;
  t.b_ = b;
  t.c_ = c;
  return t;
}

Tfn operator*(const Tfn& p, const Tfn& q) {
  return Tfn::unordered(p.a() * q.a(), p.b() * q.b(), p.c() * q.c());
}

double distance(const Tfn& p, const Tfn& q) {
  const double da = p.a() - q.a();
  const double db = p.b() - q.b();
  const double dc = p.c() - q.c();
  return std::sqrt((da * da + db * db + dc * dc) / 3.0);
}

Tfn to_tfn(Linguistic term) {
  switch (term) {
    case Linguistic::JustEqual:
      return {1.0, 1.0, 1.0};
    case Linguistic::EquallyImportant:
      return {0.5, 1.0, 1.5};
    case Linguistic::WeaklyImportant:
      return {1.0, 1.5, 2.0};
    case Linguistic::StronglyMoreImportant:
      return {1.5, 2.0, 2.5};
    case Linguistic::VeryStronglyMoreImportant:
      return {2.0, 2.5, 3.0};
    case Linguistic::AbsolutelyMoreImportant:
      return {2.5, 3.0, 3.5};
  }
  throw DomainError("invalid linguistic term");
}

Linguistic linguistic_from_code(std::string_view code) {
  if (code == "JE") return Linguistic::JustEqual;
  if (code == "EI") return Linguistic::EquallyImportant;
  if (code == "WI") return Linguistic::WeaklyImportant;
  if (code == "SMI") return Linguistic::StronglyMoreImportant;
  if (code == "VSMI") return Linguistic::VeryStronglyMoreImportant;
  if (code == "AMI") return Linguistic::AbsolutelyMoreImportant;
  throw DomainError(detail::cat("unknown linguistic term '", code, "'"));
}

std::string_view linguistic_code(Linguistic term) {
  switch (term) {
    case Linguistic::JustEqual:
      return "JE";
    case Linguistic::EquallyImportant:
      return "EI";
    case Linguistic::WeaklyImportant:
      return "WI";
    case Linguistic::StronglyMoreImportant:
      return "SMI";
    case Linguistic::VeryStronglyMoreImportant:
      return "VSMI";
    case Linguistic::AbsolutelyMoreImportant:
      return "AMI";
  }
  return "?";
}

}  // namespace mcda
