#include "mcda/reachability.hpp"

namespace mcda {

std::string mark_code(Mark m) {
  switch (m) {
    case Mark::Zero:
      return "0";
    case Mark::One:
      return "1";
    case Mark::Derived:
      return "1*";
  }
  return "?";
}

Mark mark_from_code(std::string_view code) {
  if (code == "0") return Mark::Zero;
  if (code == "1") return Mark::One;
  if (code == "1*") return Mark::Derived;
  throw DomainError(detail::cat("unknown matrix cell '", code, "'"));
}

MarkedMatrix::MarkedMatrix(int n) : n_(n) {
  if (n < 1) {
    throw DomainError("matrix dimension must be positive");
  }
  cells_.assign(static_cast<std::size_t>(n) * n, Mark::Zero);
}

MarkedMatrix MarkedMatrix::identity(int n) {
  MarkedMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, Mark::One);
  }
  return m;
}

std::size_t MarkedMatrix::index(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw DomainError(detail::cat("matrix cell (", i, ", ", j, ") out of range for n=", n_));
  }
  return static_cast<std::size_t>(i) * n_ + j;
}

}  // namespace mcda
