#include "mcda/ssim.hpp"

namespace mcda {

Relation relation_from_code(std::string_view code) {
  if (code == "V") return Relation::V;
  if (code == "A") return Relation::A;
  if (code == "X") return Relation::X;
  if (code == "O") return Relation::O;
  throw DomainError(detail::cat("unknown relation symbol '", code, "'"));
}

char relation_code(Relation r) {
  switch (r) {
    case Relation::V:
      return 'V';
    case Relation::A:
      return 'A';
    case Relation::X:
      return 'X';
    case Relation::O:
      return 'O';
  }
  return '?';
}

SsimMatrix::SsimMatrix(int n, std::vector<Relation> upper) : n_(n), upper_(std::move(upper)) {
  if (n < 1) {
    throw DomainError("SSIM dimension must be positive");
  }
  const auto expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper_.size() != expected) {
    throw DomainError(detail::cat("SSIM with n=", n, " needs ", expected, " pairs, got ",
                                  upper_.size()));
  }
}

int SsimMatrix::upper_index(int n, int i, int j) {
  // Row-major position of (i, j), i < j, within the strict upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Relation SsimMatrix::at(int i, int j) const {
  if (i < 0 || j <= i || j >= n_) {
    throw DomainError(detail::cat("SSIM pair (", i, ", ", j, ") out of range for n=", n_));
  }
  return upper_[static_cast<std::size_t>(upper_index(n_, i, j))];
}

}  // namespace mcda
