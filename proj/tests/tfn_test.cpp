#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "mcda/tfn.hpp"

using mcda::Linguistic;
using mcda::Tfn;

TEST_CASE("linguistic scale values") {
  CHECK(mcda::to_tfn(Linguistic::JustEqual) == Tfn(1, 1, 1));
  CHECK(mcda::to_tfn(Linguistic::AbsolutelyMoreImportant) == Tfn(2.5, 3, 3.5));
  CHECK(mcda::to_tfn(Linguistic::WeaklyImportant) == Tfn(1, 1.5, 2));
  CHECK(mcda::to_tfn(Linguistic::EquallyImportant) == Tfn(0.5, 1, 1.5));
  CHECK(mcda::to_tfn(Linguistic::StronglyMoreImportant) == Tfn(1.5, 2, 2.5));
  CHECK(mcda::to_tfn(Linguistic::VeryStronglyMoreImportant) == Tfn(2, 2.5, 3));
}

TEST_CASE("linguistic mapping is total and injective") {
  std::set<std::tuple<double, double, double>> seen;
  for (const char* code : {"JE", "EI", "WI", "SMI", "VSMI", "AMI"}) {
    const Tfn t = mcda::to_tfn(mcda::linguistic_from_code(code));
    CHECK(t.ordered());
    seen.insert({t.a(), t.b(), t.c()});
    CHECK(mcda::linguistic_code(mcda::linguistic_from_code(code)) == code);
  }
  CHECK(seen.size() == 6);
  CHECK_THROWS_AS(mcda::linguistic_from_code("XY"), mcda::DomainError);
}

TEST_CASE("construction rejects unordered and negative triples") {
  CHECK_THROWS_AS(Tfn(2, 1, 3), mcda::DomainError);
  CHECK_THROWS_AS(Tfn(1, 3, 2), mcda::DomainError);
  CHECK_THROWS_AS(Tfn(-0.5, 0, 1), mcda::DomainError);
  CHECK_THROWS_AS(Tfn::unordered(-1, 0, 1), mcda::DomainError);

  const Tfn kept = Tfn::unordered(2, 1, 3);
  CHECK_FALSE(kept.ordered());
  CHECK(kept.a() == 2);
}

TEST_CASE("multiplication examples") {
  const Tfn m1_ca1 = Tfn(0.143, 0.200, 1.000) * Tfn(1, 1.2, 2);
  CHECK(m1_ca1.a() == doctest::Approx(0.143).epsilon(1e-9));
  CHECK(m1_ca1.b() == doctest::Approx(0.240).epsilon(1e-9));
  CHECK(m1_ca1.c() == doctest::Approx(2.000).epsilon(1e-9));

  // Published to three decimals from the full-precision pipeline; products of
  // the rounded operands land within 2e-3.
  const Tfn m1_ca2 = Tfn(0.429, 0.686, 1.000) * Tfn(1.2, 2.5, 3.5);
  CHECK(std::abs(m1_ca2.a() - 0.514) < 0.002);
  CHECK(std::abs(m1_ca2.b() - 1.714) < 0.002);
  CHECK(std::abs(m1_ca2.c() - 3.500) < 0.002);

  const Tfn p(0.3, 0.7, 1.9);
  CHECK(p * Tfn(1, 1, 1) == p);
}

TEST_CASE("multiplication preserves ordering of ordered operands") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    auto ordered = [&] {
      double a = value(rng), b = value(rng), c = value(rng);
      if (a > b) std::swap(a, b);
      if (b > c) std::swap(b, c);
      if (a > b) std::swap(a, b);
      return Tfn(a, b, c);
    };
    const Tfn product = ordered() * ordered();
    CHECK(product.ordered());
  }
}

TEST_CASE("distance examples") {
  const double d = mcda::distance(Tfn(0.143, 0.240, 2.000), Tfn(0.333, 0.600, 2.000));
  CHECK(std::abs(d - 0.235) < 0.0005);

  const Tfn p(0.2, 0.5, 0.9);
  CHECK(mcda::distance(p, p) == 0.0);
  CHECK(mcda::distance(Tfn(0, 0, 0), Tfn(1, 1, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distance is a metric") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  auto any = [&] {
    double a = value(rng), b = value(rng), c = value(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return Tfn(a, b, c);
  };
  for (int i = 0; i < 200; ++i) {
    const Tfn p = any(), q = any(), r = any();
    const double pq = mcda::distance(p, q);
    CHECK(pq >= 0.0);
    CHECK(pq == mcda::distance(q, p));
    if (!(p == q)) CHECK(pq > 0.0);
    CHECK(pq <= mcda::distance(p, r) + mcda::distance(r, q) + 1e-12);
  }
}
