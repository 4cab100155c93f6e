#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rootdeform/io.hpp"
#include "rootdeform/matrix.hpp"

using namespace rootdeform;

TEST_SUITE("ring") {
  TEST_CASE("kappa squared is c^2 - c") {
    const RingScalar c = RingScalar::c();
    CHECK(RingScalar::kappa() * RingScalar::kappa() == c * c - c);
  }

  TEST_CASE("(c + i kappa)(c - i kappa) = 2c^2 - c") {
    const RingScalar c = RingScalar::c();
    const RingScalar ik = RingScalar::i() * RingScalar::kappa();
    CHECK((c + ik) * (c - ik) == RingScalar(2) * c * c - c);
  }

  TEST_CASE("2 lambda - i kappa from its parts") {
    const RingScalar c = RingScalar::c();
    const RingScalar expected(Polynomial(std::vector<GaussianRational>{2, -2}),
                              Polynomial(GaussianRational(0, -1)));
    CHECK((RingScalar(1) - c) * RingScalar(2) - RingScalar::i() * RingScalar::kappa() == expected);
    CHECK(expected.to_string() == "2 - 2c - iκ");
  }

  TEST_CASE("canonical form") {
    CHECK(RingScalar().p().coefficients().empty());
    CHECK((RingScalar::c() - RingScalar::c()).is_zero());
    CHECK(RingScalar(0) == RingScalar());
    const RingScalar k = RingScalar::kappa();
    CHECK((k * k).q().is_zero());
    CHECK((k * k * k).p().is_zero());
  }

  TEST_CASE("conjugation") {
    const RingScalar l = RingScalar::lambda();
    const RingScalar ik = RingScalar::i() * RingScalar::kappa();
    CHECK((RingScalar(2) * l - ik).conj() == RingScalar(2) * l + ik);
    CHECK(RingScalar::c().conj() == RingScalar::c());
    oracle::RingGenerator gen(7);
    for (int k = 0; k < 200; ++k) {
      const RingScalar x = gen.scalar();
      CHECK(x.conj().conj() == x);
    }
  }

  TEST_CASE("evaluation") {
    CHECK(std::abs(RingScalar::lambda().evaluate(0.0)) == 0.0);
    CHECK(std::abs(RingScalar::kappa().evaluate(0.0)) == 0.0);
    const RingScalar x = RingScalar(2) * RingScalar::c() - RingScalar(1);
    const double direct = 2.0 * std::cosh(1.0) - 1.0;
    CHECK(std::abs(x.evaluate(1.0) - direct) < 1e-14);
    CHECK(direct == doctest::Approx(2.0861).epsilon(1e-4));
    // kappa is the non-negative root, also for negative epsilon
    CHECK(RingScalar::kappa().evaluate(-1.5).real() > 0.0);
    CHECK(RingScalar::i().evaluate(0.3) == std::complex<double>(0.0, 1.0));
  }

  TEST_CASE("ring axioms and homomorphisms on random elements") {
    oracle::RingGenerator gen(20240601);
    for (int k = 0; k < 300; ++k) {
      const RingScalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      const double eps = gen.real(-2.0, 2.0);
      CHECK(std::abs((a * b).evaluate(eps) - a.evaluate(eps) * b.evaluate(eps)) < 1e-9);
      CHECK(std::abs((a + b).evaluate(eps) - (a.evaluate(eps) + b.evaluate(eps))) < 1e-9);
    }
  }

  TEST_CASE("exact division and the fraction field") {
    oracle::RingGenerator gen(99);
    for (int k = 0; k < 100; ++k) {
      const RingScalar a = gen.scalar(), b = gen.scalar();
      if (b.is_zero()) continue;
      CHECK(exact_divide(a * b, b) == a);
      const RingFraction f = RingFraction(a) / RingFraction(b);
      CHECK(f * RingFraction(b) == RingFraction(a));
      if (!a.is_zero()) CHECK(f * f.inverse() == RingFraction(1));
    }
    CHECK_THROWS_AS(exact_divide(RingScalar(1), RingScalar()), std::domain_error);
    CHECK_THROWS_AS(exact_divide(RingScalar(1), RingScalar::c()), std::domain_error);
    // kappa is a unit in the fraction field only: 1/kappa = kappa / (c^2 - c)
    const RingFraction inv = RingFraction(RingScalar::kappa()).inverse();
    CHECK(inv.numerator() == RingScalar::kappa());
    CHECK(inv.denominator() == RingScalar::kappa_squared());
  }

  TEST_CASE("polynomial gcd and division") {
    const Polynomial c = Polynomial::variable();
    const Polynomial one(GaussianRational(1));
    const Polynomial a = (c - one) * (c + Polynomial(GaussianRational::i()));
    const Polynomial b = (c - one) * (c * c + one);
    CHECK(gcd(a, b) == a);
    const Polynomial d = (c - one) * (c - Polynomial(GaussianRational::i()));
    CHECK(gcd(a, d) == c - one);
    auto [q, r] = divmod(b, c - one);
    CHECK(r.is_zero());
    CHECK(q == c * c + one);
    CHECK(!divmod(b, c + one).second.is_zero());
    CHECK_THROWS(divmod(a, Polynomial()));
  }

  TEST_CASE("JSON round trip") {
    oracle::RingGenerator gen(3);
    for (int k = 0; k < 100; ++k) {
      const RingScalar a = gen.scalar();
      CHECK(ring_from_json(Json::parse(to_json(a).dump())) == a);
    }
    const Json j = to_json(RingScalar::i() * RingScalar::kappa() - RingScalar::c());
    CHECK(j.dump() == R"({"p":[[0,1,0,1],[-1,1,0,1]],"q":[[0,1,1,1]]})");
    // integers beyond 64 bits travel as strings
    const RingScalar big(GaussianRational(mpq_class("123456789012345678901234567890/7")));
    const Json jb = to_json(big);
    CHECK(jb["p"][0][0].is_string());
    CHECK(ring_from_json(jb) == big);
    CHECK_THROWS_AS(ring_from_json(Json::parse(R"({"p":[[1,0,0,1]],"q":[]})")), Error);
  }

  TEST_CASE("determinant over the fraction field matches Laplace expansion") {
    oracle::RingGenerator gen(11);
    for (int n = 1; n <= 4; ++n) {
      RingMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = gen.scalar();
      CHECK(determinant(m) == oracle::laplace_determinant(m));
    }
    RingMatrix singular(2, 2);
    singular << RingScalar::kappa(), RingScalar::c(), RingScalar::kappa() * RingScalar::kappa(),
        RingScalar::c() * RingScalar::kappa();
    CHECK(determinant(singular).is_zero());
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
  }
}
