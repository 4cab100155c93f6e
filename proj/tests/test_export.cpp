#include <doctest.h>

#include "e8_reference.hpp"
#include "rootdeform/export.hpp"

using namespace rootdeform;

namespace {

const RootSystem& e8() {
  static const RootSystem rs = build_root_system("E8");
  return rs;
}

Eigen::VectorXd sample_point() {
  Eigen::VectorXd q(8);
  q << 0.31, 1.7, -0.45, 2.2, 0.93, -1.35, 0.58, 1.11;
  return q;
}

}  // namespace

TEST_SUITE("export") {
  TEST_CASE("calogero at epsilon = 0 matches the undeformed potential") {
    const FactorizedElement fe = factorize(e8(), e8ref::kMinus, e8ref::kPlus);
    CalogeroParams params{1.3, 0.7, sample_point()};
    const ModelExport ex = export_model(e8(), fe, build_theta(fe), 0.0, Model::calogero, params);
    REQUIRE(ex.potential);

    // real roots, Gram pairing written out by hand
    const ReducedRootSpace space = reduced_root_space(e8(), fe);
    double expected = 0.0;
    for (const Root& r : space.root_set) {
      double x = 0.0;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) x += static_cast<double>(r.coords(i)) * e8().cartan()(i, j) * sample_point()(j);
      expected += 1.3 * 1.3 / 4.0 * x * x + 0.7 / (x * x);
    }
    CHECK(ex.potential->real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(ex.potential->imag()) < 1e-9);
  }

  TEST_CASE("calogero at epsilon = 1 exports 64 complex roots") {
    const FactorizedElement fe = factorize(e8(), e8ref::kMinus, e8ref::kPlus);
    const DeformMatrix theta = build_theta(fe);
    const ModelExport ex = export_model(e8(), fe, theta, 1.0, Model::calogero);
    CHECK(ex.roots.rows() == 64);
    CHECK(ex.simple_roots.rows() == 8);
    CHECK(ex.roots.imag().norm() > 0.0);
    CHECK_FALSE(ex.potential);

    // per-entry evaluation, combined numerically
    const ReducedRootSpace space = reduced_root_space(e8(), fe);
    for (std::size_t k = 0; k < space.root_set.size(); ++k)
      for (int col = 0; col < 8; ++col) {
        std::complex<double> v = 0.0;
        for (int j = 0; j < 8; ++j)
          v += static_cast<double>(space.root_set[k].coords(j)) * theta(j, col).evaluate(1.0);
        CHECK(std::abs(v - ex.roots(static_cast<Eigen::Index>(k), col)) < 1e-12);
      }

    const Json j = to_json(ex);
    CHECK(j["roots"].size() == 64);
    CHECK(j["metadata"]["root_count"] == 64);
    CHECK(j["metadata"]["order"] == 8);
    CHECK(j["roots"][0][0].size() == 2);
  }

  TEST_CASE("singular sample point") {
    const FactorizedElement fe = factorize(e8(), e8ref::kMinus, e8ref::kPlus);
    CalogeroParams params;
    params.sample_point = Eigen::VectorXd::Zero(8);
    try {
      export_model(e8(), fe, build_theta(fe), 0.5, Model::calogero, params);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::singular_sample);
    }
    params.sample_point = Eigen::VectorXd::Ones(3);
    CHECK_THROWS_AS(export_model(e8(), fe, build_theta(fe), 0.5, Model::calogero, params), Error);
  }

  TEST_CASE("toda export") {
    const FactorizedElement fe = factorize(e8(), e8ref::kMinus, e8ref::kPlus);
    const DeformMatrix theta = build_theta(fe);
    const ModelExport ex = export_model(e8(), fe, theta, 0.8, Model::toda);
    CHECK(ex.simple_roots.rows() == 8);
    CHECK(ex.roots.size() == 0);
    const auto simple = deform_simple_roots(theta, e8());
    for (int i = 0; i < 8; ++i) CHECK((ex.simple_roots.row(i) - evaluate(simple[static_cast<std::size_t>(i)], 0.8)).norm() < 1e-12);
    CHECK(ex.marks == std::vector<long long>{1, 3, 2, 4, 6, 5, 4, 3, 2});
    // the affine root closes the extended diagram: n_0 a_0 + sum n_i a_i = 0
    Eigen::RowVectorXcd total = ex.affine_root;
    for (int i = 0; i < 8; ++i) total += static_cast<double>(ex.marks[static_cast<std::size_t>(i) + 1]) * ex.simple_roots.row(i);
    CHECK(total.norm() < 1e-12);
    const Json j = to_json(ex);
    CHECK(j["metadata"]["model"] == "toda");
    CHECK(j["simple_roots"].size() == 8);
    CHECK_FALSE(j.contains("roots"));
  }
}
