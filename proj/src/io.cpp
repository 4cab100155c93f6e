#include "rootdeform/io.hpp"

#include <fstream>

namespace rootdeform {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<long long>(z.get_si()));
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(Errc::parse, "expected integer, got " + j.dump());
}

mpq_class rational_from_json(const Json& num, const Json& den) {
  mpq_class q(integer_from_json(num), integer_from_json(den));
  if (sgn(q.get_den()) == 0) throw Error(Errc::parse, "zero denominator");
  q.canonicalize();
  return q;
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& a : p.coefficients()) out.push_back(to_json(a));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse, "expected coefficient list");
  std::vector<GaussianRational> coeffs;
  for (const auto& a : j) coeffs.push_back(gaussian_from_json(a));
  return Polynomial(std::move(coeffs));
}

Json candidate_json(const Candidate& c) { return Json{{"v_minus", c.v_minus}, {"v_plus", c.v_plus}}; }

Json factor_json(const FactorInvariance& f) {
  Json images = Json::array();
  for (const auto& s : f.simple_images) {
    Json item{{"vertex", s.vertex}, {"image", to_json(s.image)}};
    if (s.witness) item["witness"] = Json{{"power", s.witness->first}, {"vertex", s.witness->second}};
    images.push_back(std::move(item));
  }
  Json offending = Json::array();
  for (const auto& r : f.offending) offending.push_back(to_json(r));
  return Json{{"invariant", f.invariant}, {"simple_images", images}, {"offending", offending}};
}

}  // namespace

Json to_json(const GaussianRational& a) {
  return Json::array({integer_json(a.real().get_num()), integer_json(a.real().get_den()),
                      integer_json(a.imag().get_num()), integer_json(a.imag().get_den())});
}

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::parse, "expected [re_num, re_den, im_num, im_den]");
  return {rational_from_json(j[0], j[1]), rational_from_json(j[2], j[3])};
}

Json to_json(const RingScalar& a) { return Json{{"p", polynomial_json(a.p())}, {"q", polynomial_json(a.q())}}; }

RingScalar ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q")) throw Error(Errc::parse, "expected {\"p\", \"q\"}");
  return {polynomial_from_json(j.at("p")), polynomial_from_json(j.at("q"))};
}

Json to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RingMatrix ring_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(Errc::parse, "expected matrix rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RingMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw Error(Errc::parse, "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = ring_from_json(j[i][k]);
  }
  return m;
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json numeric_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Root& r) {
  Json out = Json::array();
  for (auto v : r.coords) out.push_back(static_cast<long long>(v));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(static_cast<long long>(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ConstraintReport& r) {
  return Json{{"intertwine_minus", r.intertwine_minus},
              {"intertwine_plus", r.intertwine_plus},
              {"commutes_with_sigma", r.commutes_with_sigma},
              {"antiunitary", r.antiunitary},
              {"det_value", to_json(r.det_value)},
              {"det_ok", r.det_ok},
              {"limit_ok", r.limit_ok},
              {"all_passed", r.all_passed()}};
}

Json to_json(const ReducedRootSpace& s) {
  Json orbits = Json::array();
  for (const auto& orbit : s.orbits) {
    Json o = Json::array();
    for (const auto& r : orbit) o.push_back(to_json(r));
    orbits.push_back(std::move(o));
  }
  Json roots = Json::array();
  for (const auto& r : s.root_set) roots.push_back(to_json(r));
  return Json{{"order", s.order},
              {"use_gamma", s.use_gamma},
              {"multiset_size", s.multiset_size},
              {"distinct", s.root_set.size()},
              {"orbits", orbits},
              {"root_set", roots}};
}

Json to_json(const InvarianceReport& r) {
  return Json{{"invariant", r.invariant()}, {"minus", factor_json(r.minus)}, {"plus", factor_json(r.plus)}};
}

Json to_json(const CandidateClassification& c) {
  Json out = candidate_json(c.candidate);
  out["order"] = c.order;
  out["ansatz_applicable"] = c.ansatz_applicable;
  if (c.constraints) out["constraints"] = to_json(*c.constraints);
  if (c.invariant) out["invariant"] = *c.invariant;
  if (c.trivial) out["trivial"] = *c.trivial;
  if (c.det) out["det"] = to_json(*c.det);
  if (c.distinct_roots) out["distinct_roots"] = *c.distinct_roots;
  return out;
}

RootSystem root_system_from_json(const Json& j, std::string name) {
  if (!j.is_object() || !j.contains("cartan")) throw Error(Errc::parse, "root system JSON needs a \"cartan\" field");
  const Json& rows = j.at("cartan");
  if (!rows.is_array() || rows.empty()) throw Error(Errc::parse, "\"cartan\" must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix cartan(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != n)
      throw Error(Errc::parse, "\"cartan\" must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!rows[i][k].is_number_integer()) throw Error(Errc::parse, "Cartan entries must be integers");
      cartan(i, k) = rows[i][k].get<std::int64_t>();
    }
  }
  std::vector<int> minus;
  if (j.contains("minus")) minus = j.at("minus").get<std::vector<int>>();
  if (j.contains("name")) name = j.at("name").get<std::string>();
  return RootSystem::from_cartan(std::move(cartan), std::move(minus), std::move(name));
}

RootSystem load_root_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, path.string() + ": " + e.what());
  }
  return root_system_from_json(j);
}

}  // namespace rootdeform
