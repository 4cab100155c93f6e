#pragma once

#include <complex>
#include <filesystem>

#include <json.hpp>

#include "rootdeform/reduced.hpp"
#include "rootdeform/scan.hpp"

namespace rootdeform {

using Json = nlohmann::ordered_json;

/// [re_num, re_den, im_num, im_den]; integers that overflow 64 bits are
/// written as decimal strings.
Json to_json(const GaussianRational& a);
GaussianRational gaussian_from_json(const Json& j);

/// {"p": [...], "q": [...]}, coefficient lists in ascending degree.
Json to_json(const RingScalar& a);
RingScalar ring_from_json(const Json& j);

Json to_json(const RingMatrix& m);
RingMatrix ring_matrix_from_json(const Json& j);

/// [re, im]
Json to_json(std::complex<double> z);
/// Rows of [re, im] pairs.
Json numeric_json(const Eigen::MatrixXcd& m);

Json to_json(const Root& r);
Json to_json(const IntMatrix& m);
Json to_json(const ConstraintReport& r);
Json to_json(const ReducedRootSpace& s);
Json to_json(const InvarianceReport& r);
Json to_json(const CandidateClassification& c);

/// {"cartan": [[...]], "minus": [vertices]}; "minus" may be omitted.
RootSystem root_system_from_json(const Json& j, std::string name = "custom");
RootSystem load_root_system(const std::filesystem::path& path);

}  // namespace rootdeform
