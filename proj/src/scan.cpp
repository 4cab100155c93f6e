#include "rootdeform/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "rootdeform/io.hpp"

namespace rootdeform {

namespace {

std::vector<int> select(const std::vector<int>& vertices, unsigned long mask) {
  std::vector<int> out;
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (mask & (1ul << k)) out.push_back(vertices[k]);
  return out;
}

}  // namespace

std::vector<Candidate> enumerate_candidates(const RootSystem& rs, bool allow_large) {
  if (rs.rank() > kScanRankLimit && !allow_large)
    throw Error(Errc::invalid_argument, "rank " + std::to_string(rs.rank()) +
                                            " exceeds the scan limit; pass an explicit override to proceed");
  const std::vector<int> minus = rs.vertices(Color::minus);
  const std::vector<int> plus = rs.vertices(Color::plus);
  if (minus.size() >= 63 || plus.size() >= 63) throw Error(Errc::invalid_argument, "color class too large to enumerate");
  std::vector<Candidate> out;
  for (unsigned long m = 0; m < (1ul << minus.size()); ++m)
    for (unsigned long p = 0; p < (1ul << plus.size()); ++p) out.push_back({select(minus, m), select(plus, p)});
  return out;
}

CandidateClassification classify(const RootSystem& rs, const Candidate& candidate) {
  CandidateClassification out;
  out.candidate = candidate;
  const FactorizedElement fe = factorize(rs, candidate.v_minus, candidate.v_plus);
  out.order = fe.order;
  out.ansatz_applicable = fe.order % 4 == 0;
  if (!out.ansatz_applicable) return out;

  const DeformMatrix theta = build_theta(fe);
  ConstraintReport report = verify_constraints(theta, fe);
  out.det = report.det_value;
  out.constraints = std::move(report);
  const ReducedRootSpace space = reduced_root_space(rs, fe);
  out.invariant = check_invariance(fe, space).invariant();
  out.trivial = is_trivial(theta);
  out.distinct_roots = space.root_set.size();
  return out;
}

std::vector<CandidateClassification> scan(const RootSystem& rs, const ScanOptions& options) {
  const std::vector<Candidate> candidates = enumerate_candidates(rs, options.allow_large);
  std::vector<CandidateClassification> results(candidates.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, candidates.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t k = next++; k < candidates.size(); k = next++) results[k] = classify(rs, candidates[k]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = candidates.size();
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string to_json_lines(const std::vector<CandidateClassification>& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace rootdeform
