#include <doctest.h>

#include <algorithm>

#include "rootdeform/scan.hpp"

using namespace rootdeform;

TEST_SUITE("scan") {
  TEST_CASE("enumeration") {
    const RootSystem e8 = build_root_system("E8");
    const auto all = enumerate_candidates(e8);
    CHECK(all.size() == 256);
    CHECK(all.front() == Candidate{{}, {}});
    CHECK(all[1] == Candidate{{}, {2}});
    CHECK(all.back() == Candidate{{1, 3, 5, 7}, {2, 4, 6, 8}});
    CHECK(std::find(all.begin(), all.end(), Candidate{{3, 5, 7}, {2, 4, 6, 8}}) != all.end());
    CHECK(enumerate_candidates(build_root_system("A2")).size() == 4);
  }

  TEST_CASE("rank guard") {
    const RootSystem a17 = build_root_system("A17");
    CHECK_THROWS_AS(enumerate_candidates(a17), Error);
    CHECK(enumerate_candidates(build_root_system("A16")).size() == 65536);
  }

  TEST_CASE("classification of the listed orders") {
    const RootSystem e8 = build_root_system("E8");
    struct Expect {
      Candidate c;
      int order;
    };
    for (const auto& [c, order] : std::vector<Expect>{{{{3, 5, 7}, {2, 4, 6, 8}}, 8},
                                                      {{{1, 3, 7}, {4, 6, 8}}, 4},
                                                      {{{1, 3, 5, 7}, {4, 6, 8}}, 12},
                                                      {{{1, 3, 7}, {2, 4, 6, 8}}, 20},
                                                      {{{1, 3, 5, 7}, {2, 4, 8}}, 24}}) {
      const CandidateClassification r = classify(e8, c);
      CHECK(r.order == order);
      CHECK(r.ansatz_applicable);
      REQUIRE(r.constraints);
      CHECK(r.constraints->all_passed());
      CHECK(r.trivial == false);
    }
    const CandidateClassification coxeter = classify(e8, {{1, 3, 5, 7}, {2, 4, 6, 8}});
    CHECK(coxeter.order == 30);
    CHECK_FALSE(coxeter.ansatz_applicable);
    CHECK_FALSE(coxeter.constraints);
    CHECK_FALSE(coxeter.invariant);
    CHECK_FALSE(coxeter.trivial);
    CHECK_FALSE(coxeter.det);
    const CandidateClassification empty = classify(e8, {{}, {}});
    CHECK(empty.order == 1);
    CHECK_FALSE(empty.ansatz_applicable);
  }

  TEST_CASE("scan is deterministic across thread counts") {
    const RootSystem e8 = build_root_system("E8");
    const auto one = scan(e8, {1, false});
    const auto four = scan(e8, {4, false});
    const std::string lines = to_json_lines(one);
    CHECK(lines == to_json_lines(four));
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 256);
    for (const auto& r : one)
      if (r.ansatz_applicable) {
        CHECK(r.constraints->commutes_with_sigma);
        CHECK(r.constraints->limit_ok);
      }
  }
}
