#include <doctest.h>

#include <algorithm>

#include "pqcalc/error.hpp"
#include "pqcalc/identities.hpp"

TEST_CASE("default suite passes") {
  const auto report = pq::run_identity_suite({});
  CHECK(report.outcomes.size() == pq::identity_labels().size());
  for (const auto& o : report.outcomes) {
    INFO(o.label);
    CHECK(o.ok());
  }
}

TEST_CASE("only runs a single label reproducibly") {
  pq::SuiteOptions opts;
  opts.only = "heine";
  const auto a = pq::run_identity_suite(opts);
  REQUIRE(a.outcomes.size() == 1);
  const auto& notes = a.outcomes[0].notes;
  CHECK(std::any_of(notes.begin(), notes.end(), [](const std::string& n) {
    return n.find("MATCH") != std::string::npos;
  }));
  opts.only = "additive-law";
  opts.trials = 7;
  const auto b = pq::run_identity_suite(opts);
  CHECK(b.outcomes[0].trials == 7);
}

TEST_CASE("injected failure surfaces") {
  pq::SuiteOptions opts;
  opts.trials = 3;
  opts.inject_failure = true;
  const auto report = pq::run_identity_suite(opts);
  CHECK_FALSE(report.all_passed());
  CHECK(report.outcomes.back().label == "injected-false");
}

TEST_CASE("suite argument errors") {
  pq::SuiteOptions opts;
  opts.only = "no-such-label";
  CHECK_THROWS_AS(pq::run_identity_suite(opts), pq::Error);
  opts.only.reset();
  opts.trials = 0;
  CHECK_THROWS_AS(pq::run_identity_suite(opts), pq::Error);
}
