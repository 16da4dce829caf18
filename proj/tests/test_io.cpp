#include <doctest.h>

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fvlab/errors.hpp"
#include "fvlab/io.hpp"
#include "fvlab/parallel.hpp"

using namespace fvlab;

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1) == "1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_double(HUGE_VAL) == "inf");
  CHECK(format_double(-HUGE_VAL) == "-inf");
  for (double v : {0.1, 1.0 / 3, 1e-300, 6.02e23, -0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv text") {
  CHECK(csv_text({"a", "b"}, {{"1", "2"}, {"3", "4"}}) == "a,b\n1,2\n3,4\n");
  CHECK(csv_text({"a"}, {}) == "a\n");
}

TEST_CASE("verdict json") {
  LimitVerdict v;
  v.tag = LimitTag::Finite;
  v.value = 1.5;
  v.slope = std::numeric_limits<double>::quiet_NaN();
  v.residual = 0;
  nlohmann::json j = verdict_json(v);
  CHECK(j["tag"] == "Finite");
  CHECK(j["value"] == 1.5);
  CHECK(j["slope"].is_null());
  v.tag = LimitTag::Zero;
  v.value.reset();
  v.slope = HUGE_VAL;
  j = verdict_json(v);
  CHECK(!j.contains("value"));
  CHECK(j["slope"].is_null());
  CHECK(number_or_null(-HUGE_VAL).is_null());
  CHECK(number_or_null(2.0) == 2.0);
}

TEST_CASE("json text is sorted and newline terminated") {
  nlohmann::json j;
  j["zeta"] = 1;
  j["alpha"] = 2;
  std::string s = json_text(j);
  CHECK(s.find("alpha") < s.find("zeta"));
  CHECK(s.back() == '\n');
}

TEST_CASE("trace csv") {
  VariationTrace t;
  t.samples = {{0.5, 1.0}, {0.25, HUGE_VAL}};
  std::string s = trace_csv(t);
  CHECK(s.find("0.5,1\n") != std::string::npos);
  CHECK(s.find("0.25,inf\n") != std::string::npos);
}

TEST_CASE("write_file failure") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x.csv", "a"), Error);
}

TEST_CASE("parallel_for visits every index once") {
  for (unsigned threads : {1u, 2u, 7u, 0u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("parallel_for rethrows") {
  CHECK_THROWS_AS(parallel_for(100, 4,
                               [](std::size_t i) {
                                 if (i == 37) throw std::logic_error("boom");
                               }),
                  std::logic_error);
  CHECK(default_threads() >= 1);
}
