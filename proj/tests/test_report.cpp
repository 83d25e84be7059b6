#include <doctest.h>

#include "p8cryst/report.hpp"

using namespace p8;

TEST_CASE("verdict combination") {
  CHECK(combine(Verdict::pass, Verdict::pass) == Verdict::pass);
  CHECK(combine(Verdict::pass, Verdict::inconclusive) == Verdict::inconclusive);
  CHECK(combine(Verdict::inconclusive, Verdict::fail) == Verdict::fail);
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::inconclusive}) CHECK(verdict_from_string(to_string(v)) == v);
  CHECK_THROWS(verdict_from_string("maybe"));
}

TEST_CASE("report JSON round-trip") {
  Report r("diagram", "D4_3", "w");
  r.add("a", "first claim", true, {{"order", 3}});
  r.add("b", "second claim", Verdict::inconclusive);
  r.resolved_choices()["edge"] = "flipped";
  r.set_seconds(0.5);
  CHECK(r.overall() == Verdict::inconclusive);
  const auto j = r.to_json();
  CHECK(j["schema"] == "1");
  CHECK_FALSE(j.contains("timing_seconds"));
  CHECK(r.to_json(true).contains("timing_seconds"));
  const Report back = Report::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(back.find("a")->witness["order"] == 3);
  CHECK(back.find("zzz") == nullptr);
  nlohmann::json bad = j;
  bad["schema"] = "2";
  CHECK_THROWS(Report::from_json(bad));
}

TEST_CASE("append prefixes claim ids") {
  Report a("s", "x"), b("s", "y");
  b.add("c", "claim", false);
  a.append(b, "y.");
  CHECK(a.find("y.c") != nullptr);
  CHECK(a.overall() == Verdict::fail);
  CHECK(overall(std::vector<Report>{a}) == Verdict::fail);
  CHECK(to_json(std::vector<Report>{a})["verdict"] == "fail");
}
