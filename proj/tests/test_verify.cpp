#include "doctest.h"

#include <cmath>
#include <set>

#include "zdisc/error.hpp"
#include "zdisc/verify.hpp"

using namespace zdisc;
using nlohmann::json;

TEST_CASE("report bookkeeping") {
  Report r;
  r.suite = "demo";
  CHECK(r.pass());
  r.add("a", {{"m", 1}}, 1e-14, 1e-12);
  CHECK(r.pass());
  r.add("b", json::object(), 1e-3, 1e-12);
  CHECK_FALSE(r.pass());
  const json j = r.to_json();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["suite"] == "demo");
  CHECK(j["pass"] == false);
  REQUIRE(j["checks"].size() == 2);
  CHECK(j["checks"][0]["id"] == "a");
  CHECK(j["checks"][0]["params"]["m"] == 1);
  CHECK(j["checks"][1]["pass"] == false);
  CHECK(j.contains("environment"));

  Report s;
  s.add("c", json::object(), 0.0, 1.0);
  s.environment["nodes"] = 12;
  Report t;
  t.append(s);
  t.append(s);
  CHECK(t.checks.size() == 2);
}

TEST_CASE("non-finite residuals fail") {
  Report r;
  r.add("nan", json::object(), std::nan(""), 1.0);
  CHECK_FALSE(r.pass());
}

TEST_CASE("every named suite passes at the defaults") {
  VerifyOptions o;
  for (const auto& name : suite_names()) {
    INFO(name);
    const Report r = run_suite(name, o);
    CHECK(r.pass());
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks)
      if (!c.pass) MESSAGE(c.id << " residual " << c.residual << " threshold " << c.threshold);
  }
  CHECK_THROWS_AS(run_suite("nope", o), Error);
}

TEST_CASE("suites pass across weights") {
  for (double a : {-0.5, 0.5, 2.0}) {
    VerifyOptions o;
    o.alpha = a;
    o.max_m = 8;
    const Report r = run_suite("all", o);
    for (const auto& c : r.checks)
      if (!c.pass) MESSAGE("alpha " << a << ": " << c.id << " residual " << c.residual);
    CHECK(r.pass());
  }
}

TEST_CASE("all is deterministic and independent of thread count") {
  VerifyOptions one, many;
  many.threads = 4;
  const json a = run_suite("all", one).to_json(), b = run_suite("all", many).to_json();
  CHECK(a["checks"] == b["checks"]);
  std::set<std::string> ids;
  for (const auto& c : a["checks"]) ids.insert(c["id"].get<std::string>());
  for (const char* prefix : {"poly.", "kernel.", "quad.", "quant.", "su11."}) {
    bool found = false;
    for (const auto& id : ids) found = found || id.rfind(prefix, 0) == 0;
    CHECK_MESSAGE(found, prefix);
  }
}

TEST_CASE("report comparison") {
  Report r;
  r.suite = "demo";
  r.add("a", {{"m", 1}}, 1e-14, 1e-12);
  r.add("b", {{"z", "0.3"}}, 2e-13, 1e-12);
  const json base = r.to_json();
  CHECK(compare_reports(base, base) == "");

  json moved = base;
  moved["checks"][0]["residual"] = 5e-13;
  moved["environment"]["host"] = "elsewhere";
  CHECK(compare_reports(base, moved) == "");

  json over = base;
  over["checks"][1]["residual"] = 1e-11;
  CHECK(compare_reports(base, over) != "");

  json renamed = base;
  renamed["checks"][1]["id"] = "c";
  CHECK(compare_reports(base, renamed) != "");

  json shorter = base;
  shorter["checks"].erase(1);
  CHECK(compare_reports(base, shorter) != "");

  json params = base;
  params["checks"][0]["params"]["m"] = 2;
  CHECK(compare_reports(base, params) != "");

  json threshold = base;
  threshold["checks"][0]["threshold"] = 1.0;
  CHECK(compare_reports(base, threshold) != "");

  json schema = base;
  schema["schema"] = "report_v0";
  CHECK(compare_reports(base, schema) != "");
}
