#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/io.hpp"
#include "powq/report.hpp"

using namespace powq;
using nlohmann::json;

namespace {

json without_timing(const VerificationReport& r) {
  json j = report_to_json(r);
  j.erase("timing_seconds");
  return j;
}

const PairRecord* find_pair(const VerificationReport& r, const std::string& a, const std::string& b) {
  for (const auto& p : r.pairs) {
    if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return &p;
  }
  return nullptr;
}

const GroupRecord* find_group(const VerificationReport& r, const std::string& label) {
  for (const auto& g : r.groups) {
    if (g.label == label) return &g;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("empty report") {
  const VerificationReport r;
  const json j = report_to_json(r);
  CHECK(j["groups"] == json::array());
  CHECK(j["pairs"] == json::array());
  CHECK(j["checks"] == json::array());
  CHECK(j["counterexamples"] == json::array());
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(r.exit_code() == 0);
  CHECK(emit_report(r, "text").find("checks: 0, failed: 0") != std::string::npos);
}

TEST_CASE("exit codes") {
  VerificationReport r;
  r.checks.push_back({"x", "skipped_one", true, true, ""});
  CHECK(r.exit_code() == 0);
  r.counterexamples.push_back({"a", "b", "why"});
  CHECK(r.exit_code() == 2);
  r.checks.push_back({"x", "broken", false, false, ""});
  CHECK(r.failed_checks() == 1);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("sweep_forgetful") {
  const VerificationReport one = sweep_forgetful(1);
  CHECK(one.pairs.empty());
  CHECK(one.groups.size() == 1);
  CHECK(one.exit_code() == 0);

  const VerificationReport r = sweep_forgetful(8);
  CHECK(r.sweep == "forgetful");
  CHECK(r.max_order == 8);
  CHECK_FALSE(r.scope_note.empty());
  CHECK(r.counterexamples.empty());
  CHECK(r.exit_code() == 0);
  const PairRecord* dq = find_pair(r, "dihedral(8)", "dicyclic(8)");
  REQUIRE(dq != nullptr);
  CHECK_FALSE(dq->pq_iso);
  CHECK_FALSE(dq->group_iso);
  const std::string text = emit_report(r, "text");
  CHECK(text.find("pq-distinguished") != std::string::npos);
  CHECK(text.find("dicyclic(8)") != std::string::npos);
  for (const auto& p : r.pairs) CHECK(p.pq_iso == p.group_iso);
  CHECK_THROWS_AS(sweep_forgetful(kForgetfulSweepBound + 1), SizeBound);
}

TEST_CASE("reports are deterministic apart from timing") {
  CHECK(without_timing(sweep_forgetful(12)) == without_timing(sweep_forgetful(12)));
  CHECK(without_timing(sweep_adjoint(8)) == without_timing(sweep_adjoint(8)));
}

TEST_CASE("report formats") {
  const VerificationReport r = sweep_forgetful(6);
  CHECK_THROWS_AS(emit_report(r, "xml"), UnsupportedFormat);
  const json j = json::parse(emit_report(r, "json"));
  const VerificationReport back = report_from_json(j);
  CHECK(report_to_json(back) == report_to_json(r));
  CHECK(emit_report(back, "text") == emit_report(r, "text"));
  CHECK_THROWS_AS(report_from_json(json::object()), ParseError);
}

TEST_CASE("sweep_adjoint") {
  const VerificationReport small = sweep_adjoint(2);
  CHECK(small.groups.size() == 2);
  CHECK(small.exit_code() == 0);

  const VerificationReport r = sweep_adjoint(8);
  CHECK(r.sweep == "adjoint");
  CHECK(r.limit == kDefaultCosetLimit);
  CHECK(r.exit_code() == 0);
  const GroupRecord* q8 = find_group(r, "dicyclic(8)");
  REQUIRE(q8 != nullptr);
  CHECK(q8->status == "ok");
  CHECK(q8->a_order == 2u);
  CHECK(q8->e_order == 16u);
  const GroupRecord* s3 = find_group(r, "symmetric(3)");
  REQUIRE(s3 != nullptr);
  CHECK(s3->a_order == 1u);
  CHECK(s3->split == true);
  for (const auto& g : r.groups) {
    CAPTURE(g.label);
    CHECK(g.status == "ok");
    CHECK(g.b_group.has_value());
  }

  const VerificationReport limited = sweep_adjoint(6, 3);
  CHECK(limited.exit_code() == 0);
  bool any_limited = false;
  for (const auto& g : limited.groups) any_limited = any_limited || g.status == "limit_exceeded";
  CHECK(any_limited);
}

TEST_CASE("json io") {
  const FiniteGroup s3 = catalog_from_string("symmetric(3)");
  const FiniteGroup back = group_from_json(group_to_json(s3));
  CHECK(back.order() == 6);
  CHECK(std::equal(back.table().begin(), back.table().end(), s3.table().begin()));
  const PowerQuandle p = pq_of_group(s3);
  CHECK(pq_from_json(pq_to_json(p)) == p);

  CHECK_THROWS_AS(group_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(group_from_json({{"order", 2}}), ParseError);
  CHECK_THROWS_AS(group_from_json({{"order", 2}, {"mul", {0, 1, 1}}}), ParseError);
  CHECK_THROWS_AS(group_from_json({{"order", 2}, {"mul", {0, 1, 1, -1}}}), ParseError);
  CHECK_THROWS_AS(group_from_json({{"order", 2}, {"mul", {0, 1, 1, 0}}, {"names", {"e"}}}), ParseError);
  CHECK(group_from_json({{"order", 2}, {"mul", {0, 1, 1, 0}}, {"names", {"e", "t"}}}).names().size() == 2);
  CHECK_THROWS_AS(group_from_json({{"order", 2}, {"mul", {0, 1, 1, 1}}}), GroupError);
  CHECK_THROWS_AS(pq_from_json({{"size", 1}, {"unit", 1}, {"exponent", 1}, {"conj", {0}}, {"pow", {0}}}), ParseError);
  CHECK_THROWS_AS(pq_from_json({{"size", 1}, {"unit", 0}, {"exponent", 0}, {"conj", {0}}, {"pow", json::array()}}),
                  ParseError);

  const std::string path = (std::filesystem::temp_directory_path() / "powq_io_test.json").string();
  write_text_file(path, group_to_json(s3).dump());
  CHECK(read_group_file(path).order() == 6);
  write_text_file(path, "{not json");
  CHECK_THROWS_AS(read_group_file(path), ParseError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("/nonexistent/powq.json"), ParseError);
}
