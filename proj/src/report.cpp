#include "powq/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "powq/catalog.hpp"
#include "powq/error.hpp"
#include "powq/homology.hpp"
#include "powq/power_quandle.hpp"

namespace powq {

namespace {

using nlohmann::json;

constexpr const char* kScopeNote =
    "Catalog-relative: only pairs and groups from the listed families were examined. "
    "Finding no counterexample is evidence, not proof.";

// Runs job(i) for i in [0, n) on a small worker pool. Jobs write only to their
// own slot, so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
  for (auto& t : pool) t.join();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GroupRecord basic_record(const CatalogEntry& entry) {
  GroupRecord r;
  r.label = entry.label;
  r.order = entry.group.order();
  r.center_order = center(entry.group).order();
  r.num_classes = conjugacy_classes(entry.group).size();
  r.b_group = b_group(entry.group);
  r.h1 = abelian_invariants(entry.group);
  return r;
}

bool expect_split(const CatalogEntry& entry) {
  return is_abelian(entry.group) || entry.label.rfind("symmetric(", 0) == 0;
}

struct ForgetfulGroupData {
  GroupRecord record;
  std::vector<CheckRecord> checks;
  std::optional<PowerQuandle> pq;
  FiniteGroup center_group;
  FiniteGroup central_quotient;
};

struct PairResult {
  PairRecord record;
  std::vector<CheckRecord> checks;
  std::optional<Counterexample> counterexample;
};

}  // namespace

std::size_t VerificationReport::failed_checks() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

int VerificationReport::exit_code() const {
  if (failed_checks() > 0) return 3;
  if (!counterexamples.empty()) return 2;
  return 0;
}

VerificationReport sweep_forgetful(std::size_t max_order) {
  if (max_order > kForgetfulSweepBound) {
    throw SizeBound("sweep_forgetful supports max_order <= " + std::to_string(kForgetfulSweepBound));
  }
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.sweep = "forgetful";
  rep.max_order = max_order;
  rep.families = catalog_families();
  rep.scope_note = kScopeNote;
  const std::vector<CatalogEntry> entries = sweep_catalog(max_order);

  std::vector<ForgetfulGroupData> data(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const CatalogEntry& entry = entries[i];
    ForgetfulGroupData& d = data[i];
    try {
      d.record = basic_record(entry);
      d.pq = pq_of_group(entry.group);
      const Subgroup z = center(entry.group);
      d.center_group = subgroup_as_group(z).first;
      d.central_quotient = quotient(entry.group, z).first;
      const bool classes_match = orbits(*d.pq).classes == conjugacy_classes(entry.group);
      d.checks.push_back({entry.label, "orbits_are_classes", classes_match, false, ""});
    } catch (const std::exception& e) {
      d.checks.push_back({entry.label, "group_setup", false, false, e.what()});
    }
  });
  rep.timing_seconds["groups"] = seconds_since(t0);

  std::vector<std::pair<std::size_t, std::size_t>> pair_index;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].group.order() == entries[j].group.order() && data[i].pq && data[j].pq) pair_index.emplace_back(i, j);
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  std::vector<PairResult> results(pair_index.size());
  parallel_for(pair_index.size(), [&](std::size_t n) {
    const auto [i, j] = pair_index[n];
    PairResult& out = results[n];
    PairRecord& pr = out.record;
    pr.first = entries[i].label;
    pr.second = entries[j].label;
    pr.order = entries[i].group.order();
    const std::string subject = pr.first + " / " + pr.second;
    try {
      const auto giso = group_iso(entries[i].group, entries[j].group);
      pr.group_iso = giso.has_value();
      pr.pq_iso = pq_iso(*data[i].pq, *data[j].pq).has_value();
      if (giso) {
        const bool functorial = is_pq_morphism(*data[i].pq, *data[j].pq, *giso);
        out.checks.push_back({subject, "group_iso_is_pq_iso", functorial && pr.pq_iso, false, ""});
      }
      if (pr.pq_iso) {
        pr.centers_iso = group_iso(data[i].center_group, data[j].center_group).has_value();
        pr.central_quotients_iso = group_iso(data[i].central_quotient, data[j].central_quotient).has_value();
        out.checks.push_back({subject, "centers_iso", *pr.centers_iso, false, ""});
        out.checks.push_back({subject, "central_quotients_iso", *pr.central_quotients_iso, false, ""});
        if (!pr.group_iso) {
          out.counterexample = Counterexample{pr.first, pr.second, "pq-isomorphic but not group-isomorphic"};
        }
      }
    } catch (const std::exception& e) {
      out.checks.push_back({subject, "pair_comparison", false, false, e.what()});
    }
  });
  rep.timing_seconds["pairs"] = seconds_since(t1);

  for (auto& d : data) {
    rep.groups.push_back(std::move(d.record));
    for (auto& c : d.checks) rep.checks.push_back(std::move(c));
  }
  for (auto& r : results) {
    rep.pairs.push_back(std::move(r.record));
    for (auto& c : r.checks) rep.checks.push_back(std::move(c));
    if (r.counterexample) rep.counterexamples.push_back(std::move(*r.counterexample));
  }
  rep.timing_seconds["total"] = seconds_since(t0);
  return rep;
}

VerificationReport sweep_adjoint(std::size_t max_order, std::size_t limit) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.sweep = "adjoint";
  rep.max_order = max_order;
  rep.limit = limit;
  rep.families = catalog_families();
  rep.scope_note = kScopeNote;
  const std::vector<CatalogEntry> entries = sweep_catalog(max_order);

  struct Slot {
    GroupRecord record;
    std::vector<CheckRecord> checks;
  };
  std::vector<Slot> slots(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    const CatalogEntry& entry = entries[i];
    Slot& s = slots[i];
    const std::string& label = entry.label;
    try {
      s.record = basic_record(entry);
      const CentralExtension ext = gr_pq(entry.group, limit);
      s.record.status = "ok";
      s.record.e_order = ext.total.order();
      s.record.a_order = ext.kernel.order();
      s.checks.push_back({label, "kernel_central", true, false, ""});

      const FiveTermReport five = verify_five_term(entry.group, ext);
      s.record.a_cap_commutator = five.a_cap_commutator;
      s.record.h2 = five.h2;
      for (const auto& c : five.checks) s.checks.push_back({label, c.name, c.passed, c.skipped, c.detail});

      const GroupHom id = extend_section(ext, ext, ext.section);
      bool identity = true;
      for (std::size_t x = 0; x < id.image.size(); ++x) identity = identity && id.image[x] == x;
      s.checks.push_back({label, "universal_property", identity, false, ""});

      s.record.split = check_split(ext).has_value();
      if (expect_split(entry)) {
        s.checks.push_back({label, "split_expected", *s.record.split, false, ""});
      }
    } catch (const LimitExceeded& e) {
      s.record.status = "limit_exceeded";
    } catch (const CentralityFailure& e) {
      s.record.status = "centrality_failure";
      s.checks.push_back({label, "kernel_central", false, false, e.what()});
    } catch (const std::exception& e) {
      s.record.status = "error";
      s.checks.push_back({label, "pipeline", false, false, e.what()});
    }
  });
  for (auto& s : slots) {
    rep.groups.push_back(std::move(s.record));
    for (auto& c : s.checks) rep.checks.push_back(std::move(c));
  }
  rep.timing_seconds["total"] = seconds_since(t0);
  return rep;
}

namespace {

json invariants_json(const std::optional<AbelianInvariants>& a) {
  if (!a) return nullptr;
  return {{"factors", a->factors}, {"free_rank", a->free_rank}};
}

std::optional<AbelianInvariants> invariants_from(const json& v) {
  if (v.is_null()) return std::nullopt;
  AbelianInvariants a;
  a.factors = v.at("factors").get<std::vector<std::uint64_t>>();
  a.free_rank = v.at("free_rank").get<std::size_t>();
  return a;
}

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  return doc[key].get<T>();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<AbelianInvariants>& a) { return a ? a->to_string() : "-"; }

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "-";
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*v);
  } else {
    return std::to_string(*v);
  }
}

std::string text_report(const VerificationReport& r) {
  std::ostringstream os;
  os << r.tool_version << "\n";
  os << "sweep: " << (r.sweep.empty() ? "-" : r.sweep) << "\n";
  os << "max order: " << r.max_order << "\n";
  if (r.limit) os << "coset limit: " << *r.limit << "\n";
  os << "families:";
  for (const auto& f : r.families) os << " " << f;
  os << "\n";
  if (!r.scope_note.empty()) os << "NOTE: " << r.scope_note << "\n";

  os << "\ngroups (" << r.groups.size() << ")\n";
  std::size_t wl = 8, wb = 6, wh1 = 4, wh2 = 4;
  for (const auto& g : r.groups) {
    wl = std::max(wl, g.label.size() + 2);
    wb = std::max(wb, opt_text(g.b_group).size() + 2);
    wh1 = std::max(wh1, opt_text(g.h1).size() + 2);
    wh2 = std::max(wh2, opt_text(g.h2).size() + 2);
  }
  const auto col = [](std::size_t w) { return std::setw(static_cast<int>(w)); };
  os << std::left << col(wl) << "label" << std::setw(7) << "order" << std::setw(7) << "|Z|" << std::setw(9)
     << "classes" << col(wb) << "B(G)" << col(wh1) << "H1" << col(wh2) << "H2";
  if (r.sweep == "adjoint") os << std::setw(8) << "|E|" << std::setw(6) << "|A|" << std::setw(7) << "split" << "status";
  os << "\n";
  for (const auto& g : r.groups) {
    os << col(wl) << g.label << std::setw(7) << g.order << std::setw(7) << g.center_order << std::setw(9)
       << g.num_classes << col(wb) << opt_text(g.b_group) << col(wh1) << opt_text(g.h1) << col(wh2) << opt_text(g.h2);
    if (r.sweep == "adjoint") {
      os << std::setw(8) << opt_text(g.e_order) << std::setw(6) << opt_text(g.a_order) << std::setw(7)
         << opt_text(g.split) << g.status;
    }
    os << "\n";
  }

  if (!r.pairs.empty()) {
    os << "\npairs (" << r.pairs.size() << ")\n";
    for (const auto& p : r.pairs) {
      os << "  " << p.first << " / " << p.second << ": pq_iso " << yes_no(p.pq_iso) << ", group_iso "
         << yes_no(p.group_iso);
      if (!p.pq_iso) {
        os << " (pq-distinguished)";
      } else {
        os << ", centers_iso " << opt_text(p.centers_iso) << ", central_quotients_iso "
           << opt_text(p.central_quotients_iso);
      }
      os << "\n";
    }
  }

  os << "\nchecks: " << r.checks.size() << ", failed: " << r.failed_checks() << "\n";
  for (const auto& c : r.checks) {
    if (!c.passed) os << "  FAIL " << c.subject << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  os << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) os << "  " << c.first << " / " << c.second << ": " << c.reason << "\n";
  if (!r.timing_seconds.empty()) {
    os << "\ntiming (s):";
    for (const auto& [k, v] : r.timing_seconds) os << " " << k << "=" << std::fixed << std::setprecision(3) << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace

json report_to_json(const VerificationReport& r) {
  json groups = json::array(), pairs = json::array(), checks = json::array(), cex = json::array();
  for (const auto& g : r.groups) {
    groups.push_back({{"label", g.label},
                      {"order", g.order},
                      {"center_order", g.center_order},
                      {"num_classes", g.num_classes},
                      {"b_group", invariants_json(g.b_group)},
                      {"h1", invariants_json(g.h1)},
                      {"h2", invariants_json(g.h2)},
                      {"status", g.status},
                      {"e_order", opt(g.e_order)},
                      {"a_order", opt(g.a_order)},
                      {"a_cap_commutator", opt(g.a_cap_commutator)},
                      {"split", opt(g.split)}});
  }
  for (const auto& p : r.pairs) {
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"order", p.order},
                     {"pq_iso", p.pq_iso},
                     {"group_iso", p.group_iso},
                     {"centers_iso", opt(p.centers_iso)},
                     {"central_quotients_iso", opt(p.central_quotients_iso)}});
  }
  for (const auto& c : r.checks) {
    checks.push_back({{"subject", c.subject}, {"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
  }
  for (const auto& c : r.counterexamples) cex.push_back({{"first", c.first}, {"second", c.second}, {"reason", c.reason}});
  return {{"tool_version", r.tool_version},
          {"sweep", r.sweep},
          {"scope", {{"max_order", r.max_order}, {"limit", opt(r.limit)}, {"families", r.families}, {"note", r.scope_note}}},
          {"groups", std::move(groups)},
          {"pairs", std::move(pairs)},
          {"checks", std::move(checks)},
          {"counterexamples", std::move(cex)},
          {"timing_seconds", r.timing_seconds}};
}

VerificationReport report_from_json(const json& doc) {
  try {
    VerificationReport r;
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.sweep = doc.at("sweep").get<std::string>();
    const json& scope = doc.at("scope");
    r.max_order = scope.at("max_order").get<std::size_t>();
    r.limit = opt_from<std::size_t>(scope, "limit");
    r.families = scope.at("families").get<std::vector<std::string>>();
    r.scope_note = scope.at("note").get<std::string>();
    for (const auto& g : doc.at("groups")) {
      GroupRecord x;
      x.label = g.at("label").get<std::string>();
      x.order = g.at("order").get<std::size_t>();
      x.center_order = g.at("center_order").get<std::size_t>();
      x.num_classes = g.at("num_classes").get<std::size_t>();
      x.b_group = invariants_from(g.at("b_group"));
      x.h1 = invariants_from(g.at("h1"));
      x.h2 = invariants_from(g.at("h2"));
      x.status = g.at("status").get<std::string>();
      x.e_order = opt_from<std::size_t>(g, "e_order");
      x.a_order = opt_from<std::size_t>(g, "a_order");
      x.a_cap_commutator = opt_from<std::size_t>(g, "a_cap_commutator");
      x.split = opt_from<bool>(g, "split");
      r.groups.push_back(std::move(x));
    }
    for (const auto& p : doc.at("pairs")) {
      PairRecord x;
      x.first = p.at("first").get<std::string>();
      x.second = p.at("second").get<std::string>();
      x.order = p.at("order").get<std::size_t>();
      x.pq_iso = p.at("pq_iso").get<bool>();
      x.group_iso = p.at("group_iso").get<bool>();
      x.centers_iso = opt_from<bool>(p, "centers_iso");
      x.central_quotients_iso = opt_from<bool>(p, "central_quotients_iso");
      r.pairs.push_back(std::move(x));
    }
    for (const auto& c : doc.at("checks")) {
      r.checks.push_back({c.at("subject").get<std::string>(), c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                          c.at("skipped").get<bool>(), c.at("detail").get<std::string>()});
    }
    for (const auto& c : doc.at("counterexamples")) {
      r.counterexamples.push_back(
          {c.at("first").get<std::string>(), c.at("second").get<std::string>(), c.at("reason").get<std::string>()});
    }
    r.timing_seconds = doc.at("timing_seconds").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string emit_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format == "text") return text_report(report);
  throw UnsupportedFormat("unsupported report format \"" + format + "\"");
}

}  // namespace powq
