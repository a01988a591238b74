#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sustar/verify/suites_core.hpp"
#include "sustar/verify/suites_dominated.hpp"
#include "sustar/verify/suites_suops.hpp"

namespace sustar::verify {

struct SuiteEntry {
  std::string name;
  std::vector<std::string> defaults;   // backends run when none is requested
  std::vector<std::string> supported;  // backends the suite accepts
  std::function<void(SuiteContext&)> run;
};

inline const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = [] {
    const std::vector<std::string> mf{"matrix", "function"};
    const std::vector<std::string> m{"matrix"};
    const std::vector<std::string> tw{"tower"};
    std::vector<SuiteEntry> s{
        {"approximate-sqrt", mf, mf, suite_approximate_sqrt},
        {"archimedean", {"matrix", "function", "ptlg"}, {"matrix", "function", "ptlg"}, suite_archimedean},
        {"csersatz", mf, mf, suite_csersatz},
        {"cstar-laws", mf, mf, suite_cstar_laws},
        {"dominant", tw, tw, suite_dominant},
        {"downarrow", tw, tw, suite_downarrow},
        {"fixtures", {"pathological"}, {"pathological"}, suite_fixtures},
        {"inverse", mf, mf, suite_inverse},
        {"inverse-ordering", mf, mf, suite_inverse_ordering},
        {"morphisms", mf, mf, suite_morphisms},
        {"nilpotent", {"matrix", "ptlg"}, {"matrix", "ptlg"}, suite_nilpotent},
        {"order-axioms", {"matrix", "function", "polynomial"}, {"matrix", "function", "polynomial"}, suite_order_axioms},
        {"ordersquare", mf, mf, suite_ordersquare},
        {"polycalc", mf, mf, suite_polycalc},
        {"posnegpart", mf, mf, suite_posnegpart},
        {"radical-products", mf, mf, suite_radical_products},
        {"radical-square", mf, mf, suite_radical_square},
        {"sqrt", mf, mf, suite_sqrt},
        {"su-equivalence", m, mf, suite_su_equivalence},
        {"supinf", mf, mf, suite_supinf},
        {"susconstruct", tw, tw, suite_susconstruct},
        {"unique-order", m, m, suite_unique_order},
        {"veewedge-rules", mf, mf, suite_veewedge_rules},
        {"weak-order-unit", mf, mf, suite_weak_order_unit},
    };
    return s;
  }();
  return suites;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

inline const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + name + "\"");
}

/// Runs the configured suites. A backend requested for an explicitly named suite must be
/// supported; with "all", suites that do not support it run on their defaults instead.
inline SuiteReport run_suites(const SuiteConfig& config) {
  config.validate();
  std::vector<const SuiteEntry*> selected;
  bool all = config.suites.empty();
  for (const auto& name : config.suites) all = all || name == "all";
  if (all) {
    for (const auto& s : registry()) selected.push_back(&s);
  } else {
    for (const auto& name : config.suites) {
      const SuiteEntry* e = &find_suite(name);
      if (std::find(selected.begin(), selected.end(), e) == selected.end()) selected.push_back(e);
    }
  }

  SuiteReport report;
  report.config = config;
  for (const SuiteEntry* s : selected) {
    std::vector<std::string> backends = s->defaults;
    if (!config.backend.empty()) {
      const bool ok = std::find(s->supported.begin(), s->supported.end(), config.backend) != s->supported.end();
      if (ok) backends = {config.backend};
      else if (!all)
        throw Error(ErrorKind::NotApplicable, "suite " + s->name + " does not run on backend " + config.backend);
    }
    for (const auto& b : backends) {
      SuiteContext ctx(report.config, s->name, b);
      try {
        s->run(ctx);
      } catch (const Error& e) {
        ctx.check("suite-aborted", "").record(1, 1, 0.0, e.what());
      }
      ctx.flush_into(report);
    }
  }
  report.sort();
  return report;
}

}  // namespace sustar::verify
