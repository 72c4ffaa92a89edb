#include "fairdiv/json_io.hpp"

#include "fairdiv/algorithms.hpp"

namespace fairdiv {

Json value_to_json(const Value& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p())
    return Json(v.get_num().get_si());
  return Json(value_to_string(v));
}

Value value_from_json(const Json& j) {
  if (j.is_number_integer()) return Value(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) {
    // Every double is an exact rational; conversion loses nothing.
    Value v(j.get<double>());
    v.canonicalize();
    return v;
  }
  if (j.is_string()) {
    auto v = parse_value(j.get<std::string>());
    if (!v) throw Error("malformed rational '" + j.get<std::string>() + "'");
    return *v;
  }
  throw Error("expected a number or an \"a/b\" string");
}

namespace {

std::string good_name(int g) { return "g" + std::to_string(g + 1); }

int good_from_json(const Json& j, int m) {
  int g;
  if (j.is_number_integer()) {
    g = j.get<int>();
  } else if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() < 2 || s[0] != 'g') throw Error("malformed good name '" + s + "'");
    g = std::stoi(s.substr(1)) - 1;
  } else {
    throw Error("expected a good index or name");
  }
  if (g < 0 || (m >= 0 && g >= m)) throw Error("good index out of range");
  return g;
}

std::vector<Value> values_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of values");
  std::vector<Value> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(value_from_json(x));
  return out;
}

Json values_to_json(const std::vector<Value>& vals) {
  Json arr = Json::array();
  for (const auto& v : vals) arr.push_back(value_to_json(v));
  return arr;
}

}  // namespace

Json instance_to_json(const Instance& inst) {
  Json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  Json utilities = Json::array();
  bool budget = false;
  bool additive = false;
  Json caps = Json::array();
  for (const auto& u : inst.utilities) {
    if (u.kind() == ValuationKind::GenericMonotone)
      throw Error("generic monotone oracles cannot be serialized");
    utilities.push_back(values_to_json(u.per_good()));
    if (u.kind() == ValuationKind::BudgetAdditive) {
      budget = true;
      caps.push_back(value_to_json(u.cap()));
    } else {
      additive = true;
    }
  }
  if (budget && additive)
    throw Error("cannot serialize a mix of additive and budget-additive utilities");
  j["utilities"] = std::move(utilities);
  if (inst.market.size() == 1) {
    j["market"] = values_to_json(inst.market[0].per_good());
  } else {
    Json rows = Json::array();
    for (const auto& v : inst.market) rows.push_back(values_to_json(v.per_good()));
    j["market"] = std::move(rows);
  }
  if (budget)
    j["utility_kind"] = Json{{"budget_additive", Json{{"caps", std::move(caps)}}}};
  else
    j["utility_kind"] = "additive";
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  if (!j.is_object()) throw Error("instance must be a JSON object");
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  if (inst.n < 1 || inst.m < 0) throw Error("instance needs n >= 1 and m >= 0");

  std::vector<Value> caps;
  bool budget = false;
  if (j.contains("utility_kind") && !j.at("utility_kind").is_string()) {
    const Json& kind = j.at("utility_kind");
    if (!kind.contains("budget_additive"))
      throw Error("unknown utility_kind");
    budget = true;
    for (const auto& c : kind.at("budget_additive").at("caps"))
      caps.push_back(value_from_json(c));
    if (static_cast<int>(caps.size()) != inst.n)
      throw Error("caps length must equal the agent count");
  } else if (j.contains("utility_kind") &&
             j.at("utility_kind").get<std::string>() != "additive") {
    throw Error("unknown utility_kind '" + j.at("utility_kind").get<std::string>() + "'");
  }

  const Json& utilities = j.at("utilities");
  if (static_cast<int>(utilities.size()) != inst.n)
    throw Error("utilities must hold one row per agent");
  for (int i = 0; i < inst.n; ++i) {
    std::vector<Value> row = values_from_json(utilities.at(static_cast<std::size_t>(i)));
    if (static_cast<int>(row.size()) != inst.m)
      throw Error("utility row length must equal the good count");
    for (const auto& v : row)
      if (v < 0) throw Error("utilities must be nonnegative");
    if (budget)
      inst.utilities.push_back(
          MonotoneValuation::budget_additive(std::move(row), caps[static_cast<std::size_t>(i)]));
    else
      inst.utilities.push_back(MonotoneValuation::additive(std::move(row)));
  }

  const Json& market = j.at("market");
  if (!market.is_array()) throw Error("market must be an array");
  if (!market.empty() && market.at(0).is_array()) {
    if (static_cast<int>(market.size()) != inst.n)
      throw Error("heterogeneous market needs one row per agent");
    for (const auto& row : market) {
      std::vector<Value> vals = values_from_json(row);
      if (static_cast<int>(vals.size()) != inst.m)
        throw Error("market row length must equal the good count");
      for (const auto& v : vals)
        if (v < 0) throw Error("market values must be nonnegative");
      inst.market.emplace_back(std::move(vals));
    }
  } else {
    std::vector<Value> vals = values_from_json(market);
    if (static_cast<int>(vals.size()) != inst.m)
      throw Error("market length must equal the good count");
    for (const auto& v : vals)
      if (v < 0) throw Error("market values must be nonnegative");
    inst.market.emplace_back(std::move(vals));
  }
  return inst;
}

Json allocation_to_json(const Allocation& alloc) {
  Json bundles = Json::array();
  for (const auto& b : alloc.bundles) {
    Json arr = Json::array();
    for (int g : b) arr.push_back(good_name(g));
    bundles.push_back(std::move(arr));
  }
  return Json{{"bundles", std::move(bundles)}};
}

Allocation allocation_from_json(const Json& j) {
  Allocation alloc;
  const Json& bundles = j.is_object() ? j.at("bundles") : j;
  if (!bundles.is_array()) throw Error("allocation must hold a bundle array");
  for (const auto& row : bundles) {
    Bundle b;
    for (const auto& g : row) b.push_back(good_from_json(g, -1));
    alloc.bundles.push_back(sorted_bundle(std::move(b)));
  }
  return alloc;
}

Json report_to_json(const FairnessReport& rep) {
  Json j;
  j["criterion"] = rep.criterion;
  j["side"] = rep.side;
  j["passed"] = rep.passed;
  if (rep.alpha) j["alpha"] = value_to_json(*rep.alpha);
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    Json wj;
    wj["envier"] = w.envier + 1;
    wj["envied"] = w.envied + 1;
    if (w.good) wj["good"] = good_name(*w.good);
    wj["lhs"] = value_to_json(w.lhs);
    wj["rhs"] = value_to_json(w.rhs);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  if (rep.dominating) j["dominating"] = allocation_to_json(*rep.dominating);
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Json theorem_report_to_json(const TheoremReport& rep) {
  Json j;
  j["theorem"] = rep.id;
  j["holds"] = rep.holds;
  j["checked"] = rep.checked;
  j["detail"] = rep.detail;
  if (rep.witness) j["witness"] = allocation_to_json(*rep.witness);
  return j;
}

Json density_to_json(const cake::PiecewiseConstantDensity& d) {
  Json j;
  Json bp = Json::array();
  for (const auto& x : d.breakpoints) bp.push_back(value_to_string(x));
  Json ds = Json::array();
  for (const auto& x : d.densities) ds.push_back(value_to_string(x));
  j["breakpoints"] = std::move(bp);
  j["densities"] = std::move(ds);
  return j;
}

cake::PiecewiseConstantDensity density_from_json(const Json& j) {
  cake::PiecewiseConstantDensity d;
  for (const auto& x : j.at("breakpoints")) d.breakpoints.push_back(value_from_json(x));
  for (const auto& x : j.at("densities")) d.densities.push_back(value_from_json(x));
  d.validate();
  return d;
}

Json cake_instance_to_json(const cake::CakeInstance& inst) {
  Json j;
  j["n"] = inst.n;
  Json us = Json::array();
  for (const auto& u : inst.utilities) us.push_back(density_to_json(u));
  j["utilities"] = std::move(us);
  j["market"] = density_to_json(inst.market);
  return j;
}

cake::CakeInstance cake_instance_from_json(const Json& j) {
  cake::CakeInstance inst;
  inst.n = j.at("n").get<int>();
  if (inst.n < 1) throw Error("cake instance needs n >= 1");
  for (const auto& u : j.at("utilities")) inst.utilities.push_back(density_from_json(u));
  if (inst.utilities.empty() ||
      (inst.utilities.size() != 1 && static_cast<int>(inst.utilities.size()) != inst.n))
    throw Error("cake instance needs 1 or n utility densities");
  inst.market = density_from_json(j.at("market"));
  return inst;
}

Json interval_allocation_to_json(const cake::IntervalAllocation& alloc) {
  Json pieces = Json::array();
  for (const auto& s : alloc.pieces) {
    Json row = Json::array();
    for (const auto& [lo, hi] : s)
      row.push_back(Json::array({value_to_string(lo), value_to_string(hi)}));
    pieces.push_back(std::move(row));
  }
  Json j;
  j["pieces"] = std::move(pieces);
  j["cuts"] = alloc.cut_count();
  return j;
}

cake::IntervalAllocation interval_allocation_from_json(const Json& j) {
  cake::IntervalAllocation alloc;
  const Json& pieces = j.is_object() ? j.at("pieces") : j;
  for (const auto& row : pieces) {
    cake::IntervalSet s;
    for (const auto& iv : row) {
      if (!iv.is_array() || iv.size() != 2) throw Error("interval must be [lo, hi]");
      s.push_back({value_from_json(iv.at(0)), value_from_json(iv.at(1))});
    }
    alloc.pieces.push_back(std::move(s));
  }
  return alloc;
}

Json trace_to_json(const Trace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json j;
    j["kind"] = s.kind;
    if (!s.detail.empty()) j["detail"] = s.detail;
    if (s.allocation) j["allocation"] = allocation_to_json(*s.allocation);
    if (!s.prices.empty()) j["prices"] = values_to_json(s.prices);
    if (s.min_market_value) j["min_market_value"] = value_to_json(*s.min_market_value);
    steps.push_back(std::move(j));
  }
  return steps;
}

bool looks_like_cake(const Json& j) {
  if (!j.is_object()) return false;
  if (j.contains("breakpoints")) return true;
  return j.contains("utilities") && j.at("utilities").is_array() &&
         !j.at("utilities").empty() && j.at("utilities").at(0).is_object();
}

}  // namespace fairdiv
