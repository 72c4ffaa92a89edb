#include "fairdiv/valuation.hpp"

#include <algorithm>

namespace fairdiv {

Bundle sorted_bundle(Bundle b) {
  std::sort(b.begin(), b.end());
  return b;
}

AdditiveValuation::AdditiveValuation(std::vector<Value> per_good)
    : values_(std::move(per_good)) {}

const Value& AdditiveValuation::of(int good) const {
  if (good < 0 || good >= num_goods()) throw Error("good index out of range");
  return values_[static_cast<std::size_t>(good)];
}

Value AdditiveValuation::of_bundle(const Bundle& bundle) const {
  Value sum = 0;
  for (int g : bundle) sum += of(g);
  return sum;
}

MonotoneValuation MonotoneValuation::additive(std::vector<Value> per_good) {
  MonotoneValuation v;
  v.kind_ = ValuationKind::Additive;
  v.num_goods_ = static_cast<int>(per_good.size());
  v.values_ = std::move(per_good);
  return v;
}

MonotoneValuation MonotoneValuation::budget_additive(std::vector<Value> per_good, Value cap) {
  MonotoneValuation v;
  v.kind_ = ValuationKind::BudgetAdditive;
  v.num_goods_ = static_cast<int>(per_good.size());
  v.values_ = std::move(per_good);
  v.cap_ = std::move(cap);
  return v;
}

MonotoneValuation MonotoneValuation::generic(int num_goods,
                                             std::function<Value(const Bundle&)> oracle) {
  MonotoneValuation v;
  v.kind_ = ValuationKind::GenericMonotone;
  v.num_goods_ = num_goods;
  v.oracle_ = std::move(oracle);
  return v;
}

Value MonotoneValuation::of(const Bundle& bundle) const {
  for (int g : bundle)
    if (g < 0 || g >= num_goods_) throw Error("good index out of range");
  switch (kind_) {
    case ValuationKind::Additive: {
      Value sum = 0;
      for (int g : bundle) sum += values_[static_cast<std::size_t>(g)];
      return sum;
    }
    case ValuationKind::BudgetAdditive: {
      Value sum = 0;
      for (int g : bundle) sum += values_[static_cast<std::size_t>(g)];
      return std::min(sum, cap_);
    }
    case ValuationKind::GenericMonotone:
      return oracle_(bundle);
  }
  throw Error("unreachable");
}

Value MonotoneValuation::of_singleton(int good) const { return of(Bundle{good}); }

Value MonotoneValuation::marginal(const Bundle& bundle, int good) const {
  Bundle with = bundle;
  with.insert(std::lower_bound(with.begin(), with.end(), good), good);
  return of(with) - of(bundle);
}

const std::vector<Value>& MonotoneValuation::per_good() const {
  if (kind_ == ValuationKind::GenericMonotone)
    throw Error("per-good values undefined for a generic monotone oracle");
  return values_;
}

const Value& MonotoneValuation::cap() const {
  if (kind_ != ValuationKind::BudgetAdditive) throw Error("valuation has no cap");
  return cap_;
}

AdditiveValuation MonotoneValuation::as_additive() const {
  if (kind_ != ValuationKind::Additive)
    throw Error("operation requires an additive valuation");
  return AdditiveValuation(values_);
}

}  // namespace fairdiv
