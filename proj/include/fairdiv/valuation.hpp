#pragma once

#include <functional>
#include <vector>

#include "fairdiv/value.hpp"

namespace fairdiv {

// Bundle of good indices, kept sorted ascending.
using Bundle = std::vector<int>;

Bundle sorted_bundle(Bundle b);

// Additive set function given by per-good values; f(S) = sum over S.
class AdditiveValuation {
 public:
  AdditiveValuation() = default;
  explicit AdditiveValuation(std::vector<Value> per_good);

  int num_goods() const { return static_cast<int>(values_.size()); }
  const Value& of(int good) const;
  Value of_bundle(const Bundle& bundle) const;
  const std::vector<Value>& per_good() const { return values_; }

 private:
  std::vector<Value> values_;
};

enum class ValuationKind { Additive, BudgetAdditive, GenericMonotone };

// Monotone set-function oracle. Additive and budget-additive
// (f(S) = min(cap, sum)) have built-in constructors; anything else is a
// user-supplied oracle tagged GenericMonotone.
class MonotoneValuation {
 public:
  MonotoneValuation() = default;

  static MonotoneValuation additive(std::vector<Value> per_good);
  static MonotoneValuation budget_additive(std::vector<Value> per_good, Value cap);
  static MonotoneValuation generic(int num_goods, std::function<Value(const Bundle&)> oracle);

  ValuationKind kind() const { return kind_; }
  bool is_additive() const { return kind_ == ValuationKind::Additive; }
  int num_goods() const { return num_goods_; }

  Value of(const Bundle& bundle) const;
  Value of_singleton(int good) const;
  // f(S + g) - f(S); g must not be in S.
  Value marginal(const Bundle& bundle, int good) const;

  // Only valid for Additive / BudgetAdditive.
  const std::vector<Value>& per_good() const;
  const Value& cap() const;

  AdditiveValuation as_additive() const;

 private:
  ValuationKind kind_ = ValuationKind::Additive;
  int num_goods_ = 0;
  std::vector<Value> values_;
  Value cap_;
  std::function<Value(const Bundle&)> oracle_;
};

}  // namespace fairdiv
