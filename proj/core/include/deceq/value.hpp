#pragma once

#include <string>
#include <variant>
#include <vector>

namespace deceq {

// A point of a finite carrier: unit, a base atom (index into its carrier),
// a pair, or a tagged summand.
class Value {
 public:
  enum class Tag : unsigned char { Unit, Atom, Pair, Left, Right };

  Value() = default;  // unit
  static Value unit() { return Value(); }
  static Value atom(int index);
  static Value pair(Value first, Value second);
  static Value left(Value v);
  static Value right(Value v);

  Tag tag() const { return tag_; }
  int atom_index() const { return atom_; }
  const Value& first() const { return kids_.at(0); }
  const Value& second() const { return kids_.at(1); }
  const Value& payload() const { return kids_.at(0); }  // Left/Right

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Tag tag_ = Tag::Unit;
  int atom_ = 0;
  std::vector<Value> kids_;
};

// An exception in flight: index into the model's exception names plus the
// parameter. Index kFuelExhausted marks a loop that ran out of fuel; it is
// never caught and never enumerated as an input.
struct Raised {
  static constexpr int kFuelExhausted = -1;
  int exception = 0;
  Value param;
  bool fuel_exhausted() const { return exception == kFuelExhausted; }
  friend bool operator==(const Raised&, const Raised&) = default;
};

// Ordinary or exceptional value part of an outcome.
using Result = std::variant<Value, Raised>;

inline bool is_ordinary(const Result& r) { return r.index() == 0; }
inline const Value& ordinary(const Result& r) { return std::get<Value>(r); }
inline const Raised& raised(const Result& r) { return std::get<Raised>(r); }

// One atom index per location, in declaration order.
using State = std::vector<int>;

struct Outcome {
  Result result;
  State state;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

}  // namespace deceq
