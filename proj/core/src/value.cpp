#include "deceq/value.hpp"

namespace deceq {

Value Value::atom(int index) {
  Value v;
  v.tag_ = Tag::Atom;
  v.atom_ = index;
  return v;
}

Value Value::pair(Value first, Value second) {
  Value v;
  v.tag_ = Tag::Pair;
  v.kids_.reserve(2);
  v.kids_.push_back(std::move(first));
  v.kids_.push_back(std::move(second));
  return v;
}

Value Value::left(Value inner) {
  Value v;
  v.tag_ = Tag::Left;
  v.kids_.push_back(std::move(inner));
  return v;
}

Value Value::right(Value inner) {
  Value v;
  v.tag_ = Tag::Right;
  v.kids_.push_back(std::move(inner));
  return v;
}

}  // namespace deceq
