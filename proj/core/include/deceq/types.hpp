#pragma once

#include <memory>
#include <ostream>
#include <string>

namespace deceq {

// Object types of the calculus: 1, 0, named base types, products and sums.
// Immutable and cheap to copy (shared structure).
class ObjType {
 public:
  enum class Kind { Unit, Empty, Base, Prod, Sum };

  ObjType();  // Unit

  static ObjType unit();
  static ObjType empty();
  static ObjType base(std::string name);
  static ObjType prod(ObjType left, ObjType right);
  static ObjType sum(ObjType left, ObjType right);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const;  // Base only
  const ObjType& left() const;      // Prod/Sum only
  const ObjType& right() const;     // Prod/Sum only

  // Swaps 1 <-> 0 and products <-> sums, leaving base types alone.
  ObjType dual() const;

  friend bool operator==(const ObjType& a, const ObjType& b);
  friend bool operator!=(const ObjType& a, const ObjType& b) { return !(a == b); }

  // Canonical text: unit, empty, V, prod(A,B), sum(A,B).
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const ObjType> left, right;
  };
  explicit ObjType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const ObjType& t);

}  // namespace deceq
