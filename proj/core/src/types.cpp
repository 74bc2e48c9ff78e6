#include "deceq/types.hpp"

#include "deceq/error.hpp"

namespace deceq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::IllFormedPair: return "IllFormedPair";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::MissingInterpretation: return "MissingInterpretation";
    case ErrorKind::UnknownBaseType: return "UnknownBaseType";
    case ErrorKind::DuplicateLocation: return "DuplicateLocation";
    case ErrorKind::WrongFlavor: return "WrongFlavor";
    case ErrorKind::NameClash: return "NameClash";
    case ErrorKind::NotDualizable: return "NotDualizable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredLocation: return "UndeclaredLocation";
    case ErrorKind::UndeclaredException: return "UndeclaredException";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

ObjType::ObjType() : ObjType(unit()) {}

ObjType ObjType::unit() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Unit, {}, nullptr, nullptr});
  return ObjType(n);
}

ObjType ObjType::empty() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Empty, {}, nullptr, nullptr});
  return ObjType(n);
}

ObjType ObjType::base(std::string name) {
  return ObjType(std::make_shared<const Node>(Node{Kind::Base, std::move(name), nullptr, nullptr}));
}

ObjType ObjType::prod(ObjType left, ObjType right) {
  return ObjType(std::make_shared<const Node>(
      Node{Kind::Prod, {}, std::make_shared<const ObjType>(std::move(left)),
           std::make_shared<const ObjType>(std::move(right))}));
}

ObjType ObjType::sum(ObjType left, ObjType right) {
  return ObjType(std::make_shared<const Node>(
      Node{Kind::Sum, {}, std::make_shared<const ObjType>(std::move(left)),
           std::make_shared<const ObjType>(std::move(right))}));
}

const std::string& ObjType::name() const {
  if (node_->kind != Kind::Base) throw Error(ErrorKind::InvalidArgument, "name() on non-base type " + str());
  return node_->name;
}

const ObjType& ObjType::left() const {
  if (!node_->left) throw Error(ErrorKind::InvalidArgument, "left() on " + str());
  return *node_->left;
}

const ObjType& ObjType::right() const {
  if (!node_->right) throw Error(ErrorKind::InvalidArgument, "right() on " + str());
  return *node_->right;
}

ObjType ObjType::dual() const {
  switch (kind()) {
    case Kind::Unit: return empty();
    case Kind::Empty: return unit();
    case Kind::Base: return *this;
    case Kind::Prod: return sum(left().dual(), right().dual());
    case Kind::Sum: return prod(left().dual(), right().dual());
  }
  return *this;
}

bool operator==(const ObjType& a, const ObjType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ObjType::Kind::Unit:
    case ObjType::Kind::Empty: return true;
    case ObjType::Kind::Base: return a.node_->name == b.node_->name;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

std::string ObjType::str() const {
  switch (kind()) {
    case Kind::Unit: return "unit";
    case Kind::Empty: return "empty";
    case Kind::Base: return node_->name;
    case Kind::Prod: return "prod(" + left().str() + ", " + right().str() + ")";
    case Kind::Sum: return "sum(" + left().str() + ", " + right().str() + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const ObjType& t) { return os << t.str(); }

}  // namespace deceq
