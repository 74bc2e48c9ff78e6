#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deceq/types.hpp"
#include "deceq/value.hpp"

namespace deceq {

// Explicit finite sets: base carriers, a state space S (product of the
// location carriers) and an exception space E (disjoint union of the
// exception parameter carriers).
//
// Text format, one declaration per line, '#' comments:
//
//   type V = {0,1}
//   location x : V
//   exception e : V
//
// Types must be declared before use. Names are [A-Za-z0-9_]+.
class FiniteModel {
 public:
  struct Carrier {
    std::string name;
    std::vector<std::string> atoms;
  };
  struct Slot {
    std::string name;
    std::string type;
  };

  void add_type(std::string name, std::vector<std::string> atoms);
  void add_location(std::string name, std::string type);   // DuplicateLocation
  void add_exception(std::string name, std::string type);  // DuplicateLocation

  const std::vector<Carrier>& carriers() const { return carriers_; }
  const std::vector<Slot>& locations() const { return locations_; }
  const std::vector<Slot>& exceptions() const { return exceptions_; }

  const Carrier& carrier(std::string_view type) const;  // UnknownBaseType
  int carrier_size(std::string_view type) const { return static_cast<int>(carrier(type).atoms.size()); }
  int atom_index(std::string_view type, std::string_view atom) const;  // CarrierMismatch
  int location_index(std::string_view name) const;   // -1 when absent
  int exception_index(std::string_view name) const;  // -1 when absent

  // Declared carrier order; products left-major; sums left then right;
  // unit = [()], empty = [].
  std::vector<Value> enumerate_points(const ObjType& t) const;
  // Lexicographic, first location most significant.
  std::vector<State> states() const;
  // Exception declaration order, then parameter carrier order.
  std::vector<Raised> exception_space() const;

  bool contains(const ObjType& t, const Value& v) const;

  std::string format_value(const Value& v, const ObjType& t) const;
  std::string format_raised(const Raised& r) const;
  std::string format_result(const Result& r, const ObjType& t) const;
  // "x=0,y=1"; empty string for a stateless model.
  std::string format_state(const State& s) const;

  std::string str() const;  // the text format

 private:
  std::vector<Carrier> carriers_;
  std::vector<Slot> locations_;
  std::vector<Slot> exceptions_;
};

FiniteModel parse_model(std::string_view text);
FiniteModel load_model(const std::string& path);

// Convenience for tests and benches: a model with one shared carrier.
FiniteModel make_model(const std::vector<std::pair<std::string, std::vector<std::string>>>& types,
                       const std::vector<std::pair<std::string, std::string>>& locations,
                       const std::vector<std::pair<std::string, std::string>>& exceptions = {});

std::string read_file(const std::string& path);  // InvalidArgument on failure

}  // namespace deceq
