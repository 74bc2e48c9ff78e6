#include "deceq/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cursor.hpp"
#include "deceq/error.hpp"

namespace deceq {

namespace {

template <class Vec>
int find_by_name(const Vec& v, std::string_view name) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].name == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

void FiniteModel::add_type(std::string name, std::vector<std::string> atoms) {
  if (find_by_name(carriers_, name) >= 0)
    throw Error(ErrorKind::NameClash, "type " + name + " declared twice");
  std::set<std::string> distinct(atoms.begin(), atoms.end());
  if (distinct.size() != atoms.size())
    throw Error(ErrorKind::CarrierMismatch, "type " + name + " repeats an atom");
  if (name == "unit" || name == "empty" || name == "prod" || name == "sum")
    throw Error(ErrorKind::InvalidArgument, "reserved type name " + name);
  carriers_.push_back({std::move(name), std::move(atoms)});
}

void FiniteModel::add_location(std::string name, std::string type) {
  carrier(type);
  if (find_by_name(locations_, name) >= 0)
    throw Error(ErrorKind::DuplicateLocation, "location " + name + " declared twice");
  locations_.push_back({std::move(name), std::move(type)});
}

void FiniteModel::add_exception(std::string name, std::string type) {
  carrier(type);
  if (find_by_name(exceptions_, name) >= 0)
    throw Error(ErrorKind::DuplicateLocation, "exception " + name + " declared twice");
  exceptions_.push_back({std::move(name), std::move(type)});
}

const FiniteModel::Carrier& FiniteModel::carrier(std::string_view type) const {
  int i = find_by_name(carriers_, type);
  if (i < 0) throw Error(ErrorKind::UnknownBaseType, "undeclared type " + std::string(type));
  return carriers_[i];
}

int FiniteModel::atom_index(std::string_view type, std::string_view atom) const {
  const auto& atoms = carrier(type).atoms;
  auto it = std::find(atoms.begin(), atoms.end(), atom);
  if (it == atoms.end())
    throw Error(ErrorKind::CarrierMismatch,
                std::string(atom) + " is not an element of " + std::string(type));
  return static_cast<int>(it - atoms.begin());
}

int FiniteModel::location_index(std::string_view name) const { return find_by_name(locations_, name); }
int FiniteModel::exception_index(std::string_view name) const { return find_by_name(exceptions_, name); }

std::vector<Value> FiniteModel::enumerate_points(const ObjType& t) const {
  std::vector<Value> out;
  switch (t.kind()) {
    case ObjType::Kind::Unit: out.push_back(Value::unit()); break;
    case ObjType::Kind::Empty: break;
    case ObjType::Kind::Base: {
      int n = carrier_size(t.name());
      for (int i = 0; i < n; ++i) out.push_back(Value::atom(i));
      break;
    }
    case ObjType::Kind::Prod: {
      auto ls = enumerate_points(t.left());
      auto rs = enumerate_points(t.right());
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(Value::pair(l, r));
      break;
    }
    case ObjType::Kind::Sum: {
      for (auto& l : enumerate_points(t.left())) out.push_back(Value::left(std::move(l)));
      for (auto& r : enumerate_points(t.right())) out.push_back(Value::right(std::move(r)));
      break;
    }
  }
  return out;
}

std::vector<State> FiniteModel::states() const {
  std::vector<State> out;
  State cur(locations_.size(), 0);
  std::vector<int> sizes;
  for (const auto& l : locations_) sizes.push_back(carrier_size(l.type));
  if (std::any_of(sizes.begin(), sizes.end(), [](int n) { return n == 0; })) return out;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0 && ++cur[i] == sizes[i]) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<Raised> FiniteModel::exception_space() const {
  std::vector<Raised> out;
  for (std::size_t e = 0; e < exceptions_.size(); ++e) {
    int n = carrier_size(exceptions_[e].type);
    for (int i = 0; i < n; ++i) out.push_back(Raised{static_cast<int>(e), Value::atom(i)});
  }
  return out;
}

bool FiniteModel::contains(const ObjType& t, const Value& v) const {
  switch (t.kind()) {
    case ObjType::Kind::Unit: return v.tag() == Value::Tag::Unit;
    case ObjType::Kind::Empty: return false;
    case ObjType::Kind::Base:
      return v.tag() == Value::Tag::Atom && v.atom_index() >= 0 &&
             v.atom_index() < carrier_size(t.name());
    case ObjType::Kind::Prod:
      return v.tag() == Value::Tag::Pair && contains(t.left(), v.first()) &&
             contains(t.right(), v.second());
    case ObjType::Kind::Sum:
      if (v.tag() == Value::Tag::Left) return contains(t.left(), v.payload());
      if (v.tag() == Value::Tag::Right) return contains(t.right(), v.payload());
      return false;
  }
  return false;
}

std::string FiniteModel::format_value(const Value& v, const ObjType& t) const {
  switch (v.tag()) {
    case Value::Tag::Unit: return "()";
    case Value::Tag::Atom:
      if (t.is(ObjType::Kind::Base)) {
        const auto& atoms = carrier(t.name()).atoms;
        if (v.atom_index() >= 0 && v.atom_index() < static_cast<int>(atoms.size()))
          return atoms[v.atom_index()];
      }
      return "#" + std::to_string(v.atom_index());
    case Value::Tag::Pair:
      if (t.is(ObjType::Kind::Prod))
        return "(" + format_value(v.first(), t.left()) + "," + format_value(v.second(), t.right()) + ")";
      return "(?)";
    case Value::Tag::Left:
      return "inl " + format_value(v.payload(), t.is(ObjType::Kind::Sum) ? t.left() : t);
    case Value::Tag::Right:
      return "inr " + format_value(v.payload(), t.is(ObjType::Kind::Sum) ? t.right() : t);
  }
  return "?";
}

std::string FiniteModel::format_raised(const Raised& r) const {
  if (r.fuel_exhausted()) return "fuel-exhausted";
  const auto& ex = exceptions_.at(r.exception);
  return ex.name + "(" + format_value(r.param, ObjType::base(ex.type)) + ")";
}

std::string FiniteModel::format_result(const Result& r, const ObjType& t) const {
  return is_ordinary(r) ? format_value(ordinary(r), t) : format_raised(raised(r));
}

std::string FiniteModel::format_state(const State& s) const {
  std::string out;
  for (std::size_t i = 0; i < locations_.size() && i < s.size(); ++i) {
    if (i) out += ",";
    out += locations_[i].name + "=" + carrier(locations_[i].type).atoms.at(s[i]);
  }
  return out;
}

std::string FiniteModel::str() const {
  std::ostringstream os;
  for (const auto& c : carriers_) {
    os << "type " << c.name << " = {";
    for (std::size_t i = 0; i < c.atoms.size(); ++i) os << (i ? "," : "") << c.atoms[i];
    os << "}\n";
  }
  for (const auto& l : locations_) os << "location " << l.name << " : " << l.type << "\n";
  for (const auto& e : exceptions_) os << "exception " << e.name << " : " << e.type << "\n";
  return os.str();
}

FiniteModel parse_model(std::string_view src) {
  text::Cursor c(src);
  c.set_hash_comments(true);
  FiniteModel m;
  auto guarded = [&](auto&& fn) {
    int line = c.line();
    try {
      fn();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError) throw;
      throw Error(e.kind(), std::to_string(line) + ": " + e.what());
    }
  };
  while (!c.eof()) {
    if (c.accept_keyword("type")) {
      std::string name = c.word();
      c.expect('=');
      c.expect('{');
      std::vector<std::string> atoms;
      if (!c.accept('}')) {
        do atoms.push_back(c.word());
        while (c.accept(','));
        c.expect('}');
      }
      guarded([&] { m.add_type(name, atoms); });
    } else if (c.accept_keyword("location")) {
      std::string name = c.word();
      c.expect(':');
      std::string type = c.word();
      guarded([&] { m.add_location(name, type); });
    } else if (c.accept_keyword("exception")) {
      std::string name = c.word();
      c.expect(':');
      std::string type = c.word();
      guarded([&] { m.add_exception(name, type); });
    } else {
      c.fail("expected 'type', 'location' or 'exception'");
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteModel load_model(const std::string& path) { return parse_model(read_file(path)); }

FiniteModel make_model(const std::vector<std::pair<std::string, std::vector<std::string>>>& types,
                       const std::vector<std::pair<std::string, std::string>>& locations,
                       const std::vector<std::pair<std::string, std::string>>& exceptions) {
  FiniteModel m;
  for (const auto& [n, atoms] : types) m.add_type(n, atoms);
  for (const auto& [n, t] : locations) m.add_location(n, t);
  for (const auto& [n, t] : exceptions) m.add_exception(n, t);
  return m;
}

}  // namespace deceq
