#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

namespace deceq {

// 0 = pure, 1 = accessor / propagator, 2 = modifier / catcher.
enum class Decoration : std::uint8_t { Pure = 0, Ro = 1, Rw = 2 };

inline int level(Decoration d) { return static_cast<int>(d); }
inline Decoration decoration_from_level(int l) {
  return static_cast<Decoration>(std::clamp(l, 0, 2));
}
inline Decoration join(Decoration a, Decoration b) { return std::max(a, b); }

// A decoration on each effect axis. Theories with a single effect keep the
// other axis at Pure; the combined theory uses both.
struct Decorations {
  Decoration state = Decoration::Pure;
  Decoration exc = Decoration::Pure;

  static constexpr Decorations pure() { return {}; }

  // Component-wise order: upcasts are always allowed along it.
  bool leq(const Decorations& o) const { return state <= o.state && exc <= o.exc; }
  Decorations join(const Decorations& o) const {
    return {std::max(state, o.state), std::max(exc, o.exc)};
  }
  // Exchanges the axes; this is what the states/exceptions duality does to
  // decorations.
  Decorations swapped() const { return {exc, state}; }
  // Largest level over both axes; for a single-effect theory this is the
  // decoration in the one-axis calculus.
  Decoration max() const { return std::max(state, exc); }

  friend bool operator==(const Decorations&, const Decorations&) = default;
  std::string str() const;  // "(s,e)"
};

inline std::ostream& operator<<(std::ostream& os, const Decorations& d) {
  return os << d.str();
}

}  // namespace deceq

namespace deceq {

// Which effect a theory talks about; it also fixes what weak equality means.
enum class Flavor { States, Exceptions, Combined };

inline std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::States: return "states";
    case Flavor::Exceptions: return "exceptions";
    case Flavor::Combined: return "combined";
  }
  return "?";
}

}  // namespace deceq
