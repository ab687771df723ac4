#pragma once

#include <string>

#include "ribbon/poly.hpp"

namespace ribbon {

// Values of p, q, hbar used when multiplying in the Hecke algebra or applying
// ribbon operators.  Symbolic by default; entries may be constants or
// polynomials in y.
struct HeckeParams {
  MultiPoly p, q, hbar;

  static HeckeParams symbolic(VarUniverse u) {
    return {MultiPoly::var(u, VarUniverse::P), MultiPoly::var(u, VarUniverse::Q),
            MultiPoly::var(u, VarUniverse::HBAR)};
  }
  static HeckeParams from_spec(VarUniverse u, const ParamSpec& s) {
    HeckeParams h = symbolic(u);
    if (s.p) h.p = MultiPoly::constant(u, *s.p);
    if (s.q) h.q = MultiPoly::constant(u, *s.q);
    if (s.hbar) h.hbar = MultiPoly::constant(u, *s.hbar);
    return h;
  }
  static HeckeParams parse(VarUniverse u, const std::string& p, const std::string& q,
                           const std::string& hbar) {
    return {MultiPoly::parse(u, p), MultiPoly::parse(u, q), MultiPoly::parse(u, hbar)};
  }

  MultiPoly p_minus_q() const { return p - q; }
  MultiPoly pq() const { return p * q; }

  // Substitution sending the symbols p, q, hbar to these values.
  Substitution substitution(VarUniverse u) const {
    Substitution s;
    s.value.resize(u.size());
    s.value[VarUniverse::P] = p;
    s.value[VarUniverse::Q] = q;
    s.value[VarUniverse::HBAR] = hbar;
    return s;
  }
};

}  // namespace ribbon
