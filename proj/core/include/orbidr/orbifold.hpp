// Copyright 2026 The OrbiDR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "orbidr/rational.hpp"

namespace orbidr {

// The target is the cyclic gerbe B Z_m. Twisted sectors are elements of Z_m,
// the conjugation inverse is negation, and a line bundle on the target is a
// character g -> e^{2 pi i g s / m}.

/// Character of Z_m with exponent s, the datum of a line bundle on B Z_m.
struct BundleRep {
  int m = 1;  // order of the cyclic group, >= 1
  int s = 0;  // character exponent, 0 <= s < m

  BundleRep() = default;
  BundleRep(int m_, int s_) : m(m_), s(((s_ % m_) + m_) % m_) {
    if (m_ < 1) throw Error("BundleRep: m must be >= 1");
  }

  /// Character of the dual line bundle: exponent (-s) mod m.
  BundleRep dual() const { return BundleRep(m, (m - s) % m); }

  friend bool operator==(const BundleRep& a, const BundleRep& b) {
    return a.m == b.m && a.s == b.s;
  }
};

/// Twisted sector of B Z_m: an element of Z_m.
struct Sector {
  int g = 0;  // 0 <= g < m under the governing BundleRep

  Sector() = default;
  explicit Sector(int g_) : g(g_) {}

  friend bool operator==(const Sector& a, const Sector& b) { return a.g == b.g; }
};

inline Sector normalize_sector(int g, int m) { return Sector(((g % m) + m) % m); }
inline Sector inverse_sector(const Sector& s, int m) { return Sector((m - s.g % m) % m); }

/// Age of the sector on the line bundle: frac(g*s/m) in [0, 1).
inline Rational age(const BundleRep& rep, const Sector& sec) {
  if (sec.g < 0 || sec.g >= rep.m) throw Error("age: sector out of range");
  return Rational(static_cast<long>(sec.g) * rep.s, rep.m).frac();
}

/// True iff frac(a) equals the age of the sector, i.e. a is a valid lift
/// exponent for this sector.
inline bool admissible(const BundleRep& rep, const Sector& sec, const Rational& a) {
  return a.frac() == age(rep, sec);
}

/// A sector of the r-th root gerbe presented as (base sector, lift exponent a).
/// Two lifts are the same sector iff the bases agree and [a]_r = [b]_r.
struct LiftedSector {
  Sector base;
  Rational a;
  long r = 1;

  /// Age on the r-th root bundle: [a]_r / r.
  Rational lifted_age() const { return rational_mod(a, r) / Rational(r); }

  friend bool operator==(const LiftedSector& x, const LiftedSector& y) {
    return x.base == y.base && x.r == y.r && rational_mod(x.a, x.r) == rational_mod(y.a, y.r);
  }
};

inline LiftedSector lift(const BundleRep& rep, const Sector& sec, const Rational& a, long r) {
  if (r < 1) throw Error("lift: r must be >= 1");
  if (!admissible(rep, sec, a))
    throw NotAdmissible("lift: frac(" + a.str() + ") != age of sector " +
                        std::to_string(sec.g) + " for (m=" + std::to_string(rep.m) +
                        ", s=" + std::to_string(rep.s) + ")");
  return LiftedSector{sec, a, r};
}

/// Fixed weight of a leg carrying the lift a: the integer part of [a]_r,
/// in {0, ..., r-1}. The fractional part is carried by the age.
inline long leg_weight(const BundleRep& rep, const Sector& sec, const Rational& a, long r) {
  if (!admissible(rep, sec, a))
    throw NotAdmissible("leg_weight: inadmissible lift " + a.str());
  mpz_class f = rational_mod(a, r).floor();
  return f.get_si();
}

}  // namespace orbidr
