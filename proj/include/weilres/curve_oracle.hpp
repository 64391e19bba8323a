/* Copyright (C) 2026 The weilres authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may
 * not use this file except in compliance with the License. You may obtain
 * a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef WEILRES_CURVE_ORACLE_HPP
#define WEILRES_CURVE_ORACLE_HPP

#include "weilres/restriction.hpp"

namespace weilres {

inline constexpr long kPointCountPrimeCap = 50000;
inline constexpr int kOracleExtensionCap = 12;

// y^2 = x^3 + a4 x + a6 over F_p, p >= 5.
struct EllipticCurveParams {
  Int p;
  Int a4;
  Int a6;
  EllipticCurveParams(const Int& p_in, const Int& a4_in, const Int& a6_in);
};

struct PointCount {
  Int count;  // #E(F_p) including the point at infinity
  Int trace;  // t = p + 1 - count
};

// Exhaustive count with a quadratic-residue table.
PointCount count_points(const EllipticCurveParams& E);

// T^2 - s_n T + p^n with s_0 = 2, s_1 = t, s_{m+1} = t s_m - p s_{m-1}:
// the Frobenius characteristic polynomial of E base-changed to F_{p^n}.
Poly frobenius_power_charpoly(const Int& t, const Int& p, int n);

// Minimal polynomial of pi^n over q = p^n plus the Brauer order of its
// class (the supersingular even-step case collapses to a linear minpoly).
struct BaseChange {
  Poly minpoly;
  int m_A;
};
BaseChange base_change_class(const Int& t, const Int& p, int n);

// Ground-truth decomposition of Res_{F_p}^{F_{p^n}}(E x F_{p^n}) read from
// factoring chi(T^n) and applying Honda-Tate to each factor.
Decomposition oracle_decompose(const EllipticCurveParams& E, int n);
Decomposition oracle_decompose_from_trace(const Int& t, const Int& p, int n);

}  // namespace weilres

#endif  // WEILRES_CURVE_ORACLE_HPP
