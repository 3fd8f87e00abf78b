#pragma once

#include "hgs/hypergraph.hpp"

namespace hgs {

// Generators for the three extremal linear bicyclic k-uniform families on
// m edges. All are deterministic: distinguished vertices come first in a
// fixed role order, filler pendant vertices are numbered in edge order.
// Every output is linear, connected and bicyclic with n = m(k-1) - 1.

/// Theta-shaped family B_m^P: vertices v,a,b,w with edges
///   e1 = {v, a1..a(k-2), a},  e2 = {v, b1..b(k-2), b},
///   f1 = {a, w, ...},         f2 = {b, w, ...},        g = {v, w, ...},
/// plus m-5 pendant edges at v. Edge roles: e1, e2, f1, f2, g, p1..p(m-5).
LabeledHypergraph gen_b_p(int k, int m);

/// Family B_m^L(1): pendant edges e1..e(m-4) at u1, cycle edges
///   e(m-3) = {u1,u2,...}, e(m-2) = {u1,u3,...}, e(m-1) = {u1,u4,...},
///   em = {u2,u3,u4} plus k-3 fillers.
LabeledHypergraph gen_b_l1(int k, int m);

/// Family B_m^L(2): pendant edges e1..e(m-4) at v1, cycle edges
///   e(m-3) = {v1,v4,...}, e(m-2) = {v2,v4,...}, e(m-1) = {v3,v4,...},
///   em = {v1,v2,v3} plus k-3 fillers.
LabeledHypergraph gen_b_l2(int k, int m);

/// The surgery turning B_m^P into B_m^L(2): remove e1 and e2, add
///   e1' = {v, a, b, a2..a(k-2)} and e2' = {v, a1, b1..b(k-2)}
/// (for k = 3 these degenerate to {v,a,b} and {v,a1,b1}).
EdgeSwap bp_to_bl2_swap(const LabeledHypergraph& bp);

}  // namespace hgs
