#pragma once

#include <utility>
#include <vector>

#include "hgs/hypergraph.hpp"
#include "hgs/types.hpp"

namespace hgs {

/// Weighted incidence matrix: a dense |V| x |E| matrix with B(v,e) > 0
/// iff vertex v lies in edge e and B(v,e) = 0 otherwise.
struct WeightedIncidence {
    Mat weights;

    static WeightedIncidence zeros(const Hypergraph& h);
    Real operator()(int v, int e) const { return weights(v, e); }
    void set(int v, int e, Real w) { weights(v, e) = w; }
};

/// Root data for f(x) = (m-4)x^4 - (m-1)x^3 - x + 1 on (0,1):
/// y is the unique root there and alpha = y^3 is the normalization
/// constant shared by the B_m^L(1) / B_m^L(2) certificates.
struct AlphaRoot {
    int m;
    Real y;
    Real alpha;
};

enum class VerdictKind {
    ConsistentlyNormal,  // rho == alpha^(-1/k)
    NormalNotConsistent, // normal, but some basis cycle product != 1
    StrictlySubnormal,   // rho <  alpha^(-1/k)
    Subnormal,           // rho <= alpha^(-1/k)
    Invalid,             // some sum exceeds 1 or some product falls short of alpha
};

enum class RhoRelation { Equal, LessEqual, Less, Unknown };

const char* to_string(VerdictKind kind);
const char* to_string(RhoRelation relation);

/// A violated or strict constraint backing a verdict.
struct Witness {
    enum class Kind { VertexSum, EdgeProduct, CycleProduct };
    Kind kind;
    int index = -1;  // vertex or edge index; -1 for cycles
    Real value = 0;  // the offending sum/product
    // For cycles: the walk v0 -e0- v1 -e1- ... -e(l-1)- v0.
    std::vector<int> cycle_vertices;
    std::vector<int> cycle_edges;
};

struct RhoBound {
    RhoRelation relation = RhoRelation::Unknown;
    Real value = 0;  // alpha^(-1/k)
};

struct CertificateVerdict {
    VerdictKind kind;
    Real alpha;
    RhoBound rho_bound;
    std::vector<Witness> witnesses;
};

/// Unique root of (m-4)x^4 - (m-1)x^3 - x + 1 in (0,1) by bisection;
/// the bracket [1e-9, 1-1e-9] is guaranteed since f(0) = 1 and f(1) = -3.
AlphaRoot solve_bl1_alpha(int m);

/// Roots for every m in [m_lo, m_hi]; y(m) is strictly decreasing.
std::vector<AlphaRoot> root_monotonicity_scan(int m_lo, int m_hi);

/// The closed-form certificate that witnesses rho(B_m^L(1)) = alpha^(-1/k):
/// pendant vertices weigh 1, B(u1,e_i) = alpha on the pendant edges and
/// alpha/(1-y) on the three cycle edges, B(u_i, e_(m-4+i-1)) = 1-y and
/// B(u_i, e_m) = y for i = 2,3,4.
std::pair<WeightedIncidence, Real> build_bl1_certificate(int k, int m);

/// The subnormal certificate for B_m^L(2); the table splits at m = 5 vs
/// m >= 6. For m != 6 one edge product strictly exceeds alpha; for m = 6
/// the matrix is normal but not consistent.
std::pair<WeightedIncidence, Real> build_bl2_certificate(int k, int m);

/// Classifies B against the alpha-normal / alpha-subnormal conditions:
///   (i)  sum over e containing v of B(v,e) vs 1, per vertex
///   (ii) product over v in e of B(v,e) vs alpha, per edge
/// Equalities within tol give a normal matrix, refined by the consistency
/// check; one-sided slack gives (strictly) subnormal; anything else is
/// invalid. The verdict carries the implied bound on rho.
CertificateVerdict check_alpha_normal(const Hypergraph& h, const WeightedIncidence& b,
                                      Real alpha, Real tol = 1e-9);

/// Checks the cycle condition prod B(v_i,e_i)/B(v_(i-1),e_i) = 1 on a
/// fundamental cycle basis of the bipartite incidence graph (equivalent
/// to all cycles, since products compose multiplicatively over the cycle
/// space). Returns the violating basis cycles as witnesses.
std::pair<bool, std::vector<Witness>> check_consistent(const Hypergraph& h,
                                                       const WeightedIncidence& b,
                                                       Real tol = 1e-9);

/// Product along the closed walk v0 -e0- v1 -e1- ... -e(l-1)- v0, i.e.
/// prod_i B(v_(i+1 mod l), e_i) / B(v_i, e_i).
Real cycle_product(const WeightedIncidence& b, const std::vector<int>& vertices,
                   const std::vector<int>& edges);

}  // namespace hgs
