#pragma once

#include "splinedim/splinecore.hpp"

namespace splinedim::deltastar {

using polyring::GradedSubspace;
using polyring::HPoly;

/// A verifier was handed a polynomial outside K(r).
struct NotInKError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Schenck-Stiller complex: rectangle [0,4]x[0,2] triangulated around the
/// interior vertices (1,1) and (3,1), with exactly one totally interior edge.
/// Construction cross-checks the derived edge forms against the known list
/// {x-y, x+y-4z, x-y-2z, x+y-2z, y-z} and fails loudly on mismatch.
const splinecore::Triangulation& delta_s();

std::string delta_s_document();

/// The five distinct interior edge lines of delta_s, in original coordinates:
/// l12, l23, l34, l67, l26 (l26 = y-z spans the non-pseudoedge).
struct DeltaSForms {
    HPoly l12, l23, l34, l67, l26;
};
const DeltaSForms& delta_s_forms();

struct KSpace {
    int r;
    GradedSubspace basis; ///< degree-r piece, canonical echelon basis in Q[x,y,z]
};

/// K(r) = ((<x^{r+1},(x+y)^{r+1}> intersect <z^{r+1},(z+y)^{r+1}>) : y^{r+1})_r,
/// computed in the changed coordinates where the non-pseudoedge form is y.
KSpace k_space(int r);

/// n when r = 2n-1, n+1 when r = 2n.
std::size_t expected_k_dim(int r);

/// alpha = floor((r+1)/2): the minimal generation degree of <C1,F1>.
int alpha(int r);

/// dim of the degree-r piece of
/// (<l12^{r+1}, l67^{r+1}> : l26^{r+1}) intersect (<l23^{r+1}, l34^{r+1}> : l26^{r+1}),
/// computed in the original coordinates.
std::size_t epsilon(int r);

struct CFGenerators {
    HPoly c1, f1;                ///< minimal generators of <x^{r+1},(x+y)^{r+1}> : y^{r+1} in Q[x,y]
    std::pair<int, int> degrees; ///< (n, n) when r+1 = 2n; (n, n+1) when r+1 = 2n+1
};

CFGenerators cf_generators(int r);

/// Every z-slice of F lies in <C1,F1>, every x-slice in <C2,F2>, and the
/// slices below degree alpha(r) vanish. Throws NotInKError when F is not in K(r).
bool verify_slicing(const HPoly& f);

/// The x<->z symmetric part of K(r) is all of K(r) (and the antisymmetric
/// part is zero).
bool verify_symmetry(int r);

/// y * d^2F/(dx dz) lands in K(r-1) for every basis element of K(r).
bool verify_derivative_map(int r);

/// The intersection ideal has no elements below degree r, so its minimal
/// generation starts in degree r with dim K(r) generators.
bool verify_min_degree(int r);

/// y^r lies in K(r).
bool y_power_in_k(int r);

/// y^j stays outside both colon ideals for every j <= r-1.
bool y_power_excluded(int r);

/// Monomial support bound: x- and z-exponents of K(r) elements stay <= r - alpha(r).
bool support_bound_holds(const KSpace& k);

/// dim_Q (R / <C1,F1,C2,F2>)_r = 0.
bool hf_quotient_zero(int r);

/// 2*r*alpha - 2*alpha^2 with alpha = floor((r+1)/2).
long long sigma_closed_form(int r);

} // namespace splinedim::deltastar
