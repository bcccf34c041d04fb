#ifndef LCVANISH_FREEMOD_HPP
#define LCVANISH_FREEMOD_HPP

#include <optional>
#include <vector>

#include "lcvanish/poly.hpp"

namespace lcv {

/// Element of a finite free module R^rank: sparse component -> Poly map,
/// components ascending, no zero components stored.
///
/// The module order is position-over-term: a term in a lower-indexed
/// component is larger, ties broken by the ring's monomial order. The
/// leading term of a nonzero element is therefore comps.front().
struct FreeElem {
    std::vector<std::pair<u32, Poly>> comps;

    bool is_zero() const { return comps.empty(); }
};

FreeElem fe_from(u32 comp, Poly f);
FreeElem fe_unit(const Ring& R, u32 comp);
const Poly* fe_component(const FreeElem& v, u32 comp);

FreeElem fe_add(const Ring& R, const FreeElem& a, const FreeElem& b);
FreeElem fe_sub(const Ring& R, const FreeElem& a, const FreeElem& b);
FreeElem fe_neg(const Ring& R, const FreeElem& a);
FreeElem fe_scale(const Ring& R, const FreeElem& a, u64 c);
FreeElem fe_mul_term(const Ring& R, const FreeElem& a, const ExpVec& e, u64 c);
FreeElem fe_mul(const Ring& R, const FreeElem& a, const Poly& f);
bool fe_equal(const FreeElem& a, const FreeElem& b);
/// Shift every component index up by `offset`.
FreeElem fe_shift(const FreeElem& a, u32 offset);
u64 fe_term_count(const FreeElem& a);

/// Sparse matrix of polynomials, stored by columns (each column is a
/// FreeElem of rank `rows`); represents a map R^cols -> R^rows.
struct PolyMatrix {
    u32 rows = 0;
    std::vector<FreeElem> cols;

    u32 col_count() const { return static_cast<u32>(cols.size()); }
};

FreeElem mat_apply(const Ring& R, const PolyMatrix& m, const FreeElem& v);

/// Reduced Groebner basis of a submodule of R^rank under the
/// position-over-term order. Deterministic for a given generator list.
struct ModuleGB {
    u32 rank = 0;
    std::vector<FreeElem> basis;  // monic, interreduced, sorted by leading term
};

ModuleGB buchberger(const Ring& R, const std::vector<FreeElem>& gens, u32 rank);

FreeElem normal_form(const Ring& R, const FreeElem& v, const ModuleGB& gb);
bool is_member(const Ring& R, const FreeElem& v, const ModuleGB& gb);

/// Generating set of ker(m) in R^cols, via an elimination-order syzygy
/// computation on the augmented module.
std::vector<FreeElem> kernel_gens(const Ring& R, const PolyMatrix& m);

/// Generating set of { v in R^cols : m.v in <target_sub> }.
std::vector<FreeElem> preimage_kernel(const Ring& R, const PolyMatrix& m,
                                      const ModuleGB& target_sub);

bool submodule_equal(const Ring& R, u32 rank, const std::vector<FreeElem>& a,
                     const std::vector<FreeElem>& b);

/// Vector-space dimension of R^rank / <gb>; nullopt when infinite.
std::optional<u64> quotient_dim(const Ring& R, u32 rank, const ModuleGB& gb);

}  // namespace lcv

#endif
