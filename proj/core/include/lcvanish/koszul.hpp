#ifndef LCVANISH_KOSZUL_HPP
#define LCVANISH_KOSZUL_HPP

#include <vector>

#include "lcvanish/freemod.hpp"

namespace lcv {

/// Strictly increasing 0-based index tuple; a cardinality-t subset of
/// {0,..,s-1}. Ranks follow the colex enumeration of t-subsets.
using SubsetIndex = std::vector<int>;

/// All t-subsets of {0..s-1} in colex order.
std::vector<SubsetIndex> subsets_colex(int s, int t);
/// Colex rank of a t-subset: sum of C(v_k, k+1).
u32 subset_rank(const SubsetIndex& sub);

/// The Koszul cocomplex K^*(R; g_1^q,..,g_s^q):
///   0 -> K^0 -> K^1 -> ... -> K^s -> 0,  rank K^t = C(s,t),
/// with the twisted differential
///   d^t(kappa)_{v_1..v_{t+1}} = sum_l (-1)^l g_{v_l}^q kappa_{v_1..^v_l..v_{t+1}}.
struct KoszulComplex {
    int s = 0;
    u64 q = 1;                  // prime-power level of the generators
    std::vector<Poly> gens;     // g_i^q, already raised
    std::vector<std::vector<SubsetIndex>> subsets;  // subsets[t], colex order
    std::vector<PolyMatrix> diff;  // diff[t] : K^t -> K^{t+1}, t = 0..s-1

    u32 rank(int t) const { return static_cast<u32>(subsets[t].size()); }
};

/// Builds the complex over gens_i^q and verifies d.d = 0.
KoszulComplex build_koszul(const Ring& R, const std::vector<Poly>& gens, u64 q);

/// Cocycle representative in K^i: d^i(element) = 0.
struct CocycleRep {
    int degree;
    FreeElem element;
};

/// Presentation of the i-th cohomology of a Koszul complex.
struct PresentedModule {
    int degree = 0;
    u32 rank = 0;                    // ambient rank C(s,i)
    std::vector<CocycleRep> gens;    // kernel generators that are not coboundaries
    std::vector<FreeElem> cocycle_gens;  // full generating set of ker d^i
    ModuleGB cobound_gb;             // GB of im d^{i-1}
    bool is_zero = false;            // every kernel generator is a coboundary
};

PresentedModule cohomology_presentation(const Ring& R, const KoszulComplex& K,
                                        int i);

/// The chain map from level q to level q*p^j: diagonal, multiplying the
/// subset-(v_1..v_t) component by (g_{v_1}...g_{v_t})^{p^j-1} where the g's
/// are the complex's (already level-q) generators.
struct ChainMapLevel {
    int j = 1;
    u64 source_q = 1, target_q = 1;
    std::vector<std::vector<Poly>> mult;  // mult[t][subset rank]
};

/// Builds beta_j out of K_base and verifies commutation with the
/// differentials of source and target complexes.
ChainMapLevel beta_chain_map(const Ring& R, const KoszulComplex& K_base, int j);

FreeElem apply_chain_map(const Ring& R, const ChainMapLevel& cm, int degree,
                         const FreeElem& v);

}  // namespace lcv

#endif
