#ifndef LCVANISH_VANISH_HPP
#define LCVANISH_VANISH_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcvanish/frobstream.hpp"

namespace lcv {

/// A vanishing problem: does H^i_I(R) vanish for I = (f_1..f_s) reduced
/// mod p, with M presented as the i-th cohomology of the Koszul cocomplex.
struct Instance {
    Ring ring;
    int s = 0;
    int degree = 0;  // cohomological degree i
    std::vector<IntPoly> f_int;
    std::vector<Poly> fbar;
    KoszulComplex base;
    PresentedModule module;
    std::vector<Poly> subset_products;  // prod of fbar over each i-subset
    std::vector<std::string> warnings;

    bool trivially_vanishing() const { return module.is_zero; }
};

Instance build_instance(const std::vector<IntPoly>& f, int n, u64 p, int i,
                        Order order = Order::grevlex);

enum class BoundSource { user, finite_length, empirical };

struct BoundSpec {
    BoundSource source = BoundSource::finite_length;
    u64 user_u = 0;
};

enum class ResultKind { VANISHES, NONVANISHING, INCONCLUSIVE };

std::string to_string(ResultKind r);
std::string to_string(BoundSource s);

struct Witness {
    int j = 0;
    ExpVec offset;
    int gen_index = 0;  // 0-based index into module.gens
};

enum class Mode { streaming, baseline, compare };

std::string to_string(Mode m);

struct Verdict {
    ResultKind result = ResultKind::INCONCLUSIVE;
    std::optional<Witness> witness;
    std::optional<int> r;   // baseline stabilization index, when computed
    std::optional<u64> u;   // bound used by the streamed path
    BoundSource bound_source = BoundSource::finite_length;
    Mode mode = Mode::streaming;
    bool u_is_per_p = false;  // empirical bound: valid for this prime only
    StreamCounters counters;
    u64 cobound_gb_size = 0;
    std::string reason;  // populated for INCONCLUSIVE
};

/// The streamed beta_j = 0 test: enumerates tuples (i_1..i_n, t)
/// lexicographically, evaluates alpha_j via the gamma stream and tests
/// coboundary membership; stops at the first nonzero tuple.
bool beta_j_is_zero_streamed(const Instance& inst, int j,
                             StreamCounters& counters,
                             std::optional<Witness>& witness);

struct KernelChain {
    bool stabilized = false;
    int r = 0;  // first j >= 1 with ker beta_j = ker beta_{j+1}
    std::vector<std::vector<FreeElem>> kernels;  // ambient-level gens per j
};

/// The classical kernel-chain algorithm: compute ker beta_j for j = 1,2,..
/// until two consecutive kernels agree.
KernelChain baseline_kernel_chain(const Instance& inst, int max_steps);

/// Resolves the stabilization bound u from the requested source. Throws
/// std::runtime_error when finite_length is requested on a module of
/// infinite length or the empirical budget is exhausted.
u64 resolve_bound(const Instance& inst, const BoundSpec& spec, int max_steps = 4);

Verdict decide_vanishing(const Instance& inst, const BoundSpec& spec, Mode mode,
                         int max_steps = 4);

/// Recomputes the witnessed alpha value from scratch and re-tests
/// non-membership. Throws on a verdict without a valid witness.
bool recheck_witness(const Instance& inst, const Verdict& verdict);

/// Generators of ker d^i as an ambient submodule (used by the baseline
/// full-module comparison).
std::vector<FreeElem> cocycle_submodule(const Instance& inst);

}  // namespace lcv

#endif
