#include "lcvanish/vanish.hpp"

#include <stdexcept>

namespace lcv {

std::string to_string(ResultKind r) {
    switch (r) {
        case ResultKind::VANISHES: return "VANISHES";
        case ResultKind::NONVANISHING: return "NONVANISHING";
        default: return "INCONCLUSIVE";
    }
}

std::string to_string(BoundSource s) {
    switch (s) {
        case BoundSource::user: return "user";
        case BoundSource::finite_length: return "finite_length";
        default: return "empirical";
    }
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::streaming: return "streaming";
        case Mode::baseline: return "baseline";
        default: return "compare";
    }
}

Instance build_instance(const std::vector<IntPoly>& f, int n, u64 p, int i,
                        Order order) {
    if (f.empty()) throw std::invalid_argument("build_instance: no generators");
    if (i < 0 || i > static_cast<int>(f.size()))
        throw std::invalid_argument("build_instance: degree i out of range [0, s]");
    Instance inst{Ring(n, p, order)};
    inst.s = static_cast<int>(f.size());
    inst.degree = i;
    inst.f_int = f;
    for (size_t k = 0; k < f.size(); ++k) {
        Poly g = reduce_mod_p(inst.ring, f[k]);
        if (g.is_zero())
            inst.warnings.push_back("degenerate generator mod p: f" +
                                    std::to_string(k + 1) + " reduces to 0");
        inst.fbar.push_back(std::move(g));
    }
    inst.base = build_koszul(inst.ring, inst.fbar, 1);
    inst.module = cohomology_presentation(inst.ring, inst.base, i);
    for (const auto& S : inst.base.subsets[i]) {
        Poly prod = poly_const(inst.ring, 1);
        for (int v : S) prod = poly_mul(inst.ring, prod, inst.fbar[v]);
        inst.subset_products.push_back(std::move(prod));
    }
    return inst;
}

bool beta_j_is_zero_streamed(const Instance& inst, int j,
                             StreamCounters& counters,
                             std::optional<Witness>& witness) {
    witness.reset();
    if (inst.module.gens.empty()) return true;
    const Ring& R = inst.ring;
    FrobLayout layout(R.fp.p, j);

    // Lexicographic tuple enumeration: (i_1,..,i_n, t), t varying fastest.
    ExpVec offset(R.n, 0);
    while (true) {
        for (size_t t = 0; t < inst.module.gens.size(); ++t) {
            ++counters.tuples;
            FreeElem z = alpha_on_generator(R, inst.base, inst.degree,
                                            inst.subset_products,
                                            inst.module.gens[t].element, offset,
                                            layout, counters);
            bool zero = is_member(R, z, inst.module.cobound_gb);
            // Per-tuple state is discarded here; only (offset, t) survives.
            if (!zero) {
                witness = Witness{j, offset, static_cast<int>(t)};
                return false;
            }
        }
        int v = R.n;
        while (v > 0 && offset[v - 1] + 1 == layout.q) offset[--v] = 0;
        if (v == 0) break;
        ++offset[v - 1];
    }
    return true;
}

namespace {

// Ambient-level generators of ker(beta_j) pulled back to K^i:
// { z : d^i z = 0  and  beta_j(z) in im d^{i-1} of the target complex }.
std::vector<FreeElem> kernel_of_beta(const Instance& inst, int j) {
    const Ring& R = inst.ring;
    const int i = inst.degree;
    ChainMapLevel cm = beta_chain_map(R, inst.base, j);
    KoszulComplex target = build_koszul(R, inst.fbar, cm.target_q);

    const u32 rank = inst.module.rank;
    const u32 rows_a = (i < inst.s) ? inst.base.rank(i + 1) : 0;

    PolyMatrix stacked;
    stacked.rows = rows_a + rank;
    for (u32 k = 0; k < rank; ++k) {
        FreeElem col;
        if (i < inst.s) col = inst.base.diff[i].cols[k];
        col = fe_add(R, col,
                     fe_shift(fe_from(k, cm.mult[i][k]), rows_a));
        stacked.cols.push_back(std::move(col));
    }

    std::vector<FreeElem> target_gens;
    if (i > 0)
        for (const auto& b : target.diff[i - 1].cols)
            target_gens.push_back(fe_shift(b, rows_a));
    ModuleGB tgt_gb = buchberger(R, target_gens, stacked.rows);
    return preimage_kernel(R, stacked, tgt_gb);
}

}  // namespace

std::vector<FreeElem> cocycle_submodule(const Instance& inst) {
    return inst.module.cocycle_gens;
}

KernelChain baseline_kernel_chain(const Instance& inst, int max_steps) {
    KernelChain chain;
    if (inst.module.is_zero) {
        chain.stabilized = true;
        chain.r = 1;  // vacuous: every kernel is the whole (zero) module
        return chain;
    }
    if (max_steps < 1)
        throw std::invalid_argument("baseline_kernel_chain: max_steps must be >= 1");

    chain.kernels.push_back(kernel_of_beta(inst, 1));
    for (int j = 1; j <= max_steps; ++j) {
        chain.kernels.push_back(kernel_of_beta(inst, j + 1));
        if (submodule_equal(inst.ring, inst.module.rank, chain.kernels[j - 1],
                            chain.kernels[j])) {
            chain.stabilized = true;
            chain.r = j;
            return chain;
        }
    }
    return chain;  // budget exhausted, stabilized = false
}

u64 resolve_bound(const Instance& inst, const BoundSpec& spec, int max_steps) {
    if (inst.module.is_zero)
        throw std::logic_error("resolve_bound: module is zero (nothing to bound)");
    switch (spec.source) {
        case BoundSource::user:
            if (spec.user_u < 1)
                throw std::runtime_error("resolve_bound: user bound must be >= 1");
            return spec.user_u;
        case BoundSource::finite_length: {
            // Present M as R^v / relations with v the generator count; the
            // length is then a standard-monomial count.
            const Ring& R = inst.ring;
            PolyMatrix gen_matrix;
            gen_matrix.rows = inst.module.rank;
            for (const auto& g : inst.module.gens)
                gen_matrix.cols.push_back(g.element);
            auto rels = preimage_kernel(R, gen_matrix, inst.module.cobound_gb);
            ModuleGB rel_gb =
                buchberger(R, rels, static_cast<u32>(inst.module.gens.size()));
            auto dim = quotient_dim(R, static_cast<u32>(inst.module.gens.size()),
                                    rel_gb);
            if (!dim)
                throw std::runtime_error(
                    "resolve_bound: finite_length requested but the module has "
                    "infinite length");
            return *dim;
        }
        case BoundSource::empirical: {
            KernelChain chain = baseline_kernel_chain(inst, max_steps);
            if (!chain.stabilized)
                throw std::runtime_error(
                    "resolve_bound: empirical kernel chain did not stabilize "
                    "within the step budget");
            return static_cast<u64>(chain.r);
        }
    }
    throw std::logic_error("resolve_bound: unreachable");
}

namespace {

Verdict decide_streaming(const Instance& inst, const BoundSpec& spec,
                         int max_steps) {
    Verdict v;
    v.mode = Mode::streaming;
    v.bound_source = spec.source;
    v.cobound_gb_size = inst.module.cobound_gb.basis.size();
    try {
        v.u = resolve_bound(inst, spec, max_steps);
    } catch (const std::runtime_error& e) {
        v.result = ResultKind::INCONCLUSIVE;
        v.reason = e.what();
        return v;
    }
    v.u_is_per_p = spec.source == BoundSource::empirical;
    std::optional<Witness> w;
    bool zero = beta_j_is_zero_streamed(inst, static_cast<int>(*v.u),
                                        v.counters, w);
    v.result = zero ? ResultKind::VANISHES : ResultKind::NONVANISHING;
    v.witness = w;
    return v;
}

Verdict decide_baseline(const Instance& inst, int max_steps) {
    Verdict v;
    v.mode = Mode::baseline;
    v.cobound_gb_size = inst.module.cobound_gb.basis.size();
    KernelChain chain = baseline_kernel_chain(inst, max_steps);
    if (!chain.stabilized) {
        v.result = ResultKind::INCONCLUSIVE;
        v.reason = "kernel chain did not stabilize within the step budget";
        return v;
    }
    v.r = chain.r;
    bool whole = submodule_equal(inst.ring, inst.module.rank,
                                 chain.kernels[chain.r - 1],
                                 cocycle_submodule(inst));
    v.result = whole ? ResultKind::VANISHES : ResultKind::NONVANISHING;
    if (v.result == ResultKind::NONVANISHING) {
        // beta_r != 0, so the streamed search at j = r yields a witness.
        std::optional<Witness> w;
        bool zero = beta_j_is_zero_streamed(inst, chain.r, v.counters, w);
        if (zero)
            throw std::logic_error(
                "decide_vanishing: baseline found beta_r != 0 but the streamed "
                "test disagrees (correctness bug)");
        v.witness = w;
    }
    return v;
}

}  // namespace

Verdict decide_vanishing(const Instance& inst, const BoundSpec& spec, Mode mode,
                         int max_steps) {
    if (inst.trivially_vanishing()) {
        Verdict v;
        v.result = ResultKind::VANISHES;
        v.mode = mode;
        v.bound_source = spec.source;
        v.reason = "module presentation is zero";
        return v;
    }
    switch (mode) {
        case Mode::streaming:
            return decide_streaming(inst, spec, max_steps);
        case Mode::baseline:
            return decide_baseline(inst, max_steps);
        case Mode::compare: {
            Verdict s = decide_streaming(inst, spec, max_steps);
            Verdict b = decide_baseline(inst, max_steps);
            if (s.result != b.result)
                throw std::logic_error(
                    "decide_vanishing: streaming and baseline verdicts disagree "
                    "(streaming=" + to_string(s.result) +
                    ", baseline=" + to_string(b.result) + ")");
            Verdict v = s;
            v.mode = Mode::compare;
            v.r = b.r;
            return v;
        }
    }
    throw std::logic_error("decide_vanishing: unreachable");
}

bool recheck_witness(const Instance& inst, const Verdict& verdict) {
    if (!verdict.witness)
        throw std::invalid_argument("recheck_witness: verdict carries no witness");
    const Witness& w = *verdict.witness;
    if (w.gen_index < 0 ||
        w.gen_index >= static_cast<int>(inst.module.gens.size()))
        throw std::invalid_argument("recheck_witness: generator index out of range");
    FrobLayout layout(inst.ring.fp.p, w.j);
    for (u32 o : w.offset)
        if (o >= layout.q)
            throw std::invalid_argument("recheck_witness: offset outside box");
    StreamCounters fresh;
    FreeElem z = alpha_on_generator(inst.ring, inst.base, inst.degree,
                                    inst.subset_products,
                                    inst.module.gens[w.gen_index].element,
                                    w.offset, layout, fresh);
    return !is_member(inst.ring, z, inst.module.cobound_gb);
}

}  // namespace lcv
