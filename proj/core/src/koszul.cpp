#include "lcvanish/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcv {

namespace {

u64 binom_u64(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<SubsetIndex> subsets_colex(int s, int t) {
    std::vector<SubsetIndex> out;
    if (t < 0 || t > s) return out;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    SubsetIndex cur(t);
    for (int k = 0; k < t; ++k) cur[k] = k;
    while (true) {
        out.push_back(cur);
        // colex successor: bump the lowest index that can move, reset below
        int k = 0;
        while (k + 1 < t && cur[k] + 1 == cur[k + 1]) ++k;
        if (k == t - 1 && cur[k] + 1 >= s) break;
        ++cur[k];
        for (int l = 0; l < k; ++l) cur[l] = l;
    }
    return out;
}

u32 subset_rank(const SubsetIndex& sub) {
    u64 r = 0;
    for (size_t k = 0; k < sub.size(); ++k)
        r += binom_u64(static_cast<u64>(sub[k]), k + 1);
    return static_cast<u32>(r);
}

KoszulComplex build_koszul(const Ring& R, const std::vector<Poly>& gens, u64 q) {
    if (gens.empty())
        throw std::invalid_argument("build_koszul: need at least one generator");
    KoszulComplex K;
    K.s = static_cast<int>(gens.size());
    K.q = q;
    for (const auto& g : gens) K.gens.push_back(frobenius_power(R, g, q));
    K.subsets.resize(K.s + 1);
    for (int t = 0; t <= K.s; ++t) K.subsets[t] = subsets_colex(K.s, t);

    K.diff.resize(K.s);
    for (int t = 0; t < K.s; ++t) {
        PolyMatrix& d = K.diff[t];
        d.rows = K.rank(t + 1);
        d.cols.assign(K.rank(t), FreeElem{});
        for (u32 row = 0; row < K.rank(t + 1); ++row) {
            const SubsetIndex& T = K.subsets[t + 1][row];
            for (size_t l = 0; l < T.size(); ++l) {
                SubsetIndex S = T;
                S.erase(S.begin() + static_cast<long>(l));
                u32 col = subset_rank(S);
                // sign (-1)^l with l the 1-based position of the omitted index
                Poly entry = (l % 2 == 0) ? poly_neg(R, K.gens[T[l]]) : K.gens[T[l]];
                d.cols[col] = fe_add(R, d.cols[col], fe_from(row, std::move(entry)));
            }
        }
    }

    for (int t = 0; t + 1 < K.s; ++t) {
        for (const auto& col : K.diff[t].cols) {
            if (!mat_apply(R, K.diff[t + 1], col).is_zero())
                throw std::logic_error("build_koszul: d.d != 0 (internal error)");
        }
    }
    return K;
}

PresentedModule cohomology_presentation(const Ring& R, const KoszulComplex& K,
                                        int i) {
    if (i < 0 || i > K.s)
        throw std::invalid_argument("cohomology_presentation: degree out of range");
    PresentedModule pm;
    pm.degree = i;
    pm.rank = K.rank(i);

    if (i < K.s) {
        pm.cocycle_gens = kernel_gens(R, K.diff[i]);
    } else {
        for (u32 c = 0; c < pm.rank; ++c) pm.cocycle_gens.push_back(fe_unit(R, c));
    }

    std::vector<FreeElem> cobound;
    if (i > 0) cobound = K.diff[i - 1].cols;
    pm.cobound_gb = buchberger(R, cobound, pm.rank);

    for (const auto& z : pm.cocycle_gens) {
        FreeElem r = normal_form(R, z, pm.cobound_gb);
        if (r.is_zero()) continue;  // coboundary, contributes no class
        if (i < K.s && !mat_apply(R, K.diff[i], r).is_zero())
            throw std::logic_error("cohomology_presentation: generator is not a cocycle");
        pm.gens.push_back(CocycleRep{i, std::move(r)});
    }
    pm.is_zero = pm.gens.empty();
    return pm;
}

ChainMapLevel beta_chain_map(const Ring& R, const KoszulComplex& K_base, int j) {
    if (j < 1) throw std::invalid_argument("beta_chain_map: j must be >= 1");
    ChainMapLevel cm;
    cm.j = j;
    cm.source_q = K_base.q;
    u64 pj = 1;
    for (int k = 0; k < j; ++k) pj *= R.fp.p;
    cm.target_q = K_base.q * pj;

    cm.mult.resize(K_base.s + 1);
    for (int t = 0; t <= K_base.s; ++t) {
        cm.mult[t].reserve(K_base.rank(t));
        for (const auto& S : K_base.subsets[t]) {
            Poly prod = poly_const(R, 1);
            for (int v : S) prod = poly_mul(R, prod, K_base.gens[v]);
            cm.mult[t].push_back(poly_pow(R, prod, pj - 1));
        }
    }

    // Commutation check: d_target . beta = beta . d_source, degree by degree.
    KoszulComplex K_tgt = build_koszul(R, K_base.gens, pj);
    for (int t = 0; t < K_base.s; ++t) {
        for (u32 c = 0; c < K_base.rank(t); ++c) {
            FreeElem lhs =
                fe_mul(R, K_tgt.diff[t].cols[c], cm.mult[t][c]);
            FreeElem rhs;
            for (const auto& [row, f] : K_base.diff[t].cols[c].comps)
                rhs = fe_add(R, rhs,
                             fe_from(row, poly_mul(R, f, cm.mult[t + 1][row])));
            if (!fe_equal(lhs, rhs))
                throw std::logic_error(
                    "beta_chain_map: chain-map commutation failed (internal error)");
        }
    }
    return cm;
}

FreeElem apply_chain_map(const Ring& R, const ChainMapLevel& cm, int degree,
                         const FreeElem& v) {
    FreeElem out;
    for (const auto& [c, f] : v.comps) {
        Poly h = poly_mul(R, f, cm.mult[degree][c]);
        if (!h.is_zero()) out.comps.emplace_back(c, std::move(h));
    }
    return out;
}

}  // namespace lcv
