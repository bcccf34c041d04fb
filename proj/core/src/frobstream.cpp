#include "lcvanish/frobstream.hpp"

#include <stdexcept>

namespace lcv {

FrobLayout::FrobLayout(u64 prime, int level) : p(prime), j(level), q(1) {
    if (!is_prime(p)) throw std::invalid_argument("FrobLayout: p is not prime");
    if (j < 1) throw std::invalid_argument("FrobLayout: j must be >= 1");
    for (int k = 0; k < j; ++k) q *= p;
}

ProductForm make_product_form(const Poly& product, const Poly& cocycle_comp) {
    ProductForm pf;
    for (const auto& t : product.terms) pf.factors.push_back(MonoTerm{t.c, t.e});
    for (const auto& t : cocycle_comp.terms)
        pf.cocycle.push_back(MonoTerm{t.c, t.e});
    pf.deg_d = poly_degree(product);
    pf.deg_D = poly_degree(cocycle_comp);
    return pf;
}

std::optional<MonoTerm> gamma_extract(u64 c, const ExpVec& e,
                                      const FrobLayout& layout) {
    MonoTerm out;
    out.c = c;
    out.e.resize(e.size());
    const u64 top = layout.q - 1;
    for (size_t s = 0; s < e.size(); ++s) {
        if (e[s] % layout.q != top) return std::nullopt;
        out.e[s] = static_cast<u32>((e[s] - top) / layout.q);
    }
    return out;
}

CompositionIter::CompositionIter(int parts, u64 total) : total_(total) {
    if (parts < 1)
        throw std::invalid_argument("CompositionIter: need at least one part");
    q_.assign(static_cast<size_t>(parts), 0);
    q_[0] = total;
}

void CompositionIter::next() {
    const size_t t = q_.size();
    if (q_[t - 1] == total_) {
        done_ = true;
        return;
    }
    size_t k = 0;
    while (q_[k] == 0) ++k;
    u64 v = q_[k];
    q_[k] = 0;
    q_[k + 1] += 1;
    q_[0] = v - 1;
}

Poly alpha_component_streamed(const Ring& R, const ProductForm& pf,
                              const ExpVec& offset, const FrobLayout& layout,
                              StreamCounters& counters) {
    if (static_cast<int>(offset.size()) != R.n)
        throw std::invalid_argument("alpha_component_streamed: offset length");
    for (u32 o : offset)
        if (o >= layout.q)
            throw std::invalid_argument("alpha_component_streamed: offset outside box");
    // An empty factor list is the zero product (the constant product 1
    // carries one monomial), so the whole multiplier vanishes.
    if (pf.cocycle.empty() || pf.factors.empty()) return Poly{};

    const u32 bound = std::max(pf.deg_D, pf.deg_d);
    const u64 total = layout.q - 1;
    Poly partial;
    const int t = static_cast<int>(pf.factors.size());

    for (CompositionIter it(t, total); !it.done(); it.next()) {
        ++counters.compositions;
        const auto& q = it.current();
        u64 m = multinomial_mod_p(total, q, R.fp);
        if (m == 0) continue;  // prunes before any exponent arithmetic

        // Base monomial of m_1^{q_1}..m_t^{q_t}, coefficients powered along.
        u64 cbase = m;
        ExpVec ebase = offset;
        for (size_t s = 0; s < q.size(); ++s) {
            if (q[s] == 0) continue;
            cbase = R.fp.mul(cbase, R.fp.pow(pf.factors[s].c, q[s]));
            for (int v = 0; v < R.n; ++v)
                ebase[v] += static_cast<u32>(pf.factors[s].e[v] * q[s]);
        }

        for (const auto& mu : pf.cocycle) {
            ++counters.gamma_terms;
            ExpVec e = ebase;
            for (int v = 0; v < R.n; ++v) e[v] += mu.e[v];
            auto g = gamma_extract(R.fp.mul(cbase, mu.c), e, layout);
            if (!g) continue;
            if (total_degree(g->e) > bound)
                throw std::logic_error(
                    "alpha_component_streamed: degree bound violated");
            counters.saw_degree(total_degree(g->e));
            counters.acquire(1);  // the freshly extracted gamma monomial
            u64 before = partial.terms.size();
            partial = poly_add(R, partial, poly_mono(R, std::move(g->e), g->c));
            u64 after = partial.terms.size();
            counters.acquire(after);
            counters.release(before + 1);  // old partial sum and term erased
            counters.saw_degree(poly_degree(partial));
        }
    }
    counters.release(partial.terms.size());
    return partial;
}

FreeElem alpha_on_generator(const Ring& R, const KoszulComplex& K_base, int i,
                            const std::vector<Poly>& subset_products,
                            const FreeElem& gen, const ExpVec& offset,
                            const FrobLayout& layout, StreamCounters& counters) {
    FreeElem out;
    for (const auto& [comp, f] : gen.comps) {
        ProductForm pf = make_product_form(subset_products[comp], f);
        Poly a = alpha_component_streamed(R, pf, offset, layout, counters);
        if (!a.is_zero()) {
            counters.acquire(a.terms.size());  // stays live until the test
            out.comps.emplace_back(comp, std::move(a));
        }
    }
    if (i < K_base.s && !mat_apply(R, K_base.diff[i], out).is_zero())
        throw std::logic_error("alpha_on_generator: image is not a cocycle");
    counters.release(fe_term_count(out));
    return out;
}

}  // namespace lcv
