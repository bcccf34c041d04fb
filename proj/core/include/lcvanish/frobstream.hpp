#ifndef LCVANISH_FROBSTREAM_HPP
#define LCVANISH_FROBSTREAM_HPP

#include <optional>
#include <vector>

#include "lcvanish/koszul.hpp"

namespace lcv {

/// Basis layout of R over its p^j-th power subring: the exponent box
/// [0, p^j-1]^n and the distinguished top index (p^j-1,..,p^j-1).
struct FrobLayout {
    u64 p;
    int j;
    u64 q;  // p^j

    FrobLayout(u64 prime, int level);
};

struct MonoTerm {
    u64 c;
    ExpVec e;
};

/// Monomial factor data for one diagonal alpha component: the monomials of
/// the subset product f_{v_1}..f_{v_i} and of the matching cocycle component.
struct ProductForm {
    std::vector<MonoTerm> factors;  // m_1..m_t, the product's monomials
    std::vector<MonoTerm> cocycle;  // mu_1..mu_u, the cocycle component's
    u32 deg_d = 0;                  // deg of the full product
    u32 deg_D = 0;                  // max deg of the cocycle monomials
};

ProductForm make_product_form(const Poly& product, const Poly& cocycle_comp);

/// Instrumentation for the streaming path. `live` counts simultaneously
/// retained monomials; `peak_live` its maximum over the run.
struct StreamCounters {
    u64 compositions = 0;
    u64 gamma_terms = 0;
    u64 tuples = 0;
    u64 live = 0;
    u64 peak_live = 0;
    u32 max_degree = 0;

    void acquire(u64 k) {
        live += k;
        peak_live = std::max(peak_live, live);
    }
    void release(u64 k) { live -= k; }
    void saw_degree(u32 d) { max_degree = std::max(max_degree, d); }
};

/// gamma(c x^l): zero unless every l_s = p^j-1 (mod p^j); otherwise the
/// coefficient survives and exponents map to w_s = (l_s - (p^j-1)) / p^j.
std::optional<MonoTerm> gamma_extract(u64 c, const ExpVec& e,
                                      const FrobLayout& layout);

/// Weak compositions of `total` into `parts` parts, colex successor
/// enumeration: each state determines the next with no history.
class CompositionIter {
public:
    CompositionIter(int parts, u64 total);
    bool done() const { return done_; }
    const std::vector<u64>& current() const { return q_; }
    void next();

private:
    std::vector<u64> q_;
    u64 total_;
    bool done_ = false;
};

/// Streamed evaluation of one diagonal alpha component on the monomial
/// x^offset: the sum over compositions q_1+..+q_t = p^j-1 and cocycle
/// monomials mu of  multinomial(q) * gamma(x^offset m_1^{q_1}..m_t^{q_t} mu).
/// Only the composition cursor and the partial sum are retained between
/// steps; every partial result obeys deg <= max{D, d}.
Poly alpha_component_streamed(const Ring& R, const ProductForm& pf,
                              const ExpVec& offset, const FrobLayout& layout,
                              StreamCounters& counters);

/// Assembles the per-subset streamed components of alpha_j on a cocycle
/// generator into an element of K^i of the base complex. The result is
/// checked to be a cocycle (alpha is a chain map).
FreeElem alpha_on_generator(const Ring& R, const KoszulComplex& K_base, int i,
                            const std::vector<Poly>& subset_products,
                            const FreeElem& gen, const ExpVec& offset,
                            const FrobLayout& layout, StreamCounters& counters);

}  // namespace lcv

#endif
