#include "lcvanish/freemod.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcv {

FreeElem fe_from(u32 comp, Poly f) {
    FreeElem v;
    if (!f.is_zero()) v.comps.emplace_back(comp, std::move(f));
    return v;
}

FreeElem fe_unit(const Ring& R, u32 comp) {
    return fe_from(comp, poly_const(R, 1));
}

const Poly* fe_component(const FreeElem& v, u32 comp) {
    for (const auto& [c, f] : v.comps)
        if (c == comp) return &f;
    return nullptr;
}

FreeElem fe_add(const Ring& R, const FreeElem& a, const FreeElem& b) {
    FreeElem out;
    size_t i = 0, j = 0;
    while (i < a.comps.size() && j < b.comps.size()) {
        if (a.comps[i].first < b.comps[j].first) {
            out.comps.push_back(a.comps[i++]);
        } else if (a.comps[i].first > b.comps[j].first) {
            out.comps.push_back(b.comps[j++]);
        } else {
            Poly s = poly_add(R, a.comps[i].second, b.comps[j].second);
            if (!s.is_zero()) out.comps.emplace_back(a.comps[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.comps.size(); ++i) out.comps.push_back(a.comps[i]);
    for (; j < b.comps.size(); ++j) out.comps.push_back(b.comps[j]);
    return out;
}

FreeElem fe_neg(const Ring& R, const FreeElem& a) {
    FreeElem out = a;
    for (auto& [c, f] : out.comps) f = poly_neg(R, f);
    return out;
}

FreeElem fe_sub(const Ring& R, const FreeElem& a, const FreeElem& b) {
    return fe_add(R, a, fe_neg(R, b));
}

FreeElem fe_scale(const Ring& R, const FreeElem& a, u64 c) {
    c %= R.fp.p;
    if (c == 0) return {};
    FreeElem out = a;
    for (auto& [k, f] : out.comps) f = poly_scale(R, f, c);
    return out;
}

FreeElem fe_mul_term(const Ring& R, const FreeElem& a, const ExpVec& e, u64 c) {
    c %= R.fp.p;
    if (c == 0) return {};
    FreeElem out;
    out.comps.reserve(a.comps.size());
    for (const auto& [k, f] : a.comps)
        out.comps.emplace_back(k, poly_mul_term(R, f, e, c));
    return out;
}

FreeElem fe_mul(const Ring& R, const FreeElem& a, const Poly& f) {
    FreeElem out;
    for (const auto& [k, g] : a.comps) {
        Poly h = poly_mul(R, g, f);
        if (!h.is_zero()) out.comps.emplace_back(k, std::move(h));
    }
    return out;
}

bool fe_equal(const FreeElem& a, const FreeElem& b) {
    if (a.comps.size() != b.comps.size()) return false;
    for (size_t i = 0; i < a.comps.size(); ++i) {
        if (a.comps[i].first != b.comps[i].first) return false;
        if (!poly_equal(a.comps[i].second, b.comps[i].second)) return false;
    }
    return true;
}

FreeElem fe_shift(const FreeElem& a, u32 offset) {
    FreeElem out = a;
    for (auto& [c, f] : out.comps) c += offset;
    return out;
}

u64 fe_term_count(const FreeElem& a) {
    u64 n = 0;
    for (const auto& [c, f] : a.comps) n += f.terms.size();
    return n;
}

FreeElem mat_apply(const Ring& R, const PolyMatrix& m, const FreeElem& v) {
    FreeElem out;
    for (const auto& [k, f] : v.comps) {
        if (k >= m.col_count())
            throw std::invalid_argument("mat_apply: component index out of range");
        out = fe_add(R, out, fe_mul(R, m.cols[k], f));
    }
    return out;
}

namespace {

struct ModTerm {
    u32 comp;
    const ExpVec* mono;
    u64 coeff;
};

// >0 if a is larger in the position-over-term order.
int cmp_modterm(Order o, u32 ca, const ExpVec& ma, u32 cb, const ExpVec& mb) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return cmp_mono(o, ma, mb);
}

ModTerm fe_lead(const FreeElem& v) {
    const auto& [c, f] = v.comps.front();
    return ModTerm{c, &f.lead().e, f.lead().c};
}

bool divides(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

u32 fe_sugar(const FreeElem& v) {
    u32 d = 0;
    for (const auto& [c, f] : v.comps) d = std::max(d, poly_degree(f));
    return d;
}

FreeElem fe_monic(const Ring& R, const FreeElem& v) {
    if (v.is_zero()) return v;
    return fe_scale(R, v, R.fp.inv(fe_lead(v).coeff));
}

// Pop the leading term of w into rem (both kept canonical).
void move_lead(FreeElem& w, FreeElem& rem) {
    auto& [c, f] = w.comps.front();
    Term t = f.terms.front();
    u32 comp = c;
    f.terms.erase(f.terms.begin());
    if (f.terms.empty()) w.comps.erase(w.comps.begin());
    // rem is built in strictly descending order, so append
    if (!rem.comps.empty() && rem.comps.back().first == comp)
        rem.comps.back().second.terms.push_back(std::move(t));
    else
        rem.comps.emplace_back(comp, Poly{{std::move(t)}});
}

}  // namespace

FreeElem normal_form(const Ring& R, const FreeElem& v, const ModuleGB& gb) {
    FreeElem w = v, rem;
    while (!w.is_zero()) {
        ModTerm lt = fe_lead(w);
        bool reduced = false;
        for (const auto& g : gb.basis) {
            ModTerm glt = fe_lead(g);
            if (glt.comp != lt.comp || !divides(*glt.mono, *lt.mono)) continue;
            u64 c = R.fp.mul(lt.coeff, R.fp.inv(glt.coeff));
            w = fe_sub(R, w, fe_mul_term(R, g, exp_sub(*lt.mono, *glt.mono), c));
            reduced = true;
            break;
        }
        if (!reduced) move_lead(w, rem);
    }
    return rem;
}

bool is_member(const Ring& R, const FreeElem& v, const ModuleGB& gb) {
    return normal_form(R, v, gb).is_zero();
}

namespace {

struct SPair {
    u32 sugar;
    ExpVec lcm;
    u32 comp;
    size_t i, j;
};

struct SPairLess {
    Order order;
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.comp != b.comp) return a.comp < b.comp;
        int c = cmp_mono(order, a.lcm, b.lcm);
        if (c != 0) return c < 0;  // lower lcm first
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

ModuleGB buchberger(const Ring& R, const std::vector<FreeElem>& gens, u32 rank) {
    ModuleGB gb;
    gb.rank = rank;
    std::vector<u32> sugar;

    std::multiset<SPair, SPairLess> queue{SPairLess{R.order}};
    auto enqueue = [&](size_t i, size_t j) {
        ModTerm a = fe_lead(gb.basis[i]), b = fe_lead(gb.basis[j]);
        if (a.comp != b.comp) return;  // S-pairs only within a component
        ExpVec l = exp_lcm(*a.mono, *b.mono);
        u32 dl = total_degree(l);
        u32 s = std::max(sugar[i] + dl - total_degree(*a.mono),
                         sugar[j] + dl - total_degree(*b.mono));
        queue.insert(SPair{s, std::move(l), a.comp, i, j});
    };
    auto add_elem = [&](FreeElem g, u32 sug) {
        g = fe_monic(R, std::move(g));
        gb.basis.push_back(std::move(g));
        sugar.push_back(sug);
        for (size_t i = 0; i + 1 < gb.basis.size(); ++i)
            enqueue(i, gb.basis.size() - 1);
    };

    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        FreeElem r = normal_form(R, g, gb);
        if (!r.is_zero()) add_elem(std::move(r), fe_sugar(g));
    }

    while (!queue.empty()) {
        SPair sp = *queue.begin();
        queue.erase(queue.begin());
        const FreeElem& gi = gb.basis[sp.i];
        const FreeElem& gj = gb.basis[sp.j];
        ModTerm a = fe_lead(gi), b = fe_lead(gj);
        FreeElem s = fe_sub(
            R, fe_mul_term(R, gi, exp_sub(sp.lcm, *a.mono), R.fp.inv(a.coeff)),
            fe_mul_term(R, gj, exp_sub(sp.lcm, *b.mono), R.fp.inv(b.coeff)));
        FreeElem r = normal_form(R, s, gb);
        if (!r.is_zero()) add_elem(std::move(r), sp.sugar);
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<FreeElem> minimal;
    for (size_t i = 0; i < gb.basis.size(); ++i) {
        ModTerm a = fe_lead(gb.basis[i]);
        bool redundant = false;
        for (size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            ModTerm b = fe_lead(gb.basis[j]);
            if (b.comp != a.comp || !divides(*b.mono, *a.mono)) continue;
            if (*b.mono != *a.mono || j < i) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(gb.basis[i]);
    }

    // Tail-reduce to the unique reduced basis, then sort by leading term.
    ModuleGB out;
    out.rank = rank;
    for (size_t i = 0; i < minimal.size(); ++i) {
        ModuleGB others;
        others.rank = rank;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.basis.push_back(minimal[j]);
        out.basis.push_back(normal_form(R, minimal[i], others));
    }
    std::sort(out.basis.begin(), out.basis.end(),
              [&](const FreeElem& x, const FreeElem& y) {
                  ModTerm a = fe_lead(x), b = fe_lead(y);
                  return cmp_modterm(R.order, a.comp, *a.mono, b.comp, *b.mono) > 0;
              });
    return out;
}

namespace {

// Shared elimination core: GB of the span of `upper` (elements of
// R^(rows+cols)), returning the second-block projections of basis elements
// supported entirely in components >= rows.
std::vector<FreeElem> eliminate_first_block(const Ring& R,
                                            const std::vector<FreeElem>& gens,
                                            u32 rows, u32 cols) {
    ModuleGB gb = buchberger(R, gens, rows + cols);
    std::vector<FreeElem> out;
    for (const auto& g : gb.basis) {
        if (g.is_zero() || g.comps.front().first < rows) continue;
        FreeElem proj = g;
        for (auto& [c, f] : proj.comps) c -= rows;
        out.push_back(std::move(proj));
    }
    return out;
}

}  // namespace

std::vector<FreeElem> kernel_gens(const Ring& R, const PolyMatrix& m) {
    std::vector<FreeElem> gens;
    for (u32 k = 0; k < m.col_count(); ++k)
        gens.push_back(fe_add(R, m.cols[k], fe_shift(fe_unit(R, k), m.rows)));
    return eliminate_first_block(R, gens, m.rows, m.col_count());
}

std::vector<FreeElem> preimage_kernel(const Ring& R, const PolyMatrix& m,
                                      const ModuleGB& target_sub) {
    if (target_sub.rank != m.rows)
        throw std::invalid_argument("preimage_kernel: rank mismatch");
    std::vector<FreeElem> gens;
    for (u32 k = 0; k < m.col_count(); ++k)
        gens.push_back(fe_add(R, m.cols[k], fe_shift(fe_unit(R, k), m.rows)));
    for (const auto& t : target_sub.basis) gens.push_back(t);
    return eliminate_first_block(R, gens, m.rows, m.col_count());
}

bool submodule_equal(const Ring& R, u32 rank, const std::vector<FreeElem>& a,
                     const std::vector<FreeElem>& b) {
    ModuleGB ga = buchberger(R, a, rank), gbb = buchberger(R, b, rank);
    for (const auto& v : a)
        if (!is_member(R, v, gbb)) return false;
    for (const auto& v : b)
        if (!is_member(R, v, ga)) return false;
    return true;
}

std::optional<u64> quotient_dim(const Ring& R, u32 rank, const ModuleGB& gb) {
    // Leading-term monomial ideal per component.
    std::vector<std::vector<ExpVec>> lead(rank);
    for (const auto& g : gb.basis) {
        ModTerm lt = fe_lead(g);
        lead[lt.comp].push_back(*lt.mono);
    }
    u64 total = 0;
    for (u32 c = 0; c < rank; ++c) {
        // Finiteness criterion: every variable needs a pure power among the
        // leading terms of this component (a degree-0 lead kills everything).
        ExpVec box(R.n, 0);
        bool constant = false;
        for (const auto& m : lead[c])
            if (total_degree(m) == 0) constant = true;
        if (constant) continue;
        for (int v = 0; v < R.n; ++v) {
            u32 best = 0;
            bool found = false;
            for (const auto& m : lead[c]) {
                bool pure = m[v] > 0;
                for (int w = 0; w < R.n && pure; ++w)
                    if (w != v && m[w] > 0) pure = false;
                if (pure && (!found || m[v] < best)) {
                    best = m[v];
                    found = true;
                }
            }
            if (!found) return std::nullopt;
            box[v] = best;
        }
        // Count monomials in the box not divisible by any leading term.
        ExpVec e(R.n, 0);
        while (true) {
            bool in_ideal = false;
            for (const auto& m : lead[c])
                if (divides(m, e)) {
                    in_ideal = true;
                    break;
                }
            if (!in_ideal) ++total;
            int v = 0;
            while (v < R.n && e[v] + 1 >= box[v]) e[v++] = 0;
            if (v == R.n) break;
            ++e[v];
        }
    }
    return total;
}

}  // namespace lcv
