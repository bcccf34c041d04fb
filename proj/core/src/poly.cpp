#include "lcvanish/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lcv {

u32 total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), u32{0});
}

int cmp_mono(Order order, const ExpVec& a, const ExpVec& b) {
    if (order == Order::lex) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    // grevlex: higher total degree wins; on ties the monomial whose last
    // differing exponent is smaller is the larger one.
    u32 da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Ring& R, u64 c) {
    c %= R.fp.p;
    if (c == 0) return Poly{};
    return Poly{{Term{ExpVec(R.n, 0), c}}};
}

Poly poly_mono(const Ring& R, ExpVec e, u64 c) {
    c %= R.fp.p;
    if (c == 0) return Poly{};
    if (static_cast<int>(e.size()) != R.n)
        throw std::invalid_argument("poly_mono: exponent vector length mismatch");
    return Poly{{Term{std::move(e), c}}};
}

Poly poly_normalize(const Ring& R, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp_mono(R.order, a.e, b.e) > 0;  // descending
    });
    Poly out;
    for (auto& t : terms) {
        u64 c = t.c % R.fp.p;
        if (!out.terms.empty() && out.terms.back().e == t.e) {
            out.terms.back().c = R.fp.add(out.terms.back().c, c);
            if (out.terms.back().c == 0) out.terms.pop_back();
        } else if (c != 0) {
            out.terms.push_back(Term{std::move(t.e), c});
        }
    }
    return out;
}

Poly poly_add(const Ring& R, const Poly& f, const Poly& g) {
    Poly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = cmp_mono(R.order, f.terms[i].e, g.terms[j].e);
        if (c > 0) {
            out.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(g.terms[j++]);
        } else {
            u64 s = R.fp.add(f.terms[i].c, g.terms[j].c);
            if (s != 0) out.terms.push_back(Term{f.terms[i].e, s});
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
    return out;
}

Poly poly_neg(const Ring& R, const Poly& f) {
    Poly out = f;
    for (auto& t : out.terms) t.c = R.fp.neg(t.c);
    return out;
}

Poly poly_sub(const Ring& R, const Poly& f, const Poly& g) {
    return poly_add(R, f, poly_neg(R, g));
}

Poly poly_scale(const Ring& R, const Poly& f, u64 c) {
    c %= R.fp.p;
    if (c == 0) return Poly{};
    Poly out = f;
    for (auto& t : out.terms) t.c = R.fp.mul(t.c, c);
    return out;
}

Poly poly_mul_term(const Ring& R, const Poly& f, const ExpVec& e, u64 c) {
    c %= R.fp.p;
    if (c == 0) return Poly{};
    Poly out;
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        ExpVec m = t.e;
        for (size_t k = 0; k < m.size(); ++k) m[k] += e[k];
        out.terms.push_back(Term{std::move(m), R.fp.mul(t.c, c)});
    }
    return out;  // order is preserved by a common monomial shift
}

Poly poly_mul(const Ring& R, const Poly& f, const Poly& g) {
    Poly acc;
    for (const auto& t : g.terms)
        acc = poly_add(R, acc, poly_mul_term(R, f, t.e, t.c));
    return acc;
}

Poly poly_pow(const Ring& R, const Poly& f, u64 e) {
    Poly r = poly_const(R, 1);
    Poly b = f;
    while (e) {
        if (e & 1) r = poly_mul(R, r, b);
        e >>= 1;
        if (e) b = poly_mul(R, b, b);
    }
    return r;
}

Poly frobenius_power(const Ring& R, const Poly& f, u64 q) {
    u64 t = q;
    while (t > 1) {
        if (t % R.fp.p != 0)
            throw std::invalid_argument("frobenius_power: q is not a power of p");
        t /= R.fp.p;
    }
    if (t != 1) throw std::invalid_argument("frobenius_power: q must be >= 1");
    Poly out = f;
    for (auto& term : out.terms)
        for (auto& e : term.e) e = static_cast<u32>(e * q);
    return out;  // exponent scaling preserves relative order
}

u32 poly_degree(const Poly& f) {
    u32 d = 0;
    for (const auto& t : f.terms) d = std::max(d, total_degree(t.e));
    return d;
}

bool poly_equal(const Poly& f, const Poly& g) {
    if (f.terms.size() != g.terms.size()) return false;
    for (size_t i = 0; i < f.terms.size(); ++i)
        if (f.terms[i].c != g.terms[i].c || f.terms[i].e != g.terms[i].e)
            return false;
    return true;
}

Poly reduce_mod_p(const Ring& R, const IntPoly& f) {
    std::vector<Term> terms;
    boost::multiprecision::cpp_int p(R.fp.p);
    for (const auto& t : f.terms) {
        boost::multiprecision::cpp_int r = t.c % p;
        if (r < 0) r += p;
        u64 c = r.convert_to<u64>();
        if (c != 0) terms.push_back(Term{t.e, c});
    }
    return poly_normalize(R, std::move(terms));
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, static_cast<int>(i) + 1);
    }
};

boost::multiprecision::cpp_int parse_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start) c.fail("expected a number");
    return boost::multiprecision::cpp_int(c.s.substr(start, c.i - start));
}

u32 parse_exponent(Cursor& c) {
    auto v = parse_number(c);
    if (v > 1u << 30) c.fail("exponent overflow");
    return v.convert_to<u32>();
}

// var := 'x' digits, with 1 <= index <= n
int parse_var(Cursor& c, int n) {
    c.skip_ws();
    ++c.i;  // consume 'x'
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == start) c.fail("expected variable index after 'x'");
    int idx = std::stoi(c.s.substr(start, c.i - start));
    if (idx < 1 || idx > n)
        c.fail("unknown variable x" + std::to_string(idx) + " (n = " +
               std::to_string(n) + ")");
    return idx - 1;
}

// term := [coeff] [*] (var [^ exp] [*]?)*
IntTerm parse_term(Cursor& c, int n) {
    IntTerm t;
    t.e.assign(n, 0);
    t.c = 1;
    bool saw_factor = false;
    if (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        t.c = parse_number(c);
        saw_factor = true;
    }
    while (!c.eof()) {
        char ch = c.peek();
        if (ch == '*') {
            ++c.i;
            continue;
        }
        if (ch != 'x') break;
        int v = parse_var(c, n);
        u32 e = 1;
        if (!c.eof() && c.peek() == '^') {
            ++c.i;
            e = parse_exponent(c);
        }
        t.e[v] += e;
        saw_factor = true;
    }
    if (!saw_factor) c.fail("expected a term");
    return t;
}

}  // namespace

IntPoly parse_int_poly(const std::string& text, int n) {
    Cursor c{text};
    std::vector<IntTerm> terms;
    bool negate = false;
    if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
        negate = c.peek() == '-';
        ++c.i;
    }
    while (true) {
        IntTerm t = parse_term(c, n);
        if (negate) t.c = -t.c;
        terms.push_back(std::move(t));
        if (c.eof()) break;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            negate = ch == '-';
            ++c.i;
        } else {
            c.fail(std::string("unexpected character '") + ch + "'");
        }
    }
    // canonicalize: grevlex descending, merged, no zeros
    std::sort(terms.begin(), terms.end(), [](const IntTerm& a, const IntTerm& b) {
        return cmp_mono(Order::grevlex, a.e, b.e) > 0;
    });
    IntPoly out;
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().e == t.e)
            out.terms.back().c += t.c;
        else
            out.terms.push_back(std::move(t));
        if (!out.terms.empty() && out.terms.back().c == 0) out.terms.pop_back();
    }
    return out;
}

namespace {

template <typename TermT, typename CoeffToString>
std::string terms_to_string(const std::vector<TermT>& terms, CoeffToString cts) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        std::string c = cts(t.c, first);
        os << c;
        bool unit = c.empty() || c == "-" || c == " - " || c == " + ";
        bool any_var = false;
        for (size_t k = 0; k < t.e.size(); ++k) {
            if (t.e[k] == 0) continue;
            if (any_var || !unit) os << "*";
            os << "x" << k + 1;
            if (t.e[k] > 1) os << "^" << t.e[k];
            any_var = true;
        }
        if (!any_var && unit) os << "1";
        first = false;
    }
    return os.str();
}

}  // namespace

std::string poly_to_string(const Ring& R, const Poly& f) {
    (void)R;
    return terms_to_string(f.terms, [](u64 c, bool first) -> std::string {
        std::string lead = first ? "" : " + ";
        if (c == 1) return lead;
        return lead + std::to_string(c);
    });
}

std::string int_poly_to_string(int n, const IntPoly& f) {
    (void)n;
    using boost::multiprecision::cpp_int;
    return terms_to_string(f.terms, [](const cpp_int& c, bool first) -> std::string {
        cpp_int a = c < 0 ? cpp_int(-c) : c;
        std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        if (a == 1) return sign;
        return sign + a.str();
    });
}

}  // namespace lcv
