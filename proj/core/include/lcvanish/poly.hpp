#ifndef LCVANISH_POLY_HPP
#define LCVANISH_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcvanish/fp.hpp"

namespace lcv {

/// Exponent vector; length equals the ambient variable count n.
using ExpVec = std::vector<u32>;

enum class Order { grevlex, lex };

/// Ambient ring (Z/pZ)[x1..xn] with an active monomial order.
struct Ring {
    int n;
    FpCtx fp;
    Order order = Order::grevlex;

    Ring(int nvars, u64 p, Order o = Order::grevlex) : n(nvars), fp(p), order(o) {
        if (nvars < 1) throw std::invalid_argument("Ring: need at least one variable");
    }
};

u32 total_degree(const ExpVec& e);

/// Three-way monomial comparison under the given order: <0, 0, >0 like strcmp.
int cmp_mono(Order order, const ExpVec& a, const ExpVec& b);

struct Term {
    ExpVec e;
    u64 c;
};

/// Sparse polynomial over Z/pZ. Terms are strictly descending in the ring's
/// monomial order with no zero coefficients; zero is the empty term list.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
};

Poly poly_zero();
Poly poly_const(const Ring& R, u64 c);
Poly poly_mono(const Ring& R, ExpVec e, u64 c);
/// Sorts, merges and drops zero coefficients.
Poly poly_normalize(const Ring& R, std::vector<Term> terms);

Poly poly_add(const Ring& R, const Poly& f, const Poly& g);
Poly poly_sub(const Ring& R, const Poly& f, const Poly& g);
Poly poly_neg(const Ring& R, const Poly& f);
Poly poly_scale(const Ring& R, const Poly& f, u64 c);
/// f * c*x^e
Poly poly_mul_term(const Ring& R, const Poly& f, const ExpVec& e, u64 c);
Poly poly_mul(const Ring& R, const Poly& f, const Poly& g);
/// f^e by binary powering (any e >= 0).
Poly poly_pow(const Ring& R, const Poly& f, u64 e);

/// f^q for q a power of p: exponent vectors scale by q, coefficients are fixed.
Poly frobenius_power(const Ring& R, const Poly& f, u64 q);

u32 poly_degree(const Poly& f);  // total degree; 0 for the zero polynomial
bool poly_equal(const Poly& f, const Poly& g);

/// Integer-coefficient input polynomial (pre-reduction carrier).
/// Coefficients are arbitrary precision; they only ever get reduced mod p.
struct IntTerm {
    ExpVec e;
    boost::multiprecision::cpp_int c;
};
struct IntPoly {
    std::vector<IntTerm> terms;  // sorted descending in grevlex, no zeros
};

Poly reduce_mod_p(const Ring& R, const IntPoly& f);

/// Parse error with position info, thrown by parse_int_poly.
struct ParseError : std::runtime_error {
    int column;
    ParseError(const std::string& msg, int col)
        : std::runtime_error(msg), column(col) {}
};

/// Text grammar: terms joined by + / -; a term is [coeff][*][var^exp ...]
/// with variables named x1..xn. Example: "3*x1^2*x2 - 5".
IntPoly parse_int_poly(const std::string& text, int n);

std::string poly_to_string(const Ring& R, const Poly& f);
std::string int_poly_to_string(int n, const IntPoly& f);

}  // namespace lcv

#endif
