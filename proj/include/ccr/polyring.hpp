#ifndef CCR_POLYRING_HPP
#define CCR_POLYRING_HPP

#include <string>
#include <utility>
#include <vector>

#include "ccr/chainring.hpp"
#include "ccr/gf.hpp"

namespace ccr {

/// Dense polynomial over F_{p^r}; constant term first, no trailing zeros
/// (the zero polynomial has an empty coefficient vector).
struct FieldPoly {
    std::vector<FieldElement> c;

    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool operator==(const FieldPoly& o) const { return c == o.c; }
    bool operator!=(const FieldPoly& o) const { return c != o.c; }
};

/// Dense polynomial over R; same trailing-zero rule.
struct RingPoly {
    std::vector<RingElement> c;

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const RingPoly& o) const { return c == o.c; }
    bool operator!=(const RingPoly& o) const { return c != o.c; }
};

// --- field polynomial arithmetic ---

FieldPoly fp_normalize(const FieldContext& F, FieldPoly a);
FieldPoly fp_from_coeffs(const FieldContext& F, std::vector<FieldElement> cs);
FieldPoly fp_zero();
FieldPoly fp_one(const FieldContext& F);
FieldPoly fp_x(const FieldContext& F);
/// x^n - lambda
FieldPoly fp_binomial(const FieldContext& F, long long n, const FieldElement& lambda);

FieldPoly fp_add(const FieldContext& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_sub(const FieldContext& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_neg(const FieldContext& F, const FieldPoly& a);
FieldPoly fp_mul(const FieldContext& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly fp_scale(const FieldContext& F, const FieldElement& s, const FieldPoly& a);
std::pair<FieldPoly, FieldPoly> fp_divmod(const FieldContext& F, const FieldPoly& a,
                                          const FieldPoly& b);
FieldPoly fp_mod(const FieldContext& F, const FieldPoly& a, const FieldPoly& b);
bool fp_divides(const FieldContext& F, const FieldPoly& d, const FieldPoly& a);
FieldPoly fp_gcd(const FieldContext& F, FieldPoly a, FieldPoly b);  // monic
FieldPoly fp_pow(const FieldContext& F, const FieldPoly& a, long long k);
FieldPoly fp_monic(const FieldContext& F, const FieldPoly& a);
FieldElement fp_eval(const FieldContext& F, const FieldPoly& a, const FieldElement& x);

/// Canonical total order used everywhere factors are sorted: by degree,
/// then by the coefficient vector read as a base-p integer.
bool fp_less(const FieldContext& F, const FieldPoly& a, const FieldPoly& b);

std::string fp_to_text(const FieldContext& F, const FieldPoly& a);

// --- reciprocals ---

/// f*(x) = x^{deg f} f(1/x); requires a nonzero constant term.
FieldPoly reciprocal(const FieldContext& F, const FieldPoly& f);

/// Self-reciprocity up to a unit scalar: monic(f*) == monic(f).
bool is_self_reciprocal(const FieldContext& F, const FieldPoly& f);

// --- factorization of x^m - lambda0 ---

struct Factorization {
    FieldElement lambda0;
    long long m = 0;
    std::vector<FieldPoly> factors;  // monic irreducible, pairwise distinct, sorted
    int l = 0;                       // factors.size()
};

/// Deterministic factorization of x^m - lambda0 over F_{p^r}; requires
/// gcd(m, p) = 1 and lambda0 != 0.  Roots are located in a splitting
/// field and grouped into Frobenius orbits, so the output is canonical
/// and randomness-free.
Factorization factor_binomial(const FieldContext& F, long long m, const FieldElement& lambda0);

struct ReciprocalSplit {
    std::vector<FieldPoly> selfrec;                       // g_1..g_k
    std::vector<std::pair<FieldPoly, FieldPoly>> pairs;   // (h_j, h_j*), h_j canonically smaller
    int k = 0;
    int t = 0;
};

ReciprocalSplit split_reciprocal(const FieldContext& F, const Factorization& fac);

struct RepeatedFactorization {
    Factorization base;       // factorization of x^m - lambda0
    long long multiplicity;   // p^s
    FieldElement lambda1;     // lambda0^{p^s}
};

/// x^{m p^s} - lambda1 = (x^m - lambda0)^{p^s} with lambda0 = ps_root(lambda1, s).
RepeatedFactorization repeated_factorization(const FieldContext& F, long long m, int s,
                                             const FieldElement& lambda1);

/// Number of orbits of t -> q t on Z_m.
long long cyclotomic_class_count(long long q, long long m);

// --- ring polynomial arithmetic ---

RingPoly rp_normalize(const RingContext& R, RingPoly a);
RingPoly rp_zero();
RingPoly rp_one(const RingContext& R);
RingPoly rp_add(const RingContext& R, const RingPoly& a, const RingPoly& b);
RingPoly rp_sub(const RingContext& R, const RingPoly& a, const RingPoly& b);
RingPoly rp_mul(const RingContext& R, const RingPoly& a, const RingPoly& b);
RingPoly rp_scale(const RingContext& R, const RingElement& s, const RingPoly& a);
/// Reduce modulo x^n - lambda (replace x^n by lambda).
RingPoly rp_mod_binomial(const RingContext& R, RingPoly a, long long n, const RingElement& lambda);
RingPoly rp_pow_mod_binomial(const RingContext& R, const RingPoly& a, long long k, long long n,
                             const RingElement& lambda);
/// Lift a field polynomial into R[x].
RingPoly rp_lift(const RingContext& R, const FieldPoly& f);

std::string rp_to_text(const RingContext& R, const RingPoly& a);

// --- the unit-nilpotency witness ---

struct NilpotencyWitness {
    RingElement rho;       // (alpha0^{-1} x^m - 1)^{p^s} = u * rho, rho a unit
    long long index = 0;   // nilpotency index e p^s of alpha0^{-1} x^m - 1
};

/// Requires lambda to be a unit whose u^1 part is nonzero.  Computes
/// (alpha0^{-1} x^m - 1)^{p^s} in R[x]/(x^n - lambda) and checks it is a
/// constant u*rho with rho a unit; throws std::domain_error otherwise.
NilpotencyWitness nilpotency_witness(const RingContext& R, long long m, int s,
                                     const RingElement& lambda);

}  // namespace ccr

#endif
