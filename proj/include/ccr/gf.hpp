#ifndef CCR_GF_HPP
#define CCR_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccr {

/// Element of F_{p^r}, stored as r base-p digits, constant term first.
struct FieldElement {
    std::vector<int> c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator!=(const FieldElement& o) const { return c != o.c; }
};

/// The field F_{p^r} presented as F_p[x]/(modulus), with the canonical
/// (encoding-minimal) monic irreducible modulus of degree r.  Discrete
/// log / antilog tables are built eagerly at construction, so every
/// instance is immutable and safe to share across threads.
class FieldContext {
public:
    int p = 0;
    int r = 0;
    long long q = 0;                 // p^r
    std::vector<int> modulus;        // length r+1, monic; {0,1} ("x") for r == 1

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long long v) const;  // v mod p as a constant

    bool is_zero(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;   // throws on zero
    FieldElement pow(const FieldElement& a, long long k) const;

    /// Canonical integer encoding: sum c_i p^i.  Total order on elements.
    long long encode(const FieldElement& a) const;
    FieldElement decode(long long code) const;

    /// Code-level arithmetic (used by hot loops; same semantics as above).
    int addc(int a, int b) const;
    int subc(int a, int b) const;
    int negc(int a) const;
    int mulc(int a, int b) const;
    int invc(int a) const;
    int powc(int a, long long k) const;

    /// Discrete log of a nonzero code with respect to the canonical
    /// primitive element; log(1) = 0.
    long long logc(int a) const;

    /// Contract check: element shape matches this field.
    void check(const FieldElement& a) const;

    bool same_field(const FieldContext& o) const;

    const FieldElement& primitive() const { return primitive_; }

    // internal, filled by make_field
    std::vector<int32_t> exp_tab;    // size q-1
    std::vector<int32_t> log_tab;    // size q, log_tab[0] unused
    FieldElement primitive_;
};

/// Builds F_{p^r} with the canonical modulus: among all monic irreducibles
/// of degree r over F_p, the one whose non-leading coefficient vector is
/// minimal as a base-p integer.  1 <= r <= 6, p^r <= 2^16.
FieldContext make_field(int p, int r);

/// Minimal generator of the multiplicative group (order p^r - 1).
FieldElement primitive_element(const FieldContext& F);

/// Some x with x^n = lambda, or empty if none exists.  Deterministic:
/// returns the solution minimal in the canonical encoding.
std::optional<FieldElement> nth_root(const FieldContext& F, const FieldElement& lambda,
                                     long long n);

/// True iff x^2 = -1 is solvable.
bool minus_one_is_square(const FieldContext& F);

/// The unique lambda0 with lambda0^{p^s} = lambda (Frobenius is bijective).
FieldElement ps_root(const FieldContext& F, const FieldElement& lambda, int s);

/// Text form "c0,c1,...,c_{r-1}" (base-p digits, constant term first).
std::string field_elem_to_text(const FieldContext& F, const FieldElement& a);
FieldElement field_elem_from_text(const FieldContext& F, const std::string& s);

/// Text form of the field itself, e.g. "3^2".
std::string field_to_text(const FieldContext& F);

bool is_prime(long long n);

}  // namespace ccr

#endif
