#ifndef CCR_CHAINRING_HPP
#define CCR_CHAINRING_HPP

#include <string>
#include <vector>

#include "ccr/gf.hpp"

namespace ccr {

/// Element v0 + u v1 + ... + u^{e-1} v_{e-1} of R = F_{p^r}[u]/(u^e).
struct RingElement {
    std::vector<FieldElement> v;  // exactly e parts, u^0 first

    bool operator==(const RingElement& o) const { return v == o.v; }
    bool operator!=(const RingElement& o) const { return v != o.v; }
};

/// R = F_{p^r} + u F_{p^r} + ... + u^{e-1} F_{p^r}, u^e = 0.
class RingContext {
public:
    FieldContext field;
    int e = 0;

    RingElement zero() const;
    RingElement one() const;
    RingElement u() const;  // the generator of the maximal ideal (zero when e == 1)
    RingElement from_field(const FieldElement& a) const;  // a as a u^0 constant

    bool is_zero(const RingElement& a) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;

    bool is_unit(const RingElement& a) const;
    RingElement inv(const RingElement& a) const;  // throws when not a unit

    /// Canonical integer encoding: base-q digits over the u-parts,
    /// u^0 part least significant.  Range [0, q^e).
    long long encode(const RingElement& a) const;
    RingElement decode(long long code) const;
    long long size() const;  // |R| = q^e

    void check(const RingElement& a) const;
};

RingContext make_ring(const FieldContext& F, int e);
RingContext make_ring(int p, int r, int e);

/// Homogeneous weight: 0 at 0, p^{r(e-1)} on the nonzero socle
/// <u^{e-1}>, p^{r(e-2)}(p^r - 1) elsewhere.  For e = 1 this degenerates
/// to the Hamming-position weight (1 for every nonzero element); the
/// chain-ring formula needs e >= 2, so that case is a convention.
unsigned long long homogeneous_weight(const RingContext& R, const RingElement& a);

/// Sum of coordinate weights.
unsigned long long vector_weight(const RingContext& R, const std::vector<RingElement>& w);

/// Text form "a0,..,a_{r-1};b0,..;..." with e field-element lists.
std::string ring_elem_to_text(const RingContext& R, const RingElement& a);
RingElement ring_elem_from_text(const RingContext& R, const std::string& s);

}  // namespace ccr

#endif
