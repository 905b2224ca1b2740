#include "ccr/chainring.hpp"

#include <stdexcept>

namespace ccr {

RingElement RingContext::zero() const {
    return RingElement{std::vector<FieldElement>(e, field.zero())};
}

RingElement RingContext::one() const {
    RingElement a = zero();
    a.v[0] = field.one();
    return a;
}

RingElement RingContext::u() const {
    RingElement a = zero();
    if (e >= 2) a.v[1] = field.one();
    return a;
}

RingElement RingContext::from_field(const FieldElement& a) const {
    RingElement out = zero();
    out.v[0] = a;
    return out;
}

void RingContext::check(const RingElement& a) const {
    if ((int)a.v.size() != e)
        throw std::invalid_argument("ring element does not belong to this ring (wrong length)");
    for (const auto& part : a.v) field.check(part);
}

bool RingContext::is_zero(const RingElement& a) const {
    check(a);
    for (const auto& part : a.v)
        if (!field.is_zero(part)) return false;
    return true;
}

RingElement RingContext::add(const RingElement& a, const RingElement& b) const {
    check(a);
    check(b);
    RingElement out = zero();
    for (int i = 0; i < e; ++i) out.v[i] = field.add(a.v[i], b.v[i]);
    return out;
}

RingElement RingContext::sub(const RingElement& a, const RingElement& b) const {
    return add(a, neg(b));
}

RingElement RingContext::neg(const RingElement& a) const {
    check(a);
    RingElement out = zero();
    for (int i = 0; i < e; ++i) out.v[i] = field.neg(a.v[i]);
    return out;
}

RingElement RingContext::mul(const RingElement& a, const RingElement& b) const {
    check(a);
    check(b);
    RingElement out = zero();
    for (int i = 0; i < e; ++i)
        for (int j = 0; i + j < e; ++j)
            out.v[i + j] = field.add(out.v[i + j], field.mul(a.v[i], b.v[j]));
    return out;
}

bool RingContext::is_unit(const RingElement& a) const {
    check(a);
    return !field.is_zero(a.v[0]);
}

RingElement RingContext::inv(const RingElement& a) const {
    if (!is_unit(a)) throw std::domain_error("ring_inv: element is not a unit");
    // a = c0 (1 + n) with n nilpotent; invert by the geometric series.
    RingElement c0inv = from_field(field.inv(a.v[0]));
    RingElement n = mul(c0inv, a);  // 1 + nilpotent
    n.v[0] = field.zero();          // the nilpotent part
    RingElement acc = one();
    RingElement term = one();
    for (int k = 1; k < e; ++k) {
        term = neg(mul(term, n));
        acc = add(acc, term);
    }
    return mul(c0inv, acc);
}

long long RingContext::encode(const RingElement& a) const {
    check(a);
    long long code = 0, w = 1;
    for (int i = 0; i < e; ++i) {
        code += field.encode(a.v[i]) * w;
        w *= field.q;
    }
    return code;
}

RingElement RingContext::decode(long long code) const {
    RingElement a = zero();
    for (int i = 0; i < e; ++i) {
        a.v[i] = field.decode(code % field.q);
        code /= field.q;
    }
    if (code != 0) throw std::invalid_argument("ring code out of range");
    return a;
}

long long RingContext::size() const {
    long long s = 1;
    for (int i = 0; i < e; ++i) s *= field.q;
    return s;
}

RingContext make_ring(const FieldContext& F, int e) {
    if (e < 1) throw std::invalid_argument("make_ring: e must be >= 1");
    RingContext R;
    R.field = F;
    R.e = e;
    return R;
}

RingContext make_ring(int p, int r, int e) { return make_ring(make_field(p, r), e); }

unsigned long long homogeneous_weight(const RingContext& R, const RingElement& a) {
    R.check(a);
    if (R.is_zero(a)) return 0;
    if (R.e == 1) return 1;  // convention, see header
    auto qpow = [&](int k) {
        unsigned long long w = 1;
        for (int i = 0; i < k; ++i) w *= (unsigned long long)R.field.q;
        return w;
    };
    bool in_socle = true;
    for (int i = 0; i + 1 < R.e; ++i)
        if (!R.field.is_zero(a.v[i])) in_socle = false;
    if (in_socle) return qpow(R.e - 1);
    return qpow(R.e - 2) * (unsigned long long)(R.field.q - 1);
}

unsigned long long vector_weight(const RingContext& R, const std::vector<RingElement>& w) {
    unsigned long long total = 0;
    for (const auto& a : w) total += homogeneous_weight(R, a);
    return total;
}

std::string ring_elem_to_text(const RingContext& R, const RingElement& a) {
    R.check(a);
    std::string out;
    for (int i = 0; i < R.e; ++i) {
        if (i) out.push_back(';');
        out += field_elem_to_text(R.field, a.v[i]);
    }
    return out;
}

RingElement ring_elem_from_text(const RingContext& R, const std::string& s) {
    RingElement a = R.zero();
    size_t pos = 0;
    int i = 0;
    while (pos <= s.size()) {
        size_t next = s.find(';', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (i >= R.e) throw std::invalid_argument("too many u-parts in ring element: " + s);
        a.v[i++] = field_elem_from_text(R.field, tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (i != R.e) throw std::invalid_argument("too few u-parts in ring element: " + s);
    return a;
}

}  // namespace ccr
