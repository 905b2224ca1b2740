#include "ccr/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccr {

bool CodeParams::lambda_squares_to_one() const {
    return ring.mul(lambda, lambda) == ring.one();
}

CodeParams make_code_params(const RingContext& R, long long m, int s, const RingElement& lambda) {
    if (m <= 0) throw std::invalid_argument("code params: m must be positive");
    if (s < 0) throw std::invalid_argument("code params: s must be >= 0");
    if (m % R.field.p == 0) throw std::invalid_argument("code params: gcd(m, p) = 1 required");
    R.check(lambda);
    if (!R.is_unit(lambda))
        throw std::invalid_argument("code params: lambda must be a unit (u^0 part nonzero)");

    CodeParams P;
    P.ring = R;
    P.m = m;
    P.s = s;
    P.ps = 1;
    for (int i = 0; i < s; ++i) {
        P.ps *= R.field.p;
        if (P.ps > (1LL << 40)) throw std::invalid_argument("code params: p^s out of desk range");
    }
    P.n = m * P.ps;
    P.lambda = lambda;
    P.alpha1 = lambda.v[0];

    bool higher_nonzero = false;
    for (int i = 1; i < R.e; ++i)
        if (!R.field.is_zero(lambda.v[i])) higher_nonzero = true;

    if (!higher_nonzero) {
        P.kind = LambdaKind::FieldConstant;
    } else if (R.e >= 2 && !R.field.is_zero(lambda.v[1])) {
        P.kind = LambdaKind::UnitU1;
    } else {
        throw std::invalid_argument(
            "code params: lambda has zero u^1 part but nonzero higher parts; "
            "outside both supported regimes");
    }

    P.alpha0 = ps_root(R.field, P.alpha1, s);
    P.fac = factor_binomial(R.field, m, P.alpha0);
    return P;
}

PrincipalCode build_principal(const CodeParams& params, std::vector<long long> exponents) {
    if (params.kind != LambdaKind::UnitU1)
        throw std::invalid_argument("build_principal: lambda kind mismatch (needs nonzero u^1 part)");
    if ((long long)exponents.size() != params.fac.l)
        throw std::invalid_argument("build_principal: exponent vector length != factor count");
    for (long long siv : exponents)
        if (siv < 0 || siv > params.exp_bound())
            throw std::invalid_argument("build_principal: exponent out of [0, e p^s]");
    return PrincipalCode{params, std::move(exponents)};
}

RingPoly principal_generator(const PrincipalCode& c) {
    FieldPoly g = fp_one(c.params.ring.field);
    for (size_t i = 0; i < c.exponents.size(); ++i)
        g = fp_mul(c.params.ring.field, g,
                   fp_pow(c.params.ring.field, c.params.fac.factors[i], c.exponents[i]));
    RingPoly lifted = rp_lift(c.params.ring, g);
    return rp_mod_binomial(c.params.ring, lifted, c.params.n, c.params.lambda);
}

namespace {

BigInt big_pow(long long base, long long exp) {
    BigInt acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

CardinalityReport principal_cardinality(const PrincipalCode& c) {
    const CodeParams& P = c.params;
    long long weighted = 0;
    for (size_t i = 0; i < c.exponents.size(); ++i)
        weighted += c.exponents[i] * (P.fac.factors[i].deg());
    CardinalityReport rep;
    rep.log_p = (long long)P.ring.field.r * ((long long)P.ring.e * P.n - weighted);
    rep.printed_log_p = (long long)P.ring.field.r * P.ring.e * (P.n - weighted);
    rep.value = big_pow(P.ring.field.p, rep.log_p);
    rep.printed_differs = rep.printed_log_p != rep.log_p;
    if (rep.printed_log_p >= 0) rep.printed_value = big_pow(P.ring.field.p, rep.printed_log_p);
    return rep;
}

BigInt count_codes(const CodeParams& params) {
    if (params.kind != LambdaKind::UnitU1)
        throw std::invalid_argument("count_codes: lambda kind mismatch (needs nonzero u^1 part)");
    BigInt acc = 1;
    BigInt base = params.exp_bound() + 1;
    for (int i = 0; i < params.fac.l; ++i) acc *= base;
    return acc;
}

DualDescription dual_principal(const PrincipalCode& c) {
    const CodeParams& P = c.params;
    const FieldContext& F = P.ring.field;

    DualDescription d;
    d.lambda_inv = P.ring.inv(P.lambda);
    d.dual_params = make_code_params(P.ring, P.m, P.s, d.lambda_inv);

    // monic(f_i^*) is a canonical factor of x^m - alpha0^{-1}; it carries
    // exponent e p^s - s_i.
    d.exponents.assign(d.dual_params.fac.l, -1);
    for (size_t i = 0; i < P.fac.factors.size(); ++i) {
        FieldPoly star = fp_monic(F, reciprocal(F, P.fac.factors[i]));
        auto it = std::find(d.dual_params.fac.factors.begin(), d.dual_params.fac.factors.end(), star);
        if (it == d.dual_params.fac.factors.end())
            throw std::logic_error("dual_principal: reciprocal factor not found in dual factorization");
        d.exponents[it - d.dual_params.fac.factors.begin()] = P.exp_bound() - c.exponents[i];
    }
    for (long long v : d.exponents)
        if (v < 0) throw std::logic_error("dual_principal: incomplete exponent map");

    PrincipalCode dual_code{d.dual_params, d.exponents};
    d.generator = principal_generator(dual_code);
    return d;
}

bool is_self_dual(const PrincipalCode& c) {
    if (!c.params.lambda_squares_to_one()) return false;
    DualDescription d = dual_principal(c);
    // lambda^{-1} = lambda, so both factorizations coincide
    return d.exponents == c.exponents;
}

TowerCode tower_code(const CodeParams& params, std::vector<FieldPoly> tower) {
    if (params.kind != LambdaKind::FieldConstant)
        throw std::invalid_argument("tower_code: lambda must be a field constant");
    const FieldContext& F = params.ring.field;
    if ((int)tower.size() != params.ring.e)
        throw std::invalid_argument("tower_code: need exactly e polynomials");
    FieldPoly ambient = fp_binomial(F, params.n, params.alpha1);
    for (auto& Fi : tower) {
        Fi = fp_monic(F, Fi);
        if (Fi.is_zero() || !fp_divides(F, Fi, ambient))
            throw std::invalid_argument("tower_code: F_i does not divide x^n - lambda");
    }
    for (size_t i = 1; i < tower.size(); ++i)
        if (!fp_divides(F, tower[i], tower[0]))
            throw std::invalid_argument("tower_code: F_i | F_0 violated");
    return TowerCode{params, std::move(tower)};
}

std::vector<RingPoly> tower_generators(const TowerCode& c) {
    const RingContext& R = c.params.ring;
    std::vector<RingPoly> gens;
    RingElement upow = R.one();
    for (int i = 0; i < R.e; ++i) {
        gens.push_back(rp_scale(R, upow, rp_lift(R, c.tower[i])));
        upow = R.mul(upow, R.u());
    }
    return gens;
}

std::optional<BigInt> tower_cardinality(const TowerCode& c) {
    const FieldContext& F = c.params.ring.field;
    for (size_t i = 1; i < c.tower.size(); ++i)
        if (!fp_divides(F, c.tower[i], c.tower[i - 1])) return std::nullopt;
    long long log_p = 0;
    for (const auto& Fi : c.tower) log_p += (long long)F.r * (c.params.n - Fi.deg());
    return big_pow(F.p, log_p);
}

EquivalenceReport equivalent_to_cyclic(const CodeParams& params) {
    EquivalenceReport rep;
    const FieldContext& F = params.ring.field;
    if (params.kind != LambdaKind::FieldConstant) {
        rep.equivalent = false;
        rep.reason = "lambda is not in the residue field";
        return rep;
    }
    const FieldElement lam = params.alpha1;

    if (params.n % 2 == 1) rep.criterion_odd_length = nth_root(F, lam, params.m).has_value();
    if (params.m % 2 == 0 && (params.m / 2) % 2 == 1 && F.q % 4 == 1)
        rep.criterion_qs_mod4 = nth_root(F, lam, params.m).has_value();

    auto root = nth_root(F, lam, params.n);
    if (root) {
        rep.equivalent = true;
        rep.delta0 = *root;
        rep.reason = "lambda is an n-th power";
    } else {
        rep.equivalent = false;
        rep.reason = "lambda is not an n-th power in F_" + std::to_string(F.q);
    }
    return rep;
}

RingPoly equivalence_map(const CodeParams& params, const FieldElement& delta0, const RingPoly& f) {
    const FieldContext& F = params.ring.field;
    if (F.pow(delta0, params.n) != params.alpha1 || params.kind != LambdaKind::FieldConstant)
        throw std::invalid_argument("equivalence_map: delta0^n != lambda");
    RingPoly out = f;
    FieldElement dinv = F.inv(delta0);
    FieldElement scale = F.one();
    for (size_t i = 0; i < out.c.size(); ++i) {
        out.c[i] = params.ring.mul(params.ring.from_field(scale), out.c[i]);
        scale = F.mul(scale, dinv);
    }
    return rp_normalize(params.ring, out);
}

std::vector<RingElement> equivalence_map_word(const CodeParams& params, const FieldElement& delta0,
                                              const std::vector<RingElement>& word) {
    const FieldContext& F = params.ring.field;
    if (F.pow(delta0, params.n) != params.alpha1 || params.kind != LambdaKind::FieldConstant)
        throw std::invalid_argument("equivalence_map: delta0^n != lambda");
    std::vector<RingElement> out = word;
    FieldElement dinv = F.inv(delta0);
    FieldElement scale = F.one();
    for (auto& coord : out) {
        coord = params.ring.mul(params.ring.from_field(scale), coord);
        scale = F.mul(scale, dinv);
    }
    return out;
}

TowerCode equivalence_map_tower(const CodeParams& params, const FieldElement& delta0,
                                const TowerCode& c) {
    const FieldContext& F = params.ring.field;
    std::vector<FieldPoly> mapped;
    for (const auto& Fi : c.tower) {
        FieldPoly g = Fi;
        FieldElement dinv = F.inv(delta0);
        FieldElement scale = F.one();
        for (auto& coeff : g.c) {
            coeff = F.mul(scale, coeff);
            scale = F.mul(scale, dinv);
        }
        mapped.push_back(fp_monic(F, g));
    }
    return tower_code(params, std::move(mapped));
}

std::optional<long long> negation_witness(long long q, long long m) {
    if (m <= 1) return std::nullopt;
    long long cur = 1;
    for (long long i = 1; i <= m; ++i) {
        cur = cur * (q % m) % m;
        if (cur == (m - 1) % m) return i;
        if (cur == 1 % m) break;
    }
    return std::nullopt;
}

}  // namespace ccr
