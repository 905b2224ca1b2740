#include "ccr/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccr {

namespace {

constexpr long long kCoordTableCap = 2048;  // build |R|x|R| tables below this

// Packed coordinate arithmetic for one parameter set.  Words are arrays
// of coordinate codes in [0, |R|); a whole word packs into a uint32 with
// coordinate 0 most significant, so numeric order == lexicographic order.
struct Codec {
    const CodeParams& P;
    long long nR;
    int n;
    bool tables = false;
    std::vector<int32_t> addt, mult;
    std::vector<int32_t> negt;
    int32_t lambda_code;
    std::vector<uint64_t> pw;  // nR^i

    explicit Codec(const CodeParams& params) : P(params) {
        nR = P.ring.size();
        n = (int)P.n;
        lambda_code = (int32_t)P.ring.encode(P.lambda);
        pw.assign(n + 1, 1);
        for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (uint64_t)nR;
        if (nR <= kCoordTableCap) {
            tables = true;
            addt.assign(nR * nR, 0);
            mult.assign(nR * nR, 0);
            negt.assign(nR, 0);
            std::vector<RingElement> elems;
            elems.reserve(nR);
            for (long long i = 0; i < nR; ++i) elems.push_back(P.ring.decode(i));
            for (long long i = 0; i < nR; ++i) {
                negt[i] = (int32_t)P.ring.encode(P.ring.neg(elems[i]));
                for (long long j = 0; j < nR; ++j) {
                    addt[i * nR + j] = (int32_t)P.ring.encode(P.ring.add(elems[i], elems[j]));
                    mult[i * nR + j] = (int32_t)P.ring.encode(P.ring.mul(elems[i], elems[j]));
                }
            }
        }
    }

    int32_t addc(int32_t a, int32_t b) const {
        if (tables) return addt[(long long)a * nR + b];
        return (int32_t)P.ring.encode(P.ring.add(P.ring.decode(a), P.ring.decode(b)));
    }
    int32_t mulc(int32_t a, int32_t b) const {
        if (tables) return mult[(long long)a * nR + b];
        return (int32_t)P.ring.encode(P.ring.mul(P.ring.decode(a), P.ring.decode(b)));
    }

    uint32_t pack(const std::vector<int32_t>& w) const {
        uint64_t code = 0;
        for (int i = 0; i < n; ++i) code += (uint64_t)w[i] * pw[n - 1 - i];
        return (uint32_t)code;
    }
    std::vector<int32_t> unpack(uint32_t code) const {
        std::vector<int32_t> w(n);
        uint64_t c = code;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = (int32_t)(c % (uint64_t)nR);
            c /= (uint64_t)nR;
        }
        return w;
    }

    // (c0,...,c_{n-1}) -> (lambda c_{n-1}, c0,..., c_{n-2})
    void shift(std::vector<int32_t>& w) const {
        int32_t last = w[n - 1];
        for (int i = n - 1; i > 0; --i) w[i] = w[i - 1];
        w[0] = mulc(lambda_code, last);
    }

    std::vector<int32_t> add_words(const std::vector<int32_t>& a,
                                   const std::vector<int32_t>& b) const {
        std::vector<int32_t> out(n);
        for (int i = 0; i < n; ++i) out[i] = addc(a[i], b[i]);
        return out;
    }
    std::vector<int32_t> scale_word(int32_t s, const std::vector<int32_t>& a) const {
        std::vector<int32_t> out(n);
        for (int i = 0; i < n; ++i) out[i] = mulc(s, a[i]);
        return out;
    }
};

std::vector<int32_t> word_from_poly(const Codec& cc, const RingPoly& f) {
    RingPoly red = rp_mod_binomial(cc.P.ring, f, cc.P.n, cc.P.lambda);
    std::vector<int32_t> w(cc.n, 0);
    for (int i = 0; i <= red.deg(); ++i) w[i] = (int32_t)cc.P.ring.encode(red.c[i]);
    return w;
}

// module span of the basis words inside the bitset/list pair
void span_extend(const Codec& cc, std::vector<bool>& in, std::vector<uint32_t>& list,
                 const std::vector<std::vector<int32_t>>& basis, Exec exec) {
    for (const auto& b : basis) {
        uint32_t bcode = cc.pack(b);
        if (in[bcode]) continue;
        // scaled copies of b, once per pass
        std::vector<std::vector<int32_t>> scaled;
        scaled.reserve(cc.nR - 1);
        for (int32_t s = 1; s < cc.nR; ++s) scaled.push_back(cc.scale_word(s, b));
        size_t snapshot = list.size();
        std::vector<uint32_t> fresh;

        if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                std::vector<uint32_t> local;
#pragma omp for schedule(static)
                for (long long idx = 0; idx < (long long)snapshot; ++idx) {
                    auto w = cc.unpack(list[idx]);
                    for (const auto& sb : scaled) {
                        local.push_back(cc.pack(cc.add_words(w, sb)));
                    }
                }
#pragma omp critical
                fresh.insert(fresh.end(), local.begin(), local.end());
            }
#else
            exec = Exec::Serial;
#endif
        }
        if (exec == Exec::Serial) {
            for (size_t idx = 0; idx < snapshot; ++idx) {
                auto w = cc.unpack(list[idx]);
                for (const auto& sb : scaled)
                    fresh.push_back(cc.pack(cc.add_words(w, sb)));
            }
        }
        for (uint32_t code : fresh) {
            if (!in[code]) {
                in[code] = true;
                list.push_back(code);
            }
        }
    }
}

std::vector<std::vector<int32_t>> shift_basis(const Codec& cc,
                                              const std::vector<std::vector<int32_t>>& gens) {
    std::vector<std::vector<int32_t>> basis;
    for (auto g : gens) {
        for (int j = 0; j < cc.n; ++j) {
            basis.push_back(g);
            cc.shift(g);
        }
    }
    return basis;
}

CodewordSet finish(const CodeParams& params, std::vector<uint32_t> list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return CodewordSet{params, std::move(list)};
}

std::vector<uint32_t> span_of_words(const Codec& cc, const std::vector<std::vector<int32_t>>& gens,
                                    Exec exec) {
    std::vector<bool> in((size_t)ambient_size(cc.P), false);
    std::vector<uint32_t> list;
    in[0] = true;
    list.push_back(0);
    span_extend(cc, in, list, shift_basis(cc, gens), exec);
    return list;
}

}  // namespace

long long ambient_size(const CodeParams& params) {
    long long nR = params.ring.size();
    long long total = 1;
    for (long long i = 0; i < params.n; ++i) {
        total *= nR;
        if (total > kClosureCap) return total;  // callers check caps
    }
    return total;
}

CodewordSet close_ideal(const CodeParams& params, const std::vector<RingPoly>& generators,
                        Exec exec) {
    if (ambient_size(params) > kClosureCap)
        throw std::domain_error("close_ideal: |R|^n exceeds the 2^24 cap");
    Codec cc(params);
    std::vector<std::vector<int32_t>> gens;
    for (const auto& g : generators) gens.push_back(word_from_poly(cc, g));
    return finish(params, span_of_words(cc, gens, exec));
}

std::vector<CodewordSet> all_ideals(const CodeParams& params, Exec exec) {
    long long ambient = ambient_size(params);
    if (ambient > kAllIdealsCap)
        throw std::domain_error("all_ideals: |R|^n exceeds the 2^16 cap");
    Codec cc(params);

    std::set<std::vector<uint32_t>> found;
    // closures of every single word
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::set<std::vector<uint32_t>> local;
#pragma omp for schedule(dynamic, 64)
            for (long long seed = 0; seed < ambient; ++seed) {
                auto lst = span_of_words(cc, {cc.unpack((uint32_t)seed)}, Exec::Serial);
                std::sort(lst.begin(), lst.end());
                local.insert(std::move(lst));
            }
#pragma omp critical
            found.insert(local.begin(), local.end());
        }
#else
        exec = Exec::Serial;
#endif
    }
    if (exec == Exec::Serial) {
        for (long long seed = 0; seed < ambient; ++seed) {
            auto lst = span_of_words(cc, {cc.unpack((uint32_t)seed)}, Exec::Serial);
            std::sort(lst.begin(), lst.end());
            found.insert(std::move(lst));
        }
    }

    // pairwise joins until a fixpoint; the join of two ideals is the span
    // of their union, grown incrementally from the larger one
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<uint32_t>> snapshot(found.begin(), found.end());
        for (size_t a = 0; a < snapshot.size(); ++a) {
            for (size_t b = a + 1; b < snapshot.size(); ++b) {
                const auto& A = snapshot[a];
                const auto& B = snapshot[b];
                std::vector<bool> in((size_t)ambient, false);
                std::vector<uint32_t> list(A);
                for (uint32_t wv : A) in[wv] = true;
                std::vector<std::vector<int32_t>> extra;
                for (uint32_t wv : B)
                    if (!in[wv]) extra.push_back(cc.unpack(wv));
                if (extra.empty()) continue;
                span_extend(cc, in, list, extra, Exec::Serial);
                std::sort(list.begin(), list.end());
                if (found.insert(std::move(list)).second) grew = true;
            }
        }
    }

    std::vector<CodewordSet> out;
    out.reserve(found.size());
    for (auto& wl : found) out.push_back(CodewordSet{params, wl});
    std::sort(out.begin(), out.end(), [](const CodewordSet& x, const CodewordSet& y) {
        if (x.words.size() != y.words.size()) return x.words.size() < y.words.size();
        return x.words < y.words;
    });
    return out;
}

CodewordSet exhaustive_dual(const CodewordSet& c, Exec exec) {
    long long ambient = ambient_size(c.params);
    if (ambient > kClosureCap)
        throw std::domain_error("exhaustive_dual: |R|^n exceeds the 2^24 cap");
    Codec cc(c.params);

    // pre-unpack the codewords once
    std::vector<int32_t> flat((size_t)c.words.size() * cc.n);
    for (size_t i = 0; i < c.words.size(); ++i) {
        auto w = cc.unpack(c.words[i]);
        std::copy(w.begin(), w.end(), flat.begin() + (long long)i * cc.n);
    }

    auto orthogonal = [&](uint32_t vcode) {
        auto v = cc.unpack(vcode);
        for (size_t i = 0; i < c.words.size(); ++i) {
            const int32_t* w = flat.data() + (long long)i * cc.n;
            int32_t acc = 0;
            for (int k = 0; k < cc.n; ++k) acc = cc.addc(acc, cc.mulc(v[k], w[k]));
            if (acc != 0) return false;
        }
        return true;
    };

    std::vector<uint32_t> hits;
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<uint32_t> local;
#pragma omp for schedule(dynamic, 1024)
            for (long long v = 0; v < ambient; ++v)
                if (orthogonal((uint32_t)v)) local.push_back((uint32_t)v);
#pragma omp critical
            hits.insert(hits.end(), local.begin(), local.end());
        }
#else
        exec = Exec::Serial;
#endif
    }
    if (exec == Exec::Serial) {
        for (long long v = 0; v < ambient; ++v)
            if (orthogonal((uint32_t)v)) hits.push_back((uint32_t)v);
    }
    return finish(c.params, std::move(hits));
}

bool check_constacyclic(const CodewordSet& c) {
    Codec cc(c.params);
    for (uint32_t code : c.words) {
        auto w = cc.unpack(code);
        cc.shift(w);
        if (!std::binary_search(c.words.begin(), c.words.end(), cc.pack(w))) return false;
    }
    return true;
}

bool is_linear(const CodewordSet& c) {
    Codec cc(c.params);
    for (uint32_t a : c.words) {
        auto wa = cc.unpack(a);
        for (int32_t s = 0; s < cc.nR; ++s) {
            if (!std::binary_search(c.words.begin(), c.words.end(), cc.pack(cc.scale_word(s, wa))))
                return false;
        }
        for (uint32_t b : c.words) {
            auto sum = cc.add_words(wa, cc.unpack(b));
            if (!std::binary_search(c.words.begin(), c.words.end(), cc.pack(sum))) return false;
        }
    }
    return true;
}

bool is_self_orthogonal(const CodewordSet& c) {
    Codec cc(c.params);
    std::vector<std::vector<int32_t>> ws;
    ws.reserve(c.words.size());
    for (uint32_t code : c.words) ws.push_back(cc.unpack(code));
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i; j < ws.size(); ++j) {
            int32_t acc = 0;
            for (int k = 0; k < cc.n; ++k) acc = cc.addc(acc, cc.mulc(ws[i][k], ws[j][k]));
            if (acc != 0) return false;
        }
    return true;
}

std::map<unsigned long long, unsigned long long> weight_histogram(const CodewordSet& c) {
    Codec cc(c.params);
    std::vector<unsigned long long> wt(cc.nR);
    for (long long i = 0; i < cc.nR; ++i)
        wt[i] = homogeneous_weight(c.params.ring, c.params.ring.decode(i));
    std::map<unsigned long long, unsigned long long> hist;
    for (uint32_t code : c.words) {
        auto w = cc.unpack(code);
        unsigned long long total = 0;
        for (int32_t x : w) total += wt[x];
        ++hist[total];
    }
    return hist;
}

CodewordSet equivalence_image(const CodewordSet& c, const FieldElement& delta0,
                              const CodeParams& target) {
    const CodeParams& src = c.params;
    if (src.kind != LambdaKind::FieldConstant || src.alpha1 != src.ring.field.one())
        throw std::invalid_argument("equivalence_image: source must be a cyclic ambient");
    if (src.n != target.n || !src.ring.field.same_field(target.ring.field) ||
        src.ring.e != target.ring.e)
        throw std::invalid_argument("equivalence_image: incompatible parameter sets");
    if (target.ring.field.pow(delta0, target.n) != target.alpha1)
        throw std::invalid_argument("equivalence_image: delta0^n != lambda");

    Codec cs(src), ct(target);
    const FieldContext& F = target.ring.field;
    // coordinate scale factors delta0^{-i} as ring codes
    std::vector<int32_t> scale(ct.n);
    FieldElement dinv = F.inv(delta0);
    FieldElement cur = F.one();
    for (int i = 0; i < ct.n; ++i) {
        scale[i] = (int32_t)target.ring.encode(target.ring.from_field(cur));
        cur = F.mul(cur, dinv);
    }
    std::vector<uint32_t> mapped;
    mapped.reserve(c.words.size());
    for (uint32_t code : c.words) {
        auto w = cs.unpack(code);
        for (int i = 0; i < ct.n; ++i) w[i] = ct.mulc(scale[i], w[i]);
        mapped.push_back(ct.pack(w));
    }
    return finish(target, std::move(mapped));
}

CodewordSet make_codeword_set(const CodeParams& params,
                              const std::vector<std::vector<RingElement>>& words) {
    Codec cc(params);
    std::vector<uint32_t> codes;
    codes.reserve(words.size());
    for (const auto& w : words) {
        if ((long long)w.size() != params.n)
            throw std::invalid_argument("make_codeword_set: word length != n");
        std::vector<int32_t> digits(cc.n);
        for (int i = 0; i < cc.n; ++i) digits[i] = (int32_t)params.ring.encode(w[i]);
        codes.push_back(cc.pack(digits));
    }
    return finish(params, std::move(codes));
}

std::vector<RingElement> codeword_at(const CodewordSet& c, size_t i) {
    Codec cc(c.params);
    auto digits = cc.unpack(c.words.at(i));
    std::vector<RingElement> out;
    out.reserve(digits.size());
    for (int32_t d : digits) out.push_back(c.params.ring.decode(d));
    return out;
}

bool contains_word(const CodewordSet& c, const std::vector<RingElement>& w) {
    Codec cc(c.params);
    std::vector<int32_t> digits(cc.n);
    for (int i = 0; i < cc.n; ++i) digits[i] = (int32_t)c.params.ring.encode(w[i]);
    return std::binary_search(c.words.begin(), c.words.end(), cc.pack(digits));
}

}  // namespace ccr
