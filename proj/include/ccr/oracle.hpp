#ifndef CCR_ORACLE_HPP
#define CCR_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ccr/codes.hpp"

namespace ccr {

/// Kernel selection for the enumeration loops.  Parallel and serial
/// paths produce identical, canonically ordered output; the serial path
/// is the reference the parallel one is tested against.
enum class Exec { Serial, Parallel };

inline constexpr long long kClosureCap = 1LL << 24;   // |R|^n cap for single closures
inline constexpr long long kAllIdealsCap = 1LL << 16; // |R|^n cap for full ideal enumeration

/// An explicit code: every codeword of an ideal of R[x]/(x^n - lambda),
/// stored as packed coordinate codes in canonical (lexicographic) order.
struct CodewordSet {
    CodeParams params;
    std::vector<uint32_t> words;  // sorted ascending

    long long size() const { return (long long)words.size(); }
    bool operator==(const CodewordSet& o) const { return words == o.words; }
};

long long ambient_size(const CodeParams& params);  // |R|^n

/// Smallest set containing the generators that is closed under addition,
/// R-scalar multiplication and the constacyclic shift.
CodewordSet close_ideal(const CodeParams& params, const std::vector<RingPoly>& generators,
                        Exec exec = Exec::Parallel);

/// Every distinct ideal: single-generator closures joined pairwise to a
/// fixpoint.  Deterministic canonical order (size, then lexicographic).
std::vector<CodewordSet> all_ideals(const CodeParams& params, Exec exec = Exec::Parallel);

/// All vectors orthogonal to every codeword (standard inner product).
CodewordSet exhaustive_dual(const CodewordSet& c, Exec exec = Exec::Parallel);

/// True iff the set is closed under the lambda-constacyclic shift.
bool check_constacyclic(const CodewordSet& c);

/// True iff the set is closed under addition and R-scalar multiplication.
bool is_linear(const CodewordSet& c);

/// True iff every pair of codewords has zero inner product.
bool is_self_orthogonal(const CodewordSet& c);

/// Homogeneous weight -> multiplicity.
std::map<unsigned long long, unsigned long long> weight_histogram(const CodewordSet& c);

/// Image of a cyclic-ambient set under the substitution x -> delta0^{-1} x.
CodewordSet equivalence_image(const CodewordSet& c, const FieldElement& delta0,
                              const CodeParams& target);

/// Wraps explicit words as a CodewordSet (no closure is taken).
CodewordSet make_codeword_set(const CodeParams& params,
                              const std::vector<std::vector<RingElement>>& words);

std::vector<RingElement> codeword_at(const CodewordSet& c, size_t i);

bool contains_word(const CodewordSet& c, const std::vector<RingElement>& w);

}  // namespace ccr

#endif
