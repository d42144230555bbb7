#pragma once

#include <array>
#include <map>
#include <vector>

#include "k3/rational.hpp"

namespace k3 {

// Sequence (k_{-a}, ..., k_0, ..., k_a) of 2a+1 non-negative integers whose
// positive entries form a contiguous block containing index 0 and sum to a
// (the weight).  The weight equals sum k_l: pushing the sequence into the
// section-plus-fiber-components class E + sum k_l Sigma_l forces it.
struct AdmissibleSequence {
    long a = 1;
    std::vector<long> k;  // index l stored at k[l + a]

    long at(long l) const { return k[static_cast<size_t>(l + a)]; }
};

// Class d*H - sum alpha_i E_i on a blown-up plane (mind the minus sign:
// alphas are the multiplicities at the blown-up points, negatives allowed).
struct BlowupClass {
    long d = 0;
    std::vector<long> alphas;
};

enum class BlowupValue { Zero, One, Undecided };

std::vector<AdmissibleSequence> enumerate_admissible(long a);

// True iff k_s - 1 <= k_{s+1} <= k_s and k_{-s} - 1 <= k_{-s-1} <= k_{-s}
// for all s = 0 .. a-1 (unit steps away from the center on both sides).
bool is_pyramidal(const AdmissibleSequence& s);

// For each partition of a (weakly decreasing parts), the sequence counting
// diagram blocks on the diagonals y - x = s.  Bijection onto the pyramidal
// sequences of weight a.
std::map<std::vector<long>, AdmissibleSequence> young_bijection(long a);

// Multiplicity vector (k_0; k_0 - 1, k_{-a}, k_{-a+1} - k_{-a}, ...,
// k_0 - k_{-1}, k_0 - k_1, ..., k_{a-1} - k_a, k_a); its entries always sum
// to 3 k_0 - 1, the dimension-0 condition.
BlowupClass class_of_sequence(const AdmissibleSequence& s);

// Cremona move on the multiplicities at positions i, j, k:
//   d -> 2d - a_i - a_j - a_k,  a_i -> d - a_j - a_k, ...  (involution).
BlowupClass cremona_move(const BlowupClass& c, size_t i, size_t j, size_t k);

// Evaluates the genus-0 degree-d invariant with multiplicities alphas by a
// memoized rewriting search over exactly these rules:
//   (i)   N(1) = 1, and the base chain N(d; d-1) = 1;
//   (ii)  multiplicities 0 and 1 may be dropped or added freely;
//   (iii) the multiset order of multiplicities is irrelevant;
//   (iv)  any negative multiplicity forces 0, except the exceptional class
//         itself (d = 0, a single -1, rest 0), which evaluates to 1;
//   (v)   Cremona moves on any triple of entries, where up to three of the
//         entries may be synthetic 0/1 multiplicities added via (ii) -- read
//         in both directions, these unlock moves such as the one sending
//         (2; 2) via the triple (2,1,1) to a class with negative entries.
// Returns Undecided when no chain of <= max_depth moves reaches a rule.
BlowupValue blowup_eval(const BlowupClass& c, long max_depth = 64);

// Local contribution (prod_i p(a_i)) * (prod_j b_j sigma_1(b_j)) of a
// component indexed by a 24-vector of section offsets and g fiber degrees.
Integer gbl_contribution(const std::array<long, 24>& a_vec, const std::vector<long>& b_vec);

// All partitions of a into weakly decreasing positive parts.
std::vector<std::vector<long>> partitions_of(long a);

}  // namespace k3
