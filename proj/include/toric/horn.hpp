#pragma once

// Horn matrices and Horn pairs: the map u -> lambda * (H u)^H and the
// constructions built on it.

#include "toric/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace toric {

struct Multigrading;

/// Integer matrix whose columns each sum to zero.
class HornMatrix {
public:
    HornMatrix() = default;
    /// Throws InvalidHornMatrix for ragged input or a nonzero column sum.
    explicit HornMatrix(std::vector<std::vector<long long>> entries);

    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return entries_.empty() ? 0 : entries_.front().size(); }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }
    long long operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }
    std::vector<long long> column(std::size_t c) const;

    friend bool operator==(const HornMatrix&, const HornMatrix&) = default;

private:
    std::vector<std::vector<long long>> entries_;
};

struct HornPair {
    HornMatrix H;
    RationalVector lambda;                  // one nonzero entry per column
    std::vector<std::string> column_labels; // optional

    /// Throws InvalidHornMatrix on length mismatch or a zero lambda entry.
    void validate() const;
};

/// lambda_c * prod_a ((H u)_a)^{H_ac}, with 0^0 = 1. Throws
/// ZeroToNegativePower naming the row when a vanishing (H u)_a carries a
/// negative exponent.
RationalVector horn_parametrize(const HornPair& pair, std::span<const Rational> u);

struct HornReport {
    bool sums_to_one = true;
    bool positive = true;
    bool symbolic_checked = false; // sum-to-one also verified as an identity in u
    std::string witness;

    bool ok() const { return sums_to_one && positive; }
};

/// Checks both Horn pair conditions on `trials` random positive integer data
/// vectors, plus symbolically when the pair has at most 12 columns.
HornReport validate_horn_pair(const HornPair& pair, std::size_t trials = 100, std::uint64_t seed = 0);

/// Identity atop a row of -1s with lambda = (-1, ..., -1); m outcomes.
HornPair simplex_horn_pair(std::size_t m);

/// Horn pair of the toric fiber product: column (i, j, k) stacks the B
/// column, the C column and minus the column i of simplex_horn_pair(r);
/// lambda^i_jk = -lambda^i_j lambda^i_k. block_b / block_c give the 0-based
/// degree class of each column. Columns are ordered by (i, j, k), with j and
/// k following column order inside each class, and labelled "(i,j,k)" (1-based). Throws InconsistentBlockIndex.
HornPair tfp_horn_pair(const HornPair& pairB, const HornPair& pairC, std::size_t num_classes,
                       const std::vector<std::size_t>& block_b, const std::vector<std::size_t>& block_c);

/// As above; additionally requires the class sizes to match the multigrading.
HornPair tfp_horn_pair(const HornPair& pairB, const HornPair& pairC, const Multigrading& g,
                       const std::vector<std::size_t>& block_b, const std::vector<std::size_t>& block_c);

struct MinimizeResult {
    HornPair pair;
    std::vector<std::string> notes;
};

/// Merges rows that are rational multiples of one another into their sum and
/// folds the resulting constants into lambda; drops zero rows. Classes whose
/// multiples sum to zero are left alone, or raise MergeAborted when strict.
/// The result is checked to agree with the input on 100 random positive u.
MinimizeResult minimize_horn_pair(const HornPair& pair, bool strict = false);

/// Column c of the result is column perm[c] of the input.
HornPair permute_columns(const HornPair& pair, std::span<const std::size_t> perm);

/// Reorders columns so that column_labels equals `labels`.
HornPair align_columns(const HornPair& pair, const std::vector<std::string>& labels);

} // namespace toric
