#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "naed/circuits.hpp"
#include "naed/code.hpp"
#include "naed/statevec.hpp"

namespace naed {

/// Post-selection counts for one batch of shots. All fields are exact
/// integers; T = r0 + r1 + ra + rb always holds.
struct Tally {
  std::uint64_t total = 0;     // T
  std::uint64_t r0 = 0;        // logical all-zeros
  std::uint64_t r1 = 0;        // logical all-ones
  std::uint64_t ra = 0;        // accepted, any other logical string
  std::uint64_t rb = 0;        // rejected
  std::map<std::string, std::uint64_t> accepted_hist;  // logical string -> n

  /// Associative merge for parallel reduction over shot batches.
  void merge(const Tally& other);
};

struct Metrics {
  double mu_full = 0.0;
  std::optional<double> mu_naed;  // absent when every shot was rejected
  double p_kept = 0.0;
};

/// Similarity 100 - 50 * sum |A_i - B_i| over the union of keys: 0 for
/// disjoint PDFs, 100 for identical ones. Throws ValidationError when either
/// input does not sum to 1 within 1e-9.
double similarity(const Pdf& a, const Pdf& b);

/// Classifies every shot against the code and accumulates counts.
/// Throws ValidationError on a string whose length is not N*Q.
Tally tally(const Counts& shots, const BitFlipCode& code, int n_logical);

/// Builds a tally directly from an exact distribution: each probability
/// times `total` must be integral within 1e-6.
Tally tally_from_pdf(const Pdf& pdf, const BitFlipCode& code, int n_logical,
                     std::uint64_t total);

/// All three reported metrics on the 0-100 scale. mu_full compares the full
/// empirical PDF with the two-point ideal; since the ideal has no mass
/// outside the two GHZ strings, it reduces to exact tally arithmetic.
/// mu_naed renormalizes the accepted histogram over logical strings.
Metrics metrics(const Tally& t, int n_logical, int q);

/// Exact-arithmetic check of mu_full == p_kept - 100*ra/T; only applicable
/// while neither r0 nor r1 exceeds T/2 (no clipping in the absolute values).
struct IdentityCheck {
  bool applicable = false;    // false when clipping is active
  std::int64_t residual = 0;  // numerator over 2T, zero when it holds
};

IdentityCheck identity_check(const Tally& t);

/// Empirical PDF from counts (each count divided by the total).
Pdf pdf_from_counts(const Counts& counts);

/// The full-state PDF as a sparse map, dropping exact zeros.
Pdf pdf_from_state(const StateVector& state);

std::string tally_to_json(const Tally& t);
std::string metrics_to_json(const Metrics& m);

}  // namespace naed
