#ifndef CHAINRING_VERIFY_HPP
#define CHAINRING_VERIFY_HPP

#include <string>
#include <vector>

#include "chainring/weights.hpp"

namespace chainring {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // nonempty on failure or when context helps
};

struct SweepEntry {
    RingSpec spec;
    uint32_t max_k = 1;
};

/// Z4 (k<=3), Z8 (k<=2), Z9 (k<=2), Z27 (k=1), GR(4,2) (k<=2),
/// F2[u]/(u^2) (k<=3), F4[u]/(u^2) (k=1), F3 (k<=3).
std::vector<SweepEntry> default_sweep();

/// One entry per non-comment line: the key=value ring keys plus `kmax=N`.
std::vector<SweepEntry> parse_sweep_file(const std::string& path);

// Per-ring structural checks.
CheckResult check_ring_axioms(const Ring& ring);
CheckResult check_valuation_properties(const Ring& ring);
CheckResult check_ideal_structure(const Ring& ring);
CheckResult check_rank_order(const Ring& ring);
CheckResult check_gray_isometry(const Ring& ring);
CheckResult check_gh_property(const Ring& ring);

// Per-code checks (family alpha or beta, given k).
CheckResult check_row_closed_form(const GeneratorMatrix& alpha);
CheckResult check_gamma_row_content(const GeneratorMatrix& alpha);
CheckResult check_beta_row_content(const GeneratorMatrix& beta);
CheckResult check_column_distinctness(const GeneratorMatrix& G);
CheckResult check_codeword_valuation(const SimplexCode& code, uint64_t cap);
CheckResult check_alpha_codeword_multiset(const SimplexCode& code, uint64_t cap);
CheckResult check_beta_codeword_content(const SimplexCode& code, uint64_t cap);
CheckResult check_valuation_census(const SimplexCode& code, uint64_t cap);
CheckResult check_code_type(const SimplexCode& code, uint64_t cap);
CheckResult check_oracle_equivalence(const SimplexCode& code, WeightKind kind, uint64_t cap);
CheckResult check_gray_image(MatrixFamily family, RingPtr ring, uint32_t k, uint64_t cap);
CheckResult check_griesmer_verdict(MatrixFamily family, const Ring& ring, uint32_t k);
CheckResult check_order_form(const SimplexCode& code, uint64_t cap);
CheckResult check_alpha_trimmed_A(const RingPtr& ring, uint32_t k);
CheckResult check_distance_comparison(const Ring& ring, uint32_t k);

/// Distribution records must agree for rings sharing (q, s).
CheckResult check_ring_independence(const RingSpec& a, const RingSpec& b, uint32_t max_k,
                                    uint64_t cap);

/// Runs every applicable check over the sweep. When `include_regressions` is
/// set and the sweep contains rings with matching (q, s), the
/// ring-independence regression is appended.
std::vector<CheckResult> run_sweep(const std::vector<SweepEntry>& sweep,
                                   uint64_t cap = kDefaultEnumerationCap,
                                   bool include_regressions = true);

}  // namespace chainring

#endif
