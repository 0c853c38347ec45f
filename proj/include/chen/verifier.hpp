#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chen/chartab.hpp"
#include "chen/gl2.hpp"
#include "chen/groupalg.hpp"
#include "chen/invariants.hpp"

namespace chen {

struct CheckResult {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
    double seconds = 0.0;  // wall time, shown in text output only
};

/// An explicit conjugator u with its exact inverse, both verified:
/// u * u_inv = u_inv * u = 1 and u * left * u_inv = right.
struct Certificate {
    AlgebraElement u;
    AlgebraElement u_inv;
    int attempts = 0;  // 1-based attempt index that succeeded
};

/// Result of a conjugator search.
struct SearchOutcome {
    std::optional<Certificate> certificate;
    bool trace_mismatch = false;   // rejected before any linear algebra
    long long kernel_dimension = -1;  // dim of the intertwiner space, when computed
    int attempts = 0;              // samples drawn
};

/// One conjugacy claim about a pair of group-algebra elements.  The verdict
/// is decided by comparing the full trace vectors (traces across every
/// irreducible determine the conjugacy class of an idempotent).
struct ConjugacyClaim {
    std::string name;
    std::string left_label;
    std::string right_label;
    AlgebraElement left;
    AlgebraElement right;
    bool left_idempotent = false;
    bool right_idempotent = false;
    std::vector<Rational> trace_left;
    std::vector<Rational> trace_right;
    bool conjugate = false;
    /// Only set for the claim whose statement needs N' * B+ = G first.
    std::optional<bool> product_prerequisite;
    std::optional<Certificate> certificate;
};

/// Owns the group, character table and group algebra for one prime and
/// builds the claims and conjugator certificates.
class Verifier {
public:
    explicit Verifier(unsigned p, std::optional<unsigned> epsilon = std::nullopt);

    const Group& group() const { return g_; }
    const CharacterTable& table() const { return t_; }
    const GroupAlgebra& algebra() const { return alg_; }

    /// pr_{T'} (1 - pr_G)  vs  pr_T (1 - e_st) (1 - pr_G).
    ConjugacyClaim build_claim_one() const;
    /// (pr_{N'} + pr_{B+}) (1 - pr_G)  vs  pr_N (1 - pr_G), with the
    /// set-product prerequisite N' B+ = G checked both as sets and as the
    /// projector identity pr_{N'} pr_{B+} = pr_G.
    ConjugacyClaim build_claim_two() const;
    /// pr_{B+} vs pr_T: genuinely non-conjugate, used as a control.  No
    /// conjugator search is ever attempted for it.
    ConjugacyClaim build_negative_control() const;

    /// Searches for u with u e1 u^{-1} = e2.  Rejects immediately on a
    /// trace-vector mismatch; otherwise computes the kernel of the linear
    /// system u e1 - e2 u = 0 over the |G| unknown coefficients of u, then
    /// samples random small-integer combinations of the kernel basis until
    /// one is invertible.  The returned certificate is verified exactly.
    SearchOutcome find_conjugator(const AlgebraElement& e1, const AlgebraElement& e2,
                                  std::uint64_t seed, int max_attempts) const;

private:
    Group g_;
    CharacterTable t_;
    GroupAlgebra alg_;
};

struct Options {
    unsigned p = 0;
    std::string task = "all";    // tables | dims | idempotents | conjugacy | certificate | all
    std::string output = "text";  // text | json
    std::string out_path;         // empty writes to the stream passed in
    std::uint64_t seed = 0;
    int max_attempts = 50;
    std::optional<unsigned> epsilon;  // override the default non-residue
};

/// Everything one invocation computed, ready to render.
struct Report {
    unsigned p = 0;
    long long group_order = 0;
    int class_count = 0;
    unsigned epsilon = 0;
    unsigned fp_generator = 0;
    Fp2El fp2_generator{0, 0};
    std::string task;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    /// Claim index -> character labels (shared by all claims).
    std::vector<std::string> char_labels;
    std::vector<ConjugacyClaim> claims;
};

Report run_checks(const Verifier& v, const Options& opt);

std::string render_text(const Report& r);
/// Deterministic: identical bytes for identical (p, seed, flags).  Key
/// order is fixed and no timings are included.
std::string render_json(const Report& r);

/// Validates options, runs the requested checks and writes the report to
/// opt.out_path (or `out` when no path is given).  Returns the process
/// exit code: 0 all checks passed (skipped is not a failure), 1 at least
/// one check failed, 2 the options were invalid.
int run_verifier(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace chen
