#pragma once

// Affine constraint systems for independent additive non-trivial forms,
// minimal rank over their solution cosets, decisions with certificates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2e/conditions.hpp"
#include "z2e/gf2.hpp"
#include "z2e/gram.hpp"

namespace z2e {

/// Equations on the form variables of an h x h BForm: independence rows with
/// right-hand side 0, one non-triviality row per subobject with 1.
struct ConstraintSystem {
  std::size_t h = 0;
  Gf2Matrix equations;
  Gf2Vector rhs;
  std::vector<std::string> labels;
  std::size_t variable_count() const { return equations.cols(); }
};

ConstraintSystem build_system(const Flavor& f);
/// The solution coset; nullopt when the equations contradict each other.
std::optional<AffineSolution> solve_system(const ConstraintSystem& s);

/// What is minimized over the coset. The Beta objectives give the least beta
/// of a realization for that Omega type.
enum class Objective { Rank, AlternatingRank, NonAlternatingRank, BetaI, BetaH };
enum class Strategy { Auto, Exhaustive, Greedy };

struct SearchOptions {
  Strategy strategy = Strategy::Auto;
  std::size_t exhaustive_threshold = 24;  // coset dimension
  std::size_t restarts = 64;
  std::uint64_t budget = std::uint64_t{1} << 26;  // objective evaluations
  std::uint64_t local_budget = std::uint64_t{1} << 23;  // flip evaluations in local_realization
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct CosetMinimum {
  std::optional<Gf2Matrix> form;  // least value, then lexicographically least variables
  std::size_t value = 0;
  bool exact = false;             // the whole coset was enumerated
  std::uint64_t evaluations = 0;
};

/// Requires h <= 64.
CosetMinimum min_over_coset(const AffineSolution& coset, std::size_t h, Objective objective, const SearchOptions& options);
CosetMinimum min_rank_over_coset(const AffineSolution& coset, std::size_t h, std::optional<FormType> type,
                                 const SearchOptions& options);

struct RealizationSearch {
  std::optional<Gf2Matrix> form;  // first hit in Gray-code order of Y
  bool exhausted = false;         // every beta x h matrix Y was tried
  std::uint64_t evaluations = 0;
};

/// Looks for Y (beta x h) with Y^T Omega Y in the solution set of s. Runs only
/// when 2^(beta h) fits the budget; then a miss proves that no form in the
/// coset is realizable with this Omega.
RealizationSearch find_realization(const ConstraintSystem& s, const OmegaSpec& spec, const SearchOptions& options);
/// Tabu search over single-bit flips of Y, minimizing violated equations. A
/// hit is a realization; a miss proves nothing (exhausted stays false).
RealizationSearch local_realization(const ConstraintSystem& s, const OmegaSpec& spec, const SearchOptions& options);

struct Certificate {
  std::string complex;
  OmegaSpec omega;
  Gf2Matrix y;  // beta x generators
  std::string columns;
  std::uint64_t seed = 0;
};

std::string certificate_to_json(const Certificate& c);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(std::string_view text);
/// Column order name for a flavor kind.
const char* certificate_columns(FlavorKind k);

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;
  bool consistent = true;               // false: non-triviality is unachievable
  std::optional<std::size_t> best_beta;  // least beta found for the Omega type
  bool exact = false;  // some route covered every candidate
  std::size_t coset_dim = 0;
  std::uint64_t evaluations = 0;
  std::string method;  // inconsistent | truncated | coset-exhaustive | coset-greedy | realization-enumeration | realization-local-search
};

/// Yes comes with a certificate that passed verify_certificate.
Decision decide(const Flavor& f, const OmegaSpec& spec, const SearchOptions& options = {});

struct VerifyReport {
  bool ok = true;
  std::string first_violation;
};

VerifyReport verify_certificate(const Flavor& f, const Certificate& c,
                                const std::vector<std::uint64_t>& seeds = {1, 2, 3});

struct TableRow {
  std::string complex;
  OmegaKind kind = OmegaKind::TypeI;
  std::optional<std::size_t> min_beta;  // nullopt: no beta works
  bool exact = false;
  std::size_t coset_dim = 0;
};

std::vector<TableRow> tabulate_min_beta(const std::vector<Flavor>& family, const std::vector<OmegaKind>& kinds,
                                        const SearchOptions& options = {});

/// join:n1,n2,... | Kn:n | K33 | K5 | tildeK:n | graph:V:u-v,u-v,...
Flavor flavor_from_descriptor(const std::string& descriptor);

}  // namespace z2e
