#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "alphax/bounds.hpp"
#include "alphax/enumerate.hpp"
#include "alphax/forbidden.hpp"
#include "alphax/graph.hpp"
#include "alphax/spectral.hpp"

namespace alphax {

struct CliqueMinorFree {
  int r;
};
struct BicliqueMinorFree {
  int s;
  int t;
};
struct StarForestFree {
  StarForestSpec spec;
};
using ForbiddenClass = std::variant<CliqueMinorFree, BicliqueMinorFree, StarForestFree>;

/// Throws DomainError unless r >= 3, or t >= s >= 2.
void check_class(const ForbiddenClass& c);
/// e.g. "CliqueMinorFree(3)", "BicliqueMinorFree(2,3)", "StarForestFree(S2+S2)".
std::string describe(const ForbiddenClass& c);
bool is_member(const Graph& g, const ForbiddenClass& c, const MinorSearchOptions& minor = {});

/// Graphs within this distance of the maximum count as extremal.
inline constexpr double kTieTolerance = 1e-9;

struct SearchOptions {
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 0;
  int cap = kDefaultEnumerationCap;
  /// Replaces built-in generation; graphs of the wrong order are ignored.
  std::optional<std::vector<Graph>> source;
  MinorSearchOptions minor;
};

struct ExtremalResult {
  double value = 0.0;
  /// Canonical graph6 strings, sorted and distinct.
  std::vector<std::string> witnesses;
  long long examined = 0;
  long long members_checked = 0;
};

/**
 * Maximum α-index over the graphs of order n in class c.
 *
 * Shards run on a pool of workers; each keeps every member within
 * kTieTolerance of its local maximum and the merge filters against the
 * global maximum, so the result does not depend on the worker count.
 * Membership is only tested for graphs whose α-index could still matter.
 */
ExtremalResult extremal_search(int n, Alpha a, const ForbiddenClass& c,
                               const SearchOptions& options = {});

struct T1 {
  int r;
};
struct T2 {
  int s;
  int t;
};
struct T3 {
  StarForestSpec spec;
};
using TheoremId = std::variant<T1, T2, T3>;

ForbiddenClass forbidden_class(const TheoremId& id);

enum class Verdict { Match, PredictionExceeded, PredictionUnattained, SmallNCaveat };
std::string to_string(Verdict v);

struct VerificationReport {
  std::string class_name;
  int n = 0;
  double alpha = 0.0;
  /// Decimal text the α came from; echoed in CSV output.
  std::string alpha_text;
  double exhaustive_max = 0.0;
  std::vector<std::string> witnesses;
  double predicted_value = 0.0;
  /// Canonical graph6 of the predicted extremal graph; empty when no
  /// construction exists at this order.
  std::string predicted_witness;
  bool predicted_witness_member = false;
  Verdict verdict = Verdict::Match;
  bool threshold_satisfied = false;
  std::vector<std::string> notes;
};

/// The predicted extremal graph for `id` at order n, if one is defined.
std::optional<Graph> predicted_witness(const TheoremId& id, int n);
double predicted_value(const TheoremId& id, int n, Alpha a);

VerificationReport check_theorem(const TheoremId& id, int n, Alpha a,
                                 const SearchOptions& options = {},
                                 const std::string& alpha_text = {});

nlohmann::json to_json(const VerificationReport& r);
std::string csv_header();
std::string to_csv_row(const VerificationReport& r);
/// "%.17g", enough digits to read the same double back.
std::string format_double(double v);

struct SweepGrid {
  std::vector<int> n_values{5, 10, 20, 30, 40, 60};
  std::vector<int> k_values{2, 3, 4, 5, 6};
  std::vector<int> d_values{2, 3, 4};
  std::vector<double> alphas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  /// Random H per f_alpha grid point (a regular H is added whenever one exists).
  int samples = 5;
  unsigned seed = 20240517u;
  /// Largest order for the exhaustive edge-count checks.
  int exhaustive_n = 7;
  std::vector<StarForestSpec> star_forests{StarForestSpec({1, 1}), StarForestSpec({2, 1}),
                                           StarForestSpec({2, 2})};
  std::vector<int> star_minor_t{3, 4};
  std::vector<std::pair<int, int>> bicliques{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}};
  /// Added to every closed-form value in the direction that tightens it;
  /// nonzero only for self-tests.
  double corruption = 0.0;
};

struct SweepViolation {
  std::string check;
  std::string point;
  /// graph6 of the offending graph, empty for purely numeric checks.
  std::string witness;
  double value = 0.0;
  double bound = 0.0;
};

struct SweepReport {
  long long evaluated = 0;
  long long skipped = 0;
  std::vector<SweepViolation> violations;
};

SweepReport sweep_lemma_inequalities(const SweepGrid& grid = {});
nlohmann::json to_json(const SweepReport& r);

}  // namespace alphax
