#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geodiam/geodesic.hpp"
#include "geodiam/spm.hpp"

namespace geodiam {

enum class CaseLabel { VV, VB, VI, BB, BI, II };

const char* to_string(CaseLabel c);
CaseLabel parse_case(const std::string& s);  // case-insensitive
int min_path_count(CaseLabel c);
int min_vs(CaseLabel c);  // |V_s| lower bound, s being the less constrained endpoint
int min_vt(CaseLabel c);
std::vector<CaseLabel> all_cases();

// A case is enabled iff h >= (its minimum path count) - 1.
std::set<CaseLabel> prune_cases(int h);

// len_{u,v}(s,t) = |s-u| + d + |v-t|
struct PathTerm {
  Point u, v;
  double d = 0.0;
  int ui = -1, vi = -1;  // corner ids, informational
};

// For BB and BI the point s runs along es by arc length from es.a; for BB t
// runs along et the same way. II has free s and t.
struct EquationSystem {
  CaseLabel label = CaseLabel::II;
  std::vector<PathTerm> terms;
  Segment es, et;
  int es_id = -1, et_id = -1;

  int variable_count() const;
  int equation_count() const { return static_cast<int>(terms.size()) - 1; }
  bool well_formed() const { return variable_count() == equation_count() && variable_count() > 0; }
};

struct SystemSolution {
  Point s, t;
  double len = 0.0;
  double residual = 0.0;
  std::vector<double> x;  // solver variables
};

// Damped multi-start Newton on len_1 - len_i = 0. Never throws for lack of
// convergence; an empty result means no start converged.
std::vector<SystemSolution> newton_solve_system(const EquationSystem& sys, const ToleranceConfig& tol = {},
                                                std::uint64_t seed = 1);

struct CandidatePair {
  enum class Status { Solved, Validated, CertifiedMaximal, Rejected };
  Point s, t;
  CaseLabel label = CaseLabel::VV;
  std::vector<std::pair<int, int>> tuple;  // defining (u_i, v_i)
  double solved_len = 0.0;
  Status status = Status::Solved;
  std::string reason;       // rejection reason
  std::string certificate;  // "gradient" or "probe" once certified
  std::uint64_t path_count = 0;
  std::vector<int> vs, vt;
};

const char* to_string(CandidatePair::Status s);

struct SolverConfig {
  ToleranceConfig tol;
  std::optional<std::set<CaseLabel>> cases;  // exact enabled set; unset: prune_cases(h) plus force
  std::set<CaseLabel> force;                 // enabled regardless of h
  std::uint64_t budget = 2000000;            // tuple systems solved per case
  Exec exec = Exec::Parallel;
  std::uint64_t path_cap = kDefaultPathCap;
  bool keep_candidates = false;
};

struct CaseStats {
  std::uint64_t tuples = 0;     // systems handed to the solver
  std::uint64_t generated = 0;  // Solved candidates
  std::uint64_t validated = 0;
  std::uint64_t certified = 0;
  std::uint64_t rejected = 0;
  double seconds = 0.0;
  bool enabled = false;
  bool complete = true;
};

// Everything candidate generation needs, built once per domain.
struct SolverContext {
  const PolygonalDomain* dom = nullptr;
  VisibilityGraph graph;
  DistanceTable table;
  std::vector<std::vector<Point>> vps;
  std::vector<double> reach;
  double corner_max = 0.0;  // max corner-pair distance
  double incumbent = 0.0;   // best value known so far, used as a pruning floor
};

SolverContext make_context(const PolygonalDomain& dom, const SolverConfig& cfg);

std::vector<CandidatePair> solve_case_corner(const SolverContext& ctx, const SolverConfig& cfg);

struct GenerationResult {
  std::vector<CandidatePair> candidates;
  std::uint64_t tuples = 0;
  bool complete = true;
};

// Throws BudgetExceeded unless allow_partial; partial results then carry complete = false.
GenerationResult generate_candidates(CaseLabel c, const SolverContext& ctx, const SolverConfig& cfg,
                                     bool allow_partial = true);

CandidatePair validate_candidate(const FreeSpace& space, const DistanceTable& table, CandidatePair cand,
                                 std::uint64_t path_cap = kDefaultPathCap);
CandidatePair certify_maximal(const FreeSpace& space, const DistanceTable& table, CandidatePair cand);

struct DiameterResult {
  double diameter = 0.0;
  std::vector<CandidatePair> pairs;  // certified pairs within tol_dist of the diameter
  CaseLabel label = CaseLabel::VV;
  std::uint64_t path_count = 0;
  double corner_max = 0.0;
  std::map<CaseLabel, CaseStats> stats;
  bool complete = true;
  bool used_uncertified = false;  // a Validated pair beat every certified one
  double seconds = 0.0;
  std::vector<CandidatePair> candidates;  // all of them when keep_candidates is set
};

std::set<CaseLabel> enabled_cases(const SolverConfig& cfg, int h);

DiameterResult compute_diameter(const PolygonalDomain& dom, const SolverConfig& cfg = {},
                                bool allow_partial = true);

}  // namespace geodiam
