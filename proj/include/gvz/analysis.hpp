#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gvz/char_table.hpp"
#include "gvz/group.hpp"

namespace gvz {

// ---------------------------------------------------------------------------
// Reports

struct CharacterRecord {
  int index = 0;
  int degree = 0;
  int center_order = 0;
  bool degree_square_is_index = false;  // chi(1)^2 == |G : Z(chi)|
  bool vanishes_off_center = false;
};

struct GvzReport {
  std::string group_id;
  bool is_nonabelian = false;
  std::vector<int> degree_set;
  bool is_gvz = false;
  std::vector<CharacterRecord> characters;
  std::optional<std::string> witness;

  /// The two GVZ criteria agree for every character.
  bool criteria_agree() const;
};

struct Check {
  enum class Status { Pass, Fail, Skip, Info };

  std::string label;
  std::string lhs;
  std::string rhs;
  Status status = Status::Info;
  std::vector<std::string> witnesses;
};

const char* to_string(Check::Status status);

struct TheoremReport {
  std::string theorem;
  std::string group_id;
  std::vector<Check> checks;

  /// No check failed; skipped and informational entries are allowed.
  bool passed() const;
  int count(Check::Status status) const;
};

// ---------------------------------------------------------------------------
// Shared per-table data

/// Subgroups and quotient tables that the verifiers reuse. Quotient and
/// centre tables are built on first use and cached in this object, which is
/// not meant to be shared between threads.
class Analysis {
 public:
  explicit Analysis(const CharacterTable& table, std::string group_id = "");

  struct QuotientData {
    QuotientMap map;
    CharacterTable table;
    /// For each quotient row, the row of the parent table it lifts to.
    std::vector<int> lifted_rows;
  };

  struct SubgroupData {
    EmbeddedSubgroup embedded;
    CharacterTable table;
  };

  const CharacterTable& table() const { return table_; }
  const GroupPtr& group() const { return table_.group; }
  const std::string& group_id() const { return group_id_; }
  const Subgroup& derived() const { return derived_; }
  const Subgroup& center() const { return center_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool nonabelian() const { return !group()->is_abelian(); }
  bool two_degrees() const { return degrees_.size() == 2; }

  const Subgroup& kernel(int chi) const { return kernels_[chi]; }
  const Subgroup& char_center(int chi) const { return centers_[chi]; }
  /// [Z(chi), G]
  const Subgroup& center_commutator(int chi) const;

  const QuotientData& quotient_by(const Subgroup& n) const;
  const SubgroupData& subgroup_table(const Subgroup& h) const;

  /// Cached GVZ verdict; requires a non-abelian group.
  const GvzReport& gvz() const;
  bool is_two_degree_gvz() const { return nonabelian() && two_degrees() && gvz().is_gvz; }

  /// Short human-readable description: order plus a small generating set.
  std::string describe(const Subgroup& h) const;
  std::string describe_class(int c) const;
  std::string describe_element(Element x) const;

 private:
  CharacterTable table_;
  std::string group_id_;
  Subgroup derived_;
  Subgroup center_;
  std::vector<int> degrees_;
  std::vector<Subgroup> kernels_;
  std::vector<Subgroup> centers_;
  mutable std::map<std::vector<Element>, Subgroup> commutators_;
  mutable std::map<std::vector<Element>, std::unique_ptr<QuotientData>> quotients_;
  mutable std::map<std::vector<Element>, std::unique_ptr<SubgroupData>> subgroups_;
  mutable std::optional<GvzReport> gvz_;
};

// ---------------------------------------------------------------------------
// Predicates

/// Both criteria (pointwise vanishing off Z(chi), and chi(1)^2 = |G:Z(chi)|)
/// are evaluated independently. Throws HypothesisError on abelian groups.
GvzReport is_gvz(const CharacterTable& table, const std::string& group_id = "");

struct GcpResult {
  bool holds = false;
  bool vanishing_criterion = false;  // nonlinear characters vanish outside N
  bool class_criterion = false;      // Cl(g) = gG' for every g outside N
  std::optional<std::string> witness;
};

/// Throws InputError when N is not normal and InternalError if the two
/// equivalent criteria disagree.
GcpResult is_gcp(const Analysis& analysis, const Subgroup& n);
GcpResult is_gcp(const CharacterTable& table, const Subgroup& n);

// ---------------------------------------------------------------------------
// Fibre counts and induced constituents (two-degree GVZ groups)

struct FiberCount {
  int count = 0;        // #{phi in nl(G) : Z(phi) = Z(chi)}
  Rational formula;     // |Z(chi)| (1/|[Z(chi),G]| - 1/|G'|)
  bool hypothesis_met = false;
  bool agrees = false;  // meaningful only when hypothesis_met
};

FiberCount fiber_count(const Analysis& analysis, int chi);

struct IrrStar {
  Subgroup centre;            // Z(chi)
  Subgroup commutator;        // [Z(chi), G]
  const Analysis::SubgroupData* centre_table = nullptr;
  std::vector<int> members;   // rows of the centre's table
  bool derived_in_centre = false;
};

/// Linear chi is accepted and yields an empty set, since then [Z(chi),G] = G'.
IrrStar irr_star(const Analysis& analysis, int chi);

struct Constituent {
  int theta = -1;
  std::vector<Rational> decomposition;
  Rational multiplicity;           // <lambda^G, theta>
  Rational expected_multiplicity;  // |G/Z(chi)|^(1/2) / lambda(1)
  bool value_formula_holds = false;
  bool centre_matches = false;     // Z(theta) == Z(chi)
};

/// Throws TheoremViolation when lambda^G has no or several nonlinear constituents.
Constituent unique_nonlinear_constituent(const Analysis& analysis, const IrrStar& star, int lambda);

/// Does x[Z(chi),G] equal the conjugacy class of x?
bool class_condition(const Analysis& analysis, int chi, Element x);

struct CentreCount {
  Subgroup centre;
  std::vector<int> characters;
};

/// Distinct Z(chi) over nonlinear chi, ordered by member lists.
std::vector<CentreCount> centre_census(const Analysis& analysis);

// ---------------------------------------------------------------------------
// Verifiers

TheoremReport verify_thm_1_1(const Analysis& analysis);
TheoremReport verify_thm_1_2(const Analysis& analysis);
TheoremReport verify_lemma_suite(const Analysis& analysis);
TheoremReport verify_prop_2_11(const Analysis& analysis);
/// Census report; when `listed` is given (the family predicted for G_n) the
/// report states which listed centres occur and which computed centres fall
/// outside the list.
TheoremReport verify_centres(const Analysis& analysis,
                             const std::optional<std::vector<Subgroup>>& listed = std::nullopt);

/// Exact integer square root, if n is a perfect square.
std::optional<long> exact_sqrt(long n);

}  // namespace gvz
