#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socle/ideal.hpp"
#include "socle/report.hpp"

namespace socle {

enum class FamilyTag { NonCM, FiberProduct, FieldExtension, RegularParam, SemigroupCurve };

std::string family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family_name(const std::string& name);

/// One expected value with where it comes from. `source` is "literature",
/// "derived" or "elementary"; `note` carries the statement or the oracle.
struct ExpectedValue {
  std::string claim;
  ReportValue value;
  std::string source;
  std::string note;
  bool flagged = false;
};

struct FamilyInstance {
  FamilyTag tag = FamilyTag::NonCM;
  std::string label;                             // distinguishes scenarios of one family
  std::map<std::string, std::string> params;     // printed in reports
  RingPtr ring;
  std::map<std::string, IdealHandle> ideals;     // "Q", "m", "p1", ...
  std::map<std::string, ExpectedValue> expected; // keyed by claim id

  const IdealHandle& ideal(const std::string& name) const;
  const ExpectedValue& expect(const std::string& claim_id) const;
};

/// S/a with S = k[x1..xm, v, a1..ad] and
/// a = (x1..x_{m-1})^2 + (xm^2) + (xi*v) + (v^2 - sum ai*xi). Requires 1 <= d < m.
FamilyInstance noncm_ring(int m, int d, const Field& field);

/// k[x1..xd, y1..yd]/(xi*yj), with p1 = (x), p2 = (y) and Q = (xi + yi).
FamilyInstance fiber_product_ring(int d, const Field& field);

/// The subalgebra k[Xj, u*Xj] of K[X1..Xd], K = k[u]/(minpoly), presented
/// over k[y1..yd, z1..zd]. Only monic irreducible quadratics are accepted; an
/// empty minpoly picks u^2 + 1 when that is irreducible over k and u^2 - c
/// for the least non-square c otherwise.
FamilyInstance field_extension_ring(int d, const std::string& minpoly, const Field& field);

/// Parameter ideals of k[x,y] of the shapes (x, y^q) and (x^2, y^2), and the
/// one-variable ring k[x] with Q = (x^2).
std::vector<FamilyInstance> regular_param_scenarios(const Field& field);

/// k[t^3, t^4, t^5] = k[x,y,z]/(y^2 - xz, z^2 - x^2*y, x^3 - yz), Q = (x).
FamilyInstance semigroup_curve(const Field& field);

struct VerifyConfig {
  int samples = 10;
  std::uint64_t seed = 7;
  int kmax = 4;
  unsigned nmax = 0;  // 0: dimension + 6
  int depth_trials = 4;
};

/// Rejects instances whose expected table lacks a source or note.
void check_provenance(const FamilyInstance& instance);

/// Runs every applicable check of the instance. Rows are computed in parallel
/// and reported in a fixed order; a failing computation becomes a failed row.
VerificationReport verify(const FamilyInstance& instance, const VerifyConfig& config = {});

/// Concatenates the rows of several instances of one family; row ids are
/// prefixed by instance labels.
VerificationReport verify_all(const std::vector<FamilyInstance>& instances, const VerifyConfig& config = {});

}  // namespace socle
