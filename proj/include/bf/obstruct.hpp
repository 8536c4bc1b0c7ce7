#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bf/cohomology.hpp"
#include "bf/forms.hpp"
#include "bf/homology.hpp"
#include "bf/jss.hpp"

namespace bf {

struct XiThreeManifoldRecord {
  Xi1Type xi;
  ZVec primary;  // cycle in the default model of H_3(pi; Z^{w1})
  std::string label;
};

struct SerreLift {
  int z_index = 0;  // generator of H_3(pi; Z/2)
  ModuleVector v;
};

// c (or w) given as a vector in pi_2 or directly as sphere data
struct SphericalRep {
  std::optional<ModuleVector> vector;
  std::optional<DoublePointSphere> sphere;
};

struct FillingRecord {
  XiThreeManifoldRecord manifold;
  ZVec secondary;  // coordinates in the H_2(pi; Z/2) generators
  std::optional<LambdaMuForm> form;
  std::optional<SphericalRep> spherical_rep;
  std::vector<SerreLift> serre_lifts;
  std::string label;
};

struct ClosedManifoldRecord {
  Xi1Type xi;
  ZVec fundamental;  // cycle in the default model of H_4(pi; Z^{w1})
  ZVec secondary;    // sec(M) in the H_2(pi; Z/2) generators
  std::optional<LambdaMuForm> form;
  std::optional<SphericalRep> spherical_rep;
  std::string label;
};

// element of a GF(2) vector space modulo a subspace
struct Coset {
  std::string space;            // "H2" (generator coordinates) or "H1" (abelianization coordinates)
  BitVec representative;
  BitVec reduced;               // canonical representative
  std::vector<BitVec> quotient_basis;
  bool is_zero = true;
  std::string provenance;
};

Coset make_coset(const std::string& space, const BitVec& rep, const std::vector<BitVec>& sub, const std::string& provenance);
BitVec to_bits(const H1Class& c);
H1Class to_h1(const BitVec& b);

struct PrimaryResult {
  HomologyPresentation h3;
  ZVec coords;
  bool is_zero = true;
  bool complete = false;  // w2 = infinity: the primary stage decides everything
};

PrimaryResult evaluate_primary(const XiThreeManifoldRecord& rec);

// basis of the image in H_2(pi; Z/2) generator coordinates
std::vector<BitVec> delta2_40_image(const Xi1Type& xi);
// d2 applied to a class of H_4(pi; Z^{w1}) given by a cycle
BitVec delta2_40_value(const Xi1Type& xi, const ZVec& fundamental);

Coset evaluate_secondary(const FillingRecord& fill);

H1Class delta2_31_eval(const FillingRecord& fill, int z_index);
std::vector<H1Class> delta2_31_image(const Xi1Type& xi);  // span basis in abelianization coordinates
std::vector<H1Class> delta2_31_columns(const Xi1Type& xi);  // image of each H_3(pi; Z/2) generator

// mubar_J of the spherical representative, after the s-characteristic check when given as a vector
H1Class spherical_mubar_J(const std::optional<LambdaMuForm>& form, const std::optional<SphericalRep>& rep);

Coset delta3_eval(const ClosedManifoldRecord& rec);
Coset evaluate_tertiary(const FillingRecord& fill, const std::vector<H1Class>& delta3_image,
                        const std::string& provenance = "delta3-computed");

bool secondary_wu_check(const LambdaMuForm& form, const ModuleVector& b, const ModuleVector& c);

// lambda-bar_J(lift, lift') for every pair of serre lifts; indices of failing pairs
std::vector<std::pair<int, int>> lift_orthogonality_violations(const FillingRecord& fill);

struct Registry {
  std::vector<ClosedManifoldRecord> records;
};

struct Delta3Span {
  std::vector<H1Class> span;
  std::vector<std::string> used, skipped;
};

Delta3Span delta3_span(const Xi1Type& xi, const Registry& reg);

struct StageReport {
  std::string stage;
  bool is_zero = true;
  std::optional<Coset> coset;
  std::optional<PrimaryResult> primary;
  std::string note;
};

struct PipelineResult {
  std::vector<StageReport> stages;
  std::string stopped_at;  // stage name, or "" when all stages passed
  std::string verdict;
  std::vector<std::string> warnings;
  // delta2(3,1) on each recorded lift, next to the d2 column it must match
  struct Delta2Check {
    int z_index;
    H1Class value, expected;
  };
  std::vector<Delta2Check> delta2_31;
};

enum class Stage { All, Primary, Secondary, Tertiary };

PipelineResult run_pipeline(const XiThreeManifoldRecord& y, const std::optional<FillingRecord>& fill,
                            const Registry& reg, Stage force = Stage::All);
PipelineResult run_closed(const ClosedManifoldRecord& m, const Registry& reg, Stage force = Stage::All);

}  // namespace bf
