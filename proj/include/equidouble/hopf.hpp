#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equidouble/groups.hpp"
#include "equidouble/matrix.hpp"

namespace equidouble {

using Index = std::uint32_t;
/// Sparse vector in a fixed basis; absent indices are zero and stored
/// coefficients are never zero.
using Vec = std::map<Index, Cyclotomic>;
using Tensor2 = std::map<std::pair<Index, Index>, Cyclotomic>;
using Tensor3 = std::map<std::array<Index, 3>, Cyclotomic>;
/// Linear map given by the image of every basis vector.
using LinearMap = std::vector<Vec>;

Vec basis_vector(Index i);
void add_term(Vec& v, Index i, const Cyclotomic& c);
void add_term(Tensor2& t, Index a, Index b, const Cyclotomic& c);
void add_term(Tensor3& t, const std::array<Index, 3>& k, const Cyclotomic& c);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Cyclotomic& s);
Tensor2 tensor(const Vec& a, const Vec& b);
Tensor2 flip(const Tensor2& t);
Vec apply_map(const LinearMap& f, const Vec& v);
Tensor2 apply_map(const LinearMap& f, const LinearMap& g, const Tensor2& t);

/// Raw structure constants. mult[a * dim + b] is the product of basis vectors
/// a and b; comult[a] = Delta(a); antipode[a] = S(a).
struct HopfStructure {
  std::vector<std::string> labels;
  std::vector<Vec> mult;
  Vec unit;
  std::vector<Tensor2> comult;
  std::vector<Cyclotomic> counit;
  std::vector<Vec> antipode;
};

/// Finite-dimensional Hopf algebra by structure constants. The constructor
/// checks shapes and index ranges only; the axioms are checked on demand.
class HopfData {
 public:
  explicit HopfData(HopfStructure s);

  std::size_t dim() const { return s_.labels.size(); }
  const std::string& label(Index i) const { return s_.labels[i]; }
  const HopfStructure& structure() const { return s_; }
  const Vec& mult(Index a, Index b) const { return s_.mult[static_cast<std::size_t>(a) * dim() + b]; }
  const Vec& unit() const { return s_.unit; }
  const Tensor2& comult(Index a) const { return s_.comult[a]; }
  const Cyclotomic& counit(Index a) const { return s_.counit[a]; }
  const Vec& antipode(Index a) const { return s_.antipode[a]; }

  Vec multiply(const Vec& a, const Vec& b) const;
  Tensor2 multiply(const Tensor2& a, const Tensor2& b) const;
  Tensor3 multiply(const Tensor3& a, const Tensor3& b) const;
  Tensor2 comultiply(const Vec& a) const;
  Cyclotomic counit(const Vec& a) const;
  Vec antipode(const Vec& a) const;
  /// Two-sided inverse by exact solve of a x = 1; checks x a = 1 as well.
  /// Throws ArithmeticError when a is not invertible.
  Vec inverse(const Vec& a) const;
  /// Inverse in A (x) A, through the algebra A (x) A of dimension dim^2.
  Tensor2 inverse(const Tensor2& t) const;
  /// Matrix of x -> a x.
  ExactMatrix left_multiplication(const Vec& a) const;

  /// (Delta (x) id) and (id (x) Delta).
  Tensor3 comultiply_left(const Tensor2& t) const;
  Tensor3 comultiply_right(const Tensor2& t) const;

 private:
  HopfStructure s_;
};

enum class AxiomStatus { pass, fail, sampled };
const char* to_string(AxiomStatus s);

struct AxiomResult {
  std::string axiom;
  AxiomStatus status = AxiomStatus::pass;
  /// Basis indices (or group elements) of the first failure.
  std::vector<std::int64_t> witness;
};

using AxiomReport = std::vector<AxiomResult>;
bool all_pass(const AxiomReport& r);
/// First failing entry, nullptr if none.
const AxiomResult* first_failure(const AxiomReport& r);

struct CheckOptions {
  bool sampled = false;
  std::size_t samples = 4096;
  std::uint64_t seed = 0x5eed;
};

using Witness = std::vector<std::int64_t>;
using Probe = std::function<std::optional<Witness>(std::size_t)>;

/// Runs probe over [0, n) (all of it, or a seeded sample when opt.sampled and
/// sampleable) in parallel and keeps the failure with the smallest index.
AxiomResult run_probe(const std::string& name, std::size_t n, const Probe& probe, const CheckOptions& opt,
                      bool sampleable = true);

/// Associativity, unit, coassociativity, counit, Delta and epsilon
/// multiplicative, antipode; plus S being an anti-homomorphism.
AxiomReport check_hopf_axioms(const HopfData& h, const CheckOptions& opt = {});

/// J-grading, weak J-action by Hopf automorphisms phi_j and coherence
/// elements c_{i,j}.
struct JHopfDecoration {
  GroupPtr J;
  std::vector<int> grading;            // J-degree per basis vector
  std::vector<LinearMap> phi;          // phi[j]
  std::vector<Vec> c;                  // c[i * |J| + j]

  const Vec& coherence(int i, int j) const { return c[static_cast<std::size_t>(i) * J->order() + j]; }
};

/// Trivial decoration with J = 1.
JHopfDecoration trivial_decoration(const HopfData& h);

AxiomReport check_jhopf_axioms(const HopfData& h, const JHopfDecoration& dec, const CheckOptions& opt = {});

/// R-matrix and twist. theta_inv is stored alongside theta.
struct RibbonDecoration {
  Tensor2 R;
  Vec theta;
  Vec theta_inv;
};

/// Classical quasitriangular and ribbon identities:
/// Delta^op(a) R = R Delta(a), (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12,
/// (S (x) id)R = R^{-1}, theta central with theta theta_inv = 1,
/// Delta(theta) = (theta (x) theta)(R21 R)^{-1}, eps(theta) = 1, S(theta) = theta.
AxiomReport check_ribbon_axioms(const HopfData& h, const RibbonDecoration& rib, const CheckOptions& opt = {});

/// Hopf algebra spanned by a subset of basis vectors (in the given order).
/// Throws ConstructionError if the span is not closed under the structure maps.
/// With `project`, unit and coproduct are instead composed with the projection
/// onto the span (the homogeneous component A_1 of a J-Hopf algebra).
HopfData restrict_to_basis(const HopfData& h, const std::vector<Index>& subset, bool project = false);

}  // namespace equidouble
