#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicecert/errors.hpp"
#include "slicecert/homology.hpp"

namespace slicecert {

// zeta = e^{2 pi i r / m}.  Stored as given; reduced form computed on demand.
struct RootOfUnity {
  Int r = 1;
  Int m = 2;

  RootOfUnity(Int r_, Int m_) : r(r_), m(m_) {
    if (m < 2 || r < 1 || r > m - 1) throw InvalidInput("root of unity: need 1 <= r <= m-1");
  }
  RootOfUnity reduced() const;
  // Reduced and folded to r/m <= 1/2 (signatures are conjugation symmetric).
  RootOfUnity conj_normalized() const;
  std::string str() const;  // "r/m"
};

struct SeifertMatrix {
  std::vector<std::vector<Int>> entries;  // square, even size, V - V^T unimodular

  static SeifertMatrix make(std::vector<std::vector<Int>> entries);
  // Standard genus-(|q|-1)/2 band matrix for the (2,q) torus knot (odd q).
  // q = +-1 yields the empty matrix (unknot).
  static SeifertMatrix torus2(Int q);
  int size() const { return static_cast<int>(entries.size()); }
};

// Exact Levine-Tristram signature of the Hermitian form (1-w)V + (1-conj w)V^T.
// At roots of the Alexander polynomial the value is the average of the two
// one-sided limits along the circle (so it may be odd there).
Int lt_signature_seifert(const SeifertMatrix& V, const RootOfUnity& omega);

// Closed-form signature of T_{2,q}, q odd, |q| >= 3, with the same averaging
// convention at the jump set x in (1/q)Z + 1/(2q).
Int torus2_signature(Int q, const RootOfUnity& omega);

// 0 iff det(V + V^T) = +-1 mod 8.
int arf_from_seifert(const SeifertMatrix& V);

struct MissingSample : Error {
  MissingSample(const std::string& knot, const RootOfUnity& w)
      : Error("knot " + knot + " has no signature sample at " + w.str()), root(w) {}
  RootOfUnity root;
};

struct KnotRecord {
  std::string name;
  Int g4 = 0;
  int arf = 0;
  // Keyed by conj-normalized reduced (r, m).
  std::map<std::pair<Int, Int>, Int> samples;
  std::optional<SeifertMatrix> seifert;

  // Validates: samples even and |sigma| <= 2*g4; when a Seifert matrix is
  // present, every stored sample must equal the computed value and the Arf
  // bit must match.
  static KnotRecord make(std::string name, Int g4, int arf,
                         const std::vector<std::pair<RootOfUnity, Int>>& samples,
                         std::optional<SeifertMatrix> seifert = std::nullopt);

  bool has_signature_at(const RootOfUnity& w) const;
  Int signature_at(const RootOfUnity& w) const;  // sample, else Seifert, else throws
  std::string digest() const;                    // stable content hash (hex)
};

class KnotExpression;
using ExprPtr = std::shared_ptr<const KnotExpression>;

// AST of knots built from records by connected sum, mirror, reverse,
// 2-stranded cabling and (2,q) torus knots.
class KnotExpression {
 public:
  enum class Kind { atom, sum, mirror, reverse, cable2, torus2 };

  static ExprPtr atom(KnotRecord record);
  static ExprPtr sum(std::vector<ExprPtr> parts);
  static ExprPtr mirror(ExprPtr e);
  static ExprPtr reverse(ExprPtr e);
  static ExprPtr cable2(ExprPtr companion, Int q);  // q odd
  static ExprPtr torus2(Int q);                     // q odd; +-1 is the unknot

  Kind kind;
  KnotRecord record;            // atom
  std::vector<ExprPtr> parts;   // sum / mirror / reverse / cable2
  Int q = 0;                    // cable2 / torus2

  std::string str() const;

 private:
  KnotExpression() = default;
};

// Satellite semantics: sum adds, mirror negates, reverse is the identity,
// cable2 evaluates the companion at the squared root and adds the T_{2,q}
// pattern signature.
Int eval_signature(const ExprPtr& e, const RootOfUnity& omega);

// Arf of sums/mirrors/reverses of atoms and T_{2,q} factors.
int eval_arf(const ExprPtr& e);

}  // namespace slicecert
