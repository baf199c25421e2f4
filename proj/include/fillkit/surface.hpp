#pragma once

// Surface models with named curve registries, the homology lattice with its
// intersection pairing, curve normalization and boundary capping.
//
// Supported: S1_3, S1_2, S1_1 and S0_n for n >= 2.

#include "fillkit/curves.hpp"
#include "fillkit/intlinalg.hpp"
#include "fillkit/presentations.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fillkit::surface {

using intlinalg::IntMatrix;

struct SurfaceModel {
  int genus = 1;
  int boundary_count = 1;

  int homology_rank() const { return 2 * genus + boundary_count - 1; }
  int euler() const { return 2 - 2 * genus - boundary_count; }
  std::string id() const;
  static SurfaceModel parse(const std::string& id);
  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

struct BaseCurve {
  std::string name;
  IntVector cls;
  bool boundary = false;
};

/// Registry of one surface. Immutable once built; obtain through get().
class Surface {
 public:
  /// Sign +1 is the standard Picard-Lefschetz convention t_c(x) = x + <c,x>c;
  /// -1 flips it (used only to show the checks are convention sensitive).
  static const Surface& get(const SurfaceModel& m, int sign = 1);
  static const Surface& get(const std::string& id, int sign = 1) {
    return get(SurfaceModel::parse(id), sign);
  }

  const SurfaceModel& model() const { return model_; }
  std::string id() const { return model_.id(); }
  int sign() const { return sign_; }

  const std::vector<BaseCurve>& bases() const { return bases_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const IntMatrix& pairing() const { return pairing_; }
  /// Geometric intersection of two base curves; -1 when not recorded.
  int intersection(const std::string& a, const std::string& b) const;
  const std::vector<std::vector<int>>& intersection_table() const { return intersection_; }

  bool has_base(const std::string& name) const { return index_.count(name) != 0; }
  const BaseCurve& base(const std::string& name) const;
  bool is_boundary(const std::string& name) const { return base(name).boundary; }
  std::vector<std::string> boundary_names() const;

  const std::vector<std::pair<std::string, Curve>>& aliases() const { return aliases_; }
  std::optional<Curve> alias(const std::string& name) const;

  /// Canonical form: aliases resolved, boundary letters and disjoint trailing
  /// letters dropped from transports, adjacent equal curves merged.
  Curve normalize(const Curve& c) const;
  Word normalize(const Word& w) const;  // normalizes each curve, keeps letters
  Word normalize_transport(const Word& w) const;

  /// Prints using the longest alias that matches a suffix of the transport.
  std::string format(const Curve& c) const;
  std::string format(const Word& w) const;

  IntVector homology_class(const Curve& c) const;
  IntMatrix transvection(const IntVector& cls, long long exponent) const;
  IntMatrix homology_rep(const Word& w) const;
  long long pair(const IntVector& u, const IntVector& v) const;

  /// Two letters' twists commute when their curves share a transport and the
  /// bases are disjoint or equal, or when either curve is boundary parallel.
  bool known_disjoint(const Curve& a, const Curve& b) const;
  /// Same transport and bases meeting exactly once.
  bool known_single_intersection(const Curve& a, const Curve& b) const;

  // Fundamental group data (S1_1 and S0_n only).
  bool has_pi1() const { return pi1_rank_ > 0; }
  std::size_t pi1_rank() const { return pi1_rank_; }
  const std::vector<std::string>& pi1_names() const { return pi1_names_; }
  presentations::FreeWord base_word(const std::string& name) const;
  /// Automorphism images of the free generators for one base twist.
  const std::vector<presentations::FreeWord>& base_twist_action(const std::string& name,
                                                                int sign = 1) const;

 private:
  Surface(SurfaceModel m, int sign);
  void add_base(const std::string& name, IntVector cls, bool boundary);
  void set_intersection(const std::string& a, const std::string& b, int v);
  void add_alias(const std::string& name, const std::string& word_text);
  void build_s13();
  void build_s12();
  void build_s11();
  void build_s0n();

  SurfaceModel model_;
  int sign_;
  std::vector<BaseCurve> bases_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> basis_names_;
  IntMatrix pairing_;
  std::vector<std::vector<int>> intersection_;
  std::vector<std::pair<std::string, Curve>> aliases_;
  std::size_t pi1_rank_ = 0;
  std::vector<std::string> pi1_names_;
  std::map<std::string, presentations::FreeWord> base_words_;
  std::map<std::string, std::vector<presentations::FreeWord>> twist_actions_;
  std::map<std::string, std::vector<presentations::FreeWord>> inverse_actions_;
};

struct CappingMap {
  SurfaceModel source;
  SurfaceModel target;
  IntMatrix class_map;  // target_rank x source_rank
  std::map<std::string, std::string> curve_map;  // base renaming; "" means the curve dies
  int sign = 1;

  /// Image of a curve, or nothing if its base is the capped boundary.
  std::optional<Curve> apply(const Curve& c) const;
  /// Image of a word; letters along dying curves are dropped.
  Word apply(const Word& w) const;
};

/// Capping maps: S1_3 at boundary 3, S1_2 at boundary 1 or 2, S0_n at i < n (n >= 3).
CappingMap cap(const SurfaceModel& s, int boundary, int sign = 1);
/// second o first.
CappingMap compose(const CappingMap& first, const CappingMap& second);

}  // namespace fillkit::surface
