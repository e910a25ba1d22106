#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "genopt/errors.hpp"
#include "genopt/genome.hpp"

namespace genopt {

/// a dominates b: a <= b componentwise and a < b somewhere (all objectives minimized).
template <typename DerivedA, typename DerivedB>
bool dominates(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) throw StructuralError("dominates: objective counts differ");
  bool strictly = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

using Fronts = std::vector<std::vector<std::size_t>>;

/// Fast non-dominated sort over the rows of `points` (n x k). Each front lists row
/// indices in ascending order. Throws DomainError on empty input.
Fronts nondominated_sort(const Eigen::Ref<const Eigen::MatrixXd>& points);
Fronts nondominated_sort(const std::vector<Eigen::VectorXd>& points);

/// Crowding distance of each member of one front: per objective, boundary members get
/// +inf and interior members add the normalized gap between their neighbours. An
/// objective with zero spread over the front contributes nothing.
Eigen::VectorXd crowding_distance(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                  const std::vector<std::size_t>& front);

/// Total order key for selection: equal (front, crowding) pairs share a key, lower
/// is better. With k = 1 the ordering reduces to the cost ordering.
Eigen::VectorXd pareto_selection_keys(const Eigen::Ref<const Eigen::MatrixXd>& points);

/// sum_i w_i v_i. Weights must be non-negative, sum to 1 and match v's length.
double scalarize(const Eigen::Ref<const Eigen::VectorXd>& v,
                 const Eigen::Ref<const Eigen::VectorXd>& weights);

/// Throws DomainError unless w is a valid weight vector of length k.
void validate_weights(const Eigen::Ref<const Eigen::VectorXd>& weights, Eigen::Index k);

struct FrontMember {
  Chromosome chromosome;
  Eigen::VectorXd x;
  Eigen::VectorXd objectives;
};

/// Accumulated non-dominated set; never holds a dominated pair or a duplicate genotype.
class ParetoArchive {
 public:
  /// Returns true if the candidate entered the archive.
  bool offer(const FrontMember& candidate);

  const std::vector<FrontMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// Members ordered by first objective, then remaining objectives, then genotype.
  std::vector<FrontMember> sorted() const;

 private:
  std::vector<FrontMember> members_;
};

}  // namespace genopt
