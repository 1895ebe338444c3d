#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "conradlab/element.hpp"

namespace conradlab {

inline constexpr size_t kDefaultBallCap = 1'000'000;

/// Ball of a given radius in the word metric of the family's fixed symmetric
/// generating set. Elements are stored sorted by (word length, canonical
/// order); that order is the scan order used by every exhaustive check.
class Ball {
 public:
  Ball(Family fam, int radius, std::vector<GroupElement> elements, std::vector<int> lengths);

  const Family& family() const { return fam_; }
  int radius() const { return radius_; }
  size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& at(size_t i) const { return elements_[i]; }
  int word_length_at(size_t i) const { return lengths_[i]; }

  std::optional<size_t> index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_of(g).has_value(); }
  /// Minimal attained word length, if g lies in the ball.
  std::optional<int> word_length(const GroupElement& g) const;

 private:
  Family fam_;
  int radius_;
  std::vector<GroupElement> elements_;
  std::vector<int> lengths_;
  std::map<GroupElement, size_t, CanonicalLess> index_;
};

/// Breadth-first enumeration of all normal forms of words of length <= radius.
/// Deterministic output; throws ResourceCapError when the element count
/// exceeds cap.
Ball generate_ball(const Family& f, int radius, size_t cap = kDefaultBallCap);

}  // namespace conradlab
