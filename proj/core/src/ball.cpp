#include "conradlab/ball.hpp"

#include <algorithm>

namespace conradlab {

Ball::Ball(Family fam, int radius, std::vector<GroupElement> elements, std::vector<int> lengths)
    : fam_(fam), radius_(radius), elements_(std::move(elements)), lengths_(std::move(lengths)) {
  for (size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<size_t> Ball::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Ball::word_length(const GroupElement& g) const {
  auto i = index_of(g);
  if (!i) return std::nullopt;
  return lengths_[*i];
}

Ball generate_ball(const Family& f, int radius, size_t cap) {
  if (radius < 0) throw UsageError("ball radius must be >= 0");

  std::vector<GroupElement> gens;
  for (const auto& g : generators(f)) {
    gens.push_back(generator_power(f, g, 1));
    gens.push_back(generator_power(f, g, -1));
  }

  std::map<GroupElement, int, CanonicalLess> seen;
  GroupElement id = identity(f);
  seen.emplace(id, 0);
  std::vector<GroupElement> frontier{id};

  for (int len = 1; len <= radius; ++len) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        GroupElement y = multiply(x, g);
        if (seen.emplace(y, len).second) {
          next.push_back(y);
          if (seen.size() > cap)
            throw ResourceCapError("ball element cap " + std::to_string(cap) +
                                   " exceeded at radius " + std::to_string(len) + " of " +
                                   family_name(f));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  std::vector<std::pair<GroupElement, int>> items(seen.begin(), seen.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return canonical_less(a.first, b.first);
  });

  std::vector<GroupElement> elements;
  std::vector<int> lengths;
  elements.reserve(items.size());
  lengths.reserve(items.size());
  for (auto& [g, len] : items) {
    elements.push_back(std::move(g));
    lengths.push_back(len);
  }
  return Ball(f, radius, std::move(elements), std::move(lengths));
}

}  // namespace conradlab
