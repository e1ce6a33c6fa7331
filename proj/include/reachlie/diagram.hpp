#ifndef REACHLIE_DIAGRAM_HPP
#define REACHLIE_DIAGRAM_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace reachlie {

/// Weighted Dynkin diagram: one weight in {0,1,2} per simple root, in
/// Bourbaki node order. This is the characteristic of a nilpotent orbit.
struct WeightedDynkinDiagram
{
  std::vector<int> weights;

  WeightedDynkinDiagram() = default;

  explicit WeightedDynkinDiagram(std::vector<int> w) : weights(std::move(w))
  {
    for (int v : weights)
      if (v < 0 || v > 2)
        throw std::invalid_argument("WeightedDynkinDiagram: weights must be 0, 1 or 2");
  }

  std::size_t rank() const { return weights.size(); }

  bool is_zero() const
  {
    for (int v : weights)
      if (v != 0)
        return false;
    return true;
  }

  std::string str() const
  {
    std::string s;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(weights[i]);
    }
    return s;
  }

  bool operator==(const WeightedDynkinDiagram& o) const { return weights == o.weights; }
  bool operator!=(const WeightedDynkinDiagram& o) const { return weights != o.weights; }
  bool operator<(const WeightedDynkinDiagram& o) const { return weights < o.weights; }
};

} // namespace reachlie

#endif
