// Copyright 2026 The zetae Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETAE_GAUSS_LEGENDRE_HPP
#define ZETAE_GAUSS_LEGENDRE_HPP

#include <span>
#include <vector>

namespace zetae {

// Gauss-Legendre rule on [-1, 1], nodes ascending.
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  // Shared order-32 rule.
  static const GaussLegendre& order32();

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  // Nodes and weights mapped affinely onto [a, b].
  void map_to(double a, double b, std::span<double> nodes, std::span<double> weights) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace zetae

#endif  // ZETAE_GAUSS_LEGENDRE_HPP
