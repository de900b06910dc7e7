/*
   Copyright 2026 The twistgab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Small tour of the library: build F_16, classify a twisted code, look at
// the forbidden ratios, then compute its covering radius.

#include <iostream>

#include "twistgab/twistgab.hpp"

using namespace twistgab;

int main() {
    const FieldTower T(TowerParams{2, 1, 4, {}, {1, 1, 0, 0, 1}});  // F_2[y]/(y^4 + y + 1)
    const Budget budget;
    const std::vector<Element> alpha{1, 2, 4, 8};  // 1, y, y^2, y^3

    const CodeSpec gab{alpha, 2, 0, {}};
    const auto g = classify(T, gab, budget);
    std::cout << "Gabidulin [4,2]: d_R = " << g.d_rank << ", d_H = " << g.d_hamming << ", MRD = " << g.is_mrd << '\n';

    for (Element eta : {Element{3}, Element{9}}) {
        const CodeSpec tw{alpha, 2, 1, {{0, eta}}};
        const auto r = classify(T, tw, budget);
        std::cout << "twisted h=1 t=0 eta=" << eta << ": d_R = " << r.d_rank << ", label " << to_string(r.label) << '\n';
    }

    const auto R = forbidden_eta_set_one_twist(T, alpha, 2, 1, 0, budget);
    std::cout << "ratio set for k=2 h=1 t=0 has " << R.entries.size() << " nonzero values\n";

    const CodeSpec c1{alpha, 1, 0, {{0, 7}}};
    const auto cov = covering_radius_exhaustive(T, c1, budget);
    std::cout << "covering radius of a [4,1] twisted code: " << *cov.rho << " (" << cov.deep_holes.size()
              << " deep holes kept)\n";

    // a deep hole from the x^[k] family
    const auto u = deep_hole_family(T, c1, 5, DeepHoleFlavor::XK, {0});
    std::cout << "family vector distance: " << distance_to_code(T, u, c1, budget) << '\n';
    return 0;
}
