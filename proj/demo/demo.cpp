// Copyright 2026 The lfactor Authors
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

// Walks through one rank-three example: normalization factors, two decompositions, and the
// poles the two discrepancies share.

#include <iostream>

#include <lfactor/lfactor.hpp>

int main()
{
    using namespace lfactor;

    const int c = 3;
    const DiscreteSeriesParam bare;
    std::cout << "alpha_" << c << "(s) = " << product_text(alpha_classical(c, 1, bare)) << "\n";
    std::cout << "beta_" << c << "(s)  = " << product_text(beta_classical(c, 1, bare)) << "\n\n";

    WaySpec w1;
    w1.family = WayFamily::cl_way1;
    w1.c = c;
    WaySpec w2 = w1;
    w2.family = WayFamily::cl_way2;

    for (const WaySpec &w : {w1, w2}) {
        const DiscrepancyReport rep = discrepancy(w);
        std::cout << way_text(w) << "\n";
        for (const auto &part : rep.constituents) {
            std::cout << "  " << part.label << " = " << product_text(part.factor) << "\n";
        }
        std::cout << "  P = " << product_text(rep.P) << "\n";
        for (const auto &l : pole_loci(rep.P)) {
            std::cout << "    " << locus_text(l) << "\n";
        }
    }

    const auto shared = common_poles(discrepancy(w1).P, discrepancy(w2).P);
    std::cout << "\nshared poles: " << shared_text(shared) << " (" << verdict_name(shared.verdict) << ")\n";

    const auto st = strategy_check(c, 1, bare);
    std::cout << "strategy: " << (st.pass ? "PASS" : "FAIL") << " via " << st.comparison << "\n";
    return 0;
}
