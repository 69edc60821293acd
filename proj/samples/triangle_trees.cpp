// Random triangle-trees, recognised again and checked against the bound.
#include "ramsey/ramsey.hpp"

#include <iostream>

int main()
{
    using namespace ramsey;
    std::mt19937_64 rng(3);
    const auto suite = standard_suite(50);
    for (int bags = 1; bags <= 6; ++bags) {
        const auto build = random_triangle_tree(bags, rng);
        const auto r = find_triangle_decomposition(build.graph);
        double worst = 1;
        for (const auto& w : suite) worst = std::min(worst, check_tritree_bound(build.graph, w).slack);
        std::cout << "bags=" << bags << " phi=" << r->phi << " kappa=" << r->kappa << " e=" << build.graph.size()
                  << " min_slack=" << worst << '\n';
    }
}
