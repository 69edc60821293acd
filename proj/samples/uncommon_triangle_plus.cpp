// K3 with a pendant edge is not common: a 2-part graphon beats 1/8.
#include "ramsey/ramsey.hpp"

#include <iostream>

int main()
{
    using namespace ramsey;
    MinimizeConfig cfg;
    cfg.parts = 2;
    cfg.restarts = 8;
    const auto r = minimize_m(catalog::triangle_plus(), cfg);
    std::cout << "m=" << r.value << " target=" << r.target << " verdict=" << to_string(r.verdict) << '\n';
    write_graphon(std::cout, r.best);
    std::cout << "M(K3;6)=" << exact_ramsey_multiplicity(catalog::complete(3), 6) << '\n';
}
