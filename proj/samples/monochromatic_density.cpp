// m_H on a few graphons, next to the random-colouring value 2^(1-e).
#include "ramsey/ramsey.hpp"

#include <iostream>

int main()
{
    using namespace ramsey;
    std::mt19937_64 rng(7);
    const auto w = random_graphon(3, rng);
    std::cout << "graph\t2^(1-e)\tm(1/2)\tm(random)\n";
    for (const char* name : {"k3", "c4", "diamond", "k3plus", "h3", "h4", "k2,2,2"}) {
        const Graph h = catalog::named(name);
        std::cout << name << '\t' << to_string(pow2<Rational>(1 - h.size())) << '\t'
                  << to_string(m(h, half_graphon<Rational>())) << '\t' << m(h, w) << '\n';
    }
}
