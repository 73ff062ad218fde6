// Prints the first coefficients of a few C' and D' series, checks the closed
// form of C'(2,3) against its definition and shows where C'(2,5) turns
// negative.

#include <iostream>

#include <qpos/qpos.hpp>

int main()
{
    const std::size_t order = 20;
    for (auto [k, m] : {std::pair{1, 1}, {2, 1}, {2, 3}}) {
        const qpos::family_params p(k, m);
        const auto s = qpos::cprime_definitional(p, order);
        std::cout << "C'(" << k << "," << m << "):";
        for (const auto &c : s.coefficients()) {
            std::cout << ' ' << c;
        }
        std::cout << '\n';
    }

    const qpos::family_params c23(2, 3);
    const auto v = qpos::compare_series("closed form", qpos::cprime_definitional(c23, 200),
                                        qpos::cprime_closed(c23, 200));
    std::cout << v.describe() << '\n';

    const auto scan = qpos::negative_indices(qpos::cprime_definitional({2, 5}, 900));
    std::cout << "C'(2,5) negative coefficients below q^901:";
    for (auto n : scan.negative_indices) {
        std::cout << ' ' << n;
    }
    std::cout << '\n';

    const auto d23 = qpos::negative_indices(qpos::dprime_definitional({2, 3}, 500));
    std::cout << "D'(2,3) negative coefficients below q^501:";
    for (auto n : d23.negative_indices) {
        std::cout << ' ' << n;
    }
    std::cout << '\n';
}
