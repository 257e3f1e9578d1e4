#include <iostream>

#include "freefusion/acceptance.hpp"

int main() {
    namespace acc = freefusion::acceptance;
    int failures = 0;
    for (const auto& criterion : acc::criteria()) {
        const auto result = acc::run(criterion);
        std::cout << acc::format_result(result) << std::endl;
        failures += result.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "some criteria FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
