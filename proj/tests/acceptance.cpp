#include <iostream>

#include "kt/acceptance.hpp"

int main()
{
    std::size_t failed = 0;
    kt::acceptance::run_all({}, [&](const kt::acceptance::Result& r) {
        std::cout << kt::acceptance::format_line(r) << std::endl;
        if (!r.pass) ++failed;
    });
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
