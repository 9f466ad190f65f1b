#include "pubsim/validation.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

int main(int argc, char** argv) {
    int criterion = 0; // 0 runs all ten
    if (argc > 1) {
        criterion = std::atoi(argv[1]);
        if (criterion < 1 || criterion > 10) {
            std::cerr << "usage: pubsim_acceptance [criterion 1..10]\n";
            return 2;
        }
    }
    const int workers = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    const pubsim::ValidationReport report =
        pubsim::run_acceptance_criteria(workers, criterion);
    pubsim::print_report(report, std::cout, true);
    return report.all_passed() ? 0 : 1;
}
