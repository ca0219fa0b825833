#include "mckay/verify.hpp"

#include <chrono>
#include <iostream>

int main()
{
    using clock = std::chrono::steady_clock;
    int failed = 0;
    long checks = 0;
    for (int id = 1; id <= mckay::criterion_count; ++id) {
        const auto t0 = clock::now();
        const mckay::CriterionResult r = mckay::run_criterion(id);
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::cout << mckay::summary_line(r) << " [" << static_cast<int>(secs * 10) / 10.0 << "s]\n";
        for (const auto& f : r.failures)
            std::cout << "    failure: " << f << '\n';
        for (const auto& note : r.notes)
            std::cout << "    note: " << note << '\n';
        std::cout.flush();
        failed += !r.passed;
        checks += r.checks;
    }
    std::cout << "acceptance: " << mckay::criterion_count - failed << '/' << mckay::criterion_count
              << " criteria passed, " << checks << " checks\n";
    return failed == 0 ? 0 : 1;
}
