#include "operad/suite/suite.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

using namespace operad;

namespace {

constexpr double kCliLimitSeconds = 600;

}  // namespace

int main() {
    bool all = true;
    for (int k = 1; k <= kSuiteCriteria; ++k) {
        auto r = run_criterion(k);
        std::cout << criterion_line(r) << "\n";
        if (!r.pass) {
            std::cout << criterion_report(r);
            all = false;
        }
        std::cout.flush();
    }

    auto start = std::chrono::steady_clock::now();
    std::string cmd = std::string(OPERAD_CLI_PATH) + " paper-suite > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    bool ok10 = code == 0 && secs < kCliLimitSeconds;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s criterion 10: paper-suite CLI run exits 0 within %.0f s (exit %d, %.2f s)",
                  ok10 ? "PASS" : "FAIL", kCliLimitSeconds, code, secs);
    std::cout << buf << "\n";
    all = all && ok10;
    return all ? 0 : 1;
}
