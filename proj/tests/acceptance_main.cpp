// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-9 run in-process; criterion 10 drives the CLI binary.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <quotvir/verify.hpp>

namespace {

struct line {
    bool passed;
    double seconds;
    std::string text;
};

line cli_verify_criterion()
{
    std::string cmd = std::string(QUOTVIR_CLI_PATH) + " verify > /dev/null 2>&1";
    auto t0 = std::chrono::steady_clock::now();
    int rc = std::system(cmd.c_str());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    int status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    bool ok = (status == 0) && (secs < 60.0);
    return {ok, secs,
            "verify CLI exits " + std::to_string(status) + " in " + std::to_string(secs) + "s"};
}

} // namespace

int main()
{
    using quotvir::verify::criterion_result;
    const double budget[9] = {1.0, 60.0, 5.0, 60.0, 60.0, 5.0, 60.0, 60.0, 60.0};
    bool all_ok = true;
    int idx = 0;
    for (const criterion_result& r : quotvir::verify::run_all()) {
        bool ok = r.passed && r.seconds < budget[idx];
        all_ok = all_ok && ok;
        std::printf("%s criterion %2d: %s (%.3fs)\n", ok ? "PASS" : "FAIL", idx + 1,
                    r.name.c_str(), r.seconds);
        if (!ok || idx == 7) // always show the segre sign-convention note
            std::printf("      %s\n", r.detail.c_str());
        ++idx;
    }
    line cli = cli_verify_criterion();
    all_ok = all_ok && cli.passed;
    std::printf("%s criterion 10: verify CLI end-to-end under 60 s (%.3fs)\n",
                cli.passed ? "PASS" : "FAIL", cli.seconds);
    if (!cli.passed)
        std::printf("      %s\n", cli.text.c_str());
    return all_ok ? 0 : 1;
}
