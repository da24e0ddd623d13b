#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "qhurwitz/errors.hpp"
#include "qhurwitz/verify.hpp"

using namespace qhurwitz;

int main() {
    namespace fs = std::filesystem;
    fs::path work = fs::temp_directory_path() / "qhurwitz-acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    VerifyOptions opts;
    opts.cli_path = QHURWITZ_CLI;
    opts.work_dir = work.string();

    const auto& names = verify_names();
    int failed = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        VerifyResult r;
        try {
            r = run_verify(names[i], opts);
        } catch (const std::exception& e) {
            r.ok = false;
            r.counterexample = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu (%s): %s [%.2fs]\n", i + 1, names[i].c_str(), r.ok ? "PASS" : "FAIL", secs);
        if (!r.ok) {
            ++failed;
            std::printf("  counterexample: %s\n", r.counterexample.c_str());
        }
    }
    fs::remove_all(work);
    return failed ? 1 : 0;
}
