#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jnismell/scan.hpp"

using namespace jnismell;

namespace {

double time_ms(const std::vector<ScanInput>& inputs, bool parallel, int reps,
               size_t* fact_total) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto start = std::chrono::steady_clock::now();
        std::vector<FileFacts> facts = parallel
                                           ? extract_facts_parallel(inputs, "bench")
                                           : extract_facts_serial(inputs, "bench");
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best) best = ms;

        size_t total = 0;
        for (const FileFacts& f : facts)
            total += f.java_classes.size() + f.native_functions.size() +
                     f.diagnostics.size();
        *fact_total = total;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: scan_bench <source-dir> [reps] [min-files]\n");
        return 2;
    }
    const std::string root = argv[1];
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;
    const size_t min_files = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 512;

    std::vector<ScanInput> inputs = collect_source_files(root);
    if (inputs.empty()) {
        std::fprintf(stderr, "no source files under %s\n", root.c_str());
        return 2;
    }
    const size_t original = inputs.size();
    // Small corpora are replicated so the timings rise above noise.
    while (inputs.size() < min_files) {
        ScanInput copy = inputs[inputs.size() % original];
        copy.path = "rep" + std::to_string(inputs.size()) + "/" + copy.path;
        inputs.push_back(std::move(copy));
    }

    size_t serial_total = 0, parallel_total = 0;
    double serial_ms = time_ms(inputs, false, reps, &serial_total);
    double parallel_ms = time_ms(inputs, true, reps, &parallel_total);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("files:    %zu (replicated from %zu)\n", inputs.size(), original);
    std::printf("facts:    serial %zu, parallel %zu%s\n", serial_total,
                parallel_total, serial_total == parallel_total ? "" : "  MISMATCH");
    std::printf("serial:   %8.2f ms (best of %d)\n", serial_ms, reps);
    std::printf("parallel: %8.2f ms (best of %d, %d threads)\n", parallel_ms, reps,
                threads);
    std::printf("speedup:  %.2fx\n", serial_ms / parallel_ms);
    return serial_total == parallel_total ? 0 : 1;
}
