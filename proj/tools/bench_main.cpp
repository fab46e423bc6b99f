#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bench_lib.hpp"
#include "pagefem/parallel.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Run the pagefem benchmarks and print their tables"};
    int id = 0;
    unsigned max_level = 0, min_level = 0, gqo = 0, threads = 1;
    std::string etype, csv;
    bench::Options opt;
    app.add_option("id", id, "Benchmark 1..7")->required();
    auto* max_opt = app.add_option("--max-level", max_level, "Finest mesh level");
    auto* min_opt = app.add_option("--min-level", min_level, "Coarsest mesh level");
    app.add_option("--etype", etype, "Element type")->check(CLI::IsMember({"P1", "P2"}));
    app.add_option("--gqo", gqo, "Quadrature order")->check(CLI::Range(1u, 4u));
    app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--csv", csv, "Write the table as CSV");
    app.add_option("--mesh-out", opt.mesh_out, "Write the finest mesh");
    app.add_option("--mm-out", opt.mm_out, "MatrixMarket output prefix (benchmarks 5-7)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    if (*max_opt) opt.max_level = max_level;
    if (*min_opt) opt.min_level = min_level;
    if (!etype.empty()) opt.etype = pagefem::parse_element_type(etype);
    opt.gqo = gqo;
    pagefem::set_num_threads(threads);

    try {
        const bench::Report r = bench::run_benchmark(id, opt);
        std::cout << r.to_text();
        if (!csv.empty()) {
            std::ofstream os(csv);
            if (!os) {
                std::cerr << "cannot write " << csv << '\n';
                return 1;
            }
            os << r.to_csv();
        }
    } catch (const bench::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
