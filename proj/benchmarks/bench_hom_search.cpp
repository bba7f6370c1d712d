// Compares the serial reference hom search against the OpenMP kernel on the
// bundled table presentations and checks they agree exactly.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "strathom/certificate.hpp"
#include "strathom/hom_search.hpp"
#include "strathom/knot_group.hpp"
#include "strathom/presentation.hpp"
#include "strathom/table.hpp"
#include "strathom/word.hpp"

using namespace strathom;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int target = argc > 1 ? std::atoi(argv[1]) : 5;
  if (target < 2 || target > 5) {
    std::cerr << "usage: bench_hom_search [target_n in 2..5]\n";
    return 2;
  }
  std::vector<table_entry> entries = load_table(default_table_path());

  std::cout << "hom search into S" << target << "\n";
  std::cout << std::left << std::setw(10) << "knot" << std::right
            << std::setw(10) << "homs" << std::setw(12) << "serial ms"
            << std::setw(12) << "openmp ms" << std::setw(10) << "speedup"
            << "\n";

  double total_serial = 0.0, total_parallel = 0.0;
  for (const table_entry& e : entries) {
    peripheral_system ps = make_peripheral(e.diagram);
    tietze_result tz = tietze_simplify(tidy(ps.wp.pres));
    word m = substitute(ps.meridian, tz.images);
    word l = substitute(ps.longitude, tz.images);

    auto t0 = clock_type::now();
    finite_quotient_signature serial = hom_search_serial(tz.pres, target, m, l);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    finite_quotient_signature parallel = hom_search(tz.pres, target, m, l);
    double parallel_ms = ms_since(t0);

    if (!(serial == parallel)) {
      std::cerr << e.name << ": serial and parallel results differ\n";
      return 1;
    }
    total_serial += serial_ms;
    total_parallel += parallel_ms;
    std::cout << std::left << std::setw(10) << e.name << std::right
              << std::setw(10) << serial.hom_count << std::setw(12)
              << std::fixed << std::setprecision(3) << serial_ms
              << std::setw(12) << parallel_ms << std::setw(10)
              << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "\n";
  }
  std::cout << "total serial " << std::setprecision(1) << total_serial
            << " ms, openmp " << total_parallel << " ms\n";
  return 0;
}
