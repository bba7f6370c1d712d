#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "strathom/certificate.hpp"
#include "strathom/knot_codec.hpp"
#include "strathom/reidemeister.hpp"
#include "strathom/table.hpp"

namespace {

using namespace strathom;

knot_diagram read_diagram(const std::string& text, const std::string& format) {
  if (format == "gauss") return gauss_to_pd(parse_gauss(text));
  if (format == "dt") return dt_to_pd(parse_dt(text));
  return parse_pd(text);
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text << "\n";
}

int cmd_invariant(const std::string& input, const std::string& format,
                  int quotients, const std::string& out_path) {
  knot_diagram d = read_diagram(input, format);
  knot_certificate cert = certificate(d, quotients);
  write_output(out_path, certificate_json(cert));
  return 0;
}

int cmd_compare(const std::string& a, const std::string& b,
                const std::string& format, int quotients) {
  knot_certificate ca = certificate(read_diagram(a, format), quotients);
  knot_certificate cb = certificate(read_diagram(b, format), quotients);
  comparison_verdict v = compare(ca, cb);
  std::cout << verdict_to_string(v) << "\n";
  return v.distinct ? 3 : 0;
}

int cmd_table(const std::string& table_path, int quotients,
              const std::string& out_path) {
  std::string path = table_path.empty() ? default_table_path() : table_path;
  std::vector<table_entry> entries = load_table(path);
  if (entries.empty()) throw std::invalid_argument("table: no knots in " + path);

  int count = static_cast<int>(entries.size());
  std::vector<knot_certificate> certs(count);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    certs[i] = certificate(entries[i].diagram, quotients);
  }

  if (!out_path.empty()) {
    nlohmann::json all;
    for (int i = 0; i < count; ++i) {
      all[entries[i].name] = nlohmann::json::parse(certificate_json(certs[i]));
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << all.dump(2) << "\n";
  }

  int distinct_pairs = 0, total_pairs = 0;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      comparison_verdict v = compare(certs[i], certs[j]);
      std::cout << entries[i].name << " vs " << entries[j].name << ": "
                << verdict_to_string(v) << "\n";
      ++total_pairs;
      if (v.distinct) ++distinct_pairs;
    }
  }
  std::cout << "separated " << distinct_pairs << " of " << total_pairs
            << " pairs\n";
  return 0;
}

int cmd_fuzz(const std::string& input, const std::string& format, int moves,
             std::uint64_t seed) {
  knot_diagram d = read_diagram(input, format);
  std::vector<reid_move> applied;
  knot_diagram out = fuzz_moves(d, moves, seed, &applied);
  for (const reid_move& mv : applied) {
    std::cerr << rmove_name(mv.kind) << "\n";
  }
  std::cout << pd_to_string(out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratified-homotopy knot certificates"};
  app.require_subcommand(1);

  std::string format = "pd";
  int quotients = 5;
  std::string out_path;
  std::string table_path;
  std::string input_a, input_b;
  int fuzz_k = 8;
  std::uint64_t seed = 1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "input code format")
        ->check(CLI::IsMember({"pd", "gauss", "dt"}));
    cmd->add_option("--quotients", quotients, "largest S_n searched")
        ->check(CLI::Range(1, 5));
  };

  CLI::App* inv = app.add_subcommand("invariant", "certificate for one diagram");
  inv->add_option("code", input_a, "diagram code")->required();
  add_format(inv);
  inv->add_option("--out", out_path, "write JSON here instead of stdout");

  CLI::App* cmp = app.add_subcommand("compare", "compare two diagrams");
  cmp->add_option("first", input_a, "first diagram code")->required();
  cmp->add_option("second", input_b, "second diagram code")->required();
  add_format(cmp);

  CLI::App* tab = app.add_subcommand("table", "certify the bundled knot table");
  tab->add_option("--table", table_path, "table file (default: bundled)");
  tab->add_option("--quotients", quotients, "largest S_n searched")
      ->check(CLI::Range(1, 5));
  tab->add_option("--out", out_path, "write all certificates to this file");

  CLI::App* fz = app.add_subcommand("fuzz", "apply random Reidemeister moves");
  fz->add_option("code", input_a, "diagram code")->required();
  add_format(fz);
  fz->add_option("--fuzz", fuzz_k, "number of moves");
  fz->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv->parsed()) return cmd_invariant(input_a, format, quotients, out_path);
    if (cmp->parsed()) return cmd_compare(input_a, input_b, format, quotients);
    if (tab->parsed()) return cmd_table(table_path, quotients, out_path);
    if (fz->parsed()) return cmd_fuzz(input_a, format, fuzz_k, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
