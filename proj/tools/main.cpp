#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyck/birkhoff.hpp"
#include "dyck/export.hpp"
#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/oracle.hpp"
#include "dyck/paths.hpp"

namespace {

dyck::enumeration_guard guard_from_env() {
  dyck::enumeration_guard guard;
  if (const char* raw = std::getenv("DYCK_HEYTING_MAX_N")) {
    const int bound = std::atoi(raw);
    if (bound > 0) {
      guard.max_n_a = bound;
      guard.max_n_b = bound;
      guard.max_total_mono = bound;
    }
  }
  return guard;
}

dyck::family parse_family(const std::string& name) {
  const auto fam = dyck::family_from_name(name);
  if (!fam) throw std::domain_error("unknown family '" + name + "' (expected a, b or mono)");
  return *fam;
}

dyck::height_seq_a parse_a(const std::string& text, int n) {
  dyck::height_seq_a p(dyck::parse_heights(text));
  if (p.n() != n) throw std::domain_error("sequence length does not match --n");
  return p;
}

dyck::height_seq_b parse_b(const std::string& text, int n) {
  return dyck::height_seq_b(dyck::parse_heights(text), n);
}

dyck::monotone_path parse_mono(const std::string& text, int n, int m) {
  dyck::monotone_path p(dyck::parse_heights(text), m);
  if (p.n() != n) throw std::domain_error("sequence length does not match --n");
  return p;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    out.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Heyting algebra of Dyck paths and monotone lattice paths under dominance order"};
  app.require_subcommand(1);
  const auto guard = guard_from_env();

  std::string family_name, format = "count", which, lhs, rhs, path_text, word_text, heights_text,
              checks_text;
  int n = 0, m = -1, max_n = 0;
  bool list_flag = false, count_flag = false, parallel = false, json_report = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate a family and export it");
  enumerate_cmd->add_option("--family", family_name)->required();
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--m", m);
  enumerate_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"count", "list", "json", "dot"}));

  auto* op_cmd = app.add_subcommand("op", "evaluate meet, join or implication");
  op_cmd->add_option("--family", family_name)->required();
  op_cmd->add_option("--n", n)->required();
  op_cmd->add_option("--m", m);
  op_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"meet", "join", "impl"}));
  op_cmd->add_option("--lhs", lhs)->required();
  op_cmd->add_option("--rhs", rhs)->required();

  auto* pseudo_cmd = app.add_subcommand("pseudo", "evaluate the pseudocomplement");
  pseudo_cmd->add_option("--family", family_name)->required();
  pseudo_cmd->add_option("--n", n)->required();
  pseudo_cmd->add_option("--m", m);
  pseudo_cmd->add_option("--path", path_text)->required();

  auto* regular_cmd = app.add_subcommand("regular", "list or count the regular elements");
  regular_cmd->add_option("--family", family_name)->required();
  regular_cmd->add_option("--n", n)->required();
  auto* lf = regular_cmd->add_flag("--list", list_flag);
  regular_cmd->add_flag("--count", count_flag)->excludes(lf);

  auto* convert_cmd = app.add_subcommand("convert", "convert between word and height sequence");
  convert_cmd->add_option("--family", family_name)->required();
  convert_cmd->add_option("--n", n)->required();
  auto* word_opt = convert_cmd->add_option("--word", word_text);
  convert_cmd->add_option("--heights", heights_text)->excludes(word_opt);

  auto* verify_cmd = app.add_subcommand("verify", "run exhaustive verification sweeps");
  verify_cmd->add_option("--family", family_name)->required();
  verify_cmd->add_option("--max-n", max_n)->required();
  verify_cmd->add_option("--m", m);
  verify_cmd->add_option("--checks", checks_text,
                         "comma-separated subset of: counts,distributive,impl,pseudo,regular,"
                         "irreducible,psi,embedding,equalizer,interval");
  verify_cmd->add_flag("--parallel", parallel);
  verify_cmd->add_flag("--json", json_report, "machine-readable report");

  app.footer("Set DYCK_HEYTING_MAX_N to raise the enumeration guards (default off).");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return 1;
  }

  const auto fam = parse_family(family_name);
  const bool needs_m = fam == dyck::family::mono;
  if (needs_m && m < 0) throw std::domain_error("family mono requires --m");
  const dyck::lattice_params params{n, needs_m ? m : 0};

  if (enumerate_cmd->parsed()) {
    auto snap = dyck::enumerate(fam, params, guard);
    if (format == "count") {
      std::cout << snap.elements.size() << "\n";
    } else if (format == "list") {
      for (const auto& h : snap.elements) std::cout << dyck::format_heights(h) << "\n";
    } else {
      snap.covers = dyck::compute_covers(snap);
      if (format == "json") std::cout << dyck::export_json(snap).dump(2) << "\n";
      else std::cout << dyck::export_dot(snap);
    }
    return 0;
  }

  if (op_cmd->parsed()) {
    std::vector<int> out;
    if (fam == dyck::family::a) {
      const auto x = parse_a(lhs, n), y = parse_a(rhs, n);
      out = (which == "meet" ? meet(x, y) : which == "join" ? join(x, y) : impl_a(x, y)).heights();
    } else if (fam == dyck::family::b) {
      const auto x = parse_b(lhs, n), y = parse_b(rhs, n);
      out = (which == "meet" ? meet(x, y) : which == "join" ? join(x, y) : impl_b(x, y)).heights();
    } else {
      const auto x = parse_mono(lhs, n, m), y = parse_mono(rhs, n, m);
      out = (which == "meet" ? meet(x, y) : which == "join" ? join(x, y) : impl_mono(x, y)).heights();
    }
    std::cout << dyck::format_heights(out) << "\n";
    return 0;
  }

  if (pseudo_cmd->parsed()) {
    std::vector<int> out;
    if (fam == dyck::family::a) out = dyck::pseudo_a(parse_a(path_text, n)).heights();
    else if (fam == dyck::family::b) out = dyck::pseudo_b(parse_b(path_text, n)).heights();
    else out = dyck::pseudo_mono(parse_mono(path_text, n, m)).heights();
    std::cout << dyck::format_heights(out) << "\n";
    return 0;
  }

  if (regular_cmd->parsed()) {
    if (fam == dyck::family::mono)
      throw std::domain_error("regular: family must be a or b");
    std::vector<std::vector<int>> paths;
    if (fam == dyck::family::a)
      for (const auto& p : dyck::regulars_a(n, guard)) paths.push_back(p.heights());
    else
      for (const auto& p : dyck::regulars_b(n, guard)) paths.push_back(p.heights());
    if (count_flag) std::cout << paths.size() << "\n";
    else
      for (const auto& h : paths) std::cout << dyck::format_heights(h) << "\n";
    return 0;
  }

  if (convert_cmd->parsed()) {
    if (fam == dyck::family::mono)
      throw std::domain_error("convert: family must be a or b");
    if (word_text.empty() == heights_text.empty())
      throw std::domain_error("convert: exactly one of --word or --heights is required");
    if (!word_text.empty()) {
      const dyck::dyck_word w(word_text, fam);
      if (w.semilength() != n)
        throw std::domain_error("convert: word length does not match --n");
      const auto h = fam == dyck::family::a ? dyck::word_to_heights_a(w).heights()
                                            : dyck::word_to_heights_b(w).heights();
      std::cout << dyck::format_heights(h) << "\n";
    } else if (fam == dyck::family::a) {
      std::cout << dyck::heights_to_word_a(parse_a(heights_text, n)).steps() << "\n";
    } else {
      std::cout << dyck::heights_to_word_b(parse_b(heights_text, n)).steps() << "\n";
    }
    return 0;
  }

  // verify
  if (max_n < 1) throw std::domain_error("verify: --max-n must be positive");
  const auto checks = checks_text.empty() ? std::vector<std::string>{} : split_commas(checks_text);
  bool all_passed = true;
  nlohmann::json reports = nlohmann::json::array();
  for (int size = 1; size <= max_n; ++size) {
    const dyck::lattice_params sweep_params{size, needs_m ? m : 0};
    const auto report = dyck::verify_family(fam, sweep_params, checks, parallel, guard);
    all_passed = all_passed && report.all_passed();
    if (json_report) reports.push_back(dyck::report_to_json(report));
    else std::cout << dyck::report_to_text(report);
  }
  if (json_report) {
    nlohmann::json doc;
    doc["format"] = dyck::export_format_tag;
    doc["reports"] = std::move(reports);
    doc["passed"] = all_passed;
    std::cout << doc.dump(2) << "\n";
  }
  return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
