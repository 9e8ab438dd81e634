#pragma once

#include <string>

#include <json.hpp>

#include "dyck/heyting.hpp"
#include "dyck/lattice.hpp"
#include "dyck/oracle.hpp"
#include "dyck/paths.hpp"

namespace dyck {

inline constexpr const char* export_format_tag = "dyck-heyting/1";

namespace detail {

inline std::string element_word(const lattice_snapshot& snap, std::size_t id) {
  const auto& h = snap.elements[id];
  if (snap.fam == family::a) return heights_to_word_a(height_seq_a(h)).steps();
  if (snap.fam == family::b) return heights_to_word_b(height_seq_b(h, snap.params.n)).steps();
  // monotone paths serialize as the full u/r walk to (n, m)
  std::string steps;
  int prev = 0;
  for (int hi : h) {
    steps.append(hi - prev, 'u');
    steps.push_back('r');
    prev = hi;
  }
  steps.append(snap.params.m - prev, 'u');
  return steps;
}

inline bool element_regular(const lattice_snapshot& snap, std::size_t id) {
  const auto& h = snap.elements[id];
  if (snap.fam == family::a) return is_regular_a(height_seq_a(h));
  if (snap.fam == family::b) return is_regular_b(height_seq_b(h, snap.params.n));
  return h == bottom_vec(snap.fam, snap.params) || h == top_vec(snap.fam, snap.params);
}

inline bool element_irreducible(const lattice_snapshot& snap, std::size_t id) {
  const auto& h = snap.elements[id];
  if (snap.fam == family::a) return is_join_irreducible(height_seq_a(h));
  if (snap.fam == family::b) return is_join_irreducible(height_seq_b(h, snap.params.n));
  return oracle_join_irreducible(snap, static_cast<int>(id));
}

}  // namespace detail

/// Serializes a snapshot (with its covers) to the versioned JSON document.
inline nlohmann::json export_json(const lattice_snapshot& snap) {
  nlohmann::json doc;
  doc["format"] = export_format_tag;
  doc["family"] = std::string(family_name(snap.fam));
  doc["params"]["n"] = snap.params.n;
  if (snap.fam == family::mono) doc["params"]["m"] = snap.params.m;
  doc["elements"] = nlohmann::json::array();
  for (std::size_t id = 0; id < snap.elements.size(); ++id) {
    nlohmann::json e;
    e["id"] = id;
    e["heights"] = snap.elements[id];
    e["word"] = detail::element_word(snap, id);
    e["regular"] = detail::element_regular(snap, id);
    e["join_irreducible"] = detail::element_irreducible(snap, id);
    doc["elements"].push_back(std::move(e));
  }
  doc["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : snap.covers)
    doc["covers"].push_back(nlohmann::json::array({lo, hi}));
  return doc;
}

inline lattice_snapshot snapshot_from_json(const nlohmann::json& doc) {
  if (!doc.contains("format") || doc["format"] != export_format_tag)
    throw std::domain_error("snapshot_from_json: unknown format tag");
  lattice_snapshot snap;
  const auto fam = family_from_name(doc.at("family").get<std::string>());
  if (!fam) throw std::domain_error("snapshot_from_json: unknown family");
  snap.fam = *fam;
  snap.params.n = doc.at("params").at("n").get<int>();
  snap.params.m = snap.fam == family::mono ? doc.at("params").at("m").get<int>() : 0;
  for (const auto& e : doc.at("elements"))
    snap.elements.push_back(e.at("heights").get<std::vector<int>>());
  for (const auto& c : doc.at("covers"))
    snap.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return snap;
}

/// DOT digraph of the Hasse diagram: cover edges oriented lower -> upper,
/// drawn bottom-to-top, node labels the height sequences, regular nodes
/// filled so rendered diagrams show the regular elements highlighted.
inline std::string export_dot(const lattice_snapshot& snap) {
  std::string out = "digraph dominance {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t id = 0; id < snap.elements.size(); ++id) {
    out += "  v" + std::to_string(id) + " [label=\"" + format_heights(snap.elements[id]) + "\"";
    if (detail::element_regular(snap, id)) out += ", style=filled, fillcolor=palegreen";
    out += "];\n";
  }
  for (const auto& [lo, hi] : snap.covers)
    out += "  v" + std::to_string(lo) + " -> v" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

inline std::string report_to_text(const verify_report& report) {
  std::string out;
  for (const auto& r : report.results) {
    out += "verify family=" + std::string(family_name(report.fam)) +
           " n=" + std::to_string(report.params.n);
    if (report.fam == family::mono) out += " m=" + std::to_string(report.params.m);
    out += " " + r.check + ": " + (r.passed ? "PASS" : "FAIL");
    if (!r.detail.empty()) out += " -- " + r.detail;
    out += "\n";
  }
  return out;
}

inline nlohmann::json report_to_json(const verify_report& report) {
  nlohmann::json doc;
  doc["family"] = std::string(family_name(report.fam));
  doc["n"] = report.params.n;
  if (report.fam == family::mono) doc["m"] = report.params.m;
  doc["checks"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    nlohmann::json c;
    c["check"] = r.check;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    doc["checks"].push_back(std::move(c));
  }
  return doc;
}

}  // namespace dyck
