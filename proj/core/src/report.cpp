#include "mcda/report.hpp"

#include <algorithm>

#include "mcda/csv.hpp"
#include "mcda/numeric.hpp"

namespace mcda::report {

namespace fs = std::filesystem;

namespace {

std::string tfn_cell(const Tfn& t) {
  return detail::cat(format_double(t.a()), ";", format_double(t.b()), ";", format_double(t.c()));
}

std::string tfn_cell3(const Tfn& t) {
  return detail::cat(format_fixed3(t.a()), "; ", format_fixed3(t.b()), "; ", format_fixed3(t.c()));
}

std::string reachability_csv(const IsmStage& ism) {
  std::string out;
  std::vector<std::string> row{""};
  row.insert(row.end(), ism.codes.begin(), ism.codes.end());
  csv::append_row(out, row);
  for (int i = 0; i < ism.initial.size(); ++i) {
    row.assign(1, ism.codes[i]);
    for (int j = 0; j < ism.initial.size(); ++j) {
      row.push_back(ism.initial.reaches(i, j) ? "1" : "0");
    }
    csv::append_row(out, row);
  }
  return out;
}

std::string closure_csv(const IsmStage& ism) {
  std::string out;
  std::vector<std::string> row{""};
  row.insert(row.end(), ism.codes.begin(), ism.codes.end());
  row.emplace_back("driving");
  row.emplace_back("driving_rank");
  csv::append_row(out, row);
  const int n = ism.filled.size();
  for (int i = 0; i < n; ++i) {
    row.assign(1, ism.codes[i]);
    for (int j = 0; j < n; ++j) {
      row.push_back(mark_code(ism.filled.at(i, j)));
    }
    row.push_back(std::to_string(ism.powers.driving[i]));
    row.push_back(std::to_string(ism.powers.driving_rank[i]));
    csv::append_row(out, row);
  }
  row.assign(1, "dependence");
  for (int j = 0; j < n; ++j) row.push_back(std::to_string(ism.powers.dependence[j]));
  row.emplace_back("");
  row.emplace_back("");
  csv::append_row(out, row);
  row.assign(1, "dependence_rank");
  for (int j = 0; j < n; ++j) row.push_back(std::to_string(ism.powers.dependence_rank[j]));
  row.emplace_back("");
  row.emplace_back("");
  csv::append_row(out, row);
  return out;
}

std::string levels_csv(const IsmStage& ism) {
  std::string out;
  std::vector<std::string> row{"category", "level"};
  csv::append_row(out, row);
  for (std::size_t i = 0; i < ism.codes.size(); ++i) {
    row.assign({ism.codes[i], std::to_string(ism.levels.level[i])});
    csv::append_row(out, row);
  }
  return out;
}

std::string conical_csv(const IsmStage& ism) {
  std::string out;
  const int n = ism.conical.size();
  std::vector<std::string> row{""};
  for (int c = 0; c < n; ++c) row.push_back(ism.codes[ism.conical.order[c]]);
  csv::append_row(out, row);
  for (int r = 0; r < n; ++r) {
    row.assign(1, ism.codes[ism.conical.order[r]]);
    for (int c = 0; c < n; ++c) row.push_back(std::to_string(ism.conical.at(r, c)));
    csv::append_row(out, row);
  }
  return out;
}

std::string micmac_csv(const MicmacStage& stage) {
  std::string out;
  std::vector<std::string> row{"dependence", "driving", "code", "cluster"};
  csv::append_row(out, row);
  for (std::size_t i = 0; i < stage.codes.size(); ++i) {
    const auto& [dependence, driving] = stage.classification.points[i];
    row.assign({std::to_string(dependence), std::to_string(driving), stage.codes[i],
                std::string(cluster_name(stage.classification.cluster[i]))});
    csv::append_row(out, row);
  }
  return out;
}

std::string fuzzy_matrix_csv(const FuzzyDecisionMatrix& m,
                             const std::vector<std::pair<std::string, const std::vector<Tfn>*>>&
                                 extra_rows = {}) {
  std::string out;
  std::vector<std::string> row{"alternative"};
  row.insert(row.end(), m.criteria.begin(), m.criteria.end());
  csv::append_row(out, row);
  for (int i = 0; i < m.rows(); ++i) {
    row.assign(1, m.alternatives[i]);
    for (int j = 0; j < m.cols(); ++j) row.push_back(tfn_cell(m.at(i, j)));
    csv::append_row(out, row);
  }
  for (const auto& [label, cells] : extra_rows) {
    row.assign(1, label);
    for (const auto& t : *cells) row.push_back(tfn_cell(t));
    csv::append_row(out, row);
  }
  return out;
}

std::string separations_csv(const TopsisStage& stage) {
  std::string out;
  const auto& m = stage.weighted;
  std::vector<std::string> row{"alternative"};
  for (const auto& c : m.criteria) row.push_back("dplus_" + c);
  row.emplace_back("d_plus");
  for (const auto& c : m.criteria) row.push_back("dminus_" + c);
  row.emplace_back("d_minus");
  csv::append_row(out, row);
  for (int i = 0; i < m.rows(); ++i) {
    row.assign(1, m.alternatives[i]);
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_double(stage.to_positive[i][j]));
    row.push_back(format_double(stage.separations.d_plus[i]));
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_double(stage.to_negative[i][j]));
    row.push_back(format_double(stage.separations.d_minus[i]));
    csv::append_row(out, row);
  }
  return out;
}

std::string closeness_csv(const TopsisStage& stage) {
  std::string out;
  std::vector<std::string> row{"motivator", "category", "cc", "local_rank", "global_rank"};
  csv::append_row(out, row);
  const auto& alts = stage.weighted.alternatives;
  for (std::size_t i = 0; i < alts.size(); ++i) {
    row.assign({alts[i], stage.category_of.at(alts[i]), format_double(stage.ranking.cc[i]),
                std::to_string(stage.ranking.local_rank[i]),
                std::to_string(stage.ranking.global_rank[i])});
    csv::append_row(out, row);
  }
  return out;
}

void markdown_marked_matrix(std::string& md, const std::vector<std::string>& codes,
                            const MarkedMatrix& m) {
  md += "| |";
  for (const auto& c : codes) md += " " + c + " |";
  md += "\n|---|";
  for (std::size_t i = 0; i < codes.size(); ++i) md += "---|";
  md += "\n";
  for (int i = 0; i < m.size(); ++i) {
    md += "| " + codes[i] + " |";
    for (int j = 0; j < m.size(); ++j) md += " " + mark_code(m.at(i, j)) + " |";
    md += "\n";
  }
  md += "\n";
}

std::string join_codes(const std::vector<std::string>& codes, const std::vector<int>& indices) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ", ";
    out += codes[indices[k]];
  }
  return out;
}

}  // namespace

std::string render_digraph(const IsmStage& ism) {
  std::string dot = "digraph hierarchy {\n  rankdir=BT;\n  node [shape=box];\n";
  const int depth = ism.levels.depth;
  for (int level = 1; level <= depth; ++level) {
    dot += detail::cat("  { rank=same; /* level ", level, " */");
    for (std::size_t i = 0; i < ism.codes.size(); ++i) {
      if (ism.levels.level[i] == level) {
        dot += detail::cat(" \"", ism.codes[i], "\";");
      }
    }
    dot += " }\n";
  }
  for (const auto& edge : ism.edges) {
    dot += detail::cat("  \"", ism.codes[edge.from], "\" -> \"", ism.codes[edge.to], "\";\n");
  }
  dot += "}\n";
  return dot;
}

std::string render_markdown(const ReportBundle& bundle) {
  std::string md = detail::cat("# ", bundle.study_name, "\n\n");
  if (!bundle.ism && !bundle.micmac && !bundle.topsis) {
    md += "No stages were produced by this run.\n";
    if (!bundle.notes.empty()) md += "\n";
  }

  if (bundle.ism) {
    const auto& ism = *bundle.ism;
    md += detail::cat("## Structural analysis\n\nclosure mode: ",
                      io::closure_mode_name(ism.closure), "; level extraction: ",
                      io::extraction_mode_name(ism.extraction), "\n\n");
    md += "### Initial reachability\n\n";
    markdown_marked_matrix(md, ism.codes, ism.initial);
    md += "### Reachability after transitivity fill\n\n";
    markdown_marked_matrix(md, ism.codes, ism.filled);
    md += "Driving power:";
    for (std::size_t i = 0; i < ism.codes.size(); ++i) {
      md += detail::cat(" ", ism.codes[i], "=", ism.powers.driving[i]);
    }
    md += "\n\nDependence power:";
    for (std::size_t i = 0; i < ism.codes.size(); ++i) {
      md += detail::cat(" ", ism.codes[i], "=", ism.powers.dependence[i]);
    }
    md += "\n\n### Level partition\n\n";
    for (const auto& iteration : ism.levels.trace) {
      md += detail::cat("Iteration ", iteration.number, ": extracted {",
                        join_codes(ism.codes, iteration.extracted), "}\n\n");
      md += "| factor | reachability | antecedent | intersection | extracted |\n";
      md += "|---|---|---|---|---|\n";
      for (const auto& entry : iteration.entries) {
        md += detail::cat("| ", ism.codes[entry.factor], " | ",
                          join_codes(ism.codes, entry.reachability), " | ",
                          join_codes(ism.codes, entry.antecedent), " | ",
                          join_codes(ism.codes, entry.intersection), " | ",
                          entry.extracted ? "yes" : "", " |\n");
      }
      md += "\n";
    }
  }

  if (bundle.micmac) {
    const auto& stage = *bundle.micmac;
    md += "## Driving/dependence classification\n\n";
    md += detail::cat("threshold: powers above ", format_fixed3(stage.classification.threshold),
                      " count as high\n\n");
    md += "| factor | dependence | driving | cluster |";
    const bool with_reference = !stage.reference.empty();
    if (with_reference) md += " reference |";
    md += "\n|---|---|---|---|";
    if (with_reference) md += "---|";
    md += "\n";
    for (std::size_t i = 0; i < stage.codes.size(); ++i) {
      const auto& [dependence, driving] = stage.classification.points[i];
      md += detail::cat("| ", stage.codes[i], " | ", dependence, " | ", driving, " | ",
                        cluster_name(stage.classification.cluster[i]), " |");
      if (with_reference) {
        const auto it = stage.reference.find(stage.codes[i]);
        if (it == stage.reference.end() || !it->second) {
          md += " (unstated) |";
        } else {
          md += detail::cat(" ", cluster_name(*it->second), " |");
        }
      }
      md += "\n";
    }
    md += "\n";
    if (with_reference) {
      for (std::size_t i = 0; i < stage.codes.size(); ++i) {
        const auto it = stage.reference.find(stage.codes[i]);
        if (it == stage.reference.end() || !it->second) {
          md += detail::cat("- divergence: the reference narrative does not place ",
                            stage.codes[i], "; computed cluster is ",
                            cluster_name(stage.classification.cluster[i]), ".\n");
        } else if (*it->second != stage.classification.cluster[i]) {
          md += detail::cat("- divergence: ", stage.codes[i], " is computed as ",
                            cluster_name(stage.classification.cluster[i]),
                            " from its powers but the reference narrative calls it ",
                            cluster_name(*it->second), ".\n");
        }
      }
      md += "\n";
    }
  }

  if (bundle.topsis) {
    const auto& stage = *bundle.topsis;
    md += detail::cat("## Fuzzy ranking\n\nseparation mode: ",
                      separation_mode_name(stage.separations.mode), "\n\n");
    md += "| motivator | category | D+ | D- | CC | local rank | global rank |\n";
    md += "|---|---|---|---|---|---|---|\n";
    const auto& alts = stage.weighted.alternatives;
    for (std::size_t i = 0; i < alts.size(); ++i) {
      md += detail::cat("| ", alts[i], " | ", stage.category_of.at(alts[i]), " | ",
                        format_fixed3(stage.separations.d_plus[i]), " | ",
                        format_fixed3(stage.separations.d_minus[i]), " | ",
                        format_fixed3(stage.ranking.cc[i]), " | ", stage.ranking.local_rank[i],
                        " | ", stage.ranking.global_rank[i], " |\n");
    }
    md += "\n### Ideal solutions\n\n| criterion | positive | negative |\n|---|---|---|\n";
    for (int j = 0; j < stage.weighted.cols(); ++j) {
      md += detail::cat("| ", stage.weighted.criteria[j], " | ",
                        tfn_cell3(stage.ideals.positive[j]), " | ",
                        tfn_cell3(stage.ideals.negative[j]), " |\n");
    }
    md += "\n";
  }

  if (!bundle.notes.empty()) {
    md += "## Notes\n\n";
    for (const auto& note : bundle.notes) {
      md += detail::cat("- ", note, "\n");
    }
  }
  return md;
}

std::vector<fs::path> emit_reports(const ReportBundle& bundle, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError(detail::cat("cannot create output directory '", dir.string(), "': ",
                              ec.message()));
  }

  std::vector<fs::path> written;
  auto emit = [&](const char* name, const std::string& content) {
    const fs::path path = dir / name;
    io::write_file(path, content);
    written.push_back(path);
  };

  if (bundle.ism) {
    emit("reachability.csv", reachability_csv(*bundle.ism));
    emit("closure.csv", closure_csv(*bundle.ism));
    emit("levels.csv", levels_csv(*bundle.ism));
    emit("conical.csv", conical_csv(*bundle.ism));
    emit("digraph.dot", render_digraph(*bundle.ism));
  }
  if (bundle.micmac) {
    emit("micmac.csv", micmac_csv(*bundle.micmac));
  }
  if (bundle.topsis) {
    emit("normalized.csv", fuzzy_matrix_csv(bundle.topsis->normalized));
    emit("weighted.csv",
         fuzzy_matrix_csv(bundle.topsis->weighted,
                          {{"APLUS", &bundle.topsis->ideals.positive},
                           {"AMINUS", &bundle.topsis->ideals.negative}}));
    emit("separations.csv", separations_csv(*bundle.topsis));
    emit("closeness.csv", closeness_csv(*bundle.topsis));
  }
  emit("report.md", render_markdown(bundle));
  return written;
}

}  // namespace mcda::report
