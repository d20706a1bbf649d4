#include "mcda/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mcda/csv.hpp"
#include "mcda/numeric.hpp"

namespace mcda::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(detail::cat("cannot open '", path.string(), "' for reading"));
  }
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) {
    throw IoError(detail::cat("failed reading '", path.string(), "'"));
  }
  return std::move(out).str();
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError(detail::cat("cannot open '", path.string(), "' for writing"));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError(detail::cat("failed writing '", path.string(), "'"));
  }
}

namespace {

json parse_json(const std::string& text, const std::string& source) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    throw ParseError(detail::cat(source, ": invalid JSON"));
  }
  return doc;
}

bool has_extension(const fs::path& path, std::string_view ext) {
  auto e = path.extension().string();
  std::transform(e.begin(), e.end(), e.begin(), [](unsigned char c) { return std::tolower(c); });
  return e == ext;
}

void require_unique_codes(const std::vector<std::string>& codes, const std::string& source) {
  std::set<std::string> seen;
  for (const auto& code : codes) {
    if (code.empty()) {
      throw ParseError(detail::cat(source, ": empty factor code in header"));
    }
    if (!seen.insert(code).second) {
      throw ParseError(detail::cat(source, ": duplicate factor code '", code, "'"));
    }
  }
}

}  // namespace

std::vector<Factor> parse_factors(const std::string& text, const std::string& source) {
  const auto rows = csv::parse(text, source);
  if (rows.empty() || rows[0].size() < 3) {
    throw ParseError(detail::cat(source, ": expected header 'index,code,label'"));
  }
  std::vector<Factor> factors;
  std::set<std::string> codes;
  std::set<int> indexes;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() < 3) {
      throw ParseError(detail::cat(source, ":", r + 1, ": expected 3 columns"));
    }
    Factor f;
    f.index = static_cast<int>(parse_number(rows[r][0], detail::cat(source, ":", r + 1)));
    f.code = rows[r][1];
    f.label = rows[r][2];
    if (!codes.insert(f.code).second) {
      throw ParseError(detail::cat(source, ":", r + 1, ": duplicate code '", f.code, "'"));
    }
    if (!indexes.insert(f.index).second) {
      throw ParseError(detail::cat(source, ":", r + 1, ": duplicate index ", f.index));
    }
    factors.push_back(std::move(f));
  }
  if (factors.empty()) {
    throw ParseError(detail::cat(source, ": no factors"));
  }
  return factors;
}

SsimInput parse_ssim(const std::string& text, const std::string& source) {
  const auto rows = csv::parse(text, source);
  if (rows.size() < 2 || rows[0].size() < 2) {
    throw ParseError(detail::cat(source, ": expected a header of factor codes and one row per factor"));
  }
  std::vector<std::string> codes(rows[0].begin() + 1, rows[0].end());
  require_unique_codes(codes, source);
  const int n = static_cast<int>(codes.size());
  if (static_cast<int>(rows.size()) - 1 != n) {
    throw ParseError(detail::cat(source, ": header names ", n, " factors but the file has ",
                                 rows.size() - 1, " rows"));
  }

  std::vector<std::optional<Relation>> upper(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) != n + 1) {
      throw ParseError(detail::cat(source, ":", i + 2, ": expected ", n + 1, " columns, got ",
                                   row.size()));
    }
    if (row[0] != codes[i]) {
      throw ParseError(detail::cat(source, ":", i + 2, ": row label '", row[0],
                                   "' does not match header order (expected '", codes[i], "')"));
    }
    for (int j = 0; j < n; ++j) {
      const auto cell = std::string(trim(row[j + 1]));
      if (j <= i) {
        if (!cell.empty() && cell != "*") {
          throw ParseError(detail::cat(source, ": cell (", codes[i], ", ", codes[j],
                                       ") lies on or below the diagonal and must be '*' or blank, got '",
                                       cell, "'"));
        }
        continue;
      }
      if (cell.empty()) {
        continue;  // reported as missing below
      }
      Relation rel;
      try {
        rel = relation_from_code(cell);
      } catch (const DomainError&) {
        throw ParseError(detail::cat(source, ": cell (", codes[i], ", ", codes[j],
                                     "): unknown relation symbol '", cell, "'"));
      }
      upper[static_cast<std::size_t>(SsimMatrix::upper_index(n, i, j))] = rel;
    }
  }

  std::vector<Relation> complete;
  complete.reserve(upper.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& slot = upper[static_cast<std::size_t>(SsimMatrix::upper_index(n, i, j))];
      if (!slot) {
        throw ParseError(detail::cat(source, ": missing relation for pair (", codes[i], ", ",
                                     codes[j], ")"));
      }
      complete.push_back(*slot);
    }
  }
  return {std::move(codes), SsimMatrix(n, std::move(complete))};
}

SsimInput parse_ssim_json(const std::string& text, const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.contains("categories") || !doc.contains("pairs")) {
    throw ParseError(detail::cat(source, ": expected 'categories' and 'pairs'"));
  }
  std::vector<std::string> codes = doc["categories"].get<std::vector<std::string>>();
  require_unique_codes(codes, source);
  const int n = static_cast<int>(codes.size());
  auto position = [&](const std::string& code) {
    const auto it = std::find(codes.begin(), codes.end(), code);
    if (it == codes.end()) {
      throw ParseError(detail::cat(source, ": unknown factor '", code, "' in pair list"));
    }
    return static_cast<int>(it - codes.begin());
  };

  std::vector<std::optional<Relation>> upper(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (const auto& pair : doc["pairs"]) {
    const auto row = position(pair.at("row").get<std::string>());
    const auto col = position(pair.at("col").get<std::string>());
    if (row >= col) {
      throw ParseError(detail::cat(source, ": pair (", codes[row], ", ", codes[col],
                                   ") is not upper-triangular"));
    }
    auto& slot = upper[static_cast<std::size_t>(SsimMatrix::upper_index(n, row, col))];
    if (slot) {
      throw ParseError(detail::cat(source, ": duplicate pair (", codes[row], ", ", codes[col], ")"));
    }
    const auto symbol = pair.at("symbol").get<std::string>();
    try {
      slot = relation_from_code(symbol);
    } catch (const DomainError&) {
      throw ParseError(detail::cat(source, ": pair (", codes[row], ", ", codes[col],
                                   "): unknown relation symbol '", symbol, "'"));
    }
  }

  std::vector<Relation> complete;
  complete.reserve(upper.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& slot = upper[static_cast<std::size_t>(SsimMatrix::upper_index(n, i, j))];
      if (!slot) {
        throw ParseError(detail::cat(source, ": missing relation for pair (", codes[i], ", ",
                                     codes[j], ")"));
      }
      complete.push_back(*slot);
    }
  }
  return {std::move(codes), SsimMatrix(n, std::move(complete))};
}

SsimInput load_ssim(const fs::path& path) {
  const auto text = read_file(path);
  return has_extension(path, ".json") ? parse_ssim_json(text, path.string())
                                      : parse_ssim(text, path.string());
}

std::string write_ssim_csv(const SsimInput& input) {
  const int n = input.matrix.size();
  std::string out;
  std::vector<std::string> row;
  row.emplace_back("");
  row.insert(row.end(), input.codes.begin(), input.codes.end());
  csv::append_row(out, row);
  for (int i = 0; i < n; ++i) {
    row.assign(1, input.codes[i]);
    for (int j = 0; j < n; ++j) {
      if (j < i) {
        row.emplace_back("");
      } else if (j == i) {
        row.emplace_back("*");
      } else {
        row.emplace_back(1, relation_code(input.matrix.at(i, j)));
      }
    }
    csv::append_row(out, row);
  }
  return out;
}

namespace {

Tfn parse_tfn_cell(std::string_view cell, const std::string& context, bool allow_unordered,
                   bool* was_unordered) {
  // Three numbers separated by ';' or whitespace; ',' or '.' decimals.
  std::vector<std::string> parts;
  std::string current;
  for (char c : cell) {
    if (c == ';' || c == ' ' || c == '\t') {
      if (!current.empty()) {
        parts.push_back(std::move(current));
        current.clear();
      }
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    parts.push_back(std::move(current));
  }
  if (parts.size() != 3) {
    throw ParseError(detail::cat(context, ": expected 3 components, got ", parts.size(), " in '",
                                 cell, "'"));
  }
  const double a = parse_number(parts[0], context);
  const double b = parse_number(parts[1], context);
  const double c = parse_number(parts[2], context);
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw ParseError(detail::cat(context, ": negative component in '", cell, "'"));
  }
  if (!(a <= b && b <= c)) {
    if (!allow_unordered) {
      throw ParseError(detail::cat(context, ": non-monotone triple (", format_double(a), ", ",
                                   format_double(b), ", ", format_double(c),
                                   "); components must satisfy a <= b <= c"));
    }
    if (was_unordered) *was_unordered = true;
    return Tfn::unordered(a, b, c);
  }
  if (was_unordered) *was_unordered = false;
  return Tfn(a, b, c);
}

constexpr std::string_view kWeightsLabel = "WEIGHTS";

}  // namespace

DecisionInput parse_decision_matrix(const std::string& text, const std::string& source,
                                    const DecisionMatrixOptions& options) {
  const auto rows = csv::parse(text, source);
  if (rows.empty() || rows[0].size() < 2) {
    throw ParseError(detail::cat(source, ": expected a header row with criterion codes"));
  }
  std::vector<std::string> criteria(rows[0].begin() + 1, rows[0].end());
  require_unique_codes(criteria, source);
  const int n = static_cast<int>(criteria.size());

  if (rows.size() < 2 || trim(rows[1][0]) != kWeightsLabel) {
    throw ParseError(detail::cat(source, ": first data row must be the ", kWeightsLabel,
                                 " row (one fuzzy triple per criterion)"));
  }

  DecisionInput input;
  input.matrix.criteria = criteria;

  auto parse_row_cells = [&](const std::vector<std::string>& row, const std::string& label,
                             std::vector<Tfn>& out) {
    if (static_cast<int>(row.size()) != n + 1) {
      throw ParseError(detail::cat(source, ": row '", label, "' has ", row.size() - 1,
                                   " cells, expected ", n));
    }
    for (int j = 0; j < n; ++j) {
      const auto context = detail::cat(source, ": row '", label, "', column '", criteria[j], "'");
      bool unordered = false;
      out.push_back(parse_tfn_cell(row[j + 1], context, options.allow_unordered_cells, &unordered));
      if (unordered) {
        input.unordered_cells.push_back(
            {label == kWeightsLabel ? std::string() : label, criteria[j], out.back()});
      }
    }
  };

  parse_row_cells(rows[1], std::string(kWeightsLabel), input.weights);

  std::set<std::string> seen;
  for (std::size_t r = 2; r < rows.size(); ++r) {
    const std::string label(trim(rows[r][0]));
    if (label.empty()) {
      throw ParseError(detail::cat(source, ":", r + 1, ": empty alternative code"));
    }
    if (label == kWeightsLabel) {
      throw ParseError(detail::cat(source, ":", r + 1, ": duplicate ", kWeightsLabel, " row"));
    }
    if (!seen.insert(label).second) {
      throw ParseError(detail::cat(source, ":", r + 1, ": duplicate alternative '", label, "'"));
    }
    input.matrix.alternatives.push_back(label);
    parse_row_cells(rows[r], label, input.matrix.cells);
  }
  return input;
}

DecisionInput parse_decision_matrix_json(const std::string& text, const std::string& source,
                                         const DecisionMatrixOptions& options) {
  const json doc = parse_json(text, source);
  DecisionInput input;
  input.matrix.criteria = doc.at("criteria").get<std::vector<std::string>>();
  require_unique_codes(input.matrix.criteria, source);
  const int n = static_cast<int>(input.matrix.criteria.size());

  auto to_tfn = [&](const json& triple, const std::string& context) {
    if (!triple.is_array() || triple.size() != 3) {
      throw ParseError(detail::cat(context, ": expected a 3-element array"));
    }
    const double a = triple[0].get<double>();
    const double b = triple[1].get<double>();
    const double c = triple[2].get<double>();
    if (a < 0.0 || b < 0.0 || c < 0.0) {
      throw ParseError(detail::cat(context, ": negative component"));
    }
    if (!(a <= b && b <= c)) {
      if (!options.allow_unordered_cells) {
        throw ParseError(detail::cat(context, ": non-monotone triple (", format_double(a), ", ",
                                     format_double(b), ", ", format_double(c), ")"));
      }
      return Tfn::unordered(a, b, c);
    }
    return Tfn(a, b, c);
  };

  const auto& weights = doc.at("weights");
  for (const auto& code : input.matrix.criteria) {
    if (!weights.contains(code)) {
      throw ParseError(detail::cat(source, ": weights are missing criterion '", code, "'"));
    }
    input.weights.push_back(to_tfn(weights[code], detail::cat(source, ": weight '", code, "'")));
  }

  std::set<std::string> seen;
  for (const auto& alt : doc.at("alternatives")) {
    const auto code = alt.at("code").get<std::string>();
    if (!seen.insert(code).second) {
      throw ParseError(detail::cat(source, ": duplicate alternative '", code, "'"));
    }
    const auto& ratings = alt.at("ratings");
    if (static_cast<int>(ratings.size()) != n) {
      throw ParseError(detail::cat(source, ": alternative '", code, "' has ", ratings.size(),
                                   " ratings, expected ", n));
    }
    input.matrix.alternatives.push_back(code);
    for (int j = 0; j < n; ++j) {
      const auto context =
          detail::cat(source, ": row '", code, "', column '", input.matrix.criteria[j], "'");
      const Tfn t = to_tfn(ratings[j], context);
      if (!t.ordered()) {
        input.unordered_cells.push_back({code, input.matrix.criteria[j], t});
      }
      input.matrix.cells.push_back(t);
    }
  }
  return input;
}

DecisionInput load_decision_matrix(const fs::path& path, const DecisionMatrixOptions& options) {
  const auto text = read_file(path);
  return has_extension(path, ".json") ? parse_decision_matrix_json(text, path.string(), options)
                                      : parse_decision_matrix(text, path.string(), options);
}

std::string write_decision_matrix_csv(const FuzzyDecisionMatrix& matrix,
                                      const CriterionWeights& weights) {
  std::string out;
  std::vector<std::string> row;
  row.emplace_back("alternative");
  row.insert(row.end(), matrix.criteria.begin(), matrix.criteria.end());
  csv::append_row(out, row);

  auto cell = [](const Tfn& t) {
    return detail::cat(format_double(t.a()), ";", format_double(t.b()), ";", format_double(t.c()));
  };

  row.assign(1, std::string(kWeightsLabel));
  for (const auto& w : weights) {
    row.push_back(cell(w));
  }
  csv::append_row(out, row);

  for (int i = 0; i < matrix.rows(); ++i) {
    row.assign(1, matrix.alternatives[i]);
    for (int j = 0; j < matrix.cols(); ++j) {
      row.push_back(cell(matrix.at(i, j)));
    }
    csv::append_row(out, row);
  }
  return out;
}

namespace {

std::map<std::string, std::string> parse_two_columns(const std::string& text,
                                                     const std::string& source,
                                                     std::string_view what) {
  const auto rows = csv::parse(text, source);
  if (rows.empty() || rows[0].size() < 2) {
    throw ParseError(detail::cat(source, ": expected a two-column ", what, " table"));
  }
  std::map<std::string, std::string> map;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() < 2) {
      throw ParseError(detail::cat(source, ":", r + 1, ": expected 2 columns"));
    }
    const std::string key(trim(rows[r][0]));
    if (!map.emplace(key, std::string(trim(rows[r][1]))).second) {
      throw ParseError(detail::cat(source, ":", r + 1, ": duplicate entry '", key, "'"));
    }
  }
  return map;
}

}  // namespace

std::map<std::string, Orientation> parse_orientations(const std::string& text,
                                                      const std::string& source) {
  std::map<std::string, Orientation> out;
  for (const auto& [code, value] : parse_two_columns(text, source, "orientation")) {
    try {
      out.emplace(code, orientation_from_name(value));
    } catch (const DomainError&) {
      throw ParseError(detail::cat(source, ": criterion '", code, "': unknown orientation '",
                                   value, "' (use benefit or cost)"));
    }
  }
  return out;
}

std::map<std::string, Orientation> load_orientations(const fs::path& path) {
  const auto text = read_file(path);
  if (has_extension(path, ".json")) {
    const json doc = parse_json(text, path.string());
    std::map<std::string, Orientation> out;
    for (const auto& [code, value] : doc.items()) {
      out.emplace(code, orientation_from_name(value.get<std::string>()));
    }
    return out;
  }
  return parse_orientations(text, path.string());
}

std::map<std::string, std::string> parse_category_map(const std::string& text,
                                                      const std::string& source) {
  return parse_two_columns(text, source, "category-map");
}

std::map<std::string, std::string> load_category_map(const fs::path& path) {
  const auto text = read_file(path);
  if (has_extension(path, ".json")) {
    const json doc = parse_json(text, path.string());
    std::map<std::string, std::string> out;
    for (const auto& [code, value] : doc.items()) {
      out.emplace(code, value.get<std::string>());
    }
    return out;
  }
  return parse_category_map(text, path.string());
}

std::map<std::string, std::optional<Cluster>> parse_cluster_reference(const std::string& text,
                                                                      const std::string& source) {
  std::map<std::string, std::optional<Cluster>> out;
  for (const auto& [code, value] : parse_two_columns(text, source, "cluster")) {
    if (value.empty()) {
      out.emplace(code, std::nullopt);
    } else {
      try {
        out.emplace(code, cluster_from_name(value));
      } catch (const DomainError&) {
        throw ParseError(detail::cat(source, ": factor '", code, "': unknown cluster '", value,
                                     "'"));
      }
    }
  }
  return out;
}

RatingTable parse_rating_table(const std::string& text, const std::string& source) {
  const auto rows = csv::parse(text, source);
  if (rows.size() < 2 || rows[0].size() < 2) {
    throw ParseError(detail::cat(source, ": expected a header of subjects and one row per rater"));
  }
  RatingTable table;
  table.subjects = static_cast<int>(rows[0].size()) - 1;
  table.raters = static_cast<int>(rows.size()) - 1;
  table.score.reserve(static_cast<std::size_t>(table.subjects) * table.raters);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw ParseError(detail::cat(source, ":", r + 1, ": expected ", rows[0].size(),
                                   " columns, got ", rows[r].size()));
    }
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      table.score.push_back(
          parse_number(rows[r][c], detail::cat(source, ": rater '", rows[r][0], "', subject '",
                                               rows[0][c], "'")));
    }
  }
  return table;
}

RatingTable load_rating_table(const fs::path& path) {
  return parse_rating_table(read_file(path), path.string());
}

MarkedMatrixInput parse_marked_matrix(const std::string& text, const std::string& source) {
  const auto rows = csv::parse(text, source);
  if (rows.size() < 2 || rows[0].size() < 2) {
    throw ParseError(detail::cat(source, ": expected a marked matrix with a code header"));
  }
  // The header may carry extra columns (powers); factor columns come first.
  std::vector<std::string> codes;
  for (std::size_t c = 1; c < rows[0].size(); ++c) {
    const std::string name(trim(rows[0][c]));
    if (name == "driving" || name == "driving_rank") break;
    codes.push_back(name);
  }
  require_unique_codes(codes, source);
  const int n = static_cast<int>(codes.size());
  MarkedMatrix matrix(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i + 1) >= rows.size()) {
      throw ParseError(detail::cat(source, ": expected ", n, " matrix rows"));
    }
    const auto& row = rows[i + 1];
    if (static_cast<int>(row.size()) < n + 1) {
      throw ParseError(detail::cat(source, ":", i + 2, ": expected at least ", n + 1, " columns"));
    }
    for (int j = 0; j < n; ++j) {
      try {
        matrix.set(i, j, mark_from_code(trim(row[j + 1])));
      } catch (const DomainError&) {
        throw ParseError(detail::cat(source, ": cell (", codes[i], ", ", codes[j],
                                     "): expected 0, 1 or 1*, got '", row[j + 1], "'"));
      }
    }
  }
  return {std::move(codes), std::move(matrix)};
}

ClosureMode closure_mode_from_name(std::string_view name) {
  if (name == "single-pass") return ClosureMode::SinglePass;
  if (name == "fixed-point") return ClosureMode::FixedPoint;
  throw DomainError(detail::cat("unknown closure mode '", name,
                                "' (use single-pass or fixed-point)"));
}

std::string_view closure_mode_name(ClosureMode mode) {
  return mode == ClosureMode::SinglePass ? "single-pass" : "fixed-point";
}

ExtractionMode extraction_mode_from_name(std::string_view name) {
  if (name == "standard") return ExtractionMode::Standard;
  if (name == "paper-compat") return ExtractionMode::PaperCompat;
  throw DomainError(detail::cat("unknown level extraction mode '", name,
                                "' (use standard or paper-compat)"));
}

std::string_view extraction_mode_name(ExtractionMode mode) {
  return mode == ExtractionMode::Standard ? "standard" : "paper-compat";
}

StudyConfig load_study_config(const fs::path& path) {
  const json doc = parse_json(read_file(path), path.string());
  const fs::path base = path.parent_path();
  auto resolve = [&](const std::string& value) {
    fs::path p(value);
    return p.is_absolute() ? p : base / p;
  };

  StudyConfig config;
  try {
    config.name = doc.value("name", std::string("study"));
    config.categories = resolve(doc.at("categories").get<std::string>());
    config.motivators = resolve(doc.at("motivators").get<std::string>());
    config.ssim = resolve(doc.at("ssim").get<std::string>());
    config.ratings = resolve(doc.at("ratings").get<std::string>());
    config.orientations = resolve(doc.at("orientations").get<std::string>());
    config.category_map = resolve(doc.at("category_map").get<std::string>());
    if (doc.contains("weights")) {
      config.weights = resolve(doc["weights"].get<std::string>());
    }
    if (doc.contains("micmac_reference")) {
      config.micmac_reference = resolve(doc["micmac_reference"].get<std::string>());
    }
    if (doc.contains("conical_order")) {
      config.conical_order = doc["conical_order"].get<std::vector<std::string>>();
    }
    if (doc.contains("modes")) {
      const auto& modes = doc["modes"];
      if (modes.contains("closure")) {
        config.closure = closure_mode_from_name(modes["closure"].get<std::string>());
      }
      if (modes.contains("levels")) {
        config.extraction = extraction_mode_from_name(modes["levels"].get<std::string>());
      }
      if (modes.contains("separation")) {
        config.separation = separation_mode_from_name(modes["separation"].get<std::string>());
      }
    }
    config.allow_unordered_cells = doc.value("allow_unordered_cells", false);
    config.output_dir = resolve(doc.value("output_dir", std::string("out")));
  } catch (const json::exception& e) {
    throw ParseError(detail::cat(path.string(), ": ", e.what()));
  } catch (const DomainError& e) {
    throw ParseError(detail::cat(path.string(), ": ", e.what()));
  }

  for (const auto& [field, file] :
       std::initializer_list<std::pair<const char*, fs::path>>{
           {"categories", config.categories},
           {"motivators", config.motivators},
           {"ssim", config.ssim},
           {"ratings", config.ratings},
           {"orientations", config.orientations},
           {"category_map", config.category_map}}) {
    if (!fs::exists(file)) {
      throw ParseError(detail::cat(path.string(), ": ", field, " file '", file.string(),
                                   "' does not exist"));
    }
  }
  return config;
}

}  // namespace mcda::io
