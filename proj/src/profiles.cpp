// Copyright 2026 The ADITUM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aditum/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>

#include "aditum/error.hpp"
#include "aditum/rng.hpp"
#include "text_util.hpp"

namespace aditum {

// --- Schema -----------------------------------------------------------------

Schema::Schema(std::vector<std::string> names,
               std::vector<std::vector<std::string>> domains,
               std::vector<double> weights)
    : names_(std::move(names)),
      domains_(std::move(domains)),
      weights_(std::move(weights)) {
  if (names_.empty()) throw FormatError("schema has no attributes");
  if (names_.size() != domains_.size()) {
    throw UsageError("schema names and domains differ in length");
  }
  const std::size_t m = names_.size();
  if (weights_.empty()) weights_.assign(m, 1.0 / static_cast<double>(m));
  if (weights_.size() != m) throw FormatError("schema weight count mismatch");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw FormatError("attribute weight outside [0,1]");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw FormatError("attribute weights must sum to 1");
  }
  lookup_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < domains_[j].size(); ++i) {
      if (!lookup_[j].emplace(domains_[j][i], i).second) {
        throw FormatError("attribute '" + names_[j] + "' lists value '" +
                          domains_[j][i] + "' twice");
      }
    }
    offsets_.push_back(offsets_.back() + domains_[j].size());
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      if (names_[j] == names_[k]) {
        throw FormatError("duplicate attribute '" + names_[j] + "'");
      }
    }
  }
}

std::optional<std::size_t> Schema::attribute_index(
    std::string_view name) const {
  for (std::size_t j = 0; j < names_.size(); ++j) {
    if (names_[j] == name) return j;
  }
  return std::nullopt;
}

std::vector<std::size_t> Schema::domain_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(domains_.size());
  for (const auto& d : domains_) out.push_back(d.size());
  return out;
}

std::optional<std::size_t> Schema::value_index(std::size_t j,
                                               std::string_view label) const {
  const auto it = lookup_[j].find(std::string(label));
  if (it == lookup_[j].end()) return std::nullopt;
  return it->second;
}

std::size_t Schema::attribute_of(ValueId a) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(),
                                   static_cast<std::size_t>(a));
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

// --- ProfileSet -------------------------------------------------------------

ProfileSet::ProfileSet(Schema schema, std::size_t node_count)
    : schema_(std::move(schema)),
      node_count_(node_count),
      cells_(node_count * schema_.attribute_count(), kMissing),
      global_counts_(schema_.total_domain_size(), 0) {}

void ProfileSet::set(NodeId v, std::size_t j,
                     std::optional<std::size_t> value_index) {
  if (v >= node_count_ || j >= attribute_count()) {
    throw UsageError("profile cell out of range");
  }
  std::int32_t& c = cells_[static_cast<std::size_t>(v) * attribute_count() + j];
  if (c != kMissing) {
    --global_counts_[static_cast<std::size_t>(c)];
    --total_values_;
  }
  if (!value_index) {
    c = kMissing;
    return;
  }
  if (*value_index >= schema_.domain_size(j)) {
    throw FormatError("value index outside the domain of '" +
                      schema_.name(j) + "'");
  }
  c = static_cast<std::int32_t>(schema_.qualify(j, *value_index));
  ++global_counts_[static_cast<std::size_t>(c)];
  ++total_values_;
}

std::size_t ProfileSet::length(NodeId v) const {
  std::size_t n = 0;
  for (std::int32_t c : row(v)) n += (c != kMissing);
  return n;
}

std::vector<ValueId> ProfileSet::values(NodeId v) const {
  std::vector<ValueId> out;
  for (std::int32_t c : row(v)) {
    if (c != kMissing) out.push_back(static_cast<ValueId>(c));
  }
  return out;
}

// --- text formats -----------------------------------------------------------

namespace {

bool skip_line(std::string_view line) {
  const auto fields = detail::split_whitespace(line);
  return fields.empty() || fields.front().front() == '#';
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

CsvTable read_csv(std::istream& in, bool header_required) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto cells = detail::split_csv(line);
    if (first && header_required) {
      table.header = std::move(cells);
    } else {
      table.rows.push_back(std::move(cells));
      table.line_numbers.push_back(line_no);
    }
    first = false;
  }
  return table;
}

// Resolves the row → node mapping shared by every node-keyed CSV.
class RowNodes {
 public:
  RowNodes(bool keyed, const DiffusionGraph* graph, std::size_t row_count)
      : keyed_(keyed), graph_(graph) {
    if (keyed_ && graph_ == nullptr) {
      throw UsageError("a node column needs a graph to resolve labels");
    }
    node_count_ = graph_ ? graph_->node_count() : row_count;
    if (!keyed_ && row_count > node_count_) {
      throw FormatError("more rows (" + std::to_string(row_count) +
                        ") than graph nodes (" + std::to_string(node_count_) +
                        ")");
    }
    seen_.assign(node_count_, 0);
  }

  std::size_t node_count() const { return node_count_; }

  NodeId resolve(std::size_t row, const std::string& label,
                 std::size_t line_no) {
    NodeId v = static_cast<NodeId>(row);
    if (keyed_) {
      const auto id = graph_->find(label);
      if (!id) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": unknown node '" + label + "'");
      }
      v = *id;
    }
    if (seen_[v]) {
      throw FormatError("line " + std::to_string(line_no) +
                        ": node described twice");
    }
    seen_[v] = 1;
    return v;
  }

 private:
  bool keyed_;
  const DiffusionGraph* graph_;
  std::size_t node_count_ = 0;
  std::vector<char> seen_;
};

ProfileSet fill_profiles(const CsvTable& table, const Schema& schema,
                         const DiffusionGraph* graph) {
  const bool keyed = !table.header.empty() && table.header.front() == "node";
  const std::size_t first_attr = keyed ? 1 : 0;
  std::vector<std::size_t> column_attr;
  for (std::size_t c = first_attr; c < table.header.size(); ++c) {
    const auto j = schema.attribute_index(table.header[c]);
    if (!j) {
      throw FormatError("unknown attribute column '" + table.header[c] + "'");
    }
    if (std::find(column_attr.begin(), column_attr.end(), *j) !=
        column_attr.end()) {
      throw FormatError("attribute column '" + table.header[c] +
                        "' appears twice");
    }
    column_attr.push_back(*j);
  }

  RowNodes nodes(keyed, graph, table.rows.size());
  ProfileSet profiles(schema, nodes.node_count());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    const std::size_t line_no = table.line_numbers[r];
    if (cells.size() != table.header.size()) {
      throw FormatError("profile line " + std::to_string(line_no) +
                        ": expected " + std::to_string(table.header.size()) +
                        " cells");
    }
    const NodeId v = nodes.resolve(r, keyed ? cells[0] : std::string(), line_no);
    for (std::size_t c = 0; c < column_attr.size(); ++c) {
      const std::string& cell = cells[first_attr + c];
      if (cell.empty()) continue;
      const std::size_t j = column_attr[c];
      const auto idx = schema.value_index(j, cell);
      if (!idx) {
        throw FormatError("profile line " + std::to_string(line_no) +
                          ": value '" + cell + "' outside the domain of '" +
                          schema.name(j) + "'");
      }
      profiles.set(v, j, *idx);
    }
  }
  return profiles;
}

}  // namespace

Schema read_schema(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> domains;
  std::vector<double> weights;
  std::size_t weighted = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (skip_line(line)) continue;
    const auto fields = detail::split_whitespace(line);
    std::string_view head = fields[0];
    double w = 0.0;
    if (const auto at = head.find('@'); at != std::string_view::npos) {
      const auto parsed = detail::parse_double(head.substr(at + 1));
      if (!parsed) throw FormatError("bad attribute weight in '" + line + "'");
      w = *parsed;
      head = head.substr(0, at);
      ++weighted;
    }
    names.emplace_back(head);
    weights.push_back(w);
    domains.emplace_back(fields.begin() + 1, fields.end());
    if (domains.back().empty()) {
      throw FormatError("attribute '" + names.back() + "' has an empty domain");
    }
  }
  if (weighted != 0 && weighted != names.size()) {
    throw FormatError("either every attribute carries a weight or none does");
  }
  if (weighted == 0) weights.clear();
  return Schema(std::move(names), std::move(domains), std::move(weights));
}

Schema load_schema_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schema file '" + path + "'");
  return read_schema(in);
}

void write_schema(std::ostream& out, const Schema& schema) {
  for (std::size_t j = 0; j < schema.attribute_count(); ++j) {
    out << schema.name(j) << '@' << detail::format_double(schema.weight(j));
    for (std::size_t i = 0; i < schema.domain_size(j); ++i) {
      out << ' ' << schema.value_label(j, i);
    }
    out << '\n';
  }
}

ProfileSet read_profiles(std::istream& in, const Schema& schema,
                         const DiffusionGraph* graph) {
  const CsvTable table = read_csv(in, true);
  if (table.header.empty()) throw FormatError("profile CSV has no header");
  return fill_profiles(table, schema, graph);
}

ProfileSet read_profiles_infer_schema(std::istream& in,
                                      const DiffusionGraph* graph) {
  const CsvTable table = read_csv(in, true);
  if (table.header.empty()) throw FormatError("profile CSV has no header");
  const bool keyed = table.header.front() == "node";
  const std::size_t first_attr = keyed ? 1 : 0;
  std::vector<std::string> names(table.header.begin() + first_attr,
                                 table.header.end());
  std::vector<std::vector<std::string>> domains(names.size());
  std::vector<std::unordered_map<std::string, std::size_t>> seen(names.size());
  for (const auto& cells : table.rows) {
    for (std::size_t c = 0; c < names.size() && first_attr + c < cells.size();
         ++c) {
      const std::string& cell = cells[first_attr + c];
      if (cell.empty()) continue;
      if (seen[c].emplace(cell, domains[c].size()).second) {
        domains[c].push_back(cell);
      }
    }
  }
  for (std::size_t c = 0; c < names.size(); ++c) {
    // An attribute nobody carries still needs a non-empty domain.
    if (domains[c].empty()) domains[c].push_back("?");
  }
  Schema schema(std::move(names), std::move(domains));
  return fill_profiles(table, schema, graph);
}

ProfileSet load_profiles_file(const std::string& path, const Schema* schema,
                              const DiffusionGraph* graph) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open profile file '" + path + "'");
  return schema ? read_profiles(in, *schema, graph)
                : read_profiles_infer_schema(in, graph);
}

void write_profiles(std::ostream& out, const ProfileSet& profiles,
                    const DiffusionGraph* graph) {
  const Schema& schema = profiles.schema();
  if (graph) out << "node,";
  for (std::size_t j = 0; j < schema.attribute_count(); ++j) {
    out << (j ? "," : "") << schema.name(j);
  }
  out << '\n';
  for (NodeId v = 0; v < profiles.node_count(); ++v) {
    if (graph) out << graph->label(v) << ',';
    for (std::size_t j = 0; j < schema.attribute_count(); ++j) {
      if (j) out << ',';
      const std::int32_t c = profiles.cell(v, j);
      if (c != ProfileSet::kMissing) {
        out << schema.value_label(
            j, static_cast<std::size_t>(c) - schema.qualify(j, 0));
      }
    }
    out << '\n';
  }
}

// --- synthesis ----------------------------------------------------------------

ProfileSet synth_profiles(std::size_t node_count,
                          std::span<const std::size_t> domain_sizes,
                          ValueDistribution distribution, std::uint64_t seed) {
  if (domain_sizes.empty()) throw UsageError("need at least one attribute");
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> domains;
  for (std::size_t j = 0; j < domain_sizes.size(); ++j) {
    if (domain_sizes[j] == 0) throw UsageError("domain sizes must be >= 1");
    names.push_back("A" + std::to_string(j + 1));
    std::vector<std::string> dom;
    for (std::size_t i = 1; i <= domain_sizes[j]; ++i) {
      dom.push_back(std::to_string(i));
    }
    domains.push_back(std::move(dom));
  }
  ProfileSet profiles(Schema(std::move(names), std::move(domains)),
                      node_count);
  for (NodeId v = 0; v < node_count; ++v) {
    StreamRng rng(seed, StreamPurpose::profile_synthesis, v);
    for (std::size_t j = 0; j < domain_sizes.size(); ++j) {
      const std::size_t n = domain_sizes[j];
      std::size_t index = 0;
      if (distribution == ValueDistribution::uniform) {
        index = static_cast<std::size_t>(rng.below(n));
      } else {
        for (;;) {
          const double e = -std::log1p(-rng.uniform());
          const double bucket = std::ceil(e);
          if (bucket >= 1.0 && bucket <= static_cast<double>(n)) {
            index = static_cast<std::size_t>(bucket) - 1;
            break;
          }
        }
      }
      profiles.set(v, j, index);
    }
  }
  return profiles;
}

// --- numeric attributes --------------------------------------------------------

NumericMatrix::NumericMatrix(std::size_t r, std::size_t c)
    : rows(r), cols(c), data(r * c, std::numeric_limits<double>::quiet_NaN()) {}

NumericMatrix read_numeric_csv(std::istream& in, const DiffusionGraph* graph) {
  CsvTable table = read_csv(in, false);
  std::vector<std::string> header;
  if (!table.rows.empty()) {
    const auto& first = table.rows.front();
    const bool is_header = std::any_of(first.begin(), first.end(),
                                       [](const std::string& cell) {
                                         return !cell.empty() &&
                                                !detail::parse_double(cell);
                                       });
    if (is_header) {
      header = first;
      table.rows.erase(table.rows.begin());
      table.line_numbers.erase(table.line_numbers.begin());
    }
  }
  const bool keyed = !header.empty() && header.front() == "node";
  const std::size_t first_col = keyed ? 1 : 0;
  std::size_t cols = header.empty() ? 0 : header.size() - first_col;
  if (header.empty()) {
    for (const auto& r : table.rows) cols = std::max(cols, r.size());
  }
  RowNodes nodes(keyed, graph, table.rows.size());
  NumericMatrix m(nodes.node_count(), cols);
  if (!header.empty()) {
    m.column_names.assign(header.begin() + first_col, header.end());
  } else {
    for (std::size_t c = 0; c < cols; ++c) {
      m.column_names.push_back("A" + std::to_string(c + 1));
    }
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    const std::size_t line_no = table.line_numbers[r];
    if (cells.size() != cols + first_col) {
      throw FormatError("numeric line " + std::to_string(line_no) +
                        ": expected " + std::to_string(cols + first_col) +
                        " cells");
    }
    const NodeId v =
        nodes.resolve(r, keyed ? cells[0] : std::string(), line_no);
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& cell = cells[first_col + c];
      if (cell.empty()) continue;
      const auto x = detail::parse_double(cell);
      if (!x) {
        throw FormatError("numeric line " + std::to_string(line_no) +
                          ": bad number '" + cell + "'");
      }
      m.at(v, c) = *x;
    }
  }
  return m;
}

NumericMatrix load_numeric_file(const std::string& path,
                                const DiffusionGraph* graph) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open numeric file '" + path + "'");
  return read_numeric_csv(in, graph);
}

ProfileSet quantile_discretize(const NumericMatrix& matrix, std::size_t bins) {
  if (bins < 2) throw UsageError("quantile binning needs at least 2 bins");
  std::vector<std::string> labels;
  for (std::size_t b = 1; b <= bins; ++b) labels.push_back(std::to_string(b));
  std::vector<std::vector<std::string>> domains(matrix.cols, labels);
  std::vector<std::string> names = matrix.column_names;
  names.resize(matrix.cols);
  for (std::size_t c = 0; c < matrix.cols; ++c) {
    if (names[c].empty()) names[c] = "A" + std::to_string(c + 1);
  }
  if (matrix.cols == 0) throw FormatError("numeric matrix has no columns");
  ProfileSet profiles(Schema(std::move(names), std::move(domains)),
                      matrix.rows);

  for (std::size_t c = 0; c < matrix.cols; ++c) {
    std::vector<double> sorted;
    for (std::size_t r = 0; r < matrix.rows; ++r) {
      if (!std::isnan(matrix.at(r, c))) sorted.push_back(matrix.at(r, c));
    }
    if (sorted.empty()) {
      throw FormatError("column '" + profiles.schema().name(c) +
                        "' has no finite value");
    }
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<double> bounds;
    for (std::size_t b = 1; b < bins; ++b) {
      const std::size_t rank = (b * n + bins - 1) / bins;  // ⌈b·n/bins⌉
      bounds.push_back(sorted[std::max<std::size_t>(rank, 1) - 1]);
    }
    for (std::size_t r = 0; r < matrix.rows; ++r) {
      const double x = matrix.at(r, c);
      if (std::isnan(x)) continue;
      // Number of boundaries strictly below x.
      const auto above =
          std::lower_bound(bounds.begin(), bounds.end(), x) - bounds.begin();
      profiles.set(static_cast<NodeId>(r), c, static_cast<std::size_t>(above));
    }
  }
  return profiles;
}

NumericMatrix derive_numeric_preferences(const NumericMatrix& matrix) {
  NumericMatrix out = matrix;
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    double row_max = 0.0;
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      const double x = matrix.at(r, c);
      if (std::isnan(x)) continue;
      if (x < 0.0) {
        throw FormatError("preference matrix has a negative entry in row " +
                          std::to_string(r));
      }
      row_max = std::max(row_max, x);
    }
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      double& x = out.at(r, c);
      if (std::isnan(x)) continue;
      x = row_max > 0.0 ? x / row_max : 0.0;
    }
  }
  return out;
}

// --- classes --------------------------------------------------------------------

ClassAssignment read_class_map(std::istream& in, const DiffusionGraph& graph) {
  ClassAssignment classes;
  classes.class_of.assign(graph.node_count(), ClassAssignment::kUnassigned);
  classes.reward.assign(graph.node_count(), 1.0);
  std::unordered_map<std::string, std::int32_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto fields = detail::split_whitespace(line);
    const std::string where = "class map line " + std::to_string(line_no);
    if (fields.size() < 2 || fields.size() > 3) {
      throw FormatError(where + ": expected 'node class [reward]'");
    }
    const auto v = graph.find(fields[0]);
    if (!v) {
      throw FormatError(where + ": unknown node '" + std::string(fields[0]) +
                        "'");
    }
    if (classes.class_of[*v] != ClassAssignment::kUnassigned) {
      throw FormatError(where + ": node assigned twice");
    }
    const std::string name(fields[1]);
    auto [it, fresh] =
        ids.emplace(name, static_cast<std::int32_t>(classes.class_names.size()));
    if (fresh) classes.class_names.push_back(name);
    classes.class_of[*v] = it->second;
    if (fields.size() == 3) {
      const auto r = detail::parse_double(fields[2]);
      if (!r || !(*r > 0.0)) throw FormatError(where + ": reward must be > 0");
      classes.reward[*v] = *r;
    }
  }
  return classes;
}

ClassAssignment load_class_map_file(const std::string& path,
                                    const DiffusionGraph& graph) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open class map '" + path + "'");
  return read_class_map(in, graph);
}

ClassAssignment classes_from_profiles(const ProfileSet& profiles,
                                      std::size_t class_limit) {
  if (class_limit == 0) throw UsageError("class limit must be >= 1");
  std::map<std::vector<std::int32_t>, std::size_t> distinct;
  ClassAssignment classes;
  classes.class_of.resize(profiles.node_count());
  classes.reward.assign(profiles.node_count(), 1.0);
  std::size_t used = 0;
  for (NodeId v = 0; v < profiles.node_count(); ++v) {
    const auto row = profiles.row(v);
    auto [it, fresh] = distinct.emplace(
        std::vector<std::int32_t>(row.begin(), row.end()), distinct.size());
    const std::size_t cls = it->second % class_limit;
    if (fresh) used = std::max(used, cls + 1);
    classes.class_of[v] = static_cast<std::int32_t>(cls);
  }
  for (std::size_t l = 0; l < used; ++l) {
    classes.class_names.push_back("C" + std::to_string(l + 1));
  }
  return classes;
}

}  // namespace aditum
