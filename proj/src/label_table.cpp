#include "ancestry/label_table.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ancestry {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    fields.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

template <class Int>
Int to_int(std::string_view token, std::size_t line_no, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed " + what +
                                " '" + std::string(token) + "'");
  }
  return value;
}

constexpr std::string_view kLabelHeader = "node_id,label_hex,scheme,family_size,label_bits";

}  // namespace

std::string_view to_string(Scheme scheme) {
  return scheme == Scheme::kOptimal ? "optimal" : "classic";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
  if (name == "optimal") return Scheme::kOptimal;
  if (name == "classic") return Scheme::kClassic;
  return std::nullopt;
}

bool LabelTable::decide(NodeId u, NodeId v) const {
  const std::size_t n = size();
  if (u < 0 || static_cast<std::size_t>(u) >= n || v < 0 || static_cast<std::size_t>(v) >= n) {
    throw std::out_of_range("unknown node id in pair (" + std::to_string(u) + ", " +
                            std::to_string(v) + "); table has " + std::to_string(n) + " nodes");
  }
  const auto iu = static_cast<std::size_t>(u);
  const auto iv = static_cast<std::size_t>(v);
  if (scheme_ == Scheme::kClassic) return classic_decide(classic_[iu], classic_[iv]);
  return decide_ancestry(*layout_, optimal_[iu], optimal_[iv]);
}

std::string write_label_csv(const Labeling& labeling) {
  std::ostringstream out;
  out << kLabelHeader << '\n';
  const std::string family = std::to_string(labeling.layout.params().family_size());
  const std::string bits = std::to_string(labeling.layout.total_bits());
  for (std::size_t v = 0; v < labeling.labels.size(); ++v) {
    out << v << ',' << to_hex(labeling.layout, labeling.labels[v]) << ",optimal," << family << ','
        << bits << '\n';
  }
  return out.str();
}

std::string write_label_csv(const ClassicLabeling& labeling, std::uint64_t family_size) {
  std::ostringstream out;
  out << kLabelHeader << '\n';
  for (std::size_t v = 0; v < labeling.labels.size(); ++v) {
    out << v << ',' << to_hex(labeling, labeling.labels[v]) << ",classic," << family_size << ','
        << labeling.total_bits() << '\n';
  }
  return out.str();
}

LabelTable read_label_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && lines[first].empty()) ++first;
  if (first == lines.size() || lines[first] != kLabelHeader) {
    throw std::invalid_argument("label table must start with header '" +
                                std::string(kLabelHeader) + "'");
  }

  LabelTable table;
  std::vector<std::string_view> hex;
  std::vector<char> seen;
  bool have_meta = false;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i], ',');
    if (fields.size() != 5) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 5 fields");
    }
    const auto node = to_int<std::int64_t>(fields[0], line_no, "node id");
    const auto scheme = scheme_from_string(fields[2]);
    if (!scheme) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown scheme '" +
                                  std::string(fields[2]) + "'");
    }
    const auto family = to_int<std::uint64_t>(fields[3], line_no, "family size");
    const auto bits = to_int<unsigned>(fields[4], line_no, "label bits");
    if (!have_meta) {
      table.scheme_ = *scheme;
      table.family_size_ = family;
      table.label_bits_ = bits;
      have_meta = true;
    } else if (*scheme != table.scheme_ || family != table.family_size_ ||
               bits != table.label_bits_) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": scheme/family_size/label_bits differ from earlier rows");
    }
    if (node < 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": negative node id");
    }
    const auto id = static_cast<std::size_t>(node);
    if (id >= hex.size()) {
      hex.resize(id + 1);
      seen.resize(id + 1, 0);
    }
    if (seen[id]) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate node id " +
                                  std::to_string(id));
    }
    seen[id] = 1;
    hex[id] = fields[1];
  }
  for (std::size_t id = 0; id < seen.size(); ++id) {
    if (!seen[id]) throw std::invalid_argument("label table misses node id " + std::to_string(id));
  }
  if (!have_meta) return table;

  if (table.scheme_ == Scheme::kOptimal) {
    const SchemeParams params = SchemeParams::for_family_size(table.family_size_);
    if (params.family_size() != table.family_size_) {
      throw std::invalid_argument("optimal label table family size must be a power of two");
    }
    const LabelLayout wide(params, OffsetField::kWide);
    const LabelLayout tight(params, OffsetField::kTight);
    if (table.label_bits_ == wide.total_bits()) {
      table.layout_ = wide;
    } else if (table.label_bits_ == tight.total_bits()) {
      table.layout_ = tight;
    } else {
      throw std::invalid_argument("label_bits " + std::to_string(table.label_bits_) +
                                  " does not match family size " +
                                  std::to_string(table.family_size_));
    }
    table.optimal_.reserve(hex.size());
    for (const auto h : hex) table.optimal_.push_back(label_from_hex(*table.layout_, h));
  } else {
    const unsigned field_bits = classic_field_bits(table.family_size_);
    if (table.label_bits_ != 2 * field_bits) {
      throw std::invalid_argument("label_bits " + std::to_string(table.label_bits_) +
                                  " does not match classic family size " +
                                  std::to_string(table.family_size_));
    }
    table.classic_.reserve(hex.size());
    for (const auto h : hex) table.classic_.push_back(classic_label_from_hex(field_bits, h));
  }
  return table;
}

std::string write_interval_csv(const SchemeParams& params, const IntervalAssignment& assignment) {
  std::ostringstream out;
  out << "node_id,i,a,b,lo,hi\n";
  for (std::size_t v = 0; v < assignment.intervals.size(); ++v) {
    const DyadicInterval iv = assignment.intervals[v];
    const ClosedInterval e = endpoints(params, iv);
    out << v << ',' << iv.exponent << ',' << iv.offset << ',' << iv.length << ',' << e.lo << ','
        << e.hi << '\n';
  }
  return out.str();
}

std::vector<std::pair<NodeId, NodeId>> read_pairs(std::string_view text) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in{std::string(lines[i])};
    std::string a, b, extra;
    if (!(in >> a)) continue;
    if (!(in >> b) || (in >> extra)) {
      throw std::invalid_argument("line " + std::to_string(i + 1) + ": expected 'u v'");
    }
    pairs.emplace_back(to_int<NodeId>(a, i + 1, "node id"), to_int<NodeId>(b, i + 1, "node id"));
  }
  return pairs;
}

}  // namespace ancestry
