#include "dynkin_ar/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dar {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& text, const std::string& kind, const std::string& what) {
  const std::string t = trim(text);
  require(!t.empty(), kind, what + ": empty number");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    fail(kind, what + ": not a number: '" + t + "'");
  }
  require(used == t.size(), kind, what + ": trailing characters in '" + t + "'");
  return v;
}

}  // namespace

Quiver quiver_from_text(const std::string& type, const std::string& orientation) {
  DynkinType t = parse_dynkin_type(type);
  const std::string o = trim(orientation);
  if (o.find('>') == std::string::npos) return make_quiver(t, preset_arrows(t, o));
  std::vector<std::pair<int, int>> arrows;
  for (const std::string& piece : split(o, ',')) {
    std::vector<std::string> ends = split(trim(piece), '>');
    require(ends.size() == 2, "InvalidQuiver", "arrows must look like 'a>b': '" + piece + "'");
    arrows.emplace_back(static_cast<int>(parse_long(ends[0], "InvalidQuiver", "arrow source")),
                        static_cast<int>(parse_long(ends[1], "InvalidQuiver", "arrow target")));
  }
  return make_quiver(t, arrows);
}

int parse_root_text(const RootSystem& rs, const std::string& text) {
  const std::string t = trim(text);
  require(!t.empty(), "InvalidPartition", "empty root");
  std::vector<int> coords;
  if (t.front() == '[') {
    require(t.back() == ']', "InvalidPartition", "unterminated segment: '" + t + "'");
    require(rs.quiver.type.family == DynkinFamily::A, "InvalidPartition",
            "segments only name type A roots");
    std::vector<std::string> ends = split(t.substr(1, t.size() - 2), ',');
    require(ends.size() == 2, "InvalidPartition", "segments need two endpoints: '" + t + "'");
    int i = static_cast<int>(parse_long(ends[0], "InvalidPartition", "segment start"));
    int j = static_cast<int>(parse_long(ends[1], "InvalidPartition", "segment end"));
    require(1 <= i && i <= j && j <= rs.n, "InvalidPartition",
            "segment out of range: '" + t + "'");
    coords = segment_coords(rs.n, i, j);
  } else {
    for (const std::string& piece : split(t, ','))
      coords.push_back(static_cast<int>(parse_long(piece, "InvalidPartition", "coordinate")));
    require(static_cast<int>(coords.size()) == rs.n, "InvalidPartition",
            "expected " + std::to_string(rs.n) + " coordinates in '" + t + "'");
  }
  auto it = rs.position_of.find(coords);
  require(it != rs.position_of.end(), "InvalidPartition", "not a positive root: '" + t + "'");
  return it->second;
}

std::string root_text(const RootSystem& rs, int position) {
  const std::vector<int>& coords = rs.roots[position - 1];
  if (rs.quiver.type.family == DynkinFamily::A) {
    auto seg = segment_of(coords);
    if (seg) return "[" + std::to_string(seg->first) + "," + std::to_string(seg->second) + "]";
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? "," : "") << coords[k];
  return os.str();
}

TauOrbitPartition parse_tau_orbit_text(const RootSystem& rs, const std::string& text) {
  std::istringstream is(text);
  std::string token, base_text, len_text;
  bool tagged = false;
  while (is >> token) {
    if (token == "tau-orbit")
      tagged = true;
    else if (token.rfind("base=", 0) == 0)
      base_text = token.substr(5);
    else if (token.rfind("len=", 0) == 0)
      len_text = token.substr(4);
    else
      fail("InvalidPartition", "unexpected token '" + token + "' in partition text");
  }
  require(tagged, "InvalidPartition", "partition text must start with 'tau-orbit'");
  require(!base_text.empty() && !len_text.empty(), "InvalidPartition",
          "partition text needs base=<root> and len=<k>");
  int base = parse_root_text(rs, base_text);
  long len = parse_long(len_text, "InvalidPartition", "length");
  require(len >= 1, "InvalidPartition", "length must be at least 1");
  std::vector<int> parts{base};
  for (long step = 1; step < len; ++step) {
    int next = rs.tau[parts.back() - 1];
    require(next != 0, "InvalidPartition",
            "translate orbit leaves the positive roots before reaching length " +
                std::to_string(len));
    parts.push_back(next);
  }
  std::reverse(parts.begin(), parts.end());
  return make_tau_orbit_partition(rs, parts);
}

std::string tau_orbit_text(const RootSystem& rs, const TauOrbitPartition& p) {
  return "tau-orbit base=" + root_text(rs, p.base()) + " len=" + std::to_string(p.length());
}

KostantPartition parse_kostant_text(const RootSystem& rs, const std::string& text) {
  const std::string t = trim(text);
  require(t.rfind("parts=[", 0) == 0 && t.back() == ']', "InvalidPartition",
          "general partitions are written parts=[<root>;<root>;...]");
  std::vector<int> parts;
  for (const std::string& piece : split(t.substr(7, t.size() - 8), ';'))
    parts.push_back(parse_root_text(rs, piece));
  return make_kostant_partition(rs, std::move(parts));
}

ClusterMonomial parse_monomial_text(const RootSystem& rs, const std::string& text) {
  std::vector<std::pair<MinorIndex, int>> factors;
  for (const std::string& piece : split(text, '*')) {
    const std::string f = trim(piece);
    require(f.rfind("D(", 0) == 0, "InvalidIndex", "factors must look like D(j,l): '" + f + "'");
    std::size_t close = f.find(')');
    require(close != std::string::npos, "InvalidIndex", "unterminated factor: '" + f + "'");
    std::vector<std::string> ends = split(f.substr(2, close - 2), ',');
    require(ends.size() == 2, "InvalidIndex", "factors need two indices: '" + f + "'");
    int j = static_cast<int>(parse_long(ends[0], "InvalidIndex", "minor index"));
    int l = static_cast<int>(parse_long(ends[1], "InvalidIndex", "minor index"));
    int e = 1;
    std::string rest = trim(f.substr(close + 1));
    if (!rest.empty()) {
      require(rest.front() == '^', "InvalidIndex", "trailing characters in '" + f + "'");
      e = static_cast<int>(parse_long(rest.substr(1), "InvalidIndex", "exponent"));
    }
    factors.emplace_back(make_minor_index(rs, j, l), e);
  }
  return make_cluster_monomial(rs, factors);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  out += '\n';
  return out;
}

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      std::string cell = c < row.size() ? row[c] : "";
      os << cell << std::string(width[c] - cell.size(), ' ');
      os << (c + 1 < width.size() ? "  " : "");
    }
    os << '\n';
  };
  emit(headers);
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& row : rows) emit(row);
  return os.str();
}

}  // namespace dar
