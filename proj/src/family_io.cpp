#include "extset/family_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace extset {
namespace {

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || ptr == line.data() + i) {
      throw ParseError(line_no, "expected an integer near '" + std::string(line.substr(i, 8)) + "'");
    }
    if (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r') {
      throw ParseError(line_no, "unexpected character '" + std::string(1, *ptr) + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

ParsedFamily build(int n, int k, const std::vector<std::pair<int, std::vector<long long>>>& rows) {
  std::vector<Mask> masks;
  masks.reserve(rows.size());
  for (const auto& [line_no, row] : rows) {
    if (static_cast<int>(row.size()) != k) {
      throw ParseError(line_no, "set has " + std::to_string(row.size()) + " elements, expected k = " +
                                    std::to_string(k));
    }
    Mask m = 0;
    long long prev = 0;
    for (long long e : row) {
      if (e < 1 || e > n) {
        throw ParseError(line_no, "element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
      }
      if (e <= prev) throw ParseError(line_no, "elements must be strictly increasing");
      prev = e;
      m |= element_bit(static_cast<int>(e));
    }
    masks.push_back(m);
  }
  const auto raw = masks.size();
  Family fam = Family::from_masks(n, k, std::move(masks));
  return ParsedFamily{fam, static_cast<int>(raw - fam.size())};
}

void check_header(long long n, long long k, int line_no) {
  if (n < 1 || n > kMaxGround) throw ParseError(line_no, "n must be in [1,64]");
  if (k < 0 || k > n) throw ParseError(line_no, "k must be in [0,n]");
}

}  // namespace

ParsedFamily parse_family_text(std::string_view text) {
  std::vector<std::pair<int, std::vector<long long>>> rows;
  bool have_header = false;
  long long n = 0, k = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto ints = parse_ints(line, line_no);
    if (ints.empty()) {
      // A k = 0 family lists its single empty set as a blank line, which is
      // indistinguishable from padding; such families are written as JSON.
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (ints.size() != 2) throw ParseError(line_no, "header must be `n k`");
      n = ints[0];
      k = ints[1];
      check_header(n, k, line_no);
      have_header = true;
    } else {
      rows.emplace_back(line_no, std::move(ints));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing `n k` header");
  return build(static_cast<int>(n), static_cast<int>(k), rows);
}

std::string format_family_text(const Family& fam) {
  std::ostringstream os;
  os << fam.n() << ' ' << fam.k() << '\n';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    bool first = true;
    for (int e : fam.at(i).elements()) {
      if (!first) os << ' ';
      first = false;
      os << e;
    }
    os << '\n';
  }
  return os.str();
}

ParsedFamily parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  try {
    const long long n = doc.at("n").get<long long>();
    const long long k = doc.at("k").get<long long>();
    check_header(n, k, 0);
    std::vector<std::pair<int, std::vector<long long>>> rows;
    for (const auto& s : doc.at("sets")) rows.emplace_back(0, s.get<std::vector<long long>>());
    return build(static_cast<int>(n), static_cast<int>(k), rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed family JSON: ") + e.what());
  }
}

std::string format_family_json(const Family& fam) {
  nlohmann::json sets = nlohmann::json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) sets.push_back(fam.at(i).elements());
  nlohmann::json doc{{"n", fam.n()}, {"k", fam.k()}, {"sets", sets}};
  return doc.dump();
}

ParsedFamily parse_family_auto(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_family_json(text) : parse_family_text(text);
  }
  throw ParseError(1, "empty input");
}

}  // namespace extset
