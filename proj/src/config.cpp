#include "holex/config.hpp"

#include "holex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace holex {

const char* to_string(Command c) {
  switch (c) {
    case Command::m: return "m";
    case Command::delta: return "delta";
    case Command::chi: return "chi";
    case Command::decide: return "decide";
    case Command::blowup: return "blowup";
    case Command::pushforward: return "pushforward";
    case Command::check: return "check";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::m, Command::delta, Command::chi, Command::decide, Command::blowup,
                    Command::pushforward, Command::check})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

namespace {

std::string position(std::size_t line, std::size_t column) {
  if (line == 0) return {};
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(position(line, column) + message), line_(line), column_(column) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// A value together with the 1-based line/column where it starts.
struct Field {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0;
};

using Section = std::map<std::string, Field>;

struct Token {
  std::string_view text;
  std::size_t column;
};

// Splits on `sep`, trimming blanks and tracking each piece's column.
std::vector<Token> split(std::string_view s, char sep, std::size_t column) {
  std::vector<Token> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != sep) continue;
    std::size_t b = start, e = i;
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    out.push_back({s.substr(b, e - b), column + b});
    start = i + 1;
  }
  return out;
}

Integer parse_integer(std::string_view text, std::size_t line, std::size_t column) {
  std::string_view digits = text;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (!ok) throw ConfigError("invalid integer '" + std::string(text) + "'", line, column);
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Integer(s);
}

LatticeVector parse_vector(const Field& f) {
  LatticeVector v;
  if (f.value.empty()) return v;
  std::vector<Integer> coords;
  for (const auto& tok : split(f.value, ',', f.column)) coords.push_back(parse_integer(tok.text, f.line, tok.column));
  return LatticeVector(std::move(coords));
}

IntMatrix parse_matrix(const Field& f) {
  if (f.value.empty()) return IntMatrix(0, 0);
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : split(f.value, ';', f.column)) {
    std::vector<Integer> entries;
    for (const auto& tok : split(row.text, ',', row.column))
      entries.push_back(parse_integer(tok.text, f.line, tok.column));
    if (!rows.empty() && entries.size() != rows.front().size())
      throw ConfigError("gram rows have unequal length", f.line, row.column);
    rows.push_back(std::move(entries));
  }
  if (rows.size() != rows.front().size())
    throw ConfigError("gram is " + std::to_string(rows.size()) + "x" + std::to_string(rows.front().size()) +
                          ", expected a square matrix",
                      f.line, f.column);
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool parse_bool(const Field& f) {
  if (f.value == "true") return true;
  if (f.value == "false") return false;
  throw ConfigError("expected true or false, got '" + f.value + "'", f.line, f.column);
}

int parse_small_int(const Field& f) {
  const Integer v = parse_integer(f.value, f.line, f.column);
  if (!v.fits_sint_p()) throw ConfigError("integer out of range '" + f.value + "'", f.line, f.column);
  return static_cast<int>(v.get_si());
}

const Field& require(const Section& s, const std::string& key) {
  auto it = s.find(key);
  if (it == s.end()) throw ConfigError("missing field " + key);
  return it->second;
}

const Field* optional_field(const Section& s, const std::string& key) {
  auto it = s.find(key);
  return it == s.end() ? nullptr : &it->second;
}

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"surface", {"kind", "gram", "chi_o", "anticanonical", "a_x", "vii_applicable"}},
      {"bundle", {"rank", "c1", "c1_in_ns", "c2"}},
  };
  return keys;
}

std::string join_rows(const std::vector<LatticeVector>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "; ";
    out += rows[i].to_string();
  }
  return out;
}

}  // namespace

JobConfig parse_config(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t b = 0, e = line.size();
    while (b < e && is_space(line[b])) ++b;
    while (e > b && is_space(line[e - 1])) --e;
    if (b == e) continue;
    const std::string_view body = line.substr(b, e - b);

    if (body.front() == '[') {
      if (body.back() != ']') throw ConfigError("expected ']' to close section header", line_no, e + 1);
      const std::string name(body.substr(1, body.size() - 2));
      if (!allowed_keys().count(name)) throw ConfigError("unknown section [" + name + "]", line_no, b + 1);
      if (sections.count(name)) throw ConfigError("duplicate section [" + name + "]", line_no, b + 1);
      sections[name];
      current = name;
      continue;
    }

    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected '='", line_no, e + 1);
    std::string_view key = body.substr(0, eq);
    while (!key.empty() && is_space(key.back())) key.remove_suffix(1);
    if (key.empty()) throw ConfigError("missing key before '='", line_no, b + 1);
    for (char c : key)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ConfigError("invalid key '" + std::string(key) + "'", line_no, b + 1);
    if (current.empty()) throw ConfigError("key outside of a section", line_no, b + 1);
    const auto& allowed = allowed_keys().at(current);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown key '" + std::string(key) + "' in [" + current + "]", line_no, b + 1);

    std::size_t vb = b + eq + 1;
    while (vb < e && is_space(line[vb])) ++vb;
    Field f{std::string(line.substr(vb, e - vb)), line_no, vb + 1};
    auto& section = sections[current];
    if (section.count(std::string(key)))
      throw ConfigError("duplicate key '" + std::string(key) + "'", line_no, b + 1);
    section.emplace(std::string(key), std::move(f));
  }

  if (!sections.count("surface")) throw ConfigError("missing section [surface]");
  if (!sections.count("bundle")) throw ConfigError("missing section [bundle]");
  const Section& surf = sections["surface"];
  const Section& bund = sections["bundle"];

  JobConfig cfg;
  SurfaceModel& s = cfg.surface;
  const Field& kind = require(surf, "kind");
  if (kind.value == "k3") s.kind = SurfaceKind::k3_nonalgebraic;
  else if (kind.value == "class7") s.kind = SurfaceKind::class_vii_known;
  else if (kind.value == "generic") s.kind = SurfaceKind::generic_nonalgebraic;
  else throw ConfigError("unknown surface kind '" + kind.value + "'", kind.line, kind.column);

  const Field& gram = require(surf, "gram");
  try {
    s.lattice = IntersectionLattice(parse_matrix(gram));
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), gram.line, gram.column);
  }
  const std::size_t n = s.lattice.rank();

  s.chi_o = s.kind == SurfaceKind::k3_nonalgebraic ? 2 : 0;
  if (auto* f = optional_field(surf, "chi_o")) s.chi_o = parse_integer(f->value, f->line, f->column);
  s.anticanonical = LatticeVector::zero(n);
  if (auto* f = optional_field(surf, "anticanonical")) {
    s.anticanonical = parse_vector(*f);
    if (s.anticanonical.size() != n)
      throw ConfigError("anticanonical has length " + std::to_string(s.anticanonical.size()) + ", expected " +
                            std::to_string(n),
                        f->line, f->column);
  }
  if (auto* f = optional_field(surf, "a_x")) {
    s.algebraic_dimension = parse_small_int(*f);
    if (s.algebraic_dimension != 0 && s.algebraic_dimension != 1)
      throw ConfigError("a_x must be 0 or 1", f->line, f->column);
  }
  if (auto* f = optional_field(surf, "vii_applicable")) s.vii_applicable = parse_bool(*f);

  BundleTopology& e = cfg.bundle;
  const Field& rank = require(bund, "rank");
  e.rank = parse_small_int(rank);
  if (e.rank < 1) throw ConfigError("rank must be at least 1", rank.line, rank.column);
  const Field& c1 = require(bund, "c1");
  e.c1 = parse_vector(c1);
  if (e.c1.size() != n)
    throw ConfigError("c1 has length " + std::to_string(e.c1.size()) + ", expected " + std::to_string(n), c1.line,
                      c1.column);
  const Field& c2 = require(bund, "c2");
  e.c2 = parse_integer(c2.value, c2.line, c2.column);
  if (auto* f = optional_field(bund, "c1_in_ns")) e.c1_in_ns = parse_bool(*f);

  try {
    s.validate();
  } catch (const InvariantError& err) {
    throw ConfigError(err.what());
  } catch (const DimensionError& err) {
    throw ConfigError(err.what());
  }
  return cfg;
}

std::string print_config(const JobConfig& config) {
  const auto& s = config.surface;
  const auto& e = config.bundle;
  std::vector<LatticeVector> rows;
  for (std::size_t i = 0; i < s.lattice.rank(); ++i) rows.push_back(s.lattice.gram().row(i));

  std::ostringstream out;
  out << "[surface]\n"
      << "kind = " << to_string(s.kind) << '\n'
      << "gram = " << join_rows(rows) << '\n'
      << "chi_o = " << s.chi_o << '\n'
      << "anticanonical = " << s.anticanonical.to_string() << '\n'
      << "a_x = " << s.algebraic_dimension << '\n'
      << "vii_applicable = " << (s.vii_applicable ? "true" : "false") << '\n'
      << "\n[bundle]\n"
      << "rank = " << e.rank << '\n'
      << "c1 = " << e.c1.to_string() << '\n'
      << "c1_in_ns = " << (e.c1_in_ns ? "true" : "false") << '\n'
      << "c2 = " << e.c2 << '\n';
  return out.str();
}

}  // namespace holex
