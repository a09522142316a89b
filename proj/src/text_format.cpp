#include "assocgeom/text_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace asg {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> words;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) parsed.words.push_back(line.substr(start, i - start));
    }
    if (!parsed.words.empty()) out.push_back(std::move(parsed));
    if (text.empty()) break;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const Line& l, std::string_view word) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) fail(l.number, "expected a count, got '" + std::string(word) + "'");
  return v;
}

bool is_label(const Line& l) {
  return l.words.size() == 1 && l.words[0].size() >= 3 && l.words[0].front() == '[' && l.words[0].back() == ']';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& next() { return lines_[pos_++]; }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  template <FieldElement K>
  Subspace<K> block() {
    if (done()) fail(last_line(), "expected 'field'");
    const Line& fl = next();
    if (fl.words[0] != "field" || fl.words.size() != 2) fail(fl.number, "expected 'field <p=N|q>'");
    Field field;
    try {
      field = Field::parse(fl.words[1]);
    } catch (const Error& e) {
      fail(fl.number, e.what());
    }
    if (field.is_rational() != std::is_same_v<K, Rational>) fail(fl.number, "field kind does not match the request");
    if (done()) fail(last_line(), "expected 'ambient'");
    const Line& al = next();
    if (al.words[0] != "ambient" || al.words.size() != 2) fail(al.number, "expected 'ambient <n>'");
    const std::size_t n = parse_count(al, al.words[1]);
    Matrix<K> rows(field, 0, n);
    std::vector<K> row(n);
    while (!done() && !is_label(peek()) && peek().words[0] != "field" && peek().words[0] != "relation") {
      const Line& l = next();
      if (l.words.size() != n) {
        fail(l.number, "row has " + std::to_string(l.words.size()) + " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        try {
          row[j] = parse_scalar<K>(l.words[j], field);
        } catch (const Error& e) {
          fail(l.number, e.what());
        }
      }
      rows.append_row(row);
    }
    return rows.rows() == 0 ? Subspace<K>::zero(field, n) : Subspace<K>::span(rows);
  }

  void expect_end() const {
    if (!done()) fail(peek().number, "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

Field peek_field(std::string_view text) {
  for (const auto& l : split_lines(text)) {
    const auto it = std::find(l.words.begin(), l.words.end(), std::string_view("field"));
    if (it == l.words.end()) continue;
    if (it + 1 == l.words.end()) fail(l.number, "expected 'field <p=N|q>'");
    try {
      return Field::parse(*(it + 1));
    } catch (const Error& e) {
      fail(l.number, e.what());
    }
  }
  throw Error(ErrorCode::kParse, "line 1: no 'field' line");
}

template <FieldElement K>
std::string format_subspace(const Subspace<K>& s) {
  std::ostringstream out;
  out << "field " << s.field().name() << "\nambient " << s.ambient() << "\n";
  const auto& b = s.basis();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out << (c ? " " : "") << b(r, c).str();
    out << "\n";
  }
  return out.str();
}

template <FieldElement K>
std::string format_subspace_line(const Subspace<K>& s) {
  std::string out = "{";
  const auto& b = s.basis();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < b.cols(); ++c) out += (c ? " " : "") + b(r, c).str();
  }
  return out + "}";
}

template <FieldElement K>
Subspace<K> parse_subspace(std::string_view text) {
  Reader reader(text);
  auto s = reader.template block<K>();
  reader.expect_end();
  return s;
}

template <FieldElement K>
std::string format_quintuple(const Quintuple<K>& q) {
  return "[x]\n" + format_subspace(q.x) + "[a]\n" + format_subspace(q.a) + "[y]\n" + format_subspace(q.y) +
         "[b]\n" + format_subspace(q.b) + "[z]\n" + format_subspace(q.z);
}

template <FieldElement K>
Quintuple<K> parse_quintuple(std::string_view text) {
  static constexpr std::array<std::string_view, 5> labels{"[x]", "[a]", "[y]", "[b]", "[z]"};
  Reader reader(text);
  std::array<Subspace<K>, 5> parts;
  for (std::size_t i = 0; i < 5; ++i) {
    if (reader.done()) fail(reader.last_line(), "expected label " + std::string(labels[i]));
    const Line& l = reader.next();
    if (!is_label(l) || l.words[0] != labels[i]) fail(l.number, "expected label " + std::string(labels[i]));
    parts[i] = reader.template block<K>();
    if (i > 0 && (parts[i].ambient() != parts[0].ambient() || !(parts[i].field() == parts[0].field()))) {
      fail(l.number, "block " + std::string(labels[i]) + " lives in a different space than [x]");
    }
  }
  reader.expect_end();
  return Quintuple<K>{parts[0], parts[1], parts[2], parts[3], parts[4]};
}

template <FieldElement K>
std::string format_relation(const Relation<K>& r) {
  return "relation " + std::to_string(r.src_dim()) + " " + std::to_string(r.dst_dim()) + "\n" +
         format_subspace(r.graph());
}

template <FieldElement K>
Relation<K> parse_relation(std::string_view text) {
  Reader reader(text);
  if (reader.done()) fail(1, "expected 'relation <n> <m>'");
  const Line& h = reader.next();
  if (h.words[0] != "relation" || h.words.size() != 3) fail(h.number, "expected 'relation <n> <m>'");
  const std::size_t n = parse_count(h, h.words[1]);
  const std::size_t m = parse_count(h, h.words[2]);
  auto graph = reader.template block<K>();
  if (graph.ambient() != n + m) fail(h.number, "graph ambient does not equal n + m");
  reader.expect_end();
  return Relation<K>(n, m, std::move(graph));
}

namespace {

// "<key>=<count>"
std::size_t keyed_count(const Line& l, std::size_t word, std::string_view key) {
  if (word >= l.words.size() || l.words[word].substr(0, key.size() + 1) != std::string(key) + "=")
    fail(l.number, "expected '" + std::string(key) + "=<n>'");
  return parse_count(l, l.words[word].substr(key.size() + 1));
}

template <FieldElement K>
Field header_field(const Line& l, std::size_t word) {
  if (word + 2 != l.words.size() || l.words[word] != "field") fail(l.number, "expected 'field <p=N|q>'");
  Field f;
  try {
    f = Field::parse(l.words[word + 1]);
  } catch (const Error& e) {
    fail(l.number, e.what());
  }
  if (f.is_rational() != std::is_same_v<K, Rational>) fail(l.number, "field kind does not match the request");
  return f;
}

template <FieldElement K>
void read_rows(const std::vector<Line>& lines, std::size_t& pos, std::size_t rows, std::size_t width, Field f,
               std::vector<K>& out) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (pos >= lines.size()) fail(lines.empty() ? 1 : lines.back().number, "expected " + std::to_string(rows) + " rows of constants");
    const Line& l = lines[pos++];
    if (l.words.size() != width) {
      fail(l.number, "row has " + std::to_string(l.words.size()) + " entries, expected " + std::to_string(width));
    }
    for (std::size_t j = 0; j < width; ++j) {
      try {
        out.push_back(parse_scalar<K>(l.words[j], f));
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
    }
  }
}

template <FieldElement K>
void write_rows(std::ostringstream& out, const std::vector<K>& values, std::size_t width) {
  for (std::size_t i = 0; i < values.size(); ++i) out << values[i].str() << ((i + 1) % width == 0 ? "\n" : " ");
}

}  // namespace

template <FieldElement K>
std::string format_algebra(const Algebra<K>& a) {
  std::ostringstream out;
  out << "algebra dim=" << a.dim << " field " << a.field.name() << "\n";
  write_rows(out, a.constants, a.dim);
  if (a.unit) {
    out << "unit";
    for (const auto& c : *a.unit) out << " " << c.str();
    out << "\n";
  }
  return out.str();
}

template <FieldElement K>
Algebra<K> parse_algebra(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].words[0] != "algebra") fail(1, "expected 'algebra dim=<d> field <p=N|q>'");
  const std::size_t d = keyed_count(lines[0], 1, "dim");
  const Field f = header_field<K>(lines[0], 2);
  Algebra<K> a(f, d);
  std::vector<K> values;
  std::size_t pos = 1;
  read_rows(lines, pos, d * d, d, f, values);
  a.constants = std::move(values);
  if (pos < lines.size() && lines[pos].words[0] == "unit") {
    const Line& l = lines[pos++];
    if (l.words.size() != d + 1) fail(l.number, "unit needs " + std::to_string(d) + " entries");
    Vec<K> u;
    for (std::size_t j = 0; j < d; ++j) {
      try {
        u.push_back(parse_scalar<K>(l.words[j + 1], f));
      } catch (const Error& e) {
        fail(l.number, e.what());
      }
    }
    if (!is_unit(a, u)) fail(l.number, "not a unit of the algebra");
    a.unit = std::move(u);
  }
  if (pos < lines.size()) fail(lines[pos].number, "unexpected trailing content");
  return a;
}

template <FieldElement K>
std::string format_pair(const PairModel<K>& p) {
  std::ostringstream out;
  out << "pair dim+=" << p.dims[0] << " dim-=" << p.dims[1] << " field " << p.field.name() << "\n[plus]\n";
  write_rows(out, p.constants[0], p.dims[0]);
  out << "[minus]\n";
  write_rows(out, p.constants[1], p.dims[1]);
  return out.str();
}

template <FieldElement K>
PairModel<K> parse_pair(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].words[0] != "pair") fail(1, "expected 'pair dim+=<m> dim-=<k> field <p=N|q>'");
  const std::size_t m = keyed_count(lines[0], 1, "dim+");
  const std::size_t k = keyed_count(lines[0], 2, "dim-");
  const Field f = header_field<K>(lines[0], 3);
  PairModel<K> p(f, m, k);
  std::size_t pos = 1;
  for (const auto& [label, a, b, idx] : {std::tuple{"[plus]", m, k, 0}, std::tuple{"[minus]", k, m, 1}}) {
    if (pos >= lines.size() || lines[pos].words.size() != 1 || lines[pos].words[0] != label)
      fail(pos < lines.size() ? lines[pos].number : lines.back().number, "expected label " + std::string(label));
    ++pos;
    std::vector<K> values;
    read_rows(lines, pos, a * b * a, a, f, values);
    p.constants[idx] = std::move(values);
  }
  if (pos < lines.size()) fail(lines[pos].number, "unexpected trailing content");
  return p;
}

#define ASG_INSTANTIATE_TEXT(K)                                         \
  template std::string format_subspace(const Subspace<K>&);             \
  template Subspace<K> parse_subspace<K>(std::string_view);             \
  template std::string format_subspace_line(const Subspace<K>&);        \
  template std::string format_quintuple(const Quintuple<K>&);           \
  template Quintuple<K> parse_quintuple<K>(std::string_view);           \
  template std::string format_relation(const Relation<K>&);             \
  template Relation<K> parse_relation<K>(std::string_view);             \
  template std::string format_algebra(const Algebra<K>&);               \
  template Algebra<K> parse_algebra<K>(std::string_view);               \
  template std::string format_pair(const PairModel<K>&);                \
  template PairModel<K> parse_pair<K>(std::string_view);

ASG_INSTANTIATE_TEXT(Fp)
ASG_INSTANTIATE_TEXT(Rational)

}  // namespace asg
