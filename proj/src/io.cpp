#include "tanglecolor/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tanglecolor/error.hpp"

namespace tc {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Tokenizes the stream into non-empty lines with # comments stripped and
// walks them with a (line, token) cursor.
class Scanner {
 public:
  Scanner(std::istream& in, std::string origin) : origin_(std::move(origin)) {
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::istringstream words(raw);
      Line line{number, {}};
      std::string tok;
      while (words >> tok) line.tokens.push_back(tok);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
  }

  bool done() const { return li_ >= lines_.size(); }

  bool at_line_start() const { return ti_ == 0; }

  int line_number() const {
    return done() ? (lines_.empty() ? 0 : lines_.back().number) : lines_[li_].number;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("Parse", origin_ + ":" + std::to_string(line_number()) + ": " + what);
  }

  // Blames the line of the token consumed most recently; the cursor itself
  // may already sit on the following line.
  [[noreturn]] void fail_token(const std::string& what) const {
    int line = last_line_ > 0 ? last_line_ : line_number();
    throw Error("Parse", origin_ + ":" + std::to_string(line) + ": " + what);
  }

  std::string word(const std::string& what) {
    if (done()) fail("unexpected end of input, expected " + what);
    std::string tok = lines_[li_].tokens[ti_];
    last_line_ = lines_[li_].number;
    advance();
    return tok;
  }

  int integer(const std::string& what) {
    std::string tok = word(what);
    try {
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      fail_token("expected " + what + ", got '" + tok + "'");
    }
  }

  std::vector<int> integers(int count, const std::string& what) {
    std::vector<int> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(integer(what));
    return out;
  }

  // remaining tokens of the current line as integers (may be empty)
  std::vector<int> rest_of_line(const std::string& what) {
    std::vector<int> out;
    if (done()) return out;
    std::size_t line = li_;
    while (!done() && li_ == line) out.push_back(integer(what));
    return out;
  }

  std::string peek() const { return done() ? std::string() : lines_[li_].tokens[ti_]; }

  const std::string& origin() const { return origin_; }

 private:
  void advance() {
    if (++ti_ >= lines_[li_].tokens.size()) {
      ++li_;
      ti_ = 0;
    }
  }

  std::string origin_;
  std::vector<Line> lines_;
  std::size_t li_ = 0;
  std::size_t ti_ = 0;
  int last_line_ = 0;
};

void expect_keyword(Scanner& sc, const std::string& keyword) {
  if (!sc.at_line_start()) sc.fail("expected '" + keyword + "' at the start of a line");
  std::string tok = sc.word("'" + keyword + "'");
  if (tok != keyword) sc.fail_token("expected '" + keyword + "', got '" + tok + "'");
}

int positive(Scanner& sc, const std::string& what) {
  int v = sc.integer(what);
  if (v < 1) sc.fail_token(what + " must be at least 1, got " + std::to_string(v));
  return v;
}

// 1-based table entry in 1..n, returned 0-based
int label_in(Scanner& sc, int n, const std::string& what) {
  int v = sc.integer(what);
  if (v < 1 || v > n)
    sc.fail_token(what + " out of range 1.." + std::to_string(n) + ", got " + std::to_string(v));
  return v - 1;
}

// Re-raises a validation failure with file context so the offending record
// can be found.
[[noreturn]] void rewrap(const Scanner& sc, int line, const std::string& name, const Error& e) {
  throw Error(e.kind(),
              sc.origin() + ":" + std::to_string(line) + ": record '" + name + "': " + e.detail());
}

}  // namespace

std::vector<Quandle> read_quandles(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<Quandle> out;
  while (!sc.done()) {
    int line = sc.line_number();
    expect_keyword(sc, "quandle");
    std::string name = sc.word("quandle name");
    int n = positive(sc, "quandle order");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) table.push_back(label_in(sc, n, "quandle table entry"));
    try {
      out.push_back(validate_quandle(name, n, std::move(table)));
    } catch (const Error& e) {
      rewrap(sc, line, name, e);
    }
  }
  if (out.empty()) throw Error("Parse", origin + ": no quandle records found");
  return out;
}

std::vector<FiniteGroup> read_groups(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<FiniteGroup> out;
  while (!sc.done()) {
    int line = sc.line_number();
    expect_keyword(sc, "group");
    std::string name = sc.word("group name");
    int n = positive(sc, "group order");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) table.push_back(label_in(sc, n, "group table entry"));
    try {
      out.push_back(validate_group(name, n, std::move(table)));
    } catch (const Error& e) {
      rewrap(sc, line, name, e);
    }
  }
  if (out.empty()) throw Error("Parse", origin + ": no group records found");
  return out;
}

std::vector<BraidWord> read_braids(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<BraidWord> out;
  while (!sc.done()) {
    int line = sc.line_number();
    expect_keyword(sc, "knot");
    std::string name = sc.word("knot name");
    int strands = positive(sc, "strand count");
    int letters = sc.integer("letter count");
    if (letters < 0) sc.fail_token("letter count must be non-negative");
    std::vector<int> word = sc.integers(letters, "braid letter");
    try {
      out.push_back(make_braid(name, strands, word));
    } catch (const Error& e) {
      rewrap(sc, line, name, e);
    }
  }
  if (out.empty()) throw Error("Parse", origin + ": no knot records found");
  return out;
}

std::vector<NamedPermGroup> read_perm_groups(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<NamedPermGroup> out;
  while (!sc.done()) {
    int line = sc.line_number();
    expect_keyword(sc, "permgroup");
    std::string name = sc.word("permgroup name");
    int degree = positive(sc, "permutation degree");
    std::vector<Perm> gens;
    while (!sc.done() && sc.at_line_start() && sc.peek() == "gen") {
      sc.word("'gen'");
      Perm p;
      p.reserve(degree);
      for (int i = 0; i < degree; ++i) p.push_back(label_in(sc, degree, "generator image"));
      gens.push_back(std::move(p));
    }
    try {
      out.push_back({name, PermGroup(degree, gens)});
    } catch (const Error& e) {
      rewrap(sc, line, name, e);
    }
  }
  if (out.empty()) throw Error("Parse", origin + ": no permgroup records found");
  return out;
}

std::vector<RawAutomorphism> read_automorphisms(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<RawAutomorphism> out;
  while (!sc.done()) {
    expect_keyword(sc, "auto");
    RawAutomorphism rec;
    rec.name = sc.word("automorphism name");
    std::vector<int> images = sc.rest_of_line("image label");
    if (images.empty()) {
      if (sc.done() || !sc.at_line_start()) sc.fail("expected a line of image labels");
      images = sc.rest_of_line("image label");
    }
    rec.images.reserve(images.size());
    for (int v : images) {
      if (v < 1) sc.fail_token("image label must be at least 1, got " + std::to_string(v));
      rec.images.push_back(v - 1);
    }
    out.push_back(std::move(rec));
  }
  if (out.empty()) throw Error("Parse", origin + ": no auto records found");
  return out;
}

std::vector<RawCocycle> read_cocycles(std::istream& in, const std::string& origin) {
  Scanner sc(in, origin);
  std::vector<RawCocycle> out;
  while (!sc.done()) {
    expect_keyword(sc, "cocycle");
    RawCocycle rec;
    rec.name = sc.word("cocycle name");
    rec.base_order = positive(sc, "base order");
    rec.coeff_order = positive(sc, "coefficient order");
    rec.table.reserve(static_cast<std::size_t>(rec.base_order) * rec.base_order);
    for (int i = 0; i < rec.base_order * rec.base_order; ++i)
      rec.table.push_back(label_in(sc, rec.coeff_order, "cocycle table entry"));
    expect_keyword(sc, "section");
    for (int i = 0; i < rec.base_order; ++i) {
      int v = sc.integer("section entry");
      if (v < 1) sc.fail_token("section entry must be at least 1, got " + std::to_string(v));
      rec.section.push_back(v - 1);
    }
    out.push_back(std::move(rec));
  }
  if (out.empty()) throw Error("Parse", origin + ": no cocycle records found");
  return out;
}

Cocycle bind_cocycle(const RawCocycle& raw, const Quandle& base, const FiniteGroup& coeff) {
  if (raw.base_order != base.order)
    throw Error("InvalidCocycle", "cocycle '" + raw.name + "' has base order " +
                                      std::to_string(raw.base_order) + " but quandle '" +
                                      base.name + "' has order " + std::to_string(base.order));
  if (raw.coeff_order != coeff.order)
    throw Error("InvalidCocycle", "cocycle '" + raw.name + "' has coefficient order " +
                                      std::to_string(raw.coeff_order) + " but group '" +
                                      coeff.name + "' has order " + std::to_string(coeff.order));
  Cocycle c;
  c.name = raw.name;
  c.base = base;
  c.coeff = coeff;
  c.table = raw.table;
  c.section = raw.section;
  if (auto violation = validate_cocycle(c)) {
    throw Error("InvalidCocycle",
                violation->law + " fails at (" + std::to_string(violation->a + 1) + ", " +
                    std::to_string(violation->b + 1) +
                    (violation->law == "CocycleIdentity"
                         ? ", " + std::to_string(violation->c + 1) + ")"
                         : ")"));
  }
  return c;
}

void write_quandle(std::ostream& out, const Quandle& q) {
  out << "quandle " << q.name << " " << q.order << "\n";
  for (int a = 0; a < q.order; ++a) {
    for (int b = 0; b < q.order; ++b) out << (b ? " " : "") << q.at(a, b) + 1;
    out << "\n";
  }
}

void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "group " << g.name << " " << g.order << "\n";
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) out << (b ? " " : "") << g.mul(a, b) + 1;
    out << "\n";
  }
}

void write_braid(std::ostream& out, const BraidWord& b) {
  out << "knot " << b.name << " " << b.strands << " " << b.letters.size();
  for (int w : b.letters) out << " " << w;
  out << "\n";
}

void write_cocycle(std::ostream& out, const Cocycle& c) {
  out << "cocycle " << c.name << " " << c.base.order << " " << c.coeff.order << "\n";
  for (int a = 0; a < c.base.order; ++a) {
    for (int b = 0; b < c.base.order; ++b) out << (b ? " " : "") << c.at(a, b) + 1;
    out << "\n";
  }
  out << "section";
  for (int s : c.section) out << " " << s + 1;
  out << "\n";
}

void write_automorphism(std::ostream& out, const std::string& name,
                        const std::vector<int>& images) {
  out << "auto " << name << "\n";
  for (std::size_t i = 0; i < images.size(); ++i) out << (i ? " " : "") << images[i] + 1;
  out << "\n";
}

std::string format_counts(const std::vector<long long>& counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s;
}

std::string report_line(const SymmetryReport& rep, const std::vector<std::string>& wanted) {
  std::string s = rep.k.knot_name + "\t" + rep.k.quandle_name;
  s += "\tpsi=" + format_counts(rep.k.counts);
  for (const std::string& w : wanted) {
    const PsiVector* v = nullptr;
    if (w == "m")
      v = &rep.m;
    else if (w == "r")
      v = &rep.r;
    else if (w == "rm")
      v = &rep.rm;
    else
      throw Error("BadSymmetry", "unknown symmetry '" + w + "', expected m, r or rm");
    s += "\tpsi_" + w + "=" + format_counts(v->counts);
  }
  s += "\tdistinguishes=";
  if (rep.distinguished.empty()) {
    s += "none";
  } else {
    for (std::size_t i = 0; i < rep.distinguished.size(); ++i) {
      if (i) s += ",";
      s += rep.distinguished[i];
    }
  }
  return s;
}

std::string resolve_input_path(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(path, ec)) return path;
  const char* root = std::getenv("TANGLECOLOR_FIXTURES");
  if (root && *root) {
    fs::path candidate = fs::path(root) / path;
    if (fs::exists(candidate, ec)) return candidate.string();
  }
  return path;  // let the open fail with the literal name
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::string resolved = resolve_input_path(path);
  std::ifstream in(resolved);
  if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
  return in;
}

}  // namespace

std::vector<Quandle> read_quandles_file(const std::string& path) {
  auto in = open_input(path);
  return read_quandles(in, path);
}

std::vector<FiniteGroup> read_groups_file(const std::string& path) {
  auto in = open_input(path);
  return read_groups(in, path);
}

std::vector<BraidWord> read_braids_file(const std::string& path) {
  auto in = open_input(path);
  return read_braids(in, path);
}

std::vector<NamedPermGroup> read_perm_groups_file(const std::string& path) {
  auto in = open_input(path);
  return read_perm_groups(in, path);
}

std::vector<RawAutomorphism> read_automorphisms_file(const std::string& path) {
  auto in = open_input(path);
  return read_automorphisms(in, path);
}

std::vector<RawCocycle> read_cocycles_file(const std::string& path) {
  auto in = open_input(path);
  return read_cocycles(in, path);
}

}  // namespace tc
