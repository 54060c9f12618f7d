#include "hirsch/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hirsch {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next meaningful line, trimmed; nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      const auto e = line.find_last_not_of(" \t\r");
      return line.substr(b, e - b + 1);
    }
    return std::nullopt;
  }

  std::string require(const char* what) {
    auto line = next();
    if (!line) fail(std::string("unexpected end of input, expected ") + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(number_) + ": " + msg);
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::size_t keyword_count(LineReader& r, const char* keyword) {
  const auto toks = split(r.require(keyword));
  if (toks.size() != 2 || toks[0] != keyword) r.fail(std::string("expected '") + keyword + " <count>'");
  try {
    std::size_t pos = 0;
    const long v = std::stol(toks[1], &pos);
    if (pos != toks[1].size() || v < 0) throw std::invalid_argument("count");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    r.fail("bad count '" + toks[1] + "'");
  }
}

std::vector<Scalar> number_row(LineReader& r, std::size_t expected) {
  const auto toks = split(r.require("a row of numbers"));
  if (toks.size() != expected) {
    r.fail("expected " + std::to_string(expected) + " numbers, found " + std::to_string(toks.size()));
  }
  std::vector<Scalar> row;
  for (const auto& t : toks) {
    try {
      row.push_back(parse_scalar(t));
    } catch (const ParseError& e) {
      r.fail(e.what());
    }
  }
  return row;
}

void header(LineReader& r, const char* magic) {
  const auto toks = split(r.require(magic));
  if (toks.size() != 2 || toks[0] != magic || toks[1] != "1") r.fail(std::string("expected '") + magic + " 1'");
}

}  // namespace

VPolytope read_poly(std::istream& in) {
  LineReader r(in);
  header(r, "POLY");
  const std::size_t d = keyword_count(r, "dim");
  const std::size_t n = keyword_count(r, "vertices");
  if (d == 0) r.fail("dimension must be positive");
  VPolytope p;
  for (std::size_t i = 0; i < n; ++i) p.vertices.emplace_back(number_row(r, d));
  if (auto line = r.next()) {
    if (*line != "labels") r.fail("expected 'labels' or end of input");
    for (std::size_t i = 0; i < n; ++i) {
      const auto l = r.require("a label");
      if (l.find_first_of(" \t") != std::string::npos) r.fail("labels may not contain spaces");
      p.labels.push_back(l);
    }
    if (r.next()) r.fail("trailing content after labels");
  }
  return p;
}

VPolytope read_poly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_poly(in);
}

void write_poly(std::ostream& out, const VPolytope& p) {
  out << "POLY 1\ndim " << p.ambient_dim() << "\nvertices " << p.size() << '\n';
  for (const auto& v : p.vertices) {
    for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? " " : "") << to_string(v[i]);
    out << '\n';
  }
  if (!p.labels.empty()) {
    out << "labels\n";
    for (const auto& l : p.labels) out << l << '\n';
  }
}

HPolyFile read_hpoly(std::istream& in) {
  LineReader r(in);
  header(r, "HPOLY");
  const std::size_t d = keyword_count(r, "dim");
  const std::size_t m = keyword_count(r, "inequalities");
  if (d == 0) r.fail("dimension must be positive");
  HPolyFile f;
  f.hpoly.ambient_dim = d;
  for (std::size_t i = 0; i < m; ++i) {
    auto row = number_row(r, d + 1);
    Scalar b = row.back();
    row.pop_back();
    f.hpoly.inequalities.emplace_back(std::move(row), std::move(b));
  }
  if (auto line = r.next()) {
    if (*line != "incidence") r.fail("expected 'incidence' or end of input");
    f.incidence.emplace();
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> idx;
      for (const auto& t : split(r.require("an incidence row"))) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(t, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != t.size() || t.empty() || t[0] == '-') r.fail("bad vertex index '" + t + "'");
        idx.push_back(v);
      }
      f.incidence->push_back(std::move(idx));
    }
    if (r.next()) r.fail("trailing content after incidence");
  }
  return f;
}

HPolyFile read_hpoly_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_hpoly(in);
}

void write_hpoly(std::ostream& out, const HPolytope& h) {
  out << "HPOLY 1\ndim " << h.ambient_dim << "\ninequalities " << h.inequalities.size() << '\n';
  for (const auto& ineq : h.inequalities) {
    for (const auto& c : ineq.coeffs()) out << to_string(c) << ' ';
    out << to_string(ineq.offset()) << '\n';
  }
}

void write_hpoly(std::ostream& out, const HullResult& hull) {
  write_hpoly(out, hull.hpoly);
  out << "incidence\n";
  for (std::size_t f = 0; f < hull.facet_count(); ++f) {
    const auto vs = hull.incidence.vertices_of(f);
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace hirsch
