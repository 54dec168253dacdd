#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "monogamy/error.hpp"
#include "monogamy/states.hpp"

namespace monogamy {
namespace {

void write_number_pair(std::ostream& out, Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
  out << buf;
}

void write_dims(std::ostream& out, const Dims& dims) {
  out << "dims";
  for (int d : dims) out << ' ' << d;
  out << '\n';
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

double parse_double(const std::string& token, int line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + token + "'", line);
  }
  if (used != token.size()) throw ParseError("expected a number, got '" + token + "'", line);
  return value;
}

long parse_positive(const std::string& token, int line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected a positive integer, got '" + token + "'", line);
  }
  if (used != token.size() || value < 1) {
    throw ParseError("expected a positive integer, got '" + token + "'", line);
  }
  return value;
}

Complex read_pair(LineReader& reader, std::vector<std::string>& tokens) {
  if (!reader.next(tokens)) throw ParseError("unexpected end of file", reader.line() + 1);
  if (tokens.size() != 2) throw ParseError("expected 're im'", reader.line());
  return {parse_double(tokens[0], reader.line()), parse_double(tokens[1], reader.line())};
}

}  // namespace

void write_state(std::ostream& out, const PureState& psi) {
  write_dims(out, psi.dims());
  for (Eigen::Index i = 0; i < psi.dimension(); ++i) write_number_pair(out, psi[i]);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  write_dims(out, rho.dims());
  out << "rows " << rho.dimension() << '\n';
  for (Eigen::Index r = 0; r < rho.dimension(); ++r) {
    for (Eigen::Index c = 0; c < rho.dimension(); ++c) write_number_pair(out, rho(r, c));
  }
}

void save_state(const std::string& path, const StateFile& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  std::visit([&](const auto& s) { write_state(out, s); }, state);
}

StateFile read_state(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) throw ParseError("empty state file", 1);
  if (tokens.front() != "dims" || tokens.size() < 2) {
    throw ParseError("first line must be 'dims d1 ... dk'", reader.line());
  }
  Dims dims;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const long d = parse_positive(tokens[i], reader.line());
    if (d < 2) throw ParseError("subsystem dimensions must be at least 2", reader.line());
    dims.push_back(static_cast<int>(d));
  }
  const long dim = total_dimension(dims);

  if (!reader.next(tokens)) throw ParseError("missing amplitudes", reader.line() + 1);
  const int after_dims_line = reader.line();

  try {
    if (tokens.front() == "rows") {
      if (tokens.size() != 2) throw ParseError("expected 'rows n'", reader.line());
      const long rows = parse_positive(tokens[1], reader.line());
      if (rows != dim) throw ParseError("row count does not match dims", reader.line());
      Matrix m(rows, rows);
      for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < rows; ++c) m(r, c) = read_pair(reader, tokens);
      }
      if (reader.next(tokens)) throw ParseError("trailing data after matrix", reader.line());
      return DensityMatrix(std::move(m), std::move(dims));
    }

    Vector v(dim);
    if (tokens.size() != 2) throw ParseError("expected 're im'", reader.line());
    v(0) = {parse_double(tokens[0], reader.line()), parse_double(tokens[1], reader.line())};
    for (long i = 1; i < dim; ++i) v(i) = read_pair(reader, tokens);
    if (reader.next(tokens)) throw ParseError("trailing data after amplitudes", reader.line());
    return PureState(std::move(v), std::move(dims));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("invalid state: ") + e.what(), after_dims_line);
  }
}

StateFile load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_state(in);
}

}  // namespace monogamy
