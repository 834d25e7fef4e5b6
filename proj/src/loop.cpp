#include "hqc/loop.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace hqc {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& message) {
  throw LoopFileError(source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream iss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (iss >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

double parse_double(const std::string& tok, const std::string& source,
                    int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (tok.empty() || end != begin + tok.size()) {
    fail(source, line, "expected a number, got '" + tok + "'");
  }
  if (!std::isfinite(v)) {
    fail(source, line, "non-finite value '" + tok + "'");
  }
  return v;
}

long parse_long(const std::string& tok, const std::string& source, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(begin, &end, 10);
  if (tok.empty() || end != begin + tok.size() || errno == ERANGE) {
    fail(source, line, "expected an integer, got '" + tok + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& tok, const std::string& source,
                        int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(begin, &end, 10);
  if (tok.empty() || tok.front() == '-' || end != begin + tok.size() ||
      errno == ERANGE) {
    fail(source, line, "expected an unsigned integer, got '" + tok + "'");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

PolygonalLoop::PolygonalLoop(System system, std::vector<double> basepoint,
                             std::vector<double> vertices)
    : system_(system),
      basepoint_(std::move(basepoint)),
      vertices_(std::move(vertices)) {
  const std::size_t d = static_cast<std::size_t>(coord_count(system_));
  if (basepoint_.empty()) {
    basepoint_.assign(d, 0.0);
  }
  if (basepoint_.size() != d) {
    throw std::invalid_argument("PolygonalLoop: basepoint has " +
                                std::to_string(basepoint_.size()) +
                                " coordinates, expected " + std::to_string(d));
  }
  if (vertices_.size() % d != 0) {
    throw std::invalid_argument(
        "PolygonalLoop: flattened vertex list length is not a multiple of "
        "the coordinate count");
  }
  for (double v : basepoint_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("PolygonalLoop: non-finite basepoint");
    }
  }
  for (double v : vertices_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("PolygonalLoop: non-finite vertex");
    }
  }
}

std::span<const double> PolygonalLoop::vertex(int i) const {
  if (i < 0 || i >= vertex_count()) {
    throw std::out_of_range("PolygonalLoop::vertex: index out of range");
  }
  return {vertices_.data() + static_cast<std::size_t>(i) * dim(),
          static_cast<std::size_t>(dim())};
}

PolygonalLoop make_loop(System system, std::vector<double> basepoint,
                        const std::vector<std::vector<double>>& vertices) {
  const std::size_t d = static_cast<std::size_t>(coord_count(system));
  std::vector<double> flat;
  flat.reserve(vertices.size() * d);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != d) {
      throw std::invalid_argument(
          "make_loop: vertex " + std::to_string(i) + " has " +
          std::to_string(vertices[i].size()) + " coordinates, expected " +
          std::to_string(d));
    }
    flat.insert(flat.end(), vertices[i].begin(), vertices[i].end());
  }
  return PolygonalLoop(system, std::move(basepoint), std::move(flat));
}

DiscretizedPath::DiscretizedPath(int dim, std::size_t count)
    : dim_(dim),
      count_(count),
      points_(static_cast<std::size_t>(dim) * count, 0.0),
      steps_(static_cast<std::size_t>(dim) * count, 0.0) {}

DiscretizedPath discretize(const PolygonalLoop& loop, int steps_per_edge,
                           StepRule rule) {
  if (steps_per_edge < 1) {
    throw std::invalid_argument("discretize: steps_per_edge must be >= 1");
  }
  const int dim = loop.dim();
  const int k = loop.vertex_count();
  const std::size_t count =
      static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(steps_per_edge);
  DiscretizedPath path(dim, count);

  const double offset = rule == StepRule::Midpoint ? 0.5 : 0.0;
  std::vector<double> from(loop.basepoint().begin(), loop.basepoint().end());
  std::vector<double> delta(dim);
  std::size_t idx = 0;
  for (int e = 0; e <= k; ++e) {
    const std::span<const double> to =
        e < k ? loop.vertex(e) : loop.basepoint();
    for (int j = 0; j < dim; ++j) {
      delta[j] = (to[j] - from[j]) / steps_per_edge;
    }
    for (int s = 0; s < steps_per_edge; ++s, ++idx) {
      double* pt = path.mutable_point(idx);
      double* st = path.mutable_step(idx);
      // Multiplicative anchoring at the edge start: halving delta is exact
      // in binary, so doubling steps_per_edge revisits these points.
      const double a = static_cast<double>(s) + offset;
      for (int j = 0; j < dim; ++j) {
        pt[j] = from[j] + a * delta[j];
        st[j] = delta[j];
      }
    }
    from.assign(to.begin(), to.end());
  }
  return path;
}

PolygonalLoop reverse(const PolygonalLoop& loop) {
  const int dim = loop.dim();
  const int k = loop.vertex_count();
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(k) * dim);
  for (int i = k - 1; i >= 0; --i) {
    const auto v = loop.vertex(i);
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return PolygonalLoop(loop.system(),
                       std::vector<double>(loop.basepoint().begin(),
                                           loop.basepoint().end()),
                       std::move(flat));
}

void save_loop(const PolygonalLoop& loop, std::ostream& out,
               const LoopMetadata& meta) {
  out << "hqc-loop v1\n";
  out << "system " << system_name(loop.system()) << "\n";
  if (meta.gate) {
    out << "gate " << *meta.gate << "\n";
  }
  if (meta.f_final) {
    out << "f_final " << fmt_double(*meta.f_final) << "\n";
  }
  if (meta.f_refined) {
    out << "f_refined " << fmt_double(*meta.f_refined) << "\n";
  }
  if (meta.seed) {
    out << "seed " << *meta.seed << "\n";
  }
  if (meta.restarts) {
    out << "restarts " << *meta.restarts << "\n";
  }
  if (meta.iterations) {
    out << "iterations " << *meta.iterations << "\n";
  }
  out << "basepoint";
  for (double v : loop.basepoint()) {
    out << ' ' << fmt_double(v);
  }
  out << "\n";
  for (int i = 0; i < loop.vertex_count(); ++i) {
    out << "vertex";
    for (double v : loop.vertex(i)) {
      out << ' ' << fmt_double(v);
    }
    out << "\n";
  }
}

void save_loop(const PolygonalLoop& loop, const std::filesystem::path& file,
               const LoopMetadata& meta) {
  namespace fs = std::filesystem;
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw LoopFileError("cannot open '" + tmp.string() + "' for writing");
    }
    save_loop(loop, out, meta);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw LoopFileError("failed writing '" + tmp.string() + "'");
    }
  }
  fs::rename(tmp, file);
}

LoadedLoop load_loop(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;

  auto getline_chomp = [&]() -> bool {
    if (!std::getline(in, line)) {
      return false;
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    return true;
  };

  if (!getline_chomp()) {
    fail(source, 1, "empty file; expected 'hqc-loop v1' header");
  }
  if (line != "hqc-loop v1") {
    fail(source, lineno, "bad header '" + line + "'; expected 'hqc-loop v1'");
  }

  std::optional<System> system;
  std::vector<double> basepoint;
  bool have_basepoint = false;
  std::vector<double> vertices;
  LoopMetadata meta;

  auto parse_coords = [&](const std::vector<std::string>& tokens,
                          const char* what) {
    if (!system) {
      fail(source, lineno,
           std::string("'") + what + "' before the 'system' line");
    }
    const std::size_t d = static_cast<std::size_t>(coord_count(*system));
    if (tokens.size() - 1 != d) {
      fail(source, lineno,
           std::string("'") + what + "' has " +
               std::to_string(tokens.size() - 1) + " coordinates, expected " +
               std::to_string(d));
    }
    std::vector<double> coords(d);
    for (std::size_t j = 0; j < d; ++j) {
      coords[j] = parse_double(tokens[j + 1], source, lineno);
    }
    return coords;
  };

  while (getline_chomp()) {
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      continue;
    }
    const std::string& key = tokens[0];
    if (key == "system") {
      if (system) {
        fail(source, lineno, "duplicate 'system' line");
      }
      if (tokens.size() != 2) {
        fail(source, lineno, "'system' expects exactly one value");
      }
      if (tokens[1] == system_name(System::OneQubit)) {
        system = System::OneQubit;
      } else if (tokens[1] == system_name(System::TwoQubit)) {
        system = System::TwoQubit;
      } else {
        fail(source, lineno,
             "unknown system '" + tokens[1] + "'; expected 'one-qubit' or "
             "'two-qubit'");
      }
    } else if (key == "basepoint") {
      if (have_basepoint) {
        fail(source, lineno, "duplicate 'basepoint' line");
      }
      basepoint = parse_coords(tokens, "basepoint");
      have_basepoint = true;
    } else if (key == "vertex") {
      const std::vector<double> coords = parse_coords(tokens, "vertex");
      vertices.insert(vertices.end(), coords.begin(), coords.end());
    } else if (key == "gate") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'gate' expects exactly one value");
      }
      meta.gate = tokens[1];
    } else if (key == "f_final") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'f_final' expects exactly one value");
      }
      meta.f_final = parse_double(tokens[1], source, lineno);
    } else if (key == "f_refined") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'f_refined' expects exactly one value");
      }
      meta.f_refined = parse_double(tokens[1], source, lineno);
    } else if (key == "seed") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'seed' expects exactly one value");
      }
      meta.seed = parse_u64(tokens[1], source, lineno);
    } else if (key == "restarts") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'restarts' expects exactly one value");
      }
      meta.restarts = static_cast<int>(parse_long(tokens[1], source, lineno));
    } else if (key == "iterations") {
      if (tokens.size() != 2) {
        fail(source, lineno, "'iterations' expects exactly one value");
      }
      meta.iterations = parse_long(tokens[1], source, lineno);
    } else {
      fail(source, lineno, "unknown key '" + key + "'");
    }
  }

  if (!system) {
    fail(source, lineno, "missing 'system' line");
  }
  return LoadedLoop{PolygonalLoop(*system, std::move(basepoint),
                                  std::move(vertices)),
                    std::move(meta)};
}

LoadedLoop load_loop(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw LoopFileError("cannot open '" + file.string() + "' for reading");
  }
  return load_loop(in, file.string());
}

void write_path_table(const PolygonalLoop& loop, int steps_per_edge,
                      StepRule rule, std::ostream& out) {
  const DiscretizedPath path = discretize(loop, steps_per_edge, rule);
  const int dim = loop.dim();
  for (int j = 0; j < dim; ++j) {
    out << (j ? "\t" : "") << coordinate_name(loop.system(), j);
  }
  out << "\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto p = path.point(i);
    for (int j = 0; j < dim; ++j) {
      out << (j ? "\t" : "") << fmt_double(p[j]);
    }
    out << "\n";
  }
}

}  // namespace hqc
