#include "commands.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "maxmin/bellman.hpp"
#include "maxmin/closure.hpp"
#include "maxmin/cover.hpp"
#include "maxmin/eigenspace.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/io.hpp"
#include "maxmin/oracle.hpp"

namespace maxmin::cli {

namespace {

using nlohmann::json;

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

io::ProblemFile load_problem(const Options& opts, std::istream& in) {
  const std::string text = read_all(opts.input, in);
  try {
    io::ProblemFile p = io::parse_problem(text);
    if (opts.lambda) p.lambda = Scalar::parse(*opts.lambda);
    return p;
  } catch (const ParseError& e) {
    throw ParseError((opts.input == "-" ? std::string("<stdin>") : opts.input) + ": " + e.what());
  }
}

Scalar require_lambda(const io::ProblemFile& p) {
  if (!p.lambda) throw ParseError("lambda is required (field \"lambda\" or --lambda)");
  return *p.lambda;
}

const Vector& require_b(const io::ProblemFile& p) {
  if (!p.b) throw ParseError("right-hand side \"b\" is required");
  return *p.b;
}

void require_square(const Matrix& a) {
  if (!a.is_square()) {
    throw ShapeError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     ", expected square");
  }
}

std::string tuple_string(const Vector& x) {
  std::string s;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (i) s += ' ';
    s += x[i].to_string();
  }
  return s;
}

// --------------------------------------------------------------- commands

int cmd_star(const io::ProblemFile& p, std::ostream& out) {
  require_square(p.matrix);
  json doc{{"metric", io::matrix_to_json(metric_matrix(p.matrix))},
           {"star", io::matrix_to_json(kleene_star(p.matrix))}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_bellman(const io::ProblemFile& p, std::ostream& out) {
  require_square(p.matrix);
  const Vector& b = require_b(p);
  json doc{{"least_solution", io::vector_to_json(least_solution(p.matrix, b))},
           {"solution_set", io::set_to_json(bellman_solution_set(p.matrix, b))}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_cover(const io::ProblemFile& p, std::ostream& out) {
  const Scalar lambda = require_lambda(p);
  const CoveringProblem problem = build_cover_problem(p.matrix, require_b(p), lambda);
  const auto coverings = minimal_coverings(problem);

  json cj = json::array();
  for (const auto& c : problem.cj) cj.push_back(io::indices_to_json(c));
  json blocks = json::array();
  for (const auto& w : coverings) {
    json block = io::set_to_json(solution_set_for_covering(w, lambda, problem.n));
    block["W"] = io::indices_to_json(w.w);
    block["z"] = io::vector_to_json(minimal_solution(w, lambda, problem.n));
    blocks.push_back(std::move(block));
  }
  json doc{{"status", coverings.empty() ? "UNSOLVABLE" : "SOLVABLE"},
           {"lambda", io::to_json(lambda)},
           {"I0", io::indices_to_json(problem.i0)},
           {"C", std::move(cj)},
           {"coverings", std::move(blocks)}};
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_eigen(const Options& opts, const io::ProblemFile& p, std::ostream& out) {
  require_square(p.matrix);
  const Scalar lambda = require_lambda(p);
  const std::size_t n = p.matrix.rows();
  const int selected = int(opts.all) + int(opts.pure) + int(opts.background) + int(opts.partition.has_value());
  if (selected > 1) throw ParseError("choose one of --all, --pure, --background, --partition");

  io::DescriptionFile d{lambda, {}};
  if (opts.pure) {
    d.pieces.push_back({PieceKind::pure, Partition(IndexSet::range(n), n), std::nullopt,
                        pure_eigenvectors(p.matrix, lambda)});
  } else if (opts.background) {
    if (auto bg = background_eigenvectors(p.matrix, lambda)) {
      d.pieces.push_back({PieceKind::background, Partition(IndexSet(), n), std::nullopt, std::move(*bg)});
    }
  } else if (opts.partition) {
    const Partition part(io::parse_index_list(*opts.partition, n), n);
    d.pieces = kl_eigenvectors(p.matrix, part, lambda);
  } else {
    d.pieces = full_eigenspace(p.matrix, lambda).pieces;
  }
  out << io::serialize_description(d);
  return kOk;
}

int cmd_verify(const io::ProblemFile& p, std::ostream& out) {
  require_square(p.matrix);
  const Scalar lambda = require_lambda(p);
  if (!p.x) throw ParseError("vector \"x\" is required");
  const Vector& x = *p.x;
  const Vector lhs = mat_mul(p.matrix, x);
  bool ok = true;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const Scalar rhs = otimes(lambda, x[i]);
    const bool row_ok = lhs[i] == rhs;
    ok = ok && row_ok;
    out << "row " << i + 1 << ": (A x) = " << lhs[i] << "  lambda x = " << rhs
        << (row_ok ? "  ok" : "  MISMATCH") << '\n';
  }
  out << (ok ? "VERIFIED" : "NOT AN EIGENVECTOR") << '\n';
  return ok ? kOk : kFalse;
}

int cmd_plot_data(const Options& opts, const io::ProblemFile& p, std::ostream& out) {
  require_square(p.matrix);
  const std::size_t n = p.matrix.rows();
  if (n < 2 || n > 3) throw ShapeError("plot-data supports n = 2 or n = 3, got n = " + std::to_string(n));
  const Scalar lambda = require_lambda(p);
  const EigenspaceDescription desc = full_eigenspace(p.matrix, lambda);

  out << "# lambda " << lambda << '\n';
  out << "# box piece kind K L W";
  for (std::size_t i = 1; i <= n; ++i) out << " lo" << i << " hi" << i;
  out << '\n';
  for (std::size_t k = 0; k < desc.pieces.size(); ++k) {
    const auto& piece = desc.pieces[k];
    const Vector lo = piece.set.lower_bound();
    const Vector hi = piece.set.upper_bound();
    out << "box " << k + 1 << ' ' << to_string(piece.kind) << ' ' << piece.partition.k().to_string() << ' '
        << piece.partition.l().to_string() << ' ' << (piece.covering ? piece.covering->w.to_string() : "-");
    for (std::size_t i = 0; i < n; ++i) out << ' ' << lo[i] << ' ' << hi[i];
    out << '\n';
  }
  out << "# point piece";
  for (std::size_t i = 1; i <= n; ++i) out << " x" << i;
  out << '\n';
  for (std::size_t k = 0; k < desc.pieces.size(); ++k) {
    for (const auto& x : sample(desc.pieces[k].set, opts.samples, opts.seed + k)) {
      out << "point " << k + 1 << ' ' << tuple_string(x) << '\n';
    }
  }
  return kOk;
}

int cmd_validate(const Options& opts, const io::ProblemFile& p, std::istream& in, std::ostream& out) {
  require_square(p.matrix);
  const Scalar lambda = require_lambda(p);
  EigenspaceDescription desc;
  if (opts.description) {
    const io::DescriptionFile d = io::parse_description(read_all(*opts.description, in));
    desc = EigenspaceDescription{p.matrix, lambda, d.pieces};
  } else {
    desc = full_eigenspace(p.matrix, lambda);
  }
  const auto report = cross_validate(p.matrix, lambda, desc, breakpoints(p.matrix, lambda), opts.samples,
                                     opts.seed, opts.grid_cap);
  out << "pieces: " << desc.pieces.size() << '\n' << report.to_string();
  return report.passed() ? kOk : kFalse;
}

}  // namespace

int run(const Options& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = kOk;
  try {
    const io::ProblemFile p = load_problem(opts, in);
    if (opts.command == "star") {
      status = cmd_star(p, buffer);
    } else if (opts.command == "bellman") {
      status = cmd_bellman(p, buffer);
    } else if (opts.command == "cover") {
      status = cmd_cover(p, buffer);
    } else if (opts.command == "eigen") {
      status = cmd_eigen(opts, p, buffer);
    } else if (opts.command == "verify") {
      status = cmd_verify(p, buffer);
    } else if (opts.command == "plot-data") {
      status = cmd_plot_data(opts, p, buffer);
    } else if (opts.command == "validate") {
      status = cmd_validate(opts, p, in, buffer);
    } else {
      err << "error: unknown command '" << opts.command << "'\n";
      return kInputError;
    }
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (opts.out) {
    std::ofstream f(*opts.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open output file '" << *opts.out << "'\n";
      return kInputError;
    }
    f << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace maxmin::cli
