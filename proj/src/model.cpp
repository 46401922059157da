#include "sysid/model.hpp"

#include <fstream>
#include <sstream>

#include "sysid/errors.hpp"
#include "sysid/format.hpp"

namespace sysid {

void SystemModel::validate() const {
  basis.validate();
  if (a_bar.rows() != basis.state_dim)
    throw DimensionError("model: a_bar has " + std::to_string(a_bar.rows()) +
                         " rows, basis state_dim is " + std::to_string(basis.state_dim));
  if (a_bar.cols() != basis.output_dim())
    throw DimensionError("model: a_bar has " + std::to_string(a_bar.cols()) +
                         " cols, basis has " + std::to_string(basis.output_dim()) + " terms");
  if (!a_bar.allFinite()) throw ValidationError("model: a_bar has non-finite entries");
}

SystemModel paper_system() {
  SystemModel model;
  model.basis.state_dim = 3;
  model.basis.terms = {
      BasisTerm::linear(0),      BasisTerm::linear(1),   BasisTerm::linear(2),
      BasisTerm::cross(0, 1),    BasisTerm::cross(1, 2), BasisTerm::cross(2, 0),
      BasisTerm::square(0),      BasisTerm::square(1),   BasisTerm::square(2),
      BasisTerm::sin_prod(0, 1), BasisTerm::cos(2),
  };
  model.a_bar.resize(3, 11);
  model.a_bar << 0.8, -0.5, 0.0, 0.0, 0.4, 0.0, 0.0, 0.0, 0.0, 0.1, 0.0,  //
      0.5, 0.8, 0.0, 0.06, 0.0, 0.0, -0.05, 0.0, 0.0, 0.0, 0.0,           //
      0.0, 0.0, 0.45, 0.0, 0.0, 0.05, 0.0, 0.0, 0.0, 0.0, 0.1;
  model.validate();
  return model;
}

void write_model(const SystemModel& model, std::ostream& out) {
  out << "state_dim " << model.basis.state_dim << "\n";
  out << "terms " << model.basis.output_dim() << "\n";
  for (const BasisTerm& t : model.basis.terms) out << term_to_string(t) << "\n";
  out << "a_bar\n";
  for (Eigen::Index r = 0; r < model.a_bar.rows(); ++r) {
    for (Eigen::Index c = 0; c < model.a_bar.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_double(model.a_bar(r, c));
    }
    out << "\n";
  }
}

SystemModel read_model(std::istream& in) {
  SystemModel model;
  std::string line;
  long line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto toks = split_tokens(line);
      if (toks.empty() || toks[0].starts_with("#")) continue;
      return true;
    }
    return false;
  };

  try {
    if (!next_line()) throw ParseError(line_no, "missing state_dim");
    {
      auto toks = split_tokens(line);
      if (toks.size() != 2 || toks[0] != "state_dim") throw ParseError(line_no, "expected 'state_dim <n>'");
      model.basis.state_dim = static_cast<int>(parse_int(toks[1]));
    }
    if (!next_line()) throw ParseError(line_no, "missing terms");
    long term_count = 0;
    {
      auto toks = split_tokens(line);
      if (toks.size() != 2 || toks[0] != "terms") throw ParseError(line_no, "expected 'terms <m>'");
      term_count = parse_int(toks[1]);
      if (term_count <= 0) throw ParseError(line_no, "term count must be positive");
    }
    for (long k = 0; k < term_count; ++k) {
      if (!next_line()) throw ParseError(line_no, "missing basis term " + std::to_string(k));
      try {
        model.basis.terms.push_back(term_from_tokens(split_tokens(line)));
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (!next_line() || split_tokens(line)[0] != "a_bar") throw ParseError(line_no, "expected 'a_bar'");
    model.a_bar.resize(model.basis.state_dim, static_cast<Eigen::Index>(term_count));
    for (int r = 0; r < model.basis.state_dim; ++r) {
      if (!next_line()) throw ParseError(line_no, "missing a_bar row " + std::to_string(r));
      auto toks = split_tokens(line);
      if (static_cast<long>(toks.size()) != term_count)
        throw ParseError(line_no, "a_bar row has " + std::to_string(toks.size()) +
                                      " entries, expected " + std::to_string(term_count));
      for (long c = 0; c < term_count; ++c) model.a_bar(r, c) = parse_double(toks[static_cast<std::size_t>(c)]);
    }
    model.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  return model;
}

void save_model(const SystemModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  write_model(model, out);
  if (!out) throw ValidationError("write failed: " + path);
}

SystemModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open model file: " + path);
  return read_model(in);
}

void save_matrix(const Eigen::MatrixXd& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (c > 0) out << ' ';
      out << format_double(a(r, c));
    }
    out << "\n";
  }
}

}  // namespace sysid
