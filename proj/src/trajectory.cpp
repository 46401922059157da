#include "sysid/trajectory.hpp"

#include <fstream>
#include <sstream>

#include "sysid/errors.hpp"
#include "sysid/format.hpp"

namespace sysid {

void Trajectory::validate() const {
  if (states.cols() != disturbances.cols() + 1)
    throw DimensionError("trajectory: " + std::to_string(states.cols()) + " states vs " +
                         std::to_string(disturbances.cols()) + " disturbances");
  if (states.rows() != disturbances.rows())
    throw DimensionError("trajectory: state dim " + std::to_string(states.rows()) +
                         " vs disturbance dim " + std::to_string(disturbances.rows()));
  if (!attack_flags.empty() && static_cast<long>(attack_flags.size()) != disturbances.cols())
    throw DimensionError("trajectory: flag count " + std::to_string(attack_flags.size()) +
                         " vs length " + std::to_string(disturbances.cols()));
}

Trajectory prefix(const Trajectory& traj, long T) {
  if (T < 1 || T > traj.length())
    throw ValidationError("prefix length " + std::to_string(T) + " outside [1, " +
                          std::to_string(traj.length()) + "]");
  Trajectory out;
  out.states = traj.states.leftCols(T + 1);
  out.disturbances = traj.disturbances.leftCols(T);
  if (traj.has_attack_flags())
    out.attack_flags.assign(traj.attack_flags.begin(), traj.attack_flags.begin() + T);
  return out;
}

void save_trajectory_csv(const Trajectory& traj, const std::string& path) {
  traj.validate();
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  const int n = traj.state_dim();
  out << "t";
  for (int i = 0; i < n; ++i) out << ",x_" << i;
  for (int i = 0; i < n; ++i) out << ",w_" << i;
  out << ",attacked\n";
  const long T = traj.length();
  for (long t = 0; t <= T; ++t) {
    out << t;
    for (int i = 0; i < n; ++i) out << ',' << format_double(traj.states(i, t));
    if (t < T) {
      for (int i = 0; i < n; ++i) out << ',' << format_double(traj.disturbances(i, t));
      out << ',';
      if (traj.has_attack_flags()) out << (traj.attack_flags[static_cast<std::size_t>(t)] ? '1' : '0');
    } else {
      for (int i = 0; i < n; ++i) out << ',';
      out << ',';
    }
    out << "\n";
  }
  if (!out) throw ValidationError("write failed: " + path);
}

Trajectory load_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open trajectory file: " + path);

  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty trajectory file");
  ++line_no;
  auto header = split_on(line, ',');
  if (header.size() < 4 || header[0] != "t" || header.back() != "attacked")
    throw ParseError(line_no, "bad trajectory header");
  const std::size_t ncols = header.size();
  if ((ncols - 2) % 2 != 0) throw ParseError(line_no, "bad trajectory header: uneven x/w columns");
  const int n = static_cast<int>((ncols - 2) / 2);
  for (int i = 0; i < n; ++i) {
    if (header[1 + static_cast<std::size_t>(i)] != "x_" + std::to_string(i) ||
        header[1 + static_cast<std::size_t>(n + i)] != "w_" + std::to_string(i))
      throw ParseError(line_no, "bad trajectory header column names");
  }

  std::vector<Eigen::VectorXd> states;
  std::vector<Eigen::VectorXd> dists;
  std::vector<std::uint8_t> flags;
  bool any_flags = false;
  bool saw_final = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (saw_final) throw ParseError(line_no, "data after final row");
    auto f = split_on(line, ',');
    if (f.size() != ncols)
      throw ParseError(line_no, "row has " + std::to_string(f.size()) + " fields, expected " +
                                    std::to_string(ncols));
    try {
      if (parse_int(f[0]) != static_cast<long long>(states.size()))
        throw ParseError(line_no, "non-consecutive time index");
      Eigen::VectorXd x(n);
      for (int i = 0; i < n; ++i) x[i] = parse_double(f[1 + static_cast<std::size_t>(i)]);
      states.push_back(std::move(x));
      const bool w_empty = f[1 + static_cast<std::size_t>(n)].empty();
      if (w_empty) {
        for (int i = 0; i < n; ++i)
          if (!f[1 + static_cast<std::size_t>(n + i)].empty())
            throw ParseError(line_no, "partially empty disturbance fields");
        if (!f.back().empty()) throw ParseError(line_no, "final row must leave attacked empty");
        saw_final = true;
      } else {
        Eigen::VectorXd w(n);
        for (int i = 0; i < n; ++i) w[i] = parse_double(f[1 + static_cast<std::size_t>(n + i)]);
        dists.push_back(std::move(w));
        if (!f.back().empty()) {
          any_flags = true;
          flags.push_back(f.back() == "1" ? 1 : 0);
          if (f.back() != "0" && f.back() != "1")
            throw ParseError(line_no, "attacked field must be 0, 1, or empty");
        } else {
          flags.push_back(0);
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!saw_final) throw ParseError(line_no, "missing final state row");
  if (states.size() != dists.size() + 1)
    throw ParseError(line_no, "state/disturbance count mismatch");
  if (states.size() < 2) throw ParseError(line_no, "trajectory needs at least one step");

  Trajectory traj;
  traj.states.resize(n, static_cast<Eigen::Index>(states.size()));
  for (std::size_t t = 0; t < states.size(); ++t) traj.states.col(static_cast<Eigen::Index>(t)) = states[t];
  traj.disturbances.resize(n, static_cast<Eigen::Index>(dists.size()));
  for (std::size_t t = 0; t < dists.size(); ++t)
    traj.disturbances.col(static_cast<Eigen::Index>(t)) = dists[t];
  if (any_flags) traj.attack_flags = std::move(flags);
  traj.validate();
  return traj;
}

}  // namespace sysid
