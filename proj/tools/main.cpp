// Copyright 2026 The pbtsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// pbtsim: teleportation channel experiments from the command line.
//
// Exit status: 0 on success, 1 on usage errors, 2 when a computed quantity
// fails validation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbtsim/channels.hpp"
#include "pbtsim/experiments.hpp"
#include "pbtsim/kraus.hpp"
#include "pbtsim/pbt_choi.hpp"
#include "pbtsim/resource_states.hpp"

namespace {

using namespace pbtsim;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr double kSandwichSlack = 1e-6;
constexpr double kVerifyTolerance = 1e-10;

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << fmt_complex(m(r, c));
    out << '\n';
  }
}

ChoiMatrix checked_choi(int ports, const std::string& resource) {
  const ChoiMatrix c = pbt_choi(make_family(parse_family(resource), ports));
  try {
    c.validate();
  } catch (const std::domain_error& e) {
    throw NumericalFailure(e.what());
  }
  return c;
}

void check_sandwich(const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) {
    if (r.diamond_numeric < r.diamond_lower - kSandwichSlack ||
        r.diamond_numeric > r.diamond_upper + kSandwichSlack) {
      throw NumericalFailure("diamond estimate outside bounds at param " +
                             format_number(r.param));
    }
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Port-based teleportation channel calculator"};
  app.require_subcommand(1);

  int ports = 2;
  std::string resource = "bell";
  double p0 = 0.0;
  std::string family = "choi";
  std::string grid_text = "0:1:0.01";
  std::string out_path;
  int figure_id = 1;
  double step = 0.01;
  int max_ports = 4;
  DiamondOptions dopts;

  auto add_ports = [&](CLI::App* sub) {
    sub->add_option("--ports,-n", ports, "Number of ports")->required()->check(CLI::Range(2, 60));
  };
  auto add_diamond = [&](CLI::App* sub) {
    sub->add_option("--seed", dopts.seed, "Optimiser seed")->capture_default_str();
    sub->add_option("--restarts", dopts.restarts, "Optimiser restarts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };

  auto* xi_cmd = app.add_subcommand("xi", "Depolarising probability with singlet ports");
  add_ports(xi_cmd);

  auto* choi_cmd = app.add_subcommand("choi", "Choi matrix of the simulated channel");
  add_ports(choi_cmd);
  choi_cmd->add_option("--resource,-r", resource,
                       "bell | adchoi:<p> | alternate:<a> | <resource file>")
      ->capture_default_str();

  auto* kraus_cmd = app.add_subcommand("kraus", "Kraus operators of the simulated channel");
  add_ports(kraus_cmd);
  kraus_cmd->add_option("--resource,-r", resource, "Resource family or file")
      ->capture_default_str();

  auto* pk_cmd = app.add_subcommand("protocol-kraus", "Kraus operators of the protocol map");
  add_ports(pk_cmd);

  auto* sweep_cmd = app.add_subcommand("ad-sweep", "Distances to an amplitude-damping channel");
  add_ports(sweep_cmd);
  sweep_cmd->add_option("--p0", p0, "Target damping probability")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--family", family, "choi | alternate")
      ->check(CLI::IsMember({"choi", "alternate"}))
      ->capture_default_str();
  sweep_cmd->add_option("--grid", grid_text, "start:stop:step")->capture_default_str();
  sweep_cmd->add_option("--out,-o", out_path, "CSV file (default: stdout)");
  add_diamond(sweep_cmd);

  auto* fig_cmd = app.add_subcommand("figure", "CSV data behind a figure");
  fig_cmd->add_option("--id", figure_id, "Figure number")->required()->check(CLI::Range(1, 4));
  fig_cmd->add_option("--out,-o", out_path, "Output directory")->required();
  fig_cmd->add_option("--step", step, "Grid step")->capture_default_str()->check(
      CLI::Range(1e-6, 0.5));
  add_diamond(fig_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the oracle");
  verify_cmd->add_option("--max-ports", max_ports, "Largest port count")
      ->capture_default_str()
      ->check(CLI::Range(2, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*xi_cmd) {
      std::cout << format_number(xi(ports)) << '\n';
    } else if (*choi_cmd) {
      print_matrix(std::cout, checked_choi(ports, resource).matrix());
    } else if (*kraus_cmd) {
      const KrausSet k = choi_to_kraus(checked_choi(ports, resource));
      for (std::size_t i = 0; i < k.ops.size(); ++i) {
        std::cout << "K" << i << '\n';
        print_matrix(std::cout, k.ops[i]);
      }
    } else if (*pk_cmd) {
      const ProtocolKraus pk = protocol_kraus(ports);
      const KrausSet set = pk.as_set();
      std::cout << "operators " << set.ops.size() << " (unreduced " << pk.unreduced_count()
                << ")\n";
      for (std::size_t i = 0; i < set.ops.size(); ++i) {
        const auto& l = pk.labels[i];
        std::cout << (l.boundary ? "K2" : "K1") << " s=" << l.s << " m=" << l.m
                  << " alpha=" << l.alpha << '\n';
        print_matrix(std::cout, set.ops[i]);
      }
    } else if (*sweep_cmd) {
      const auto fam = family == "choi" ? SweepFamily::kChoi : SweepFamily::kAlternate;
      const auto rows = ad_sweep(ports, p0, fam, parse_grid(grid_text), dopts);
      if (out_path.empty()) {
        write_sweep_csv(std::cout, rows);
      } else {
        auto out = open_output(out_path);
        write_sweep_csv(out, rows);
      }
      check_sandwich(rows);
    } else if (*fig_cmd) {
      const std::filesystem::path dir(out_path);
      std::filesystem::create_directories(dir);
      FigureOptions fopts;
      fopts.step = step;
      fopts.diamond = dopts;
      for (const auto& f : figure_data(figure_id, fopts)) {
        auto out = open_output(dir / f.name);
        out << f.csv;
        std::cout << (dir / f.name).string() << '\n';
      }
    } else if (*verify_cmd) {
      const VerifyReport report = verify(max_ports);
      for (const auto& l : report.lines) {
        std::printf("%-28s n=%d  %.3e\n", l.check.c_str(), l.n, l.deviation);
      }
      std::printf("max deviation %.3e\n", report.max_deviation);
      if (!(report.max_deviation < kVerifyTolerance)) {
        throw NumericalFailure("deviation above 1e-10");
      }
    }
  } catch (const NumericalFailure& e) {
    std::cerr << "pbtsim: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pbtsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "pbtsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pbtsim: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
