#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace erid {

// Named experiment presets behind the `figure` CLI subcommand.
//
//   fig1  nonstationary RPS, phase length 3000, v = 6: NashConv lines for
//         replay-BNN, cross learning, time-averaged cross learning and Hedge
//         in self-play.
//   fig2  matching pennies from five starts: phase-square plots of the ODE
//         and of the replay learner for one protocol.
//   fig3  biased RPS from (0.1,0.1,0.8) x (0.8,0.1,0.1): ternary plots of
//         the ODE and of the replay learner for one protocol.
//   fig4  continuously rescaled RPS in self-play: NashConv and relative
//         NashConv lines for replay-BNN, replay-Smith and cross learning.
//
// scale compresses the step budget: step counts and schedule lengths are
// multiplied by scale while learning rates are divided by it, preserving
// the total dynamics time per phase. ODE presets keep their integration
// horizon by widening the step instead.
struct FigureOptions {
  double scale = 1.0;
  std::uint64_t seed = 7;
  std::string protocol = "bnn";  // fig2/fig3
  std::filesystem::path out_dir = ".";
};

bool is_figure_preset(std::string_view name);

// Runs the preset and writes its CSVs, SVGs and run manifest under
// options.out_dir. Returns every written path, manifest last.
std::vector<std::filesystem::path> run_figure(std::string_view preset,
                                              const FigureOptions& options);

}  // namespace erid
