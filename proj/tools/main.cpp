// Copyright 2026 The ScriptSync Authors
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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "scriptsync/cli/commands.hpp"

namespace {

namespace cli = scriptsync::cli;

void add_common(CLI::App* app, cli::RunConfig& cfg) {
  app->add_option("--threads", cfg.threads, "Worker threads")->envname("SCRIPTSYNC_THREADS")->check(CLI::Range(1u, 1024u));
  app->add_option("--format", cfg.format, "Console output format")
      ->envname("SCRIPTSYNC_FORMAT")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encrypt TV-series transcripts, recover them from subtitles, and compute corpus statistics"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::string in, out, srt, ref, rec;
  std::optional<std::string> out_opt, manifest;

  auto* encrypt = app.add_subcommand("encrypt", "Replace every token of clear episodes by its hash code");
  encrypt->add_option("input", in, "Directory of clear episode JSON files")->required()->check(CLI::ExistingDirectory);
  encrypt->add_option("--out", out, "Output directory")->required();
  encrypt->add_option("--digits", cfg.digits, "Hex digits per code")->envname("SCRIPTSYNC_DIGITS")->check(CLI::Range(1, 64));
  add_common(encrypt, cfg);

  auto* recover = app.add_subcommand("recover", "Recover clear text of encrypted episodes from subtitle files");
  recover->add_option("encrypted", in, "Directory of encrypted episode JSON files")->required()->check(CLI::ExistingDirectory);
  recover->add_option("subtitles", srt, "Directory of .srt files")->required()->check(CLI::ExistingDirectory);
  recover->add_option("--out", out, "Output directory")->required();
  recover->add_option("--manifest", manifest, "JSON object mapping episode ids to subtitle files")
      ->envname("SCRIPTSYNC_MANIFEST")
      ->check(CLI::ExistingFile);
  recover->add_flag("--timing", cfg.timing, "Record wall-clock seconds in summary.json");
  add_common(recover, cfg);

  auto* eval = app.add_subcommand("eval", "Word and sentence error rates of recovered episodes");
  eval->add_option("reference", ref, "Directory of clear reference episodes")->required()->check(CLI::ExistingDirectory);
  eval->add_option("recovered", rec, "Directory of recovered episodes")->required()->check(CLI::ExistingDirectory);
  eval->add_option("--out", out_opt, "Also write eval.json here");
  add_common(eval, cfg);

  auto* stats = app.add_subcommand("stats", "Corpus statistics per series");
  stats->add_option("input", in, "Directory of clear or recovered episodes")->required()->check(CLI::ExistingDirectory);
  stats->add_option("--out", out_opt, "Write stats.json and CSV exports here");
  stats->add_option("--seed", cfg.seed, "Bootstrap seed")->envname("SCRIPTSYNC_SEED");
  stats->add_option("--bootstrap", cfg.bootstrap, "Bootstrap replicates for the power-law p-value (0 disables)")
      ->envname("SCRIPTSYNC_BOOTSTRAP");
  stats->add_option("--bin-width", cfg.bin_width, "Scene duration histogram bin width in seconds")
      ->check(CLI::PositiveNumber);
  add_common(stats, cfg);

  auto* network = app.add_subcommand("network", "Speaker network from addressee annotations");
  network->add_option("input", in, "Directory of episodes")->required()->check(CLI::ExistingDirectory);
  network->add_option("--out", out_opt, "Write edges.csv, network.graphml and centralities.csv here");
  network->add_flag("--weighted", cfg.weighted, "Betweenness over edge lengths 1/weight");
  add_common(network, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInvalidInput;
  }
  if (manifest) cfg.manifest = *manifest;
  std::optional<std::filesystem::path> out_path;
  if (out_opt) out_path = *out_opt;

  cli::Streams io{std::cout, std::cerr};
  try {
    if (*encrypt) return cli::cmd_encrypt(in, out, cfg, io);
    if (*recover) return cli::cmd_recover(in, srt, out, cfg, io);
    if (*eval) return cli::cmd_eval(ref, rec, out_path, cfg, io);
    if (*stats) return cli::cmd_stats(in, out_path, cfg, io);
    if (*network) return cli::cmd_network(in, out_path, cfg, io);
  } catch (const std::exception& e) {
    std::cerr << "scriptsync: " << e.what() << "\n";
    return cli::kInvalidInput;
  }
  return cli::kInvalidInput;
}
