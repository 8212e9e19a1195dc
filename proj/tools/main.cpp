// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "chi4/bases.hpp"
#include "chi4/entanglement.hpp"
#include "chi4/protocols.hpp"
#include "chi4/qstate.hpp"
#include "chi4/rng.hpp"
#include "chi4/types.hpp"
#include "serialize.hpp"

namespace {

using chi4cli::csv_field;
using chi4cli::json_bool;
using chi4cli::json_double;
using chi4cli::json_int;
using chi4cli::json_string;
using chi4cli::json_uint;

struct CommonOpts {
  std::uint64_t seed = 0;
  int trials = 1;
  std::string format = "json";
  std::string out;
};

// Transcript fields beyond the core schema, already rendered.
struct ExtraField {
  std::string key;
  std::string json_value;
  std::string csv_value;
};

// ---------------------------------------------------------------- output --

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return 2;
  }
  f << text;
  return 0;
}

// ------------------------------------------------------- transcript JSON --

std::string render_outcomes_json(const std::vector<chi4::OutcomeRecord>& outcomes,
                                 const std::string& pad) {
  if (outcomes.empty()) return "[]";
  std::string s = "[";
  for (size_t k = 0; k < outcomes.size(); ++k) {
    if (k) s += ",";
    s += "\n" + pad + "  {\"basis\": " + json_string(outcomes[k].basis) +
         ", \"index\": " + json_int(outcomes[k].index) +
         ", \"probability\": " + json_double(outcomes[k].probability) + "}";
  }
  s += "\n" + pad + "]";
  return s;
}

std::string render_corrections_json(const std::vector<chi4::CorrectionRecord>& corrections,
                                    const std::string& pad) {
  if (corrections.empty()) return "[]";
  std::string s = "[";
  for (size_t k = 0; k < corrections.size(); ++k) {
    if (k) s += ",";
    s += "\n" + pad + "  {\"target\": " + json_string(corrections[k].target) +
         ", \"pauli\": " + json_int(corrections[k].pauli) + "}";
  }
  s += "\n" + pad + "]";
  return s;
}

std::string render_transcript_json(const chi4::ProtocolTranscript& t,
                                   const std::vector<ExtraField>& extras,
                                   const std::string& pad) {
  std::string s = "{";
  s += "\n" + pad + "  \"protocol\": " + json_string(t.protocol_name) + ",";
  s += "\n" + pad + "  \"seed\": " + json_uint(t.seed) + ",";
  s += "\n" + pad + "  \"channel\": " + json_string(t.channel) + ",";
  s += "\n" + pad + "  \"outcomes\": " + render_outcomes_json(t.outcomes, pad + "  ") + ",";
  s += "\n" + pad + "  \"classical_bits\": " + json_int(t.classical_bits_sent) + ",";
  s += "\n" + pad + "  \"corrections\": " + render_corrections_json(t.corrections, pad + "  ") + ",";
  s += "\n" + pad + "  \"fidelity\": " + json_double(t.fidelity_to_input);
  for (const auto& e : extras) {
    s += ",\n" + pad + "  \"" + e.key + "\": " + e.json_value;
  }
  s += "\n" + pad + "}";
  return s;
}

// -------------------------------------------------------- transcript CSV --

std::string outcomes_cell(const std::vector<chi4::OutcomeRecord>& outcomes) {
  std::string s;
  for (size_t k = 0; k < outcomes.size(); ++k) {
    if (k) s += ";";
    s += outcomes[k].basis + ":" + json_int(outcomes[k].index) + ":" +
         json_double(outcomes[k].probability);
  }
  return s;
}

std::string corrections_cell(const std::vector<chi4::CorrectionRecord>& corrections) {
  std::string s;
  for (size_t k = 0; k < corrections.size(); ++k) {
    if (k) s += ";";
    s += corrections[k].target + ":" + json_int(corrections[k].pauli);
  }
  return s;
}

std::string render_transcripts(const std::vector<chi4::ProtocolTranscript>& ts,
                               const std::vector<std::vector<ExtraField>>& extras,
                               const std::string& format) {
  if (format == "csv") {
    std::string s = "protocol,seed,channel,outcomes,classical_bits,corrections,fidelity";
    for (const auto& e : extras.front()) s += "," + e.key;
    s += "\n";
    for (size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      s += csv_field(t.protocol_name) + "," + json_uint(t.seed) + "," + csv_field(t.channel) +
           "," + csv_field(outcomes_cell(t.outcomes)) + "," + json_int(t.classical_bits_sent) +
           "," + csv_field(corrections_cell(t.corrections)) + "," +
           json_double(t.fidelity_to_input);
      for (const auto& e : extras[i]) s += "," + csv_field(e.csv_value);
      s += "\n";
    }
    return s;
  }
  if (ts.size() == 1) return render_transcript_json(ts[0], extras[0], "") + "\n";
  std::string s = "[\n";
  for (size_t i = 0; i < ts.size(); ++i) {
    s += "  " + render_transcript_json(ts[i], extras[i], "  ");
    s += (i + 1 < ts.size()) ? ",\n" : "\n";
  }
  s += "]\n";
  return s;
}

// ---------------------------------------------------- protocol frontends --

int run_teleport1(const CommonOpts& c) {
  std::vector<chi4::ProtocolTranscript> ts;
  std::vector<std::vector<ExtraField>> extras;
  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t trial_seed = c.seed + static_cast<std::uint64_t>(t);
    chi4::Rng rng(trial_seed);
    ts.push_back(chi4::teleport_standard(chi4::random_state({"A1"}, rng), trial_seed));
    extras.emplace_back();
  }
  return write_output(render_transcripts(ts, extras, c.format), c.out);
}

int run_teleport2(const CommonOpts& c, const chi4::BasisParams& p) {
  std::vector<chi4::ProtocolTranscript> ts;
  std::vector<std::vector<ExtraField>> extras;
  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t trial_seed = c.seed + static_cast<std::uint64_t>(t);
    chi4::Rng rng(trial_seed);
    ts.push_back(
        chi4::teleport_two_qubit(chi4::random_state({"A1", "A2"}, rng), p, trial_seed));
    extras.emplace_back();
  }
  return write_output(render_transcripts(ts, extras, c.format), c.out);
}

int run_teleport_partial(const CommonOpts& c) {
  std::vector<chi4::ProtocolTranscript> ts;
  std::vector<std::vector<ExtraField>> extras;
  const double r = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t trial_seed = c.seed + static_cast<std::uint64_t>(t);
    chi4::Rng rng(trial_seed);
    // Random input in the protocol's two-dimensional domain.
    const chi4::cplx a0 = rng.complex_gaussian();
    const chi4::cplx a1 = rng.complex_gaussian();
    const chi4::StateVector input = chi4::StateVector::from_amplitudes(
        {"A1", "A2"}, {a0 * r, a1 * r, a1 * r, a0 * r});
    chi4::PartialChannelResult res = chi4::teleport_partial_channel(input, trial_seed);
    extras.push_back(
        {{"input_in_span", json_bool(res.input_in_span), json_bool(res.input_in_span)},
         {"faithful_for_input", json_bool(res.faithful_for_input),
          json_bool(res.faithful_for_input)},
         {"general_input_feasible", json_bool(res.general_input_feasible),
          json_bool(res.general_input_feasible)}});
    ts.push_back(std::move(res.transcript));
  }
  return write_output(render_transcripts(ts, extras, c.format), c.out);
}

int run_teleport_coop(const CommonOpts& c) {
  std::vector<chi4::ProtocolTranscript> ts;
  std::vector<std::vector<ExtraField>> extras;
  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t trial_seed = c.seed + static_cast<std::uint64_t>(t);
    chi4::Rng rng(trial_seed);
    ts.push_back(
        chi4::teleport_cooperative_ghz_style(chi4::random_state({"A1"}, rng), trial_seed));
    extras.emplace_back();
  }
  return write_output(render_transcripts(ts, extras, c.format), c.out);
}

int run_densecode(const CommonOpts& c, const std::string& scheme, int message) {
  const int limit = (scheme == "restricted") ? 8 : 16;
  if (message < 0 || message >= limit) {
    std::cerr << "error: --message must be in 0.." << (limit - 1) << " for scheme " << scheme
              << "\n";
    return 2;
  }
  std::vector<chi4::ProtocolTranscript> ts;
  std::vector<std::vector<ExtraField>> extras;
  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t trial_seed = c.seed + static_cast<std::uint64_t>(t);
    chi4::DenseCodeResult r =
        (scheme == "d0")   ? chi4::dense_code_D0(message, trial_seed)
        : (scheme == "s0") ? chi4::dense_code_S0(message, trial_seed)
                           : chi4::dense_code_restricted(message, trial_seed);
    extras.push_back({{"message", json_int(r.message), json_int(r.message)},
                      {"decoded", json_int(r.decoded), json_int(r.decoded)}});
    ts.push_back(std::move(r.transcript));
  }
  return write_output(render_transcripts(ts, extras, c.format), c.out);
}

// ------------------------------------------------------------- reports ----

int run_entropy_sweep(const CommonOpts& c, int points) {
  const double half_pi = std::acos(-1.0) / 2.0;
  struct Row {
    double difference;
    double formula;
    double spectral;
  };
  std::vector<Row> rows;
  for (int k = 1; k <= points; ++k) {
    const double delta = half_pi * k / (points + 1);
    const chi4::BasisParams p = chi4::equal_gap_params(delta);
    const double cd = std::cos(delta);
    const double formula = chi4::binary_entropy_bits(cd * cd);
    const double spectral =
        chi4::von_neumann_entropy(chi4::partial_trace(chi4::chi_bar_state(p), {"A3", "B2"}));
    rows.push_back({delta, formula, spectral});
  }
  std::string s;
  if (c.format == "csv") {
    s = "protocol,seed,difference,entropy_formula,entropy_spectral\n";
    for (const Row& r : rows) {
      s += "entropy_sweep," + json_uint(c.seed) + "," + json_double(r.difference) + "," +
           json_double(r.formula) + "," + json_double(r.spectral) + "\n";
    }
  } else {
    s = "{\n  \"protocol\": \"entropy_sweep\",\n  \"seed\": " + json_uint(c.seed) +
        ",\n  \"points\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i) s += ",";
      s += "\n    {\"difference\": " + json_double(rows[i].difference) +
           ", \"entropy_formula\": " + json_double(rows[i].formula) +
           ", \"entropy_spectral\": " + json_double(rows[i].spectral) + "}";
    }
    s += "\n  ]\n}\n";
  }
  return write_output(s, c.out);
}

chi4::StateVector named_state(const std::string& name) {
  if (name == "chi") return chi4::chi_state();
  if (name == "ghz4") return chi4::reference_state(chi4::ReferenceKind::kGhz4);
  if (name == "w4") return chi4::reference_state(chi4::ReferenceKind::kW4);
  return chi4::reference_state(chi4::ReferenceKind::kBellPairProduct);
}

std::string labels_json(const std::vector<std::string>& labels) {
  std::string s = "[";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ", ";
    s += json_string(labels[i]);
  }
  return s + "]";
}

std::string labels_cell(const std::vector<std::string>& labels) {
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) s += "+";
    s += labels[i];
  }
  return s;
}

std::string render_split_json(const chi4::BipartitionReport& b) {
  return "{\"left\": " + labels_json(b.left) + ", \"right\": " + labels_json(b.right) +
         ", \"entropy_bits\": " + json_double(b.entropy_bits) +
         ", \"negativity\": " + json_double(b.negativity) + "}";
}

int run_ent_report(const CommonOpts& c, const std::string& state_name) {
  const chi4::StateVector state = named_state(state_name);
  const std::vector<chi4::BipartitionReport> pairwise = chi4::pairwise_entanglement_report(state);
  const std::vector<chi4::LossEntry> losses = chi4::loss_report(state);

  std::string s;
  if (c.format == "csv") {
    s = "protocol,seed,state,section,lost,second_lost,left,right,entropy_bits,negativity\n";
    const std::string head = "ent_report," + json_uint(c.seed) + "," + state_name + ",";
    for (const auto& b : pairwise) {
      s += head + "pairwise,,," + labels_cell(b.left) + "," + labels_cell(b.right) + "," +
           json_double(b.entropy_bits) + "," + json_double(b.negativity) + "\n";
    }
    for (const auto& loss : losses) {
      for (const auto& [label, entropy] : loss.single_qubit_entropies) {
        s += head + "single_entropy," + loss.lost + ",," + label + ",," +
             json_double(entropy) + ",\n";
      }
      for (const auto& b : loss.splits) {
        s += head + "split," + loss.lost + ",," + labels_cell(b.left) + "," +
             labels_cell(b.right) + "," + json_double(b.entropy_bits) + "," +
             json_double(b.negativity) + "\n";
      }
      for (const auto& sl : loss.second_losses) {
        s += head + "second_loss," + loss.lost + "," + sl.second_lost + "," + sl.left + "," +
             sl.right + ",," + json_double(sl.negativity) + "\n";
      }
    }
  } else {
    s = "{\n  \"protocol\": \"ent_report\",\n  \"seed\": " + json_uint(c.seed) +
        ",\n  \"state\": " + json_string(state_name) + ",\n  \"pairwise\": [";
    for (size_t i = 0; i < pairwise.size(); ++i) {
      if (i) s += ",";
      s += "\n    " + render_split_json(pairwise[i]);
    }
    s += "\n  ],\n  \"loss\": [";
    for (size_t i = 0; i < losses.size(); ++i) {
      const auto& loss = losses[i];
      if (i) s += ",";
      s += "\n    {\n      \"lost\": " + json_string(loss.lost) +
           ",\n      \"single_qubit_entropies\": [";
      for (size_t k = 0; k < loss.single_qubit_entropies.size(); ++k) {
        if (k) s += ",";
        s += "\n        {\"label\": " + json_string(loss.single_qubit_entropies[k].first) +
             ", \"entropy_bits\": " + json_double(loss.single_qubit_entropies[k].second) + "}";
      }
      s += "\n      ],\n      \"splits\": [";
      for (size_t k = 0; k < loss.splits.size(); ++k) {
        if (k) s += ",";
        s += "\n        " + render_split_json(loss.splits[k]);
      }
      s += "\n      ],\n      \"second_losses\": [";
      for (size_t k = 0; k < loss.second_losses.size(); ++k) {
        const auto& sl = loss.second_losses[k];
        if (k) s += ",";
        s += "\n        {\"second_lost\": " + json_string(sl.second_lost) +
             ", \"left\": " + json_string(sl.left) + ", \"right\": " + json_string(sl.right) +
             ", \"negativity\": " + json_double(sl.negativity) + "}";
      }
      s += "\n      ]\n    }";
    }
    s += "\n  ]\n}\n";
  }
  return write_output(s, c.out);
}

int run_capacity(const CommonOpts& c, const std::string& state_name) {
  const chi4::CapacityReport report = chi4::dense_code_capacity_check(named_state(state_name));
  std::string eigs_json = "[";
  std::string eigs_cell;
  for (size_t i = 0; i < report.gram_eigenvalues.size(); ++i) {
    if (i) {
      eigs_json += ", ";
      eigs_cell += ";";
    }
    eigs_json += json_double(report.gram_eigenvalues[i]);
    eigs_cell += json_double(report.gram_eigenvalues[i]);
  }
  eigs_json += "]";

  std::string s;
  if (c.format == "csv") {
    s = "protocol,seed,state,rank,perfect_decoding,max_gram_offdiag,gram_eigenvalues\n";
    s += "capacity," + json_uint(c.seed) + "," + state_name + "," + json_int(report.rank) + "," +
         json_bool(report.perfect_decoding) + "," + json_double(report.max_gram_offdiag) + "," +
         csv_field(eigs_cell) + "\n";
  } else {
    s = "{\n  \"protocol\": \"capacity\",\n  \"seed\": " + json_uint(c.seed) +
        ",\n  \"state\": " + json_string(state_name) +
        ",\n  \"rank\": " + json_int(report.rank) +
        ",\n  \"perfect_decoding\": " + json_bool(report.perfect_decoding) +
        ",\n  \"max_gram_offdiag\": " + json_double(report.max_gram_offdiag) +
        ",\n  \"gram_eigenvalues\": " + eigs_json + "\n}\n";
  }
  return write_output(s, c.out);
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_trials) {
  cmd->add_option("--seed", c.seed, "base seed; trial t runs with seed + t");
  if (with_trials) {
    cmd->add_option("--trials", c.trials, "number of independent runs")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "output file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"four-qubit entangled-channel protocols: teleportation, dense coding, reports"};
  app.require_subcommand(1);

  CommonOpts common;

  CLI::App* t1 = app.add_subcommand("teleport1", "single-qubit teleportation over a Bell pair");
  add_common(t1, common, true);

  CLI::App* t2 =
      app.add_subcommand("teleport2", "two-qubit teleportation through the four-qubit channel");
  double theta1 = 0.0, theta2 = 0.0, phi1 = 0.0, phi2 = 0.0;
  bool chi_flag = false;
  CLI::Option* o_t1 = t2->add_option("--theta1", theta1, "first theta angle (radians)");
  CLI::Option* o_t2 = t2->add_option("--theta2", theta2, "second theta angle (radians)");
  CLI::Option* o_p1 = t2->add_option("--phi1", phi1, "first phi angle (radians)");
  CLI::Option* o_p2 = t2->add_option("--phi2", phi2, "second phi angle (radians)");
  CLI::Option* o_chi =
      t2->add_flag("--chi", chi_flag, "use the maximal point (both angle differences pi/4)");
  o_chi->excludes(o_t1)->excludes(o_t2)->excludes(o_p1)->excludes(o_p2);
  add_common(t2, common, true);

  CLI::App* tp = app.add_subcommand(
      "teleport2-partial", "two-qubit transfer with the partially-swapped measurement register");
  add_common(tp, common, true);

  CLI::App* tc = app.add_subcommand(
      "teleport-coop", "single-qubit teleportation assisted by two measuring cooperators");
  add_common(tc, common, true);

  CLI::App* dc = app.add_subcommand("densecode", "classical messaging over shared entanglement");
  std::string scheme;
  int message = 0;
  dc->add_option("--scheme", scheme, "encoding scheme")
      ->required()
      ->check(CLI::IsMember({"d0", "s0", "restricted"}));
  dc->add_option("--message", message, "message index (d0/s0: 0..15, restricted: 0..7)")
      ->required();
  add_common(dc, common, true);

  CLI::App* sweep = app.add_subcommand(
      "entropy-sweep", "bipartite entropy of the A3B2 reduction across equal angle differences");
  int points = 9;
  sweep->add_option("--points", points, "number of interior grid points")
      ->check(CLI::PositiveNumber);
  add_common(sweep, common, false);

  CLI::App* ent = app.add_subcommand("ent-report", "pairwise and loss entanglement reports");
  std::string ent_state = "chi";
  ent->add_option("--state", ent_state, "channel to analyze")
      ->check(CLI::IsMember({"chi", "ghz4", "w4", "bellpair"}));
  add_common(ent, common, false);

  CLI::App* cap = app.add_subcommand("capacity", "Gram-rank report for dense-coding images");
  std::string cap_state = "chi";
  cap->add_option("--state", cap_state, "channel to analyze")
      ->check(CLI::IsMember({"chi", "ghz4", "w4", "bellpair"}));
  add_common(cap, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  chi4::BasisParams params = chi4::chi_point();
  if (t2->parsed() && !chi_flag) {
    if (o_t1->count() == 0 || o_t2->count() == 0 || o_p1->count() == 0 || o_p2->count() == 0) {
      std::cerr << "error: teleport2 needs --chi or all of --theta1 --theta2 --phi1 --phi2\n";
      return 2;
    }
    params = chi4::BasisParams{theta1, theta2, phi1, phi2};
    try {
      params.validate();
    } catch (const chi4::DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (t1->parsed()) return run_teleport1(common);
    if (t2->parsed()) return run_teleport2(common, params);
    if (tp->parsed()) return run_teleport_partial(common);
    if (tc->parsed()) return run_teleport_coop(common);
    if (dc->parsed()) return run_densecode(common, scheme, message);
    if (sweep->parsed()) return run_entropy_sweep(common, points);
    if (ent->parsed()) return run_ent_report(common, ent_state);
    if (cap->parsed()) return run_capacity(common, cap_state);
  } catch (const chi4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
