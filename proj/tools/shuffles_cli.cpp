// Command-line front end: lacunar listings, spectrum predictions and
// verification, filtration checks, Specht module dumps, and the aggregate
// verification driver.  Output is JSON (default), CSV, or an aligned table;
// identical arguments produce byte-identical output.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shuffles/verify.hpp"

using ojson = nlohmann::ordered_json;
using namespace shuffles;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  std::string lambda_arg;
  std::string weights_arg;
  unsigned long long seed = 0;
  std::string format = "json";
  double budget_secs = 10.0;
  std::string level = "quick";
  bool verify = false;
};

// ---------------------------------------------------------------- parsing

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "[]") return Partition();
  std::vector<int> parts;
  for (const std::string& tok : split_commas(s)) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("malformed partition entry '" + tok + "'");
    }
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid partition: ") + e.what());
  }
}

std::vector<Rational> parse_weights(const std::string& s) {
  std::vector<Rational> w;
  for (const std::string& tok : split_commas(s)) {
    try {
      w.push_back(rat_parse(tok));
    } catch (const std::exception&) {
      throw UsageError("malformed weight '" + tok + "'");
    }
  }
  return w;
}

// ------------------------------------------------------------- formatting

std::string int_vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string schur_str(const SchurExpansion& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [shape, c] : f) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += std::to_string(c) + "*";
    s += "s" + partition_str(shape);
  }
  return s;
}

ojson int_vec_json(const std::vector<int>& v) { return ojson(v); }

ojson partition_json(const Partition& p) { return ojson(p.parts); }

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson outcome_json(const verify::Outcome& o) {
  ojson j;
  j["name"] = o.name;
  j["status"] = o.skipped ? "skipped" : (o.pass ? "pass" : "fail");
  j["detail"] = o.detail;
  return j;
}

ojson skipped_json(const std::string& name, const std::string& why) {
  ojson j;
  j["name"] = name;
  j["status"] = "skipped";
  j["detail"] = why;
  return j;
}

struct Report {
  ojson doc;
  std::vector<ojson> rows;  // flat string/number records for csv and table
  std::string footer;       // table format only
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_str(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const Report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << rep.doc.dump(2) << "\n";
    return;
  }
  if (rep.rows.empty()) return;
  std::vector<std::string> header;
  for (auto it = rep.rows.front().begin(); it != rep.rows.front().end(); ++it)
    header.push_back(it.key());
  if (format == "csv") {
    for (size_t i = 0; i < header.size(); ++i)
      std::cout << (i ? "," : "") << csv_escape(header[i]);
    std::cout << "\n";
    for (const ojson& row : rep.rows) {
      for (size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << csv_escape(cell_str(row.at(header[i])));
      std::cout << "\n";
    }
    return;
  }
  // table: pad every column to its widest cell
  std::vector<size_t> width;
  for (const std::string& h : header) width.push_back(h.size());
  for (const ojson& row : rep.rows)
    for (size_t i = 0; i < header.size(); ++i)
      width[i] = std::max(width[i], cell_str(row.at(header[i])).size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << cells[i] << std::string(width[i] - cells[i].size(), ' ');
    }
    std::cout << "\n";
  };
  line(header);
  std::vector<std::string> dashes;
  for (size_t w : width) dashes.push_back(std::string(w, '-'));
  line(dashes);
  for (const ojson& row : rep.rows) {
    std::vector<std::string> cells;
    for (const std::string& h : header) cells.push_back(cell_str(row.at(h)));
    line(cells);
  }
  if (!rep.footer.empty()) std::cout << rep.footer << "\n";
}

// ------------------------------------------------------------ cost model

// Rounded-up per-phase wall costs in seconds, measured at desk scale.  The
// budget gate works from these fixed estimates, never from the clock, so a
// given argument list always selects the same set of checks.
enum class Phase { Build, Chars, StabFull, StabSample, Nabla, Fixed, Sweep, Chain };

double phase_cost(Phase p, int n) {
  if (n <= 3) return 0.01;
  if (n > 6) return 1e18;  // past desk scale: always over budget
  const int i = n - 4;
  switch (p) {
    case Phase::Build: {
      static const double c[3] = {0.02, 0.10, 1.0};
      return c[i];
    }
    case Phase::Chars: {
      static const double c[3] = {0.02, 0.20, 4.0};
      return c[i];
    }
    case Phase::StabFull: {
      static const double c[3] = {0.05, 0.50, 11.0};
      return c[i];
    }
    case Phase::StabSample: {
      static const double c[3] = {0.05, 0.50, 2.5};
      return c[i];
    }
    case Phase::Nabla: {
      static const double c[3] = {0.05, 0.40, 2.0};
      return c[i];
    }
    case Phase::Fixed: {
      static const double c[3] = {0.05, 0.40, 2.0};
      return c[i];
    }
    case Phase::Sweep: {
      static const double c[3] = {0.05, 0.30, 0.5};
      return c[i];
    }
    case Phase::Chain: {
      static const double c[3] = {0.05, 0.50, 12.0};
      return c[i];
    }
  }
  return 1e18;
}

struct Budget {
  double remaining;
  bool take(Phase p, int n) {
    double c = phase_cost(p, n);
    if (c > remaining) return false;
    remaining -= c;
    return true;
  }
};

std::string over_budget_note(Phase p, int n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "over budget (estimated %gs)", phase_cost(p, n));
  return buf;
}

// -------------------------------------------------------------- commands

ojson config_json(const std::string& command, const Options& o, bool with_lambda,
                  bool with_weights, bool with_level, bool with_seed, bool with_budget) {
  ojson c;
  c["command"] = command;
  c["n"] = o.n;
  if (with_lambda) c["lambda"] = o.lambda_arg;
  if (with_weights) c["weights"] = o.weights_arg;
  if (command == "spectrum") c["verify"] = o.verify;
  if (with_level) c["level"] = o.level;
  if (with_seed) c["seed"] = o.seed;
  c["format"] = o.format;
  if (with_budget) c["budget_secs"] = o.budget_secs;
  return c;
}

void require_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
}

int finish(const Report& rep, const Options& o, bool all_pass, int skipped) {
  emit(rep, o.format);
  if (skipped > 0)
    std::cerr << "warning: " << skipped << " check(s) skipped (over budget)\n";
  return all_pass ? 0 : 1;
}

int cmd_lacunar(const Options& o) {
  require_n(o);
  const bool with_schur = o.n <= 12;  // expansions grow superpolynomially past this
  std::vector<LacunarSet> sets = enumerate_lacunar(o.n);
  unsigned long long fib = fibonacci(o.n + 1);

  Report rep;
  rep.doc["config"] = config_json("lacunar", o, false, false, false, false, false);
  rep.doc["count"] = sets.size();
  rep.doc["fibonacci"] = fib;
  bool census_ok = (sets.size() == fib);
  rep.doc["census_ok"] = census_ok;
  if (!with_schur) rep.doc["schur_note"] = "z expansions omitted for n > 12";

  ojson arr = ojson::array();
  for (size_t k = 0; k < sets.size(); ++k) {
    const LacunarSet& I = sets[k];
    GapDecomposition g = gap_decomposition(I);
    std::vector<int> m = m_vector(o.n, I.elems);
    int sum = 0;
    for (int e : I.elems) sum += e;

    ojson row;
    row["index"] = k + 1;
    row["set"] = int_vec_json(I.elems);
    row["sum"] = sum;
    row["m_vector"] = int_vec_json(m);
    row["j_seq"] = int_vec_json(g.j_seq);
    SchurExpansion z;
    if (with_schur) {
      z = z_of_lacunar(I);
      ojson zj = ojson::array();
      for (const auto& [shape, c] : z) {
        ojson term;
        term["shape"] = partition_json(shape);
        term["coeff"] = c;
        zj.push_back(std::move(term));
      }
      row["z_schur"] = std::move(zj);
    }
    arr.push_back(std::move(row));

    ojson flat;
    flat["index"] = k + 1;
    flat["set"] = set_str(I.elems);
    flat["sum"] = sum;
    flat["m_vector"] = int_vec_str(m);
    flat["j_seq"] = int_vec_str(g.j_seq);
    if (with_schur) flat["z_schur"] = schur_str(z);
    rep.rows.push_back(std::move(flat));
  }
  rep.doc["sets"] = std::move(arr);
  rep.footer = "total: " + std::to_string(sets.size()) + " = f_" + std::to_string(o.n + 1);
  emit(rep, o.format);
  return census_ok ? 0 : 1;
}

int cmd_spectrum(const Options& o) {
  require_n(o);
  if (o.lambda_arg.empty()) throw UsageError("spectrum requires --lambda");
  Partition lam = parse_partition(o.lambda_arg);
  if (lam.size() != o.n)
    throw UsageError("partition " + partition_str(lam) + " has size " +
                     std::to_string(lam.size()) + ", expected n = " + std::to_string(o.n));
  std::vector<Rational> w;
  if (o.weights_arg.empty()) {
    w.assign(o.n, Rational(1));
  } else {
    w = parse_weights(o.weights_arg);
    if (static_cast<int>(w.size()) != o.n)
      throw UsageError("expected " + std::to_string(o.n) + " weights, got " +
                       std::to_string(w.size()));
  }

  SpectrumPrediction P = predict_spectrum(lam, w);

  Report rep;
  rep.doc["config"] = config_json("spectrum", o, true, true, false, false, false);
  rep.doc["n"] = o.n;
  rep.doc["lambda"] = partition_json(lam);
  ojson wj = ojson::array();
  for (const Rational& x : w) wj.push_back(rat_str(x));
  rep.doc["weights"] = std::move(wj);

  ojson entries = ojson::array();
  for (const SpectrumEntry& e : P.entries) {
    ojson ent;
    ent["I"] = int_vec_json(e.I.elems);
    ent["m_vector"] = int_vec_json(e.m_vec);
    ent["omega"] = rat_str(e.omega);
    ent["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(ent));

    ojson flat;
    flat["I"] = set_str(e.I.elems);
    flat["m_vector"] = int_vec_str(e.m_vec);
    flat["omega"] = rat_str(e.omega);
    flat["multiplicity"] = e.multiplicity;
    rep.rows.push_back(std::move(flat));
  }
  rep.doc["entries"] = std::move(entries);

  ojson grouped = ojson::array();
  for (const auto& [value, total] : P.grouped) {
    ojson g;
    g["value"] = rat_str(value);
    g["total"] = total;
    grouped.push_back(std::move(g));
  }
  rep.doc["grouped"] = std::move(grouped);
  rep.doc["total_multiplicity"] = P.total_multiplicity;
  rep.doc["dimension"] = count_syt(lam);

  bool all_pass = true;
  if (o.verify) {
    SpechtModule M = build_specht(lam);
    std::vector<Matrix> t_acts = t_action_matrices(M);
    SpectrumVerification V = verify_spectrum(M, t_acts, w);
    rep.doc["charpoly_lhs"] = poly_str(V.charpoly.lhs);
    rep.doc["charpoly_rhs"] = poly_str(V.charpoly.rhs);
    rep.doc["equal"] = V.charpoly.equal;
    rep.doc["annihilator_zero"] = V.annihilator_zero;
    ojson diag;
    diag["distinct"] = V.diag.distinct;
    diag["diagonalizable"] = V.diag.diagonalizable;
    rep.doc["diagonalizable"] = std::move(diag);
    rep.doc["dimension_match"] = V.dimension_match;
    rep.doc["pass"] = V.pass();
    all_pass = V.pass();
  }
  emit(rep, o.format);
  return all_pass ? 0 : 1;
}

int cmd_filtration(const Options& o) {
  require_n(o);
  const bool full = (o.level == "full");
  Budget budget{o.budget_secs};

  Report rep;
  rep.doc["config"] = config_json("filtration", o, false, false, true, true, true);
  rep.doc["stages"] = fibonacci(o.n + 1);

  std::vector<ojson> checks;
  bool all_pass = true;
  int skipped = 0;
  auto add = [&](const ojson& c) {
    if (c.at("status") == "fail") all_pass = false;
    if (c.at("status") == "skipped") ++skipped;
    checks.push_back(c);
  };

  bool built = budget.take(Phase::Build, o.n);
  Filtration F;
  if (built) {
    F = build_filtration(o.n);
    ojson ranks = ojson::array();
    for (int i = 1; i <= F.stages(); ++i) ranks.push_back(F.stage_rank[i]);
    rep.doc["cumulative_ranks"] = std::move(ranks);
    add(outcome_json(verify::filtration_ranks(F)));
    if (budget.take(Phase::Chars, o.n))
      add(outcome_json(verify::subquotient_characters_all(F)));
    else
      add(skipped_json("subquotient characters", over_budget_note(Phase::Chars, o.n)));
  } else {
    add(skipped_json("rank formula", over_budget_note(Phase::Build, o.n)));
    add(skipped_json("subquotient characters", "filtration not built (over budget)"));
  }

  if (full) {
    if (!built) {
      add(skipped_json("right stability", "filtration not built (over budget)"));
      add(skipped_json("nabla properties", "filtration not built (over budget)"));
      add(skipped_json("fixed-space inclusion", "filtration not built (over budget)"));
    } else {
      if (budget.take(Phase::StabFull, o.n)) {
        add(outcome_json(verify::stability(F, 1.0, o.seed)));
      } else if (budget.take(Phase::StabSample, o.n)) {
        add(skipped_json("right stability (exhaustive)", over_budget_note(Phase::StabFull, o.n)));
        add(outcome_json(verify::stability(F, 0.2, o.seed)));
      } else {
        add(skipped_json("right stability", over_budget_note(Phase::StabSample, o.n)));
      }
      if (budget.take(Phase::Nabla, o.n))
        add(outcome_json(verify::nabla_properties_all(F, o.seed)));
      else
        add(skipped_json("nabla properties", over_budget_note(Phase::Nabla, o.n)));
      if (budget.take(Phase::Fixed, o.n))
        add(outcome_json(verify::fixed_inclusion_all(F)));
      else
        add(skipped_json("fixed-space inclusion", over_budget_note(Phase::Fixed, o.n)));
    }
  }

  ojson arr = ojson::array();
  for (const ojson& c : checks) arr.push_back(c);
  rep.doc["checks"] = std::move(arr);
  rep.doc["all_pass"] = all_pass;
  rep.doc["skipped"] = skipped;
  rep.rows = checks;
  return finish(rep, o, all_pass, skipped);
}

int cmd_specht(const Options& o) {
  require_n(o);
  if (o.lambda_arg.empty()) throw UsageError("specht requires --lambda");
  Partition lam = parse_partition(o.lambda_arg);
  if (lam.size() != o.n)
    throw UsageError("partition " + partition_str(lam) + " has size " +
                     std::to_string(lam.size()) + ", expected n = " + std::to_string(o.n));

  SpechtModule M = build_specht(lam);

  Report rep;
  rep.doc["config"] = config_json("specht", o, true, false, false, false, false);
  rep.doc["lambda"] = partition_json(lam);
  rep.doc["dim"] = M.dim();
  rep.doc["tabloid_count"] = M.num_tabloids();

  ojson syt = ojson::array();
  for (size_t k = 0; k < M.standard_tableaux.size(); ++k) {
    const auto& t = M.standard_tableaux[k];
    ojson tj = ojson::array();
    std::string disp;
    for (const std::vector<int>& row : t) {
      tj.push_back(int_vec_json(row));
      if (!disp.empty()) disp += " / ";
      for (size_t i = 0; i < row.size(); ++i) disp += (i ? " " : "") + std::to_string(row[i]);
    }
    syt.push_back(std::move(tj));
    ojson flat;
    flat["index"] = k + 1;
    flat["tableau"] = disp;
    rep.rows.push_back(std::move(flat));
  }
  rep.doc["standard_tableaux"] = std::move(syt);

  ojson gens = ojson::array();
  for (int i = 1; i <= o.n - 1; ++i) {
    ojson g;
    g["name"] = "s_" + std::to_string(i);
    g["matrix"] = matrix_json(perm_action_matrix(M, adjacent_transposition(o.n, i)));
    gens.push_back(std::move(g));
  }
  rep.doc["generator_matrices"] = std::move(gens);

  ojson ts = ojson::array();
  std::vector<Matrix> t_acts = t_action_matrices(M);
  for (int ell = 1; ell <= o.n; ++ell) {
    ojson t;
    t["name"] = "t_" + std::to_string(ell);
    t["matrix"] = matrix_json(t_acts[ell - 1]);
    ts.push_back(std::move(t));
  }
  rep.doc["t_matrices"] = std::move(ts);

  emit(rep, o.format);
  return 0;
}

int cmd_reps_check(const Options& o) {
  require_n(o);
  Report rep;
  rep.doc["config"] = config_json("reps-check", o, false, false, false, true, false);

  std::vector<ojson> checks;
  bool all_pass = true;
  auto add = [&](const ojson& c) {
    if (c.at("status") == "fail") all_pass = false;
    checks.push_back(c);
  };

  add(outcome_json(verify::cyclic_module_isos(std::min(o.n, 6))));
  if (o.n <= 5)
    add(outcome_json(verify::hom_delta(o.n)));
  else
    add(skipped_json("hom dimensions", "checked up to degree 5 only"));
  add(outcome_json(verify::induction_associativity()));
  if (o.n <= 5)
    add(outcome_json(verify::mn_vs_traces(o.n)));
  else
    add(skipped_json("character recursion vs traces", "checked up to degree 5 only"));
  add(outcome_json(verify::global_dimension_sum(std::min(o.n, 8))));

  ojson arr = ojson::array();
  for (const ojson& c : checks) arr.push_back(c);
  rep.doc["checks"] = std::move(arr);
  rep.doc["all_pass"] = all_pass;
  rep.rows = checks;
  emit(rep, o.format);
  return all_pass ? 0 : 1;
}

int cmd_verify_all(const Options& o) {
  require_n(o);
  Budget budget{o.budget_secs};

  Report rep;
  rep.doc["config"] = config_json("verify-all", o, false, false, false, true, true);

  std::vector<ojson> checks;
  bool all_pass = true;
  int skipped = 0;
  auto add = [&](const ojson& c) {
    if (c.at("status") == "fail") all_pass = false;
    if (c.at("status") == "skipped") ++skipped;
    checks.push_back(c);
  };

  add(outcome_json(verify::census(std::min(o.n, 25))));
  add(outcome_json(verify::worked_examples()));

  bool built = budget.take(Phase::Build, o.n);
  Filtration F;
  if (built) F = build_filtration(o.n);

  if (built)
    add(outcome_json(verify::filtration_ranks(F)));
  else
    add(skipped_json("filtration ranks", over_budget_note(Phase::Build, o.n)));

  if (!built) {
    add(skipped_json("right stability", "filtration not built (over budget)"));
  } else if (o.n <= 5) {
    if (budget.take(Phase::StabFull, o.n))
      add(outcome_json(verify::stability(F, 1.0, o.seed)));
    else
      add(skipped_json("right stability", over_budget_note(Phase::StabFull, o.n)));
  } else {
    if (budget.take(Phase::StabSample, o.n))
      add(outcome_json(verify::stability(F, 0.2, o.seed)));
    else
      add(skipped_json("right stability", over_budget_note(Phase::StabSample, o.n)));
  }

  if (o.n <= 5) {
    if (!built)
      add(skipped_json("subquotient characters", "filtration not built (over budget)"));
    else if (budget.take(Phase::Chars, o.n))
      add(outcome_json(verify::subquotient_characters_all(F)));
    else
      add(skipped_json("subquotient characters", over_budget_note(Phase::Chars, o.n)));

    if (!built)
      add(skipped_json("nabla properties", "filtration not built (over budget)"));
    else if (budget.take(Phase::Nabla, o.n))
      add(outcome_json(verify::nabla_properties_all(F, o.seed)));
    else
      add(skipped_json("nabla properties", over_budget_note(Phase::Nabla, o.n)));
  }

  if (o.n <= 4) {
    if (!built)
      add(skipped_json("fixed-space inclusion", "filtration not built (over budget)"));
    else if (budget.take(Phase::Fixed, o.n))
      add(outcome_json(verify::fixed_inclusion_all(F)));
    else
      add(skipped_json("fixed-space inclusion", over_budget_note(Phase::Fixed, o.n)));
  }

  if (o.n <= 6) {
    if (budget.take(Phase::Sweep, o.n))
      add(outcome_json(verify::spectrum_sweep(o.n, o.seed)));
    else
      add(skipped_json("spectrum sweep", over_budget_note(Phase::Sweep, o.n)));
  }

  if (o.n <= 5) {
    if (!built)
      add(skipped_json("annihilator chains", "filtration not built (over budget)"));
    else if (budget.take(Phase::Chain, o.n))
      add(outcome_json(verify::specht_chain(o.n, o.seed, &F)));
    else
      add(skipped_json("annihilator chains", over_budget_note(Phase::Chain, o.n)));
  }

  if (o.n >= 2) add(outcome_json(verify::cyclic_module_isos(std::min(o.n, 6))));
  if (o.n <= 5) add(outcome_json(verify::hom_delta(o.n)));
  add(outcome_json(verify::induction_associativity()));
  if (o.n <= 5) add(outcome_json(verify::mn_vs_traces(o.n)));
  add(outcome_json(verify::global_dimension_sum(std::min(o.n, 8))));

  ojson arr = ojson::array();
  int pass_count = 0, fail_count = 0;
  for (const ojson& c : checks) {
    if (c.at("status") == "pass") ++pass_count;
    if (c.at("status") == "fail") ++fail_count;
    arr.push_back(c);
  }
  rep.doc["checks"] = std::move(arr);
  ojson counts;
  counts["pass"] = pass_count;
  counts["fail"] = fail_count;
  counts["skipped"] = skipped;
  rep.doc["counts"] = std::move(counts);
  rep.doc["all_pass"] = all_pass;
  rep.rows = checks;
  return finish(rep, o, all_pass, skipped);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for somewhere-to-below shuffle operators on symmetric groups"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool n_required) {
    auto* n_opt = sub->add_option("--n", o.n, "degree of the symmetric group");
    if (n_required) n_opt->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  CLI::App* lac = app.add_subcommand("lacunar", "list index sets with no adjacent elements");
  add_common(lac, true);

  CLI::App* spec = app.add_subcommand("spectrum", "predict (and optionally verify) eigenvalues");
  add_common(spec, true);
  spec->add_option("--lambda", o.lambda_arg, "partition of n, comma-separated");
  spec->add_option("--weights", o.weights_arg, "rational weights, comma-separated");
  spec->add_flag("--verify", o.verify, "check against exact linear algebra");

  CLI::App* filt = app.add_subcommand("filtration", "check the two-sided ideal chain");
  add_common(filt, true);
  filt->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  filt->add_option("--seed", o.seed, "seed for sampled checks");
  filt->add_option("--budget-secs", o.budget_secs, "time budget for check selection");

  CLI::App* sp = app.add_subcommand("specht", "dump a Specht module with its action matrices");
  add_common(sp, true);
  sp->add_option("--lambda", o.lambda_arg, "partition of n, comma-separated");

  CLI::App* reps = app.add_subcommand("reps-check", "module isomorphism and character checks");
  add_common(reps, true);
  reps->add_option("--seed", o.seed, "seed (recorded in the report)");

  CLI::App* all = app.add_subcommand("verify-all", "run the whole verification matrix");
  add_common(all, true);
  all->add_option("--seed", o.seed, "seed for sampled checks");
  all->add_option("--budget-secs", o.budget_secs, "time budget for check selection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*lac) return cmd_lacunar(o);
    if (*spec) return cmd_spectrum(o);
    if (*filt) return cmd_filtration(o);
    if (*sp) return cmd_specht(o);
    if (*reps) return cmd_reps_check(o);
    if (*all) return cmd_verify_all(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
