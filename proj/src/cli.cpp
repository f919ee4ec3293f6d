#include "legbraid/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "legbraid/augment.hpp"
#include "legbraid/braid.hpp"
#include "legbraid/catalog.hpp"
#include "legbraid/dga.hpp"
#include "legbraid/pathmatrix.hpp"
#include "legbraid/ruling.hpp"
#include "legbraid/simruling.hpp"
#include "legbraid/verification.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legbraid {

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string word;
  int strands = 0;  // 0 = infer
  std::string format = "text";
  int jobs = 1;
  std::uint64_t max_subsets = kDefaultSubsetGuard;
};

BraidWord word_of(const CommonOpts& o) {
  return parse_braid_word(o.word, o.strands > 0
                                      ? std::optional<int>(o.strands)
                                      : std::nullopt);
}

CrossingSet parse_crossing_set(const std::string& text, int width) {
  if (text == "-" || text == "none") return CrossingSet::empty(width);
  std::vector<int> indices;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream part(token);
    int v;
    while (part >> v) indices.push_back(v);
    if (!part.eof())
      throw std::invalid_argument("crossing set: expected integer indices, got \"" +
                                  token + "\"");
  }
  return CrossingSet::from_indices(width, indices);
}

json matrix_json(const NcMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.size(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

void print_matrix_text(const NcMatrix& m, std::ostream& out) {
  for (int i = 1; i <= m.size(); ++i) {
    out << "[ ";
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) out << " | ";
      out << m.at(i, j).to_string();
    }
    out << " ]\n";
  }
}

json ruling_polynomial_json(const RulingPolynomial& rp) {
  json coeffs = json::array();
  for (const auto& [e, c] : rp.coeffs) coeffs.push_back(json::array({e, c}));
  return json{{"coeffs", coeffs}};
}

json bit_matrix_json(const BitMatrix& m) {
  json rows = json::array();
  for (int i = 1; i <= m.n; ++i) {
    json row = json::array();
    for (int j = 1; j <= m.n; ++j) row.push_back(m.get(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& j, const CommonOpts& o, std::ostream& out,
          const std::function<void()>& text_form) {
  if (o.format == "json")
    out << j.dump(2) << "\n";
  else
    text_form();
}

int cmd_info(const CommonOpts& o, std::ostream& out) {
  DiagramStats s = diagram_stats(word_of(o));
  json j{{"w", s.w},  {"q", s.q},           {"mu", s.mu},
         {"tb", s.tb}, {"chi_star", s.chi_star}, {"connected", s.connected}};
  emit(j, o, out, [&] {
    out << "w=" << s.w << " q=" << s.q << " mu=" << s.mu << " tb=" << s.tb
        << " connected=" << (s.connected ? "yes" : "no") << "\n";
  });
  return 0;
}

int cmd_matrix(const CommonOpts& o, bool inverse, std::ostream& out) {
  BraidWord b = word_of(o);
  NcMatrix m = inverse ? inverse_path_matrix(b) : path_matrix(b);
  emit(json{{"matrix", matrix_json(m)}}, o, out,
       [&] { print_matrix_text(m, out); });
  return 0;
}

int cmd_factor(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  RowReductionFactors f = row_reduction_factors(b);
  json factors = json::array();
  for (const NcMatrix& a : f.factors) factors.push_back(matrix_json(a));
  json j{{"factors", factors},
         {"permutation", matrix_json(f.permutation_part)}};
  emit(j, o, out, [&] {
    for (size_t k = 0; k < f.factors.size(); ++k) {
      out << "A" << (k + 1) << ":\n";
      print_matrix_text(f.factors[k], out);
    }
    out << "P:\n";
    print_matrix_text(f.permutation_part, out);
  });
  return 0;
}

int cmd_differential(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  std::vector<NcPoly> diff = differential(b);
  json entries = json::array();
  for (const NcPoly& d : diff) entries.push_back(d.to_string());
  emit(json{{"differential", entries}}, o, out, [&] {
    for (size_t n = 0; n < diff.size(); ++n)
      out << "da" << (n + 1) << " = " << diff[n].to_string() << "\n";
  });
  return 0;
}

int cmd_aug_test(const CommonOpts& o, const std::string& set_text,
                 std::ostream& out) {
  BraidWord b = word_of(o);
  CrossingSet y = parse_crossing_set(set_text, b.length());
  AugmentationCheck check = is_augmentation(b, y);
  json j{{"is_augmentation", check.is_augmentation}};
  if (check.multipliers) j["multipliers"] = bit_matrix_json(*check.multipliers);
  emit(j, o, out, [&] {
    out << (check.is_augmentation ? "augmentation" : "not an augmentation")
        << "\n";
    if (check.multipliers) {
      const BitMatrix& m = *check.multipliers;
      for (int i = 2; i <= m.n; ++i)
        for (int jj = 1; jj < i; ++jj)
          out << "c[" << i << "," << jj << "] = " << (m.get(i, jj) ? 1 : 0)
              << "\n";
    }
  });
  return 0;
}

int cmd_aug_count(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  std::uint64_t count = count_augmentations(b, o.jobs, o.max_subsets);
  std::uint64_t cross = count_via_rulings(b);
  json j{{"count", count}, {"odd", count % 2 == 1}, {"cross_check", cross}};
  emit(j, o, out, [&] {
    out << count << " augmentations ("
        << (count % 2 == 1 ? "odd" : "even") << "; ruling cross-check "
        << cross << ")\n";
  });
  return 0;
}

int cmd_aug_list(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  AugmentationEnumeration e =
      enumerate_augmentations(b, true, o.jobs, o.max_subsets);
  json list = json::array();
  for (const CrossingSet& y : e.list) list.push_back(y.indices());
  emit(json{{"count", e.count}, {"augmentations", list}}, o, out, [&] {
    for (const CrossingSet& y : e.list) {
      out << "{";
      auto idx = y.indices();
      for (size_t t = 0; t < idx.size(); ++t)
        out << (t ? "," : "") << idx[t];
      out << "}\n";
    }
    out << e.count << " augmentations\n";
  });
  return 0;
}

int cmd_ruling_test(const CommonOpts& o, const std::string& set_text,
                    std::ostream& out) {
  BraidWord b = word_of(o);
  CrossingSet s = parse_crossing_set(set_text, b.length());
  std::optional<int> theta = is_ruling(b, s);
  json j{{"is_ruling", theta.has_value()}};
  if (theta) j["theta"] = *theta;
  emit(j, o, out, [&] {
    if (theta)
      out << "ruling with theta = " << *theta << "\n";
    else
      out << "not a ruling\n";
  });
  return 0;
}

int cmd_ruling_poly(const CommonOpts& o, std::ostream& out) {
  RulingPolynomial rp = ruling_polynomial(word_of(o));
  emit(ruling_polynomial_json(rp), o, out,
       [&] { out << rp.to_string() << "\n"; });
  return 0;
}

int cmd_ruling_list(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  auto rulings = enumerate_rulings(b);
  json list = json::array();
  for (const auto& [s, theta] : rulings)
    list.push_back(json{{"switches", s.indices()}, {"theta", theta}});
  emit(json{{"count", rulings.size()}, {"rulings", list}}, o, out, [&] {
    for (const auto& [s, theta] : rulings) {
      out << "{";
      auto idx = s.indices();
      for (size_t t = 0; t < idx.size(); ++t)
        out << (t ? "," : "") << idx[t];
      out << "} theta=" << theta << "\n";
    }
    out << rulings.size() << " rulings\n";
  });
  return 0;
}

int cmd_simul(const CommonOpts& o, std::ostream& out) {
  BraidWord b = word_of(o);
  SimResult r = construct_simultaneous(b);
  int mu = diagram_stats(b).mu;
  json forest = json::array();
  for (const auto& [i, j] : r.forest) forest.push_back(json::array({i, j}));
  json j{{"X", r.x.indices()}, {"forest", forest}, {"theta", mu}};
  emit(j, o, out, [&] {
    out << "X = {";
    auto idx = r.x.indices();
    for (size_t t = 0; t < idx.size(); ++t) out << (t ? "," : "") << idx[t];
    out << "}, theta = " << mu << ", forest:";
    for (const auto& [i, jj] : r.forest) out << " " << i << "->" << jj;
    out << "\n";
  });
  return 0;
}

int cmd_identities(int q, int cases, unsigned seed, const std::string& format,
                   std::ostream& out) {
  auto results = run_identity_suite(q, cases, seed);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back(json{{"check", r.name}, {"passed", r.passed}});
    if (format != "json")
      out << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << "\n";
  }
  if (format == "json")
    out << json{{"checks", list}, {"all_passed", all}}.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_grobner(int q, int random_orders, unsigned seed,
                const std::string& format, std::ostream& out) {
  auto results = run_grobner_suite(q, random_orders, seed);
  bool all = true;
  json list = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back(json{{"check", r.name}, {"passed", r.passed}});
    if (format != "json")
      out << (r.passed ? "[ok]   " : "[FAIL] ") << r.name << "\n";
  }
  if (format == "json")
    out << json{{"checks", list}, {"all_passed", all}}.dump(2) << "\n";
  return all ? 0 : 1;
}

struct RecordResult {
  json record;
  bool pass = true;
  std::string error;
  long long ms = 0;
};

RecordResult compute_record(const CatalogRecord& rec,
                            std::uint64_t max_subsets) {
  RecordResult out;
  auto start = std::chrono::steady_clock::now();
  BraidWord b = parse_braid_word(rec.word, rec.strands);
  DiagramStats stats = diagram_stats(b);
  std::uint64_t augs = count_augmentations(b, 1, max_subsets);
  RulingPolynomial rp = ruling_polynomial(b);
  bool simul_ok = verify_simultaneous(b);
  bool cross_ok = count_via_rulings(b) == augs && augs % 2 == 1;
  out.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();

  out.pass = simul_ok && cross_ok;
  if (rec.expect.augmentations && *rec.expect.augmentations != augs)
    out.pass = false;
  if (rec.expect.ruling_polynomial &&
      *rec.expect.ruling_polynomial != rp.to_string())
    out.pass = false;

  out.record = json{{"name", rec.name},
                    {"w", stats.w},
                    {"q", stats.q},
                    {"mu", stats.mu},
                    {"tb", stats.tb},
                    {"augmentations", augs},
                    {"ruling_polynomial", rp.to_string()},
                    {"simultaneous_ok", simul_ok},
                    {"cross_check_ok", cross_ok},
                    {"pass", out.pass}};
  return out;
}

int cmd_report(const std::string& catalog_path, int jobs,
               std::uint64_t max_subsets, bool timing,
               const std::string& format, std::ostream& out,
               std::ostream& err) {
  std::vector<CatalogRecord> records;
  if (catalog_path.empty()) {
    records = default_catalog();
  } else {
    std::ifstream in(catalog_path);
    if (!in) throw std::invalid_argument("cannot read catalog: " + catalog_path);
    records = parse_catalog(in);
  }

  std::vector<RecordResult> results(records.size());
  int threads = std::clamp(jobs, 1, 64);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (size_t i = 0; i < records.size(); ++i) {
    try {
      results[i] = compute_record(records[i], max_subsets);
    } catch (const std::exception& e) {
      results[i].pass = false;
      results[i].error = e.what();
    }
  }
  (void)threads;

  for (const RecordResult& r : results)
    if (!r.error.empty()) {
      err << "error: " << r.error << "\n";
      return 2;
    }

  size_t passed = 0;
  for (const RecordResult& r : results) passed += r.pass;

  if (format == "json") {
    json report = json::array();
    for (RecordResult& r : results) {
      if (timing) r.record["ms"] = r.ms;
      report.push_back(r.record);
    }
    json j{{"records", report},
           {"summary",
            {{"total", results.size()}, {"passed", passed},
             {"failed", results.size() - passed}}}};
    out << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < results.size(); ++i) {
      const json& r = results[i].record;
      out << (results[i].pass ? "[ok]   " : "[FAIL] ") << records[i].name
          << ": aug=" << r["augmentations"].get<std::uint64_t>()
          << " rp=" << r["ruling_polynomial"].get<std::string>()
          << " simultaneous=" << (r["simultaneous_ok"].get<bool>() ? "ok" : "BAD")
          << " cross-check=" << (r["cross_check_ok"].get<bool>() ? "ok" : "BAD");
      if (timing) out << " (" << results[i].ms << " ms)";
      out << "\n";
    }
    out << results.size() << " records, " << passed << " passed, "
        << (results.size() - passed) << " failed\n";
  }
  return passed == results.size() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_word = true) {
  if (needs_word)
    cmd->add_option("word", o.word, "positive braid word, e.g. \"s1^3\" or \"1 2 1\"")
        ->required();
  cmd->add_option("--strands", o.strands, "strand count override");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--jobs", o.jobs, "worker count for subset enumeration");
  cmd->add_option("--max-subsets", o.max_subsets, "guard on 2^w subset sweeps");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"invariants of Legendrian closures of positive braids"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string set_text;
  std::string catalog_path;
  bool timing = false;
  int ver_q = 4;
  int grob_q = 3;
  int cases = 500;
  int random_orders = 3;
  unsigned seed = 20060203;

  int rc = 0;
  auto* info = app.add_subcommand("info", "word statistics");
  add_common(info, opts);
  info->callback([&] { rc = cmd_info(opts, out); });

  auto* matrix = app.add_subcommand("matrix", "path matrix");
  add_common(matrix, opts);
  matrix->callback([&] { rc = cmd_matrix(opts, false, out); });

  auto* inverse = app.add_subcommand("inverse", "inverse path matrix");
  add_common(inverse, opts);
  inverse->callback([&] { rc = cmd_matrix(opts, true, out); });

  auto* factor = app.add_subcommand("factor", "row-reduction factors");
  add_common(factor, opts);
  factor->callback([&] { rc = cmd_factor(opts, out); });

  auto* diff = app.add_subcommand("differential", "differential of the index-1 generators");
  add_common(diff, opts);
  diff->callback([&] { rc = cmd_differential(opts, out); });

  auto* aug = app.add_subcommand("aug", "augmentations");
  aug->require_subcommand(1);
  auto* aug_test = aug->add_subcommand("test", "test one crossing subset");
  add_common(aug_test, opts);
  aug_test->add_option("set", set_text, "crossing indices, e.g. 1,3 ('-' for none)")
      ->required();
  aug_test->callback([&] { rc = cmd_aug_test(opts, set_text, out); });
  auto* aug_count = aug->add_subcommand("count", "count all augmentations");
  add_common(aug_count, opts);
  aug_count->callback([&] { rc = cmd_aug_count(opts, out); });
  auto* aug_list = aug->add_subcommand("list", "list all augmentations");
  add_common(aug_list, opts);
  aug_list->callback([&] { rc = cmd_aug_list(opts, out); });

  auto* ruling = app.add_subcommand("ruling", "normal rulings");
  ruling->require_subcommand(1);
  auto* ruling_test = ruling->add_subcommand("test", "test one switch subset");
  add_common(ruling_test, opts);
  ruling_test->add_option("set", set_text, "crossing indices ('-' for none)")
      ->required();
  ruling_test->callback([&] { rc = cmd_ruling_test(opts, set_text, out); });
  auto* ruling_poly = ruling->add_subcommand("poly", "ruling polynomial");
  add_common(ruling_poly, opts);
  ruling_poly->callback([&] { rc = cmd_ruling_poly(opts, out); });
  auto* ruling_list = ruling->add_subcommand("list", "list all rulings");
  add_common(ruling_list, opts);
  ruling_list->callback([&] { rc = cmd_ruling_list(opts, out); });

  auto* simul = app.add_subcommand("simul", "simultaneous ruling/augmentation set");
  add_common(simul, opts);
  simul->callback([&] { rc = cmd_simul(opts, out); });

  auto* ident = app.add_subcommand("identities", "symbolic identity suite");
  ident->add_option("--q", ver_q, "max strand count")->check(CLI::Range(1, 5));
  ident->add_option("--cases", cases, "random word sample size");
  ident->add_option("--seed", seed, "random seed");
  ident->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
  ident->callback([&] { rc = cmd_identities(ver_q, cases, seed, opts.format, out); });

  auto* grob = app.add_subcommand("grobner", "ideal and Groebner-basis checks");
  grob->add_option("--q", grob_q, "max strand count")->check(CLI::Range(1, 3));
  grob->add_option("--orders", random_orders, "random diagonal-dominant orders");
  grob->add_option("--seed", seed, "random seed");
  grob->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
  grob->callback([&] {
    rc = cmd_grobner(grob_q, random_orders, seed, opts.format, out);
  });

  auto* report = app.add_subcommand("report", "batch catalog report");
  report->add_option("--catalog", catalog_path, "JSONL catalog path (default: built-in)");
  report->add_option("--jobs", opts.jobs, "records processed in parallel");
  report->add_option("--max-subsets", opts.max_subsets, "guard on 2^w subset sweeps");
  report->add_option("--format", opts.format)->check(CLI::IsMember({"text", "json"}));
  report->add_flag("--timing", timing, "include wall time per record");
  report->callback([&] {
    rc = cmd_report(catalog_path, opts.jobs, opts.max_subsets, timing,
                    opts.format, out, err);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace legbraid
