// Command-line front end: rectification, stabilization indices, Greene
// invariants, lemma property suites, exhaustive enumeration and permutation
// statistics.
//
// Exit codes: 0 success, 1 input error, 2 mathematical-property violation,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tabstab/enumerate.hpp"
#include "tabstab/greene.hpp"
#include "tabstab/io.hpp"
#include "tabstab/jdt.hpp"
#include "tabstab/lemma_check.hpp"
#include "tabstab/perm.hpp"
#include "tabstab/rsk.hpp"
#include "tabstab/stab.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tabstab;

constexpr const char* kSchema = "tabstab/1";

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;
constexpr int kExitCap = 3;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SkewTableau load_tableau(const std::string& path) {
  const std::string text = read_input(path);
  // accept the JSON mirror when the input looks like JSON
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_tableau_json(text);
    break;
  }
  return parse_tableau_text(text);
}

Word parse_word(const std::string& s) {
  Word w;
  std::istringstream ss(s);
  int v;
  while (ss >> v) w.push_back(v);
  if (!ss.eof()) throw std::runtime_error("bad word: " + s);
  return w;
}

ordered_json witness_json(const SubsequenceFamily& fam) {
  ordered_json j = ordered_json::array();
  for (const auto& s : fam.sequences) j.push_back(s);
  return j;
}

int cmd_rect(const std::string& file) {
  SkewTableau t = load_tableau(file);
  if (auto d = validate_standard(t); !d) {
    std::cerr << "not a standard tableau: " << d.message << "\n";
    return kExitInput;
  }
  RectifiedTableau rt = rectify(t);
  std::cout << emit_tableau_text(rt.tableau);
  ordered_json j;
  j["schema"] = kSchema;
  j["shape"] = rt.shape;
  ordered_json rows = ordered_json::object(), origins = ordered_json::object();
  for (int e = 1; e < static_cast<int>(rt.row_of.size()); ++e) {
    rows[std::to_string(e)] = rt.row_of[e];
    origins[std::to_string(e)] = rt.origin_row_of[e];
  }
  j["row_of"] = rows;
  j["origin_row_of"] = origins;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_stab(const std::string& file) {
  SkewTableau t = load_tableau(file);
  if (auto d = validate_standard(t); !d) {
    std::cerr << "not a standard tableau: " << d.message << "\n";
    return kExitInput;
  }
  if (!has_weakly_decreasing_rows(t)) {
    std::cerr << "row sizes must weakly decrease from top to bottom\n";
    return kExitInput;
  }
  const int r = t.rows();
  StabReport rep = stab_report(t, std::max(1, r) + 2);
  ordered_json j;
  j["schema"] = kSchema;
  j["n"] = t.size();
  j["rows"] = r;
  j["stab"] = rep.stab;
  j["verdicts"] = rep.verdicts;
  j["shapes"] = rep.shapes;
  std::cout << j.dump() << "\n";
  if (t.size() > 0 && (rep.stab == 0 || rep.stab > r)) {
    std::cerr << "stabilization bound violated\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_greene(const std::vector<int>& letters,
               const std::vector<std::string>& word_args, int k, bool witness,
               bool oracle) {
  std::vector<Word> words;
  if (!letters.empty()) words.push_back(letters);
  for (const auto& s : word_args) words.push_back(parse_word(s));
  if (words.empty()) {
    Word w = parse_word(read_input("-"));
    if (w.empty()) {
      std::cerr << "no input word\n";
      return kExitInput;
    }
    words.push_back(std::move(w));
  }
  for (const Word& w : words) {
    std::set<int> seen(w.begin(), w.end());
    if (seen.size() != w.size() || (w.size() && *seen.begin() <= 0)) {
      std::cerr << "letters must be distinct positive integers\n";
      return kExitInput;
    }
  }
  if (oracle && k == 0) k = 1;

  ordered_json j;
  j["schema"] = kSchema;
  if (words.size() > 1) {
    j["words"] = words;
    EllResult res = ell_multi(words);
    j["ell"] = res.value;
    if (witness) j["witness"] = witness_json(res.witness);
  } else {
    const Word& w = words[0];
    j["word"] = w;
    if (k > 0) {
      j["k"] = k;
      if (oracle || witness) {
        EllResult res = ell_multi(std::vector<Word>(k, w));
        j["ell"] = res.value;
        if (witness) j["witness"] = witness_json(res.witness);
      } else {
        j["ell"] = ell_k(w, k);
      }
    } else {
      const RowSizes shape = rsk_shape(w);
      j["shape"] = shape;
      ordered_json ells = ordered_json::array();
      int acc = 0;
      for (int part : shape) ells.push_back(acc += part);
      j["ell"] = ells;
    }
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_lemma_check(const std::string& lemma, int trials, uint64_t seed,
                    int max_letters) {
  ordered_json j;
  j["schema"] = kSchema;
  ordered_json runs = ordered_json::array();
  int failures = 0;
  std::vector<std::string> names;
  if (lemma == "all")
    names = lemma_names();
  else
    names.push_back(lemma);
  for (const auto& name : names) {
    LemmaRunResult res = run_lemma_check(name, trials, seed, max_letters);
    ordered_json rj;
    rj["lemma"] = res.lemma;
    rj["trials"] = res.trials;
    rj["failures"] = res.failures;
    rj["first_counterexample"] =
        res.first_counterexample.empty()
            ? ordered_json(nullptr)
            : ordered_json(res.first_counterexample);
    runs.push_back(rj);
    failures += res.failures;
  }
  j["runs"] = runs;
  j["failures"] = failures;
  std::cout << j.dump() << "\n";
  return failures == 0 ? kExitOk : kExitViolation;
}

std::string join_dashed(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_enumerate(int max_n, int max_rows, int max_inner, int jobs,
                  const std::string& csv_path) {
  EnumBounds bounds{max_n, max_rows, max_inner};
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) {
      std::cerr << "cannot open " << csv_path << "\n";
      return kExitInput;
    }
    csv << "shape,inner,hash,stab,r\n";
  }
  std::function<void(const TableauRecord&)> sink;
  if (csv.is_open())
    sink = [&csv](const TableauRecord& rec) {
      char hash[17];
      std::snprintf(hash, sizeof hash, "%016llx",
                    static_cast<unsigned long long>(tableau_hash(rec.tableau)));
      csv << join_dashed(row_sizes(rec.tableau)) << ','
          << join_dashed(rec.tableau.shape.inner) << ',' << hash << ','
          << rec.stab << ',' << rec.tableau.rows() << "\n";
    };

  TheoremSummary sum = verify_main_theorem(bounds, jobs, true, sink);
  std::cout << "tableaux " << sum.tableau_count << "\n";
  for (int r = 1; r < static_cast<int>(sum.max_stab_by_rows.size()); ++r)
    if (sum.max_stab_by_rows[r] > 0)
      std::cout << "r " << r << ": max stab " << sum.max_stab_by_rows[r]
                << "\n";
  std::cout << "bound violations " << sum.bound_violations << "\n";
  std::cout << "monotonicity violations " << sum.monotonicity_violations
            << "\n";
  std::cout << "increment violations " << sum.increment_violations << "\n";
  const bool bad = sum.bound_violations || sum.monotonicity_violations ||
                   sum.increment_violations;
  return bad ? kExitViolation : kExitOk;
}

int cmd_perm_stats(int n, const std::string& csv_path) {
  if (n < 1 || n > 7) {
    std::cerr << "n must lie in [1, 7]\n";
    return kExitCap;
  }
  std::ostream* out = &std::cout;
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) {
      std::cerr << "cannot open " << csv_path << "\n";
      return kExitInput;
    }
    out = &csv;
  }
  *out << "w,stab,q,ascents\n";
  Permutation w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  long long violations = 0;
  std::map<std::string, int> class_stab;
  do {
    const int s = stab_perm(w);
    const std::string q = rows_to_string(rsk_recording(w));
    auto [it, fresh] = class_stab.emplace(q, s);
    if (!fresh && it->second != s) violations += 1;
    std::string wd;
    for (int v : w) wd += std::to_string(v);
    *out << wd << ',' << s << ",\"" << q << "\"," << ascent_count(w) << "\n";
  } while (std::next_permutation(w.begin(), w.end()));
  if (csv.is_open())
    std::cout << "classes " << class_stab.size() << " violations "
              << violations << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tableau stabilization toolkit"};
  app.require_subcommand(1);

  auto* rect = app.add_subcommand("rect", "rectify a skew tableau");
  std::string rect_file = "-";
  rect->add_option("file", rect_file, "tableau file, '-' for stdin");

  auto* stab = app.add_subcommand("stab", "stabilization report");
  std::string stab_file = "-";
  stab->add_option("file", stab_file, "tableau file, '-' for stdin");

  auto* greene = app.add_subcommand("greene", "Greene invariants of words");
  std::vector<int> letters;
  std::vector<std::string> word_args;
  int k = 0;
  bool witness = false, oracle = false;
  greene->add_option("letters", letters, "word as space-separated letters");
  greene->add_option("--word", word_args,
                     "a word given as one quoted argument; repeat for the "
                     "multi-word invariant");
  greene->add_option("--k", k, "number of disjoint increasing subsequences");
  greene->add_flag("--witness", witness, "emit an optimal family");
  greene->add_flag("--oracle", oracle, "force the exact search");

  auto* lemma = app.add_subcommand("lemma-check", "property suites");
  std::string lemma_name;
  int trials = 1000;
  uint64_t seed = 0;
  int max_letters = 12;
  lemma->add_option("--lemma", lemma_name, "lemma name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        std::vector<std::string> v = lemma_names();
        v.push_back("all");
        return v;
      }()));
  lemma->add_option("--trials", trials, "trials per lemma");
  lemma->add_option("--seed", seed, "random seed");
  lemma->add_option("--max-letters", max_letters, "alphabet bound");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive verification");
  int max_n = 6, max_rows = 3, max_inner = 3, jobs = 1;
  std::string enum_csv;
  enumerate->add_option("--max-n", max_n, "largest tableau size");
  enumerate->add_option("--max-rows", max_rows, "largest row count");
  enumerate->add_option("--max-inner", max_inner, "largest inner offset");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--csv", enum_csv, "per-tableau CSV output path");

  auto* perm = app.add_subcommand("perm-stats", "permutation statistics");
  int perm_n = 4;
  std::string perm_csv;
  perm->add_option("--n", perm_n, "permutation size")->required();
  perm->add_option("--csv", perm_csv, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitInput;
  }

  try {
    if (rect->parsed()) return cmd_rect(rect_file);
    if (stab->parsed()) return cmd_stab(stab_file);
    if (greene->parsed())
      return cmd_greene(letters, word_args, k, witness, oracle);
    if (lemma->parsed())
      return cmd_lemma_check(lemma_name, trials, seed, max_letters);
    if (enumerate->parsed())
      return cmd_enumerate(max_n, max_rows, max_inner, jobs, enum_csv);
    if (perm->parsed()) return cmd_perm_stats(perm_n, perm_csv);
  } catch (const OracleCapError& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  } catch (const StabBoundError& e) {
    std::cerr << e.what() << "\n";
    return kExitViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line) std::cerr << " at line " << e.line << ", token " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
