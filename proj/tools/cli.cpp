#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "nht/classify.hpp"
#include "nht/construct.hpp"
#include "nht/io.hpp"
#include "nht/metrics.hpp"
#include "nht/search.hpp"

namespace nht::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Auto, Matrix, Digraph6, Hadamard };

const std::map<std::string, Format> kFormats = {
    {"auto", Format::Auto},
    {"matrix", Format::Matrix},
    {"digraph6", Format::Digraph6},
    {"hadamard", Format::Hadamard},
};

struct IoFlags {
  std::string in_path;
  std::string out_path;
  Format from = Format::Auto;
  Format to = Format::Matrix;
};

std::string slurp(const IoFlags& io, std::istream& in) {
  if (io.in_path.empty() || io.in_path == "-") return read_all(in);
  std::ifstream file(io.in_path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + io.in_path);
  return read_all(file);
}

Tournament read_tournament(const IoFlags& io, std::istream& in) {
  const std::string text = slurp(io, in);
  Format from = io.from;
  if (from == Format::Auto) from = !text.empty() && text[0] == '&' ? Format::Digraph6 : Format::Matrix;
  switch (from) {
    case Format::Digraph6: return parse_digraph6(text);
    case Format::Hadamard: return skew_hadamard_to_tournament(parse_hadamard_text(text));
    default: return parse_matrix_text(text);
  }
}

void emit(const IoFlags& io, const std::string& text, std::ostream& out) {
  if (io.out_path.empty() || io.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(io.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + io.out_path);
  file << text;
}

std::string render(const Tournament& t, Format to) {
  switch (to) {
    case Format::Digraph6: return to_digraph6(t);
    case Format::Hadamard: return to_hadamard_text(tournament_to_skew_hadamard(t));
    default: return to_matrix_text(t);
  }
}

void add_io(CLI::App* cmd, IoFlags& io, bool input, bool output) {
  if (input) {
    cmd->add_option("--in", io.in_path, "Input file (default: standard input)");
    cmd->add_option("--from", io.from, "Input format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }
  if (output) {
    cmd->add_option("-o,--out", io.out_path, "Output file (default: standard output)");
    cmd->add_option("--to", io.to, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }
}

std::string histogram_text(const LambdaHistogram& h) {
  std::string s;
  for (const auto& [lambda, count] : h) {
    if (!s.empty()) s += ' ';
    s += std::to_string(lambda) + ":" + std::to_string(count);
  }
  return s.empty() ? "-" : s;
}

nlohmann::json histogram_json(const LambdaHistogram& h) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [lambda, count] : h) j[std::to_string(lambda)] = count;
  return j;
}

std::string_view witness_kind(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Residue: return "residue";
    case Witness::Kind::Vertex: return "vertex";
    case Witness::Kind::Pair: return "pair";
    case Witness::Kind::Arc: return "arc";
    case Witness::Kind::Count: return "count";
  }
  return "residue";
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json j = {{"holds", v.holds}};
  if (v.witness) {
    const Witness& w = *v.witness;
    j["witness"] = {{"kind", witness_kind(w.kind)}, {"detail", describe(w)}, {"measured", w.measured}};
    if (w.u >= 0) j["witness"]["u"] = w.u;
    if (w.v >= 0) j["witness"]["v"] = w.v;
  }
  return j;
}

enum class Check { Auto, Regular, AlmostRegular, Homogeneous, Nh, Nh4t1, Nh4t2, Nh4t };

struct NamedVerdict {
  std::string key;
  const Verdict* verdict;
};

NamedVerdict selected(const ClassificationReport& r, Check check) {
  if (check == Check::Auto || check == Check::Nh) {
    switch (r.order % 4) {
      case 0: return {"nh_4t", &r.nh_4t};
      case 1: return {"nh_4t1", &r.nh_4t1};
      case 2: return {"nh_4t2", &r.nh_4t2};
      default: return {"homogeneous", &r.homogeneous};
    }
  }
  switch (check) {
    case Check::Regular: return {"regular", &r.regular};
    case Check::AlmostRegular: return {"almost_regular", &r.almost_regular};
    case Check::Homogeneous: return {"homogeneous", &r.homogeneous};
    case Check::Nh4t1: return {"nh_4t1", &r.nh_4t1};
    case Check::Nh4t2: return {"nh_4t2", &r.nh_4t2};
    default: return {"nh_4t", &r.nh_4t};
  }
}

std::string verdict_headline(const ClassificationReport& r, const NamedVerdict& nv) {
  std::string name;
  if (nv.key == "regular") name = "regular";
  if (nv.key == "almost_regular") name = "almost regular";
  if (nv.key == "homogeneous") name = "homogeneous";
  if (nv.key == "nh_4t1") name = "near-homogeneous (4t+1)";
  if (nv.key == "nh_4t2") name = "near-homogeneous (4t+2)";
  if (nv.key == "nh_4t") name = "near-homogeneous (4t)";
  const bool with_t = nv.key != "regular" && nv.key != "almost_regular";
  std::string line = nv.verdict->holds ? name : "not " + name;
  if (with_t) line += ", t=" + std::to_string(r.t);
  if (nv.verdict->holds && nv.key == "homogeneous") {
    line += ", lambda=" + std::to_string(r.t + 1);
  }
  if (!nv.verdict->holds && nv.verdict->witness) line += ": " + describe(*nv.verdict->witness);
  return line;
}

std::string text_report(const ClassificationReport& r, const NamedVerdict& nv) {
  std::ostringstream s;
  s << verdict_headline(r, nv) << '\n';
  s << "order: " << r.order << " (t=" << r.t << ")\n";
  const std::pair<const char*, const Verdict*> rows[] = {
      {"regular", &r.regular},         {"almost_regular", &r.almost_regular},
      {"homogeneous", &r.homogeneous}, {"doubly_regular", &r.doubly_regular},
      {"nh_4t1", &r.nh_4t1},           {"nh_4t2", &r.nh_4t2},
      {"nh_4t", &r.nh_4t},
  };
  for (const auto& [key, v] : rows) {
    s << key << ": " << (v->holds ? "yes" : "no");
    if (v->witness) s << " (" << describe(*v->witness) << ")";
    s << '\n';
  }
  s << "lambda: " << histogram_text(r.lambdas) << '\n';
  if (r.class_lambdas) {
    for (ArcClass c : kArcClasses) {
      std::int64_t size = 0;
      for (const auto& [lambda, count] : (*r.class_lambdas)[c]) size += count;
      s << "class " << to_char(c) << " (" << size << " arcs): " << histogram_text((*r.class_lambdas)[c]) << '\n';
    }
  }
  s << "two_paths: total=" << r.two_paths.total;
  if (r.two_paths.per_class_sums) {
    const auto& p = *r.two_paths.per_class_sums;
    s << " class_sum=" << r.two_paths.class_sum() << " (A=" << p[0] << " B=" << p[1] << " C=" << p[2]
      << " D=" << p[3] << ")";
  }
  s << '\n';
  if (r.cd_balance) s << "cd_balance: C=" << r.cd_balance->sum_c << " D=" << r.cd_balance->sum_d << '\n';
  if (r.class_lambdas) {
    s << "note: class D holds C(k,2) arcs; two-path class weights A,B: 2l-1, C: 2l, D: 2l-2\n";
  }
  return s.str();
}

nlohmann::json json_report(const ClassificationReport& r, const NamedVerdict& nv) {
  nlohmann::json j;
  j["order"] = r.order;
  j["t"] = r.t;
  j["check"] = nv.key;
  j["holds"] = nv.verdict->holds;
  j["summary"] = verdict_headline(r, nv);
  j["verdicts"] = {
      {"regular", verdict_json(r.regular)},
      {"almost_regular", verdict_json(r.almost_regular)},
      {"homogeneous", verdict_json(r.homogeneous)},
      {"doubly_regular", verdict_json(r.doubly_regular)},
      {"nh_4t1", verdict_json(r.nh_4t1)},
      {"nh_4t2", verdict_json(r.nh_4t2)},
      {"nh_4t", verdict_json(r.nh_4t)},
  };
  j["lambda_histogram"] = histogram_json(r.lambdas);
  if (r.class_lambdas) {
    for (ArcClass c : kArcClasses) {
      j["class_lambda_histograms"][std::string(1, to_char(c))] = histogram_json((*r.class_lambdas)[c]);
    }
  }
  j["two_paths"]["total"] = r.two_paths.total;
  if (r.two_paths.per_class_sums) {
    const auto& p = *r.two_paths.per_class_sums;
    j["two_paths"]["per_class"] = {{"A", p[0]}, {"B", p[1]}, {"C", p[2]}, {"D", p[3]}};
    j["two_paths"]["class_sum"] = r.two_paths.class_sum();
    j["two_paths"]["class_d_weight"] = "C(k,2)";
  }
  if (r.cd_balance) j["cd_balance"] = {{"C", r.cd_balance->sum_c}, {"D", r.cd_balance->sum_d}};
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, classify and search homogeneous and near-homogeneous tournaments", "nht"};
  app.require_subcommand(1, 1);

  // gen
  IoFlags gen_io;
  std::string gen_kind;
  int gen_n = 0;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a tournament");
  gen->add_option("kind", gen_kind, "paley | transitive | rotational | random | almost-regular")
      ->required()
      ->check(CLI::IsMember({"paley", "transitive", "rotational", "random", "almost-regular"}));
  gen->add_option("n", gen_n, "Order (the prime p for paley)")->required();
  gen->add_option("--seed", gen_seed, "Seed for the random kinds");
  add_io(gen, gen_io, false, true);

  // construct
  IoFlags con_io;
  std::string con_kind;
  std::optional<int> con_p;
  int con_x = 0;
  bool con_labels = false;
  auto* con = app.add_subcommand("construct", "Apply a construction to the input tournament");
  con->add_option("construction", con_kind, "paley | h | delete | augment")
      ->required()
      ->check(CLI::IsMember({"paley", "h", "delete", "augment"}));
  con->add_option("p", con_p, "Prime for the paley construction");
  con->add_option("-x,--x", con_x, "Chosen vertex of the input tournament");
  con->add_flag("--labels", con_labels, "Print the block labelling of the h construction to stderr");
  add_io(con, con_io, true, true);

  // verify
  IoFlags ver_io;
  bool v_regular = false, v_almost = false, v_homog = false, v_nh = false, v_4t1 = false, v_4t2 = false,
       v_4t = false, v_json = false;
  auto* ver = app.add_subcommand("verify", "Classify the input tournament; exit 1 if the check fails");
  ver->add_flag("--regular", v_regular, "Check regularity");
  ver->add_flag("--almost-regular", v_almost, "Check almost regularity");
  ver->add_flag("--homogeneous", v_homog, "Check homogeneity (order 4t+3)");
  ver->add_flag("--nh", v_nh, "Check the near-homogeneity definition matching n mod 4");
  ver->add_flag("--nh-4t1", v_4t1, "Check near-homogeneity of order 4t+1");
  ver->add_flag("--nh-4t2", v_4t2, "Check near-homogeneity of order 4t+2");
  ver->add_flag("--nh-4t", v_4t, "Check near-homogeneity of order 4t");
  ver->add_flag("--json", v_json, "Emit the report as JSON");
  add_io(ver, ver_io, true, false);

  // search
  SearchSpec sspec;
  SearchOptions sopt;
  std::string s_filter = "none";
  std::optional<std::size_t> s_limit;
  bool s_no_prune = false, s_summary_only = false;
  std::string s_out_dir;
  IoFlags s_io;
  auto* srch = app.add_subcommand("search", "Exhaustively enumerate tournaments of a given order");
  srch->add_option("-n,--order", sspec.order, "Order")->required();
  srch->add_option("--filter", s_filter, "none | almost_regular | nh_4t1 | nh_4t2 | nh_4t | homogeneous")
      ->check(CLI::IsMember({"none", "almost_regular", "nh_4t1", "nh_4t2", "nh_4t", "homogeneous"}));
  srch->add_flag("--dedup", sspec.dedup, "Keep one canonical representative per isomorphism class");
  srch->add_option("--limit", s_limit, "Stop after this many results");
  srch->add_option("-j,--jobs", sopt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  srch->add_flag("--no-prune", s_no_prune, "Disable branch pruning");
  srch->add_option("--max-order", sopt.max_order, "Raise the exhaustive order bound (best effort)");
  srch->add_option("--checkpoint", sopt.checkpoint_path, "Resumable checkpoint file");
  srch->add_option("--out-dir", s_out_dir, "Write one matrix file per result into this directory");
  srch->add_flag("--summary-only", s_summary_only, "Print only the summary line");
  add_io(srch, s_io, false, true);

  // convert
  IoFlags conv_io;
  auto* conv = app.add_subcommand("convert", "Convert between matrix, digraph6 and skew Hadamard text");
  add_io(conv, conv_io, true, true);

  // canon
  IoFlags canon_io;
  bool canon_matrix = false;
  auto* canon = app.add_subcommand("canon", "Print the canonical form of the input tournament");
  canon->add_flag("--matrix", canon_matrix, "Also print the canonical representative");
  add_io(canon, canon_io, true, false);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("nht");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "nht: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*gen) {
      Tournament t = [&] {
        std::mt19937_64 rng(gen_seed);
        if (gen_kind == "paley") return paley_tournament(gen_n);
        if (gen_kind == "transitive") return transitive_tournament(gen_n);
        if (gen_kind == "rotational") return rotational_tournament(gen_n);
        if (gen_kind == "random") return random_tournament(gen_n, rng);
        return random_almost_regular(gen_n, rng);
      }();
      emit(gen_io, render(t, gen_io.to), out);
      return kOk;
    }

    if (*con) {
      if (con_kind == "paley") {
        if (!con_p) throw UsageError("construct paley needs a prime");
        emit(con_io, render(paley_tournament(*con_p), con_io.to), out);
        return kOk;
      }
      if (con_p) throw UsageError("only construct paley takes a positional prime");
      const Tournament input = read_tournament(con_io, in);
      if (con_kind == "h") {
        HConstruction h = h_construction(input, con_x);
        if (con_labels) {
          static constexpr const char* kNames[] = {"O(x)", "I(x)", "O(x*)", "I(x*)", "z"};
          for (std::size_t i = 0; i < h.labeling.origin.size(); ++i) {
            const auto& o = h.labeling.origin[i];
            err << i << ' ' << kNames[static_cast<int>(o.block)];
            if (o.block != HBlock::Z) err << ' ' << o.source;
            err << '\n';
          }
        }
        emit(con_io, render(h.tournament, con_io.to), out);
      } else if (con_kind == "delete") {
        emit(con_io, render(delete_vertex_construction(input, con_x), con_io.to), out);
      } else {
        emit(con_io, render(augment_vertex_construction(input, con_x), con_io.to), out);
      }
      return kOk;
    }

    if (*ver) {
      const int chosen = v_regular + v_almost + v_homog + v_nh + v_4t1 + v_4t2 + v_4t;
      if (chosen > 1) throw UsageError("verify takes at most one check flag");
      Check check = Check::Auto;
      if (v_regular) check = Check::Regular;
      if (v_almost) check = Check::AlmostRegular;
      if (v_homog) check = Check::Homogeneous;
      if (v_nh) check = Check::Nh;
      if (v_4t1) check = Check::Nh4t1;
      if (v_4t2) check = Check::Nh4t2;
      if (v_4t) check = Check::Nh4t;
      const Tournament t = read_tournament(ver_io, in);
      const ClassificationReport report = classify(t);
      const NamedVerdict nv = selected(report, check);
      if (v_json) {
        out << json_report(report, nv).dump(2) << '\n';
      } else {
        out << text_report(report, nv);
      }
      return nv.verdict->holds ? kOk : kVerdictFalse;
    }

    if (*srch) {
      sspec.filter = *parse_filter(s_filter);
      sspec.limit = s_limit;
      sopt.prune = !s_no_prune;
      const SearchResult result = enumerate(sspec, sopt);
      if (!s_summary_only) {
        if (!s_out_dir.empty()) {
          std::filesystem::create_directories(s_out_dir);
          for (std::size_t i = 0; i < result.tournaments.size(); ++i) {
            std::ostringstream name;
            name << "n" << sspec.order << "_" << to_string(sspec.filter) << "_" << std::setw(6)
                 << std::setfill('0') << i << ".mat";
            std::ofstream file(std::filesystem::path(s_out_dir) / name.str());
            if (!file) throw UsageError("cannot write into " + s_out_dir);
            file << render(result.tournaments[i], s_io.to);
          }
        } else {
          std::string text;
          for (std::size_t i = 0; i < result.tournaments.size(); ++i) {
            if (i > 0 && s_io.to != Format::Digraph6) text += '\n';
            text += render(result.tournaments[i], s_io.to);
          }
          emit(s_io, text, out);
        }
      }
      (s_summary_only ? out : err) << summary_line(sspec, result.stats) << '\n';
      return kOk;
    }

    if (*conv) {
      if (conv_io.from == Format::Hadamard || conv_io.to == Format::Hadamard) {
        if (conv_io.from == Format::Hadamard && conv_io.to == Format::Hadamard) {
          emit(conv_io, to_hadamard_text(parse_hadamard_text(slurp(conv_io, in))), out);
          return kOk;
        }
      }
      emit(conv_io, render(read_tournament(conv_io, in), conv_io.to), out);
      return kOk;
    }

    if (*canon) {
      const Canonicalized c = canonicalize(read_tournament(canon_io, in));
      out << to_hex(c.form) << '\n';
      if (canon_matrix) out << to_matrix_text(c.representative);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "nht: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "nht: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nht::cli
