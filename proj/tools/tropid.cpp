#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropid/enumeration.hpp"
#include "tropid/identity.hpp"
#include "tropid/io.hpp"
#include "tropid/parallel.hpp"
#include "tropid/stats.hpp"
#include "tropid/version.hpp"

using namespace tropid;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Alphabet is --alphabet when given, else one past the largest letter used.
// Inferred alphabets must have no unused letter below the largest one.
std::vector<Word> parse_words(const std::vector<std::string>& texts, int alphabet) {
  if (texts.empty()) throw UsageError("no words given");
  int m = alphabet;
  if (m == 0) {
    std::vector<bool> used(26, false);
    for (const auto& t : texts) {
      for (char ch : t) {
        if (ch < 'a' || ch > 'z') throw UsageError(std::string("character '") + ch + "' is not a letter a..z");
        used[static_cast<std::size_t>(ch - 'a')] = true;
      }
    }
    for (int i = 0; i < 26; ++i) {
      if (used[static_cast<std::size_t>(i)]) m = i + 1;
    }
    if (m == 0 || std::find(used.begin(), used.begin() + m, false) != used.begin() + m) {
      throw UsageError("letters are not a contiguous range from 'a'; pass --alphabet");
    }
  }
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, m));
  return out;
}

Content content_option(const std::string& text) {
  Content c = parse_content(text);
  if (c.total() < 1) throw UsageError("content must be nonempty");
  return c;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << data;
}

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const Word& w : ws) a.push_back(w.str());
  return a;
}

std::string format_point(PointView p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

void print_signature_text(const UTnSignature& sig) {
  for (const auto& deg : sig.per_degree) {
    for (std::size_t e = 0; e < deg.entries.size(); ++e) {
      std::cout << subword_label(e, deg.m, deg.d) << ":";
      const PointSet& v = deg.entries[e].vertices();
      if (v.empty()) std::cout << " empty";
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << ' ' << format_point(v[i]);
      std::cout << '\n';
    }
  }
}

std::string big(const BigCount& x) { return x.str(); }

json interval_json(const ClassInterval& ci) {
  return {{"min", ci.min_word.str()}, {"max", ci.max_word.str()}, {"size", big(class_size(ci))}};
}

std::function<void(const std::string&)> stderr_progress(bool quiet) {
  if (quiet) return {};
  return [](const std::string& s) { std::cerr << s << std::endl; };
}

void emit_stats(const std::vector<StatRow>& rows, const std::string& experiment, const json& config,
                const std::string& out) {
  const std::string csv = stats_csv(rows);
  if (out.empty()) {
    std::cout << csv;
    return;
  }
  write_file(out, csv);
  write_file(out + ".meta.json", stats_metadata(experiment, config).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropid: semigroup identities of upper triangular tropical matrices"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int alphabet = 0;
  int threads = 0;
  std::string format = "text";
  auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--alphabet", alphabet, "alphabet size (default: inferred)")->check(CLI::Range(1, 26));
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
  };

  // check
  std::vector<std::string> check_words;
  int n = 2;
  int trials = 0;
  std::uint64_t seed = 1;
  auto* check = app.add_subcommand("check", "exit 0 iff the two words form an identity for UT_n");
  check->add_option("words", check_words, "two words")->expected(2)->required();
  check->add_option("--n", n, "matrix size")->check(CLI::Range(1, 64));
  check->add_option("--random-trials", trials, "also evaluate this many random morphisms");
  check->add_option("--seed", seed, "seed for --random-trials");
  add_common(check, {"text", "json"});

  // signature
  std::string sig_word;
  int degree = 0;
  auto* signature = app.add_subcommand("signature", "print the UT_n signature of a word");
  signature->add_option("word", sig_word)->required();
  signature->add_option("--n", n, "matrix size (degrees 1..n-1)")->check(CLI::Range(2, 64));
  signature->add_option("--degree", degree, "print only this degree")->check(CLI::PositiveNumber);
  add_common(signature, {"text", "json"});

  // minmax
  std::string mm_word;
  auto* mm = app.add_subcommand("minmax", "least and greatest words of the UT_2 class of a two-letter word");
  mm->add_option("word", mm_word)->required();
  add_common(mm, {"text", "json"});

  // class
  std::string class_word;
  auto* cls = app.add_subcommand("class", "the full UT_n class of a word");
  cls->add_option("word", class_word)->required();
  cls->add_option("--n", n, "matrix size")->check(CLI::Range(2, 64));
  add_common(cls, {"text", "json"});

  // enumerate
  std::string content_text;
  bool nontrivial = false;
  auto* enumerate = app.add_subcommand("enumerate", "all UT_n classes of a content");
  enumerate->add_option("--content", content_text, "letter counts, e.g. 5,5")->required();
  enumerate->add_option("--n", n, "matrix size")->check(CLI::Range(2, 64));
  enumerate->add_flag("--nontrivial", nontrivial, "only classes with two or more words");
  enumerate->add_option("--threads", threads, "worker threads");
  add_common(enumerate, {"text", "json"});

  // shortest
  int length = 0;
  bool canonical = false, quiet = false;
  std::string checkpoint;
  auto* shortest = app.add_subcommand("shortest", "all two-letter UT_n identities of a given length");
  shortest->add_option("--length", length)->required()->check(CLI::PositiveNumber);
  shortest->add_option("--n", n, "matrix size")->check(CLI::Range(2, 64));
  shortest->add_flag("--canonical", canonical, "one pair per symmetry orbit");
  shortest->add_option("--checkpoint", checkpoint, "resume/record progress in this JSON file");
  shortest->add_option("--threads", threads, "worker threads");
  shortest->add_flag("--quiet", quiet, "no progress on stderr");
  add_common(shortest, {"text", "json"});

  // stats
  auto* stats = app.add_subcommand("stats", "sampling and counting experiments");
  stats->require_subcommand(1);
  std::int64_t samples = 1000;
  std::string out;
  bool exhaustive = false;
  auto* isolated = stats->add_subcommand("isolated", "fraction of locally isolated words");
  isolated->add_option("--content", content_text)->required();
  isolated->add_option("--n", n)->check(CLI::Range(2, 64));
  isolated->add_option("--samples", samples);
  isolated->add_option("--seed", seed);
  isolated->add_flag("--exhaustive", exhaustive, "exact fraction over all words");
  isolated->add_option("--out", out, "CSV file; a .meta.json sidecar is written next to it");
  isolated->add_option("--threads", threads);
  auto* ratio = stats->add_subcommand("ratio", "UT_3 / UT_2 equivalent-neighbour ratios");
  ratio->add_option("--length", length)->required();
  ratio->add_option("--samples", samples);
  ratio->add_option("--seed", seed);
  ratio->add_option("--out", out);
  ratio->add_option("--threads", threads);
  auto* composition = stats->add_subcommand("composition", "isoterms, twins and larger UT_2 classes per content");
  composition->add_option("--length", length)->required();
  composition->add_option("--threads", threads);
  composition->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  auto* largest = stats->add_subcommand("largest", "largest UT_2 class of a two-letter content");
  largest->add_option("--content", content_text)->required();
  largest->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // plot
  std::vector<std::string> plot_words;
  bool no_a = false, no_b = false, chain = false;
  auto* plot = app.add_subcommand("plot", "SVG picture of one or two two-letter words");
  plot->add_option("words", plot_words)->expected(1, 2)->required();
  plot->add_option("--out", out, "SVG file (default: stdout)");
  plot->add_flag("--no-shade-a", no_a);
  plot->add_flag("--no-shade-b", no_b);
  plot->add_flag("--chain", chain, "grey boxes around the vertex chain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    threads = resolve_threads(threads);

    if (*check) {
      auto ws = parse_words(check_words, alphabet);
      const bool same = check_identity(ws[0], ws[1], n);
      json report{{"w", ws[0].str()}, {"v", ws[1].str()}, {"n", n}, {"identity", same}};
      if (trials > 0) {
        auto r = random_morphism_test(ws[0], ws[1], n, trials, seed);
        report["random"] = {{"trials", trials}, {"seed", seed}, {"distinguished", r.distinguished}};
        if (r.distinguished) report["random"]["trial"] = r.trial;
      }
      if (format == "json") {
        report["schema"] = "tropid.check/1";
        std::cout << report.dump(2) << '\n';
      } else {
        std::cout << (same ? "identity" : "not an identity") << '\n';
        if (trials > 0) {
          std::cout << "random morphisms: "
                    << (report["random"]["distinguished"].get<bool>() ? "distinguished" : "no difference found") << '\n';
        }
      }
      return same ? 0 : 1;
    }

    if (*signature) {
      const Word w = parse_words({sig_word}, alphabet)[0];
      UTnSignature sig;
      if (degree > 0) {
        sig.n = degree + 1;
        sig.per_degree.push_back(degree_signature(w, degree));
      } else {
        sig = utn_signature(w, n);
      }
      if (format == "json") std::cout << signature_json(sig).dump(2) << '\n';
      else print_signature_text(sig);
      return 0;
    }

    if (*mm) {
      const Word w = parse_words({mm_word}, alphabet == 0 ? 2 : alphabet)[0];
      const ClassInterval ci = minmax(w);
      if (format == "json") {
        json j = interval_json(ci);
        j["schema"] = "tropid.minmax/1";
        j["word"] = w.str();
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "min  " << ci.min_word.str() << "\nmax  " << ci.max_word.str() << "\nsize " << big(class_size(ci)) << '\n';
      }
      return 0;
    }

    if (*cls) {
      const Word w = parse_words({class_word}, alphabet)[0];
      const auto words = equivalence_class_n(w, n);
      if (format == "json") {
        std::cout << json{{"schema", "tropid.class/1"}, {"word", w.str()}, {"n", n}, {"class", words_json(words)}}.dump(2)
                  << '\n';
      } else {
        for (const Word& v : words) std::cout << v.str() << '\n';
      }
      return 0;
    }

    if (*enumerate) {
      const Content c = content_option(content_text);
      json classes = json::array();
      auto emit = [&](const std::vector<Word>& words) {
        if (nontrivial && words.size() < 2) return;
        if (format == "json") classes.push_back(words_json(words));
        else {
          for (std::size_t i = 0; i < words.size(); ++i) std::cout << (i ? " " : "") << words[i].str();
          std::cout << '\n';
        }
      };
      if (c.alphabet_size() == 2 && n == 2) {
        for (const auto& ci : list_classes_2(c[0], c[1])) {
          if (nontrivial && ci.min_word == ci.max_word) continue;
          emit(interval_words(ci));
        }
      } else {
        for (const auto& words : list_classes_general(c, n, threads)) emit(words);
      }
      if (format == "json") {
        std::cout << json{{"schema", "tropid.classes/1"}, {"content", c.str()}, {"n", n}, {"classes", classes}}.dump(2)
                  << '\n';
      }
      return 0;
    }

    if (*shortest) {
      SearchOptions opt;
      opt.canonical_only = canonical;
      opt.threads = threads;
      opt.checkpoint = checkpoint;
      opt.progress = stderr_progress(quiet);
      const auto found = shortest_identity_search(length, n, opt);
      if (format == "json") {
        json pairs = json::array();
        for (const auto& r : found) pairs.push_back({{"w", r.w.str()}, {"v", r.v.str()}, {"canonical", r.canonical}});
        std::cout << json{{"schema", "tropid.identities/1"}, {"length", length}, {"n", n}, {"identities", pairs}}.dump(2)
                  << '\n';
      } else {
        for (const auto& r : found) std::cout << r.w.str() << ' ' << r.v.str() << '\n';
        std::cerr << found.size() << " identities" << std::endl;
      }
      return 0;
    }

    if (*isolated) {
      const Content c = content_option(content_text);
      if (!exhaustive && samples < 1) throw UsageError("--samples must be positive");
      StatRow row = exhaustive ? isolated_fraction_exhaustive(c, n, threads) : isolated_fraction(c, n, samples, seed, threads);
      json config{{"content", c.str()}, {"n", n}, {"exhaustive", exhaustive}, {"threads", threads}};
      if (!exhaustive) config.update({{"samples", samples}, {"seed", seed}});
      emit_stats({row}, "isolated", config, out);
      return 0;
    }

    if (*ratio) {
      if (samples < 1) throw UsageError("--samples must be positive");
      auto r = neighbor_ratio_ut3(length, samples, seed, threads);
      std::ostringstream csv;
      csv << "stream,ut3,ut2,ratio\n";
      for (const auto& x : r.ratios) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(x.ut3) / x.ut2);
        csv << x.stream << ',' << x.ut3 << ',' << x.ut2 << ',' << buf << '\n';
      }
      json config{{"length", length}, {"samples", samples}, {"seed", seed}, {"threads", threads},
                  {"skipped_no_ut2_neighbour", r.skipped}};
      if (!r.ratios.empty()) config["median"] = median_ratio(r);
      if (out.empty()) std::cout << csv.str();
      else {
        write_file(out, csv.str());
        write_file(out + ".meta.json", stats_metadata("ratio", config).dump(2) + "\n");
      }
      return 0;
    }

    if (*composition) {
      const auto rows = class_composition(length, threads);
      if (format == "json") {
        json a = json::array();
        for (const auto& r : rows) {
          a.push_back({{"la", r.la}, {"lb", r.lb}, {"isoterms", r.isoterms}, {"twins", r.twins}, {"larger", r.larger},
                       {"classes", r.classes}, {"words", big(r.words)}});
        }
        std::cout << json{{"schema", "tropid.composition/1"}, {"length", length}, {"rows", a}}.dump(2) << '\n';
      } else {
        const char* sep = format == "csv" ? "," : "\t";
        std::cout << "la" << sep << "lb" << sep << "isoterms" << sep << "twins" << sep << "larger" << sep << "classes" << sep
                  << "words\n";
        for (const auto& r : rows) {
          std::cout << r.la << sep << r.lb << sep << r.isoterms << sep << r.twins << sep << r.larger << sep << r.classes
                    << sep << big(r.words) << '\n';
        }
      }
      return 0;
    }

    if (*largest) {
      const Content c = content_option(content_text);
      if (c.alphabet_size() != 2) throw UsageError("largest needs a two-letter content");
      const auto best = largest_class(c[0], c[1]);
      if (format == "json") {
        json j = interval_json(best.interval);
        j["schema"] = "tropid.largest/1";
        j["content"] = c.str();
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "min  " << best.interval.min_word.str() << "\nmax  " << best.interval.max_word.str() << "\nsize "
                  << big(best.size) << '\n';
      }
      return 0;
    }

    if (*plot) {
      const auto ws = parse_words(plot_words, alphabet == 0 ? 2 : alphabet);
      if (ws[0].alphabet_size() != 2) throw UsageError("plot needs two-letter words");
      const std::string svg = plot_svg(ws, !no_a, !no_b, chain);
      if (out.empty()) std::cout << svg;
      else write_file(out, svg);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
