#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "rcalab/cli.hpp"
#include "rcalab/error.hpp"

namespace {

using rcalab::io::Json;

// Cycle notation such as "(0 1)(3 4)(5 7)" on 2^width points.
rcalab::Perm parse_cycles(const std::string& text, int width) {
  std::vector<std::vector<rcalab::Point>> cycles;
  const std::regex cycle(R"(\(([^()]*)\))");
  std::string rest = std::regex_replace(text, cycle, "");
  if (rest.find_first_not_of(" \t") != std::string::npos) {
    throw rcalab::ParseError("perm", "expected cycle notation like (0 1)(2 3)");
  }
  for (auto it = std::sregex_iterator(text.begin(), text.end(), cycle); it != std::sregex_iterator(); ++it) {
    std::istringstream in((*it)[1].str());
    std::vector<rcalab::Point> points;
    long long p;
    while (in >> p) {
      if (p < 0 || p >= (1LL << width)) throw rcalab::ParseError("perm", "point " + std::to_string(p) + " out of range");
      points.push_back(static_cast<rcalab::Point>(p));
    }
    if (!in.eof()) throw rcalab::ParseError("perm", "cycle entries must be integers");
    if (points.size() > 1) cycles.push_back(std::move(points));
  }
  try {
    return rcalab::Perm::from_cycles(std::size_t{1} << width, cycles);
  } catch (const rcalab::Error& e) {
    throw rcalab::ParseError("perm", e.what());
  }
}

rcalab::Perm load_perm_arg(const std::string& arg, int width) {
  if (!arg.empty() && arg.front() == '(') return parse_cycles(arg, width);
  return rcalab::io::load_perm(rcalab::io::read_file(arg));
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    rcalab::io::write_file(path, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rcalab: finite checks for controlled-permutation constructions on reversible cellular automata"};
  app.require_subcommand(1);

  rcalab::RunConfig config;
  std::string word, report, involution;
  std::vector<std::string> checks;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "run the verification pipeline and write a JSON report");
  verify->add_option("--ell", config.ell, "control word length l");
  verify->add_option("--n", config.n, "width of the involution F");
  verify->add_option("--k", config.k, "family parameter, 2k < l - 4");
  verify->add_option("--word", word, "control word w (default 0^{l-1}1)");
  verify->add_option("--gates", config.gates, "gate set: standard or one-way");
  verify->add_option("--budget", config.budget, "work budget (default from RCALAB_BUDGET)");
  verify->add_option("--seed", config.seed, "random seed");
  verify->add_option("--report", report, "report path (default: stdout summary only)");
  verify->add_option("--checks", checks, "subset of checks to run")->delimiter(',');
  verify->add_option("--involution", involution, "F in cycle notation or a perm JSON file");
  verify->add_option("--samples", config.samples, "random cases per identity check");
  verify->add_option("--certificate-ell", config.certificate_ell, "window length for sample certificates");
  verify->add_flag("--no-timing", no_timing, "omit elapsed times from the report");

  int words_ell = 9, words_k = 2, search_size = 0;
  auto* words = app.add_subcommand("words", "print a mutually unbordered family");
  words->add_option("--ell", words_ell, "word length");
  words->add_option("--k", words_k, "family of 2^k words from the closed-form construction");
  words->add_option("--search", search_size, "search for a family of this size instead");

  std::string target, gates_name = "standard", out_path;
  int width = 4;
  auto* decompose = app.add_subcommand("decompose", "write an even permutation as a sequence of placed gates");
  decompose->add_option("target", target, "perm in cycle notation or a perm JSON file")->required();
  decompose->add_option("--width", width, "number of bits");
  decompose->add_option("--gates", gates_name, "gate set: standard or one-way");
  decompose->add_option("--out", out_path, "output path");

  int search_n = 3, m_test = 6, max_candidates = 2000, max_hits = 1;
  std::uint64_t search_seed = 1;
  auto* search = app.add_subcommand("search-involution", "search for a universal involution of width n");
  search->add_option("--n", search_n, "width");
  search->add_option("--m-test", m_test, "window width for the universality test");
  search->add_option("--max-candidates", max_candidates, "candidate budget");
  search->add_option("--max-hits", max_hits, "stop after this many hits (0: all)");
  search->add_option("--seed", search_seed, "random seed");

  std::string cert_word, cert_perm, cert_f;
  int cert_offset = 0, cert_width = 0;
  std::uint64_t cert_seed = 1;
  auto* certify = app.add_subcommand("certify", "build and verify a generator word for ctrl pi[w]_i");
  certify->add_option("--word", cert_word, "control word w")->required();
  certify->add_option("--perm", cert_perm, "pi in cycle notation or a perm JSON file")->required();
  certify->add_option("--offset", cert_offset, "offset i");
  certify->add_option("--width", cert_width, "bits of pi in cycle notation (default: length of w)");
  certify->add_option("--involution", cert_f, "F in cycle notation on 3 bits (default built-in)");
  certify->add_option("--seed", cert_seed, "random seed");
  certify->add_option("--out", out_path, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      if (!word.empty()) config.word = word;
      if (!report.empty()) config.report_path = report;
      config.checks = checks;
      if (!involution.empty()) config.involution = load_perm_arg(involution, config.n);
      const auto result = rcalab::run(config);
      if (config.report_path) rcalab::io::write_file(*config.report_path, rcalab::to_json(result, !no_timing));
      std::cout << rcalab::summary(result);
      return result.ok() ? 0 : 1;
    }
    if (*words) {
      const auto family = search_size > 0 ? rcalab::search_mutually_unbordered(words_ell, search_size)
                                          : rcalab::formula_family(words_ell, words_k);
      const auto check = rcalab::check_mutually_unbordered(family.words());
      emit(Json{{"ell", words_ell}, {"family", rcalab::io::to_json(family)}, {"mutually_unbordered", bool(check)}},
           "");
      return check ? 0 : 1;
    }
    if (*decompose) {
      const auto gates = rcalab::GateSet::named(gates_name);
      const auto sequence = rcalab::decompose_even_perm(load_perm_arg(target, width), gates);
      emit(rcalab::io::to_json(sequence), out_path);
      return 0;
    }
    if (*search) {
      rcalab::InvolutionSearchOptions options;
      options.seed = search_seed;
      options.max_candidates = static_cast<std::size_t>(max_candidates);
      options.max_hits = static_cast<std::size_t>(max_hits);
      const auto found = rcalab::search_universal_involution(search_n, m_test, options);
      Json hits = Json::array();
      for (const auto& p : found.candidates) hits.push_back(p.to_string());
      emit(Json{{"n", search_n},
                {"m_test", m_test},
                {"examined", found.examined},
                {"population", found.population},
                {"exhaustive", found.exhaustive},
                {"hits", hits}},
           "");
      return found.candidates.empty() ? 1 : 0;
    }
    if (*certify) {
      const rcalab::Word w = rcalab::Word::parse(cert_word);
      rcalab::CertificateParams params{.w = w,
                                       .involution = cert_f.empty() ? rcalab::default_involution()
                                                                    : load_perm_arg(cert_f, 3)};
      params.factorizer.seed = cert_seed;
      const auto cert = rcalab::generator_word_certificate(
          rcalab::make_descriptor(load_perm_arg(cert_perm, cert_width > 0 ? cert_width : w.length()), w, cert_offset), params);
      emit(rcalab::io::to_json(cert), out_path);
      std::cerr << (cert.verified ? "verified" : "not verified") << " (" << cert.policy << ", " << cert.word.size()
                << " letters)\n";
      return cert.verified ? 0 : 1;
    }
  } catch (const rcalab::ConfigInvalid& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return 2;
  } catch (const rcalab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const rcalab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
