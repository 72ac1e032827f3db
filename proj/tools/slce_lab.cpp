// slce-lab: command-line front end for sequence generation, correlation
// spectra, multiplier-group determination, family construction, and the
// full verification suite.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
// failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "slce/slce.hpp"

namespace {

using json = nlohmann::json;
using slce::gf::FieldPtr;

// Field construction with an optional descriptor cache directory taken
// from SLCE_LAB_CACHE (log tables are deterministic, so caching the
// descriptor is enough to pin the field).
FieldPtr make_field_cached(int64_t p, int d) {
  const char* dir = std::getenv("SLCE_LAB_CACHE");
  if (dir == nullptr || *dir == '\0') return slce::gf::make_field(p, d);
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  path /= "field_" + std::to_string(p) + "_" + std::to_string(d) + ".json";
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    json j;
    in >> j;
    return slce::io::field_from_json(j);
  }
  auto f = slce::gf::make_field(p, d);
  std::ofstream out(path);
  out << slce::io::field_to_json(f).dump(2) << "\n";
  return f;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    out << text;
  }
}

std::string terms_joined(const slce::seq::PeriodicSequence& s) {
  std::ostringstream os;
  for (size_t i = 0; i < s.terms.size(); ++i) os << (i ? "," : "") << s.terms[i];
  return os.str();
}

int cmd_gen(int64_t p, int d, int64_t M, const std::string& kind,
            const std::string& format, const std::string& output) {
  auto field = make_field_cached(p, d);
  slce::seq::PeriodicSequence s;
  if (kind == "sidelnikov" || kind == "slce") {
    s = slce::seq::gen_sidelnikov(field, M);
  } else if (kind == "mseq") {
    s = slce::seq::gen_mseq(field, field->one());
  } else {
    std::cerr << "error: unknown kind '" << kind << "'\n";
    return 2;
  }
  if (format == "json") {
    emit(slce::io::sequence_to_json(s, field).dump(2) + "\n", output);
  } else if (format == "csv") {
    emit(slce::io::sequence_to_csv(s), output);
  } else {
    std::ostringstream os;
    os << "p=" << p << " d=" << d << " M=" << s.alphabet
       << " alpha=" << field->alpha().code << " terms=" << terms_joined(s) << "\n";
    emit(os.str(), output);
  }
  return 0;
}

int cmd_corr(int64_t p, int d, int64_t M, bool auto_corr, int64_t t1, int64_t t2,
             const std::string& format, const std::string& output) {
  auto field = make_field_cached(p, d);
  auto s = slce::seq::gen_sidelnikov(field, M);
  int64_t v = field->q() - 1;
  slce::seq::PeriodicSequence a = s, b = s;
  if (!auto_corr) {
    for (int64_t t : {t1, t2}) {
      if (std::gcd(slce::mod_floor(t, v), v) != 1)
        std::cerr << "warning: decimation " << t
                  << " is not a unit mod " << v
                  << "; no multiplier semantics apply\n";
    }
    a = slce::seq::decimate(s, t1);
    b = slce::seq::decimate(s, t2);
  }
  auto spec = slce::corr::correlation(a, b);
  std::vector<slce::corr::BoundCheck> checks;
  if (!auto_corr)
    checks.push_back(
        slce::corr::check_bound_pair(a, b, slce::corr::BoundKind::FamilyM, field->q()));
  if (format == "json") {
    emit(slce::io::spectrum_to_json(spec, checks).dump(2) + "\n", output);
  } else if (format == "tsv") {
    std::ostringstream os;
    os << "tau\tre\tim\n";
    for (int64_t tau = 0; tau < spec.period(); ++tau)
      os << tau << '\t' << spec.values[tau].real() << '\t'
         << spec.values[tau].imag() << '\n';
    emit(os.str(), output);
  } else {
    std::ostringstream os;
    os << "values=";
    if (!spec.int_values.empty()) {
      for (size_t i = 0; i < spec.int_values.size(); ++i)
        os << (i ? "," : "") << spec.int_values[i];
    } else {
      os << "(complex; use --format json)";
    }
    os << "\nmax_offphase=" << spec.max_offphase << "\n";
    for (const auto& c : checks)
      os << "bound " << slce::io::bound_kind_name(c.kind) << "=" << c.bound_value
         << " max=" << c.max_observed << " holds=" << (c.holds ? "yes" : "no")
         << "\n";
    emit(os.str(), output);
  }
  return 0;
}

int cmd_multipliers(int64_t p, int d, const std::string& mode,
                    const std::string& format, const std::string& output) {
  if (mode == "pipeline" && d != 1) {
    std::cerr << "error: --mode pipeline requires --d 1\n";
    return 2;
  }
  json j;
  std::string text;
  if (mode == "brute") {
    auto field = make_field_cached(p, d);
    auto rep = slce::ads::multiplier_group_brute(slce::ads::slce_set(field));
    j = slce::io::multiplier_report_to_json(rep);
    std::ostringstream os;
    os << "group={";
    for (size_t i = 0; i < rep.group_elements.size(); ++i)
      os << (i ? "," : "") << rep.group_elements[i];
    os << "} strong={";
    for (size_t i = 0; i < rep.strong_group_elements.size(); ++i)
      os << (i ? "," : "") << rep.strong_group_elements[i];
    os << "}\n";
    text = os.str();
  } else {
    auto verdict = slce::mult::prove_trivial(p);
    j = slce::io::verdict_to_json(verdict);
    std::ostringstream os;
    os << "verdict=" << (verdict.trivial ? "trivial" : "nontrivial") << "\n";
    for (const auto& c : verdict.per_candidate)
      os << "t=" << c.t << " " << c.method << "\n";
    text = os.str();
  }
  if (format == "json")
    emit(j.dump(2) + "\n", output);
  else
    emit(text, output);
  return 0;
}

int cmd_family(int64_t p, int d, int64_t M, const std::string& kind,
               const std::string& format, const std::string& output) {
  auto field = make_field_cached(p, d);
  std::vector<slce::seq::PeriodicSequence> fam;
  if (kind == "L") {
    fam = slce::seq::build_family_L(field, M);
  } else if (kind == "M") {
    fam = slce::seq::build_family_M(field, M);
  } else if (kind == "F1") {
    fam = slce::seq::build_family_F1(field);
  } else {
    std::cerr << "error: unknown family kind '" << kind << "'\n";
    return 2;
  }
  if (format == "json") {
    json j = json::array();
    for (const auto& s : fam) j.push_back(slce::io::sequence_to_json(s, field));
    emit(json{{"kind", kind}, {"size", fam.size()}, {"members", std::move(j)}}.dump(2) +
             "\n",
         output);
  } else if (format == "csv") {
    std::ostringstream os;
    for (const auto& s : fam) os << slce::io::sequence_to_csv(s);
    emit(os.str(), output);
  } else {
    std::ostringstream os;
    os << "kind=" << kind << " size=" << fam.size() << "\n";
    emit(os.str(), output);
  }
  return 0;
}

int cmd_verify(const slce::verify::VerifyOptions& opts,
               const std::vector<std::string>& sections, const std::string& format,
               const std::string& output) {
  auto results = slce::verify::run_all(opts, sections);
  bool all_pass = true;
  if (format == "json") {
    json j = json::array();
    for (const auto& r : results) {
      j.push_back(json{
          {"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    emit(j.dump(2) + "\n", output);
  } else {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  "
         << r.detail << "\n";
      all_pass = all_pass && r.pass;
    }
    emit(os.str(), output);
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slce-lab: finite-field sequence families, correlation spectra, "
               "and multiplier-group verification"};
  app.require_subcommand(1);

  int64_t p = 3, M = 2, t1 = 1, t2 = 1;
  int d = 1;
  std::string format = "text", output, kind = "slce", mode = "brute";
  bool auto_corr = false, mutate = false;
  std::vector<std::string> sections;
  slce::verify::VerifyOptions vopts;

  auto* gen = app.add_subcommand("gen", "generate a sequence");
  gen->add_option("--p", p, "characteristic")->required();
  gen->add_option("--d", d, "extension degree");
  gen->add_option("--M", M, "alphabet size (must divide q-1)");
  gen->add_option("--kind", kind, "slce | sidelnikov | mseq");
  gen->add_option("--format", format, "json | csv | text");
  gen->add_option("--output", output, "output file (default stdout)");

  auto* corr = app.add_subcommand("corr", "correlation spectrum");
  corr->add_option("--p", p, "characteristic")->required();
  corr->add_option("--d", d, "extension degree");
  corr->add_option("--M", M, "alphabet size");
  auto* aflag = corr->add_flag("--auto", auto_corr, "autocorrelation");
  auto* o1 = corr->add_option("--t1", t1, "first decimation");
  auto* o2 = corr->add_option("--t2", t2, "second decimation");
  aflag->excludes(o1)->excludes(o2);
  corr->add_option("--format", format, "json | tsv | text");
  corr->add_option("--output", output, "output file");

  auto* mults = app.add_subcommand("multipliers", "multiplier group");
  mults->add_option("--p", p, "characteristic")->required();
  mults->add_option("--d", d, "extension degree");
  mults->add_option("--mode", mode, "brute | pipeline");
  mults->add_option("--format", format, "json | text");
  mults->add_option("--output", output, "output file");

  auto* fam = app.add_subcommand("family", "build a sequence family");
  fam->add_option("--p", p, "characteristic")->required();
  fam->add_option("--d", d, "extension degree");
  fam->add_option("--M", M, "alphabet size");
  fam->add_option("--kind", kind, "L | M | F1")->required();
  fam->add_option("--format", format, "json | csv | text");
  fam->add_option("--output", output, "output file");

  auto* ver = app.add_subcommand("verify-paper", "run the verification suite");
  ver->add_option("--max-q", vopts.max_q, "prime-power sweep bound");
  ver->add_option("--max-p", vopts.max_p, "main-theorem prime bound");
  ver->add_option("--family-max-q", vopts.family_max_q, "family sweep bound");
  ver->add_option("--f1-max-p", vopts.f1_max_p, "F1 sweep bound");
  ver->add_option("--jobs", vopts.jobs, "worker count (output-invariant)");
  ver->add_option("--sections", sections, "check names to run (default all)");
  ver->add_flag("--mutate", mutate, "self-test: corrupt one bit, expect failure");
  ver->add_option("--format", format, "json | text");
  ver->add_option("--output", output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(p, d, M, kind, format, output);
    if (corr->parsed()) return cmd_corr(p, d, M, auto_corr, t1, t2, format, output);
    if (mults->parsed()) return cmd_multipliers(p, d, mode, format, output);
    if (fam->parsed()) return cmd_family(p, d, M, kind, format, output);
    if (ver->parsed()) {
      vopts.mutate = mutate;
      return cmd_verify(vopts, sections, format == "text" ? "text" : format, output);
    }
  } catch (const slce::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
