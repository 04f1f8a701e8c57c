// seaweed: index, contact and stability analysis of seaweed Lie algebras.
//
// Subcommands: index, contact, stable, basis, classify, verify, meander.
// Every flag can also be set through a SEAWEED_* environment variable; the
// command line wins when both are given.

#include "CLI11.hpp"

#include "seaweed/classify.hpp"
#include "seaweed/contact.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/report.hpp"
#include "seaweed/serialize.hpp"
#include "seaweed/verify.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitNotFound = 4;

struct AlgebraArgs {
  std::string family = "GL";
  std::size_t n = 0;
  std::string top;
  std::string bot;
  std::string pair;
  std::string algebra_file;
};

struct SearchArgs {
  std::uint64_t seed = 0;
  std::size_t attempts = 64;
  std::uint64_t bound = 1'000'000;
  std::size_t trials = 3;
  std::string format = "json";
  std::string out;
};

void add_algebra_options(CLI::App* cmd, AlgebraArgs& a) {
  cmd->add_option("--family", a.family, "GL, SL, SP or SO")->envname("SEAWEED_FAMILY")->capture_default_str();
  cmd->add_option("--n", a.n, "rank parameter (GL/SL: inferred from the compositions)")->envname("SEAWEED_N");
  cmd->add_option("--top", a.top, "top composition, e.g. 2,1 (or the whole pair 2,1|3)");
  cmd->add_option("--bot", a.bot, "bottom composition, e.g. 3");
  cmd->add_option("pair", a.pair, "composition pair 'top|bottom', e.g. \"2,1|3\"");
  cmd->add_option("--algebra", a.algebra_file, "JSON file with an inline algebra instead of a seaweed")
      ->check(CLI::ExistingFile);
}

void add_search_options(CLI::App* cmd, SearchArgs& s, bool with_attempts) {
  cmd->add_option("--seed", s.seed, "random seed")->envname("SEAWEED_SEED")->capture_default_str();
  if (with_attempts) {
    cmd->add_option("--attempts", s.attempts, "forms tried per search")
        ->envname("SEAWEED_ATTEMPTS")
        ->capture_default_str();
  }
  cmd->add_option("--bound", s.bound, "coordinate bound for sampled forms")
      ->envname("SEAWEED_BOUND")
      ->capture_default_str();
  cmd->add_option("--trials", s.trials, "index trials")->envname("SEAWEED_TRIALS")->capture_default_str();
  cmd->add_option("--format", s.format, "json or text")->envname("SEAWEED_FORMAT")->capture_default_str();
  cmd->add_option("--out", s.out, "write output to this file instead of stdout")->envname("SEAWEED_OUT");
}

struct ResolvedAlgebra {
  seaweed::LieAlgebra algebra;
  seaweed::Json reference;
};

std::pair<seaweed::Composition, seaweed::Composition> compositions(const AlgebraArgs& a) {
  if (!a.pair.empty()) return seaweed::parse_composition_pair(a.pair);
  if (a.top.find('|') != std::string::npos) return seaweed::parse_composition_pair(a.top);
  return {seaweed::Composition::parse(a.top), seaweed::Composition::parse(a.bot)};
}

ResolvedAlgebra resolve(const AlgebraArgs& a) {
  if (!a.algebra_file.empty()) {
    std::ifstream in(a.algebra_file);
    seaweed::Json j;
    try {
      j = seaweed::Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw seaweed::InputError("cannot parse '" + a.algebra_file + "': " + e.what());
    }
    auto g = seaweed::resolve_algebra(j);
    return {std::move(g), std::move(j)};
  }
  const seaweed::Family family = seaweed::parse_family(a.family);
  auto [top, bottom] = compositions(a);
  std::size_t n = a.n;
  if (n == 0) {
    if (family == seaweed::Family::GL || family == seaweed::Family::SL) {
      n = top.total();
    } else {
      throw seaweed::InputError("--n is required for SP and SO");
    }
  }
  seaweed::AlgebraRef ref{family, n, top, bottom};
  return {seaweed::make_seaweed(family, n, top, bottom), seaweed::to_json(ref)};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw seaweed::InputError("cannot write '" + out_path + "'");
  out << text;
}

bool text_format(const SearchArgs& s) {
  if (s.format != "json" && s.format != "text") {
    throw seaweed::InputError("--format must be json or text here");
  }
  return s.format == "text";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index, contact and stability analysis of seaweed Lie algebras"};
  app.require_subcommand(1);

  AlgebraArgs alg;
  SearchArgs search;

  auto* index_cmd = app.add_subcommand("index", "estimate the index of an algebra");
  add_algebra_options(index_cmd, alg);
  add_search_options(index_cmd, search, false);

  auto* contact_cmd = app.add_subcommand("contact", "search for a contact form, emit a certificate");
  add_algebra_options(contact_cmd, alg);
  add_search_options(contact_cmd, search, true);

  auto* stable_cmd = app.add_subcommand("stable", "search for a stable form, emit a certificate");
  add_algebra_options(stable_cmd, alg);
  add_search_options(stable_cmd, search, true);

  auto* basis_cmd = app.add_subcommand("basis", "find a contact form and build its contact basis");
  add_algebra_options(basis_cmd, alg);
  add_search_options(basis_cmd, search, true);

  seaweed::ClassifyOptions copts;
  std::string classify_family = "GL";
  std::string classify_format = "json";
  std::string classify_out;
  bool strict = false;
  auto* classify_cmd = app.add_subcommand("classify", "sweep all seaweeds of a family and check the classification");
  classify_cmd->add_option("--family", classify_family, "GL, SL, SP or SO")
      ->envname("SEAWEED_FAMILY")
      ->capture_default_str();
  classify_cmd->add_option("--n", copts.n, "rank parameter (SO: matrix size)")->envname("SEAWEED_N")->required();
  classify_cmd->add_option("--seed", copts.seed, "random seed")->envname("SEAWEED_SEED")->capture_default_str();
  classify_cmd->add_option("--attempts", copts.budgets.attempts, "forms tried per search")
      ->envname("SEAWEED_ATTEMPTS")
      ->capture_default_str();
  classify_cmd->add_option("--bound", copts.budgets.bound, "coordinate bound for sampled forms")
      ->envname("SEAWEED_BOUND")
      ->capture_default_str();
  classify_cmd->add_option("--trials", copts.budgets.index_trials, "index trials")
      ->envname("SEAWEED_TRIALS")
      ->capture_default_str();
  classify_cmd->add_option("--format", classify_format, "json, csv or text")
      ->envname("SEAWEED_FORMAT")
      ->capture_default_str();
  classify_cmd->add_option("--out", classify_out, "write the report to this file")->envname("SEAWEED_OUT");
  classify_cmd->add_option("--workers", copts.workers, "worker threads (0: all cores)")->envname("SEAWEED_WORKERS");
  classify_cmd->add_flag("--strict", strict, "exit 3 when any record is UNRESOLVED");
  classify_cmd->add_flag("--certificates", copts.embed_certificates, "embed certificates in the report");
  classify_cmd->add_flag("--override-limits", copts.override_limits, "allow sweeps beyond the default size limits");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-check a certificate file from scratch");
  verify_cmd->add_option("file", verify_path, "certificate JSON")->required();

  std::string svg_path;
  auto* meander_cmd = app.add_subcommand("meander", "meander graph and type-A index of a composition pair");
  add_algebra_options(meander_cmd, alg);
  meander_cmd->add_option("--svg", svg_path, "write the meander as SVG");

  CLI11_PARSE(app, argc, argv);

  try {
    if (index_cmd->parsed()) {
      const auto r = resolve(alg);
      const auto rep = seaweed::robust_index(r.algebra, search.seed, search.trials, search.bound);
      if (text_format(search)) {
        emit(r.algebra.label() + ": dim " + std::to_string(r.algebra.dim()) + ", index " +
                 std::to_string(rep.index) + (rep.trials_agreed ? "" : " (trials disagreed)") + "\n",
             search.out);
      } else {
        emit(seaweed::to_json(rep).dump(2) + "\n", search.out);
      }
      return 0;
    }

    if (contact_cmd->parsed() || basis_cmd->parsed()) {
      const auto r = resolve(alg);
      const auto cert = seaweed::find_contact_form(r.algebra, search.seed, search.attempts, search.bound);
      if (!cert) {
        std::cerr << r.algebra.label() << ": no contact form found in " << search.attempts << " attempts\n";
        return kExitNotFound;
      }
      if (contact_cmd->parsed()) {
        if (text_format(search)) {
          emit(r.algebra.label() + ": contact form found\n  form " + seaweed::to_json(cert->form).dump() +
                   "\n  reeb " + seaweed::to_json(cert->reeb).dump() + "\n",
               search.out);
        } else {
          emit(seaweed::certificate_document(*cert, r.reference).dump(2) + "\n", search.out);
        }
        return 0;
      }
      const auto basis = seaweed::contact_basis(r.algebra, *cert);
      seaweed::Json doc;
      doc["certificate"] = seaweed::certificate_document(*cert, r.reference);
      doc["basis"] = seaweed::to_json(basis);
      if (text_format(search)) {
        std::string text = r.algebra.label() + ": contact basis, " + std::to_string(basis.elements.size() / 2) +
                           " symplectic pairs\n";
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
          text += "  E" + std::to_string(i + 1) + " = " + seaweed::to_json(basis.elements[i]).dump() + "\n";
        }
        emit(text, search.out);
      } else {
        emit(doc.dump(2) + "\n", search.out);
      }
      return 0;
    }

    if (stable_cmd->parsed()) {
      const auto r = resolve(alg);
      const auto cert = seaweed::find_stable_form(r.algebra, search.seed, search.attempts, search.bound);
      if (!cert) {
        std::cerr << r.algebra.label() << ": no stable form found in " << search.attempts << " attempts\n";
        return kExitNotFound;
      }
      if (text_format(search)) {
        emit(r.algebra.label() + ": stable form found, kernel dim " + std::to_string(cert->kernel.dim()) +
                 ", [ker, g] dim " + std::to_string(cert->bracket_span.dim()) + "\n",
             search.out);
      } else {
        emit(seaweed::certificate_document(*cert, r.reference).dump(2) + "\n", search.out);
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      copts.family = seaweed::parse_family(classify_family);
      const auto format = seaweed::parse_report_format(classify_format);
      const auto records = seaweed::classify(copts);
      emit(seaweed::report(records, format), classify_out);
      return seaweed::exit_code(records, strict);
    }

    if (verify_cmd->parsed()) {
      const auto result = seaweed::verify_certificate_file(verify_path);
      if (result.ok) {
        std::cout << "OK: " << result.kind << " certificate verified\n";
        return 0;
      }
      std::cout << "FAILED: " << result.kind << " certificate\n";
      for (const auto& f : result.failures) std::cout << "  - " << f << "\n";
      return 1;
    }

    if (meander_cmd->parsed()) {
      auto [top, bottom] = compositions(alg);
      const auto m = seaweed::meander(top, bottom);
      const auto c = seaweed::census(m);
      const auto family = seaweed::parse_family(alg.family);
      std::cout << "meander " << top.to_string() << "|" << bottom.to_string() << ": " << c.cycles << " cycles, "
                << c.paths << " paths, index " << seaweed::meander_index(m, family) << " (" << seaweed::to_string(family)
                << ")\n";
      if (!svg_path.empty()) emit(seaweed::to_svg(m), svg_path);
      return 0;
    }
  } catch (const seaweed::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return seaweed::kExitError;
  }
  return 0;
}
