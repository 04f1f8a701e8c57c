// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// All comparisons are exact; there are no numeric tolerances.

#include "oracles.hpp"

#include "seaweed/classify.hpp"
#include "seaweed/contact.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/kirillov.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/seaweed.hpp"

#include <array>
#include <functional>
#include <map>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace seaweed;

namespace {

constexpr std::uint64_t kBound = 1'000'000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Produced {
  LieAlgebra algebra;
  ContactCertificate cert;
};

// Every contact certificate seen during the run, for criterion 4.
std::vector<Produced> g_certificates;

void record(const LieAlgebra& g, const ContactCertificate& cert) { g_certificates.push_back({g, cert}); }

std::string ratio(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

Outcome constructor_agreement() {
  std::size_t ok = 0, total = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const AmbientAlgebra ambient(Family::GL, n);
    for (const auto& [a, b] : enumerate_pairs(Family::GL, n)) {
      ++total;
      if (realization_span(gln_seaweed(a, b)) == realization_span(flag_seaweed(ambient, a, b))) ++ok;
    }
  }
  return {ok == total && total == 341, ratio(ok, total) + " pairs, n = 1..5"};
}

Outcome index_oracle() {
  std::size_t gl_ok = 0, gl_total = 0, sl_ok = 0, sl_total = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& [a, b] : enumerate_pairs(Family::GL, n)) {
      const MeanderGraph m = meander(a, b);
      const LieAlgebra g = gln_seaweed(a, b);
      const std::size_t expect = meander_index(m, Family::GL);
      ++gl_total;
      if (index(g, 1001, 3, kBound).index == expect && index(g, 2002, 3, kBound).index == expect) ++gl_ok;
      const LieAlgebra s = sln_seaweed(a, b);
      const std::size_t expect_sl = meander_index(m, Family::SL);
      ++sl_total;
      if (index(s, 1001, 3, kBound).index == expect_sl && index(s, 2002, 3, kBound).index == expect_sl) ++sl_ok;
    }
  }
  return {gl_ok == gl_total && gl_total == 1364 && sl_ok == sl_total,
          "gl " + ratio(gl_ok, gl_total) + ", sl " + ratio(sl_ok, sl_total) + ", seeds 1001 and 2002"};
}

Outcome index_one_type_a() {
  std::size_t index_one = 0, both = 0, bad_verdicts = 0;
  for (Family family : {Family::GL, Family::SL}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      if (family == Family::SL && n == 1) continue;
      ClassifyOptions opts;
      opts.family = family;
      opts.n = n;
      opts.seed = 42;
      opts.embed_certificates = true;
      for (const auto& r : classify(opts)) {
        if (r.verdict != Verdict::Consistent) ++bad_verdicts;
        if (r.index != 1) continue;
        ++index_one;
        if (r.contact_certificate && r.stability_certificate) ++both;
        if (r.contact_certificate) record(make_seaweed(family, n, r.top, r.bottom), *r.contact_certificate);
      }
    }
  }
  return {both == index_one && bad_verdicts == 0 && index_one > 0,
          ratio(both, index_one) + " index-one seaweeds with both certificates, " + std::to_string(bad_verdicts) +
              " non-CONSISTENT records"};
}

std::vector<LieAlgebra> odd_zoo() {
  std::vector<LieAlgebra> out;
  auto keep = [&](LieAlgebra g) {
    if (g.dim() % 2 == 1) out.push_back(std::move(g));
  };
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& [a, b] : enumerate_pairs(Family::GL, n)) {
      keep(gln_seaweed(a, b));
      keep(sln_seaweed(a, b));
    }
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& [a, b] : enumerate_pairs(Family::SP, n)) keep(make_seaweed(Family::SP, n, a, b));
  for (std::size_t n = 3; n <= 6; ++n)
    for (const auto& [a, b] : enumerate_pairs(Family::SO, n)) keep(make_seaweed(Family::SO, n, a, b));
  for (std::size_t k = 1; k <= 3; ++k) keep(heisenberg(k));
  keep(abelian(3));
  return out;
}

Outcome volume_oracle() {
  oracle::Generator gen(5005);
  const auto zoo = odd_zoo();
  std::size_t agree = 0, total = 0, contact = 0, non_regular = 0;
  for (std::size_t round = 0; total < 1200; ++round) {
    for (const auto& g : zoo) {
      OneForm phi;
      switch (round % 5) {
        case 0:  // generic
          phi = sample_form(g, derive_seed(round, total), kBound);
          break;
        case 1:  // tiny coordinates: frequently degenerate
          phi = sample_form(g, derive_seed(round, total), 1);
          break;
        case 2:  // sparse
          for (std::size_t i = 0; i < g.dim(); ++i) phi.coords.push_back(gen.integer(0, 3) == 0 ? gen.rational(50) : 0);
          break;
        case 3:  // one coordinate only
          phi.coords.assign(g.dim(), Scalar(0));
          phi.coords[static_cast<std::size_t>(gen.integer(0, static_cast<long>(g.dim()) - 1))] = gen.integer(1, 9);
          break;
        default:  // rational coordinates
          for (std::size_t i = 0; i < g.dim(); ++i) phi.coords.push_back(gen.rational(7));
      }
      const auto cert = is_contact_form(g, phi);
      if (cert) {
        ++contact;
        record(g, *cert);
      }
      const std::size_t kdim = kernel_dim(g, phi);
      if (kdim > 1) ++non_regular;
      ++total;
      if (cert.has_value() == contact_volume_nonzero(g, phi)) ++agree;
    }
  }
  return {agree == total && total >= 1000 && non_regular > 0 && contact > 0,
          ratio(agree, total) + " pairs over " + std::to_string(zoo.size()) + " algebras (" + std::to_string(contact) +
              " contact, " + std::to_string(non_regular) + " with kernel dim > 1)"};
}

Outcome forward_direction() {
  std::size_t ok = 0;
  for (const auto& p : g_certificates)
    if (is_stable_form(p.algebra, p.cert.form)) ++ok;
  return {ok == g_certificates.size() && ok > 0, ratio(ok, g_certificates.size()) + " contact certificates stable"};
}

Outcome contact_bases(std::size_t limit) {
  std::size_t ok = 0, total = 0;
  for (std::size_t k = 0; k < g_certificates.size() && total < limit; ++k) {
    const auto& [g, cert] = g_certificates[k];
    ++total;
    try {
      const ContactBasis basis = contact_basis(g, cert);
      if (basis.form_matrix == canonical_contact_matrix(g.dim()) && basis.elements.front() == cert.reeb) ++ok;
    } catch (const Error&) {
    }
  }
  return {ok == total && total >= 100, ratio(ok, total) + " bases in canonical form with E1 = Reeb"};
}

Outcome contactify_instances() {
  std::size_t constructed = 0, ok = 0;
  const std::size_t n_certs = g_certificates.size();
  for (std::size_t k = 0; k < n_certs; ++k) {
    const auto g = g_certificates[k].algebra;
    const auto cert = g_certificates[k].cert;
    const OneForm dual = dual_functional(g, cert.reeb);
    const OneForm phi{axpy(cert.form.coords, Scalar(-1), dual.coords)};
    const Subspace kernel = kirillov_kernel(g, phi);
    if (kernel.dim() != 1 || phi(Element{kernel.basis().front()}) != 0) continue;
    ++constructed;
    const auto out = contactify(g, phi);
    if (out && kirillov_kernel(g, out->form) == kernel && is_contact_form(g, out->form)) {
      ++ok;
      record(g, *out);
    }
  }
  return {ok == constructed && constructed >= 20,
          ratio(ok, constructed) + " self-inverse instances recovered within " + std::to_string(kContactifySteps) +
              " steps"};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + SEAWEED_CLI_PATH + "' " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome determinism() {
  const auto [s1, a] = run_cli("classify --family GL --n 5 --seed 42");
  const auto [s2, b] = run_cli("classify --family GL --n 5 --seed 42");
  const auto [s3, c] = run_cli("classify --family GL --n 5 --seed 42 --workers 3");
  const bool ok = s1 == 0 && s2 == 0 && s3 == 0 && !a.empty() && a == b && a == c;
  return {ok, std::to_string(a.size()) + " bytes; repeat run " + (a == b ? "identical" : "DIFFERENT") +
                  ", 3-worker run " + (a == c ? "identical" : "DIFFERENT")};
}

Outcome sanity() {
  std::vector<std::string> failures;
  for (std::size_t n = 1; n <= 5; ++n) {
    const LieAlgebra gl = gln_seaweed(Composition({n}), Composition({n}));
    if (index(gl, 9, 3, kBound).index != n) failures.push_back("index gl(" + std::to_string(n) + ")");
    const Composition ones(std::vector<std::size_t>(n, 1));
    if (index(gln_seaweed(ones, ones), 9, 3, kBound).index != n)
      failures.push_back("index torus " + std::to_string(n));
    if (index(abelian(n), 9, 3, kBound).index != n) failures.push_back("index abelian " + std::to_string(n));
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const LieAlgebra h = heisenberg(k);
    const auto cert = find_contact_form(h, 9, 64, kBound);
    if (!cert) {
      failures.push_back("heisenberg(" + std::to_string(k) + ") contact");
    } else {
      record(h, *cert);
    }
  }
  // Odd dimension >= 3: B_phi vanishes identically, so the kernel is everything.
  for (std::size_t n : {3, 5, 7}) {
    const LieAlgebra a = abelian(n);
    if (find_contact_form(a, 9, 64, kBound) || !kirillov_matrix(a, sample_form(a, 1, kBound)).is_zero())
      failures.push_back("abelian(" + std::to_string(n) + ") contact");
  }
  std::string detail = "gl(n), torus, abelian index for n <= 5; heisenberg 3,5,7 contact; abelian 3,5,7 not contact";
  for (const auto& f : failures) detail += "; failed: " + f;
  return {failures.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  // Order matters: 4, 6 and 7 consume certificates gathered by 3, 5 and 9.
  const std::vector<Criterion> order = {
      {1, "constructor agreement", constructor_agreement},
      {2, "meander index = Kirillov index", index_oracle},
      {3, "index-one GL/SL seaweeds are contact and stable", index_one_type_a},
      {5, "volume oracle = kernel test", volume_oracle},
      {9, "sanity values", sanity},
      {6, "contact bases", [] { return contact_bases(SIZE_MAX); }},
      {7, "contactify", contactify_instances},
      {4, "contact certificates are stable", forward_direction},
      {8, "byte-identical classify output", determinism},
  };

  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : order) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << " ("
         << std::fixed;
    line.precision(1);
    line << secs << "s)";
    lines[c.id] = line.str();
    std::cerr << line.str() << '\n';
    all = all && o.pass;
  }
  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
  return all ? 0 : 1;
}
