#include "daggercat/json_io.hpp"

#include <string>
#include <vector>

#include "harness.hpp"

using daggercat::cli::run;

namespace {

const std::string kData = DCAT_TEST_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json report;
};

Run cli(std::vector<std::string> args) {
  Run r;
  r.code = run(args, r.out, r.err);
  if (!r.out.empty())
    r.report = nlohmann::json::parse(r.out, nullptr, false);
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

void exit_codes() {
  const auto ok = cli({"validate", "category", data("z2.json")});
  expect(ok.code == 0 && ok.report["verdict"] == "pass",
         "valid category exits 0");
  expect(ok.err.find("validate category: pass") != std::string::npos,
         "human summary goes to stderr");
  expect(ok.report["witnesses"].empty(), "pass reports carry no witnesses");

  const auto structural = cli({"validate", "category", data("bad-z2.json")});
  expect(structural.code == 2 && structural.report["verdict"] == "error",
         "dangling reference exits 2");
  expect(!structural.report["witnesses"].empty() &&
             structural.report["witnesses"][0].get<std::string>().find("s") !=
                 std::string::npos,
         "structural witness names the morphism");

  const auto law = cli({"validate", "category", data("bad-dagger-z2.json")});
  expect(law.code == 1 && law.report["verdict"] == "fail",
         "law violation exits 1");
  expect(!law.report["witnesses"].empty(), "law failure carries a witness");

  const auto missing = cli({"validate", "category", data("no-such-file.json")});
  expect(missing.code == 2, "missing file exits 2");

  const auto usage = cli({"validate"});
  expect(usage.code == 2, "missing subcommand exits 2");

  const auto help = cli({"--help"});
  expect(help.code == 0 && help.out.find("daggercat") != std::string::npos,
         "--help exits 0 and prints usage");
}

void report_shape() {
  const auto r = cli({"--no-timing", "validate", "category", data("z2.json")});
  expect(r.code == 0, "no-timing run passes");
  expect(r.report.contains("command") && r.report.contains("inputs") &&
             r.report.contains("verdict") && r.report.contains("result"),
         "report has the fixed fields");
  expect(!r.report.contains("timing_ms"), "--no-timing strips the timing");
  expect(r.report["inputs"][0].contains("fnv1a"), "inputs carry hashes");

  const auto t = cli({"validate", "category", data("z2.json")});
  expect(t.report.contains("timing_ms"), "timing present by default");

  // Byte-stable across runs and across worker counts.
  const auto a = cli({"--no-timing", "enumerate", "monads", data("z2.json")});
  const auto b = cli({"--no-timing", "--parallel", "4", "enumerate", "monads",
                      data("z2.json")});
  const auto c = cli({"--no-timing", "enumerate", "monads", data("z2.json")});
  expect(a.code == 0 && a.out == b.out && a.out == c.out,
         "enumeration reports are byte-identical");
  expect(a.report["result"]["count"] == 2, "z2 has two monads via the CLI");
}

void validation_commands() {
  expect(cli({"validate", "functor", data("z2-functor.json")}).code == 0,
         "identity functor file validates");
  expect(cli({"validate", "monad", data("ts-monad.json")}).code == 0,
         "ts monad file validates");
  expect(cli({"validate", "2category", data("sigma-z2.json")}).code == 0,
         "suspension file validates");
  const auto bad2 = cli({"validate", "2category", data("bad-sigma-z2.json")});
  expect(bad2.code == 1 &&
             bad2.report["witnesses"][0].get<std::string>().find(
                 "InterchangeFail") != std::string::npos,
         "corrupted hcomp table fails with InterchangeFail");
  expect(cli({"validate", "laxfunctor", data("ts-lax.json")}).code == 0,
         "lax functor file validates");
}

void checks_and_builds() {
  expect(cli({"check", "frobenius", data("ts-monad.json")}).code == 0,
         "ts is Frobenius via the CLI");
  expect(cli({"check", "th1", "--arg-category", data("z2.json"), "--monad",
              data("ts-monad.json")}).code == 0,
         "th1 passes for (z2, ts)");
  expect(cli({"check", "fk-universal", "--arg-category", data("z2.json"),
              "--monad", data("idz2-monad.json")}).code == 0,
         "fk-universal passes for the identity monad");
  expect(cli({"check", "fem-algebra", data("ts-monad.json"), "--carrier", "*",
              "--delta", "s"}).code == 0,
         "(*, s) is a fem algebra");
  const auto notalg = cli({"check", "fem-algebra", data("ts-monad.json"),
                           "--carrier", "*", "--delta", "1"});
  expect(notalg.code == 1 && !notalg.report["witnesses"].empty(),
         "(*, 1) fails with a witness");

  expect(cli({"build", "fem", data("ts-monad.json")}).code == 0,
         "build fem succeeds");
  const auto kl = cli({"--no-timing", "build", "kleisli", data("ts-monad.json")});
  expect(kl.code == 0 && kl.report["result"].contains("category"),
         "build kleisli emits the category");
  expect(cli({"build", "dfmnd", data("sigma-z2.json")}).code == 0,
         "build dfmnd succeeds");
  expect(cli({"build", "fk-completion", data("sigma-z2.json")}).code == 0,
         "build fk-completion succeeds");
  expect(cli({"build", "fem-completion", data("sigma-z2.json")}).code == 0,
         "build fem-completion succeeds");

  expect(cli({"check", "comparison", "--monad", data("ts-monad.json")}).code == 0,
         "comparison from the kleisli adjunction");
  expect(cli({"check", "comparison", "--monad", data("ts-monad.json"),
              "--adjunction", "fem"}).code == 0,
         "comparison from the fem adjunction");
  expect(cli({"check", "monadic", "--monad", data("ts-monad.json")}).code == 0,
         "the ts kleisli adjunction is monadic");

  expect(cli({"enumerate", "functors", data("z2.json"), data("z2.json")}).code == 0,
         "enumerate functors");
  const auto algs = cli({"--no-timing", "enumerate", "algebras",
                         data("ts-monad.json")});
  expect(algs.code == 0 && algs.report["result"]["count"] == 1,
         "ts has one algebra via the CLI");
}

void problem_files() {
  expect(cli({"check", "eta-commutation", data("prob-eta-commutation.json")})
             .code == 0,
         "eta commutation problem passes");
  expect(cli({"check", "fem-object", data("prob-fem-object.json")}).code == 0,
         "fem object witness accepted");
  const auto bad = cli({"check", "fem-object", data("prob-fem-object-bad.json")});
  expect(bad.code == 1 && !bad.report["witnesses"].empty(),
         "xi = 1 witness rejected");
  expect(cli({"check", "universal2", data("prob-universal2.json")}).code == 0,
         "universal property of the mediating 1-cell");
  expect(cli({"check", "pairs", data("prob-pairs.json")}).code == 0,
         "pairs correspondence problem passes");
  expect(cli({"check", "lax-limit", data("prob-lax-limit.json")}).code == 0,
         "lax limit cone accepted");
  const auto badpi = cli({"check", "lax-limit", data("prob-lax-limit-bad.json")});
  expect(badpi.code == 1 &&
             badpi.report["witnesses"][0].get<std::string>().find(
                 "not a lax natural") != std::string::npos,
         "tau = 1 cone rejected with a witness");
}

void garbage_inputs() {
  expect(cli({"validate", "category", "/dev/null"}).code == 2,
         "empty input exits 2");
  const auto r = cli({"validate", "monad", data("z2.json")});
  expect(r.code == 2, "category file where a monad is expected exits 2");
  expect(cli({"frobnicate"}).code == 2, "unknown subcommand exits 2");
}

void verdict_witness_invariant() {
  // Across a representative sweep: verdict pass iff no witnesses.
  const std::vector<std::vector<std::string>> cmds = {
      {"validate", "category", data("z2.json")},
      {"validate", "category", data("bad-dagger-z2.json")},
      {"check", "frobenius", data("ts-monad.json")},
      {"check", "fem-object", data("prob-fem-object.json")},
      {"check", "fem-object", data("prob-fem-object-bad.json")},
      {"check", "lax-limit", data("prob-lax-limit-bad.json")},
      {"enumerate", "monads", data("z2.json")},
  };
  for (const auto& c : cmds) {
    const auto r = cli(c);
    if (r.report.is_discarded()) continue;
    const bool pass = r.report["verdict"] == "pass";
    expect(pass == r.report["witnesses"].empty(),
           "verdict matches witness presence for " + c[0] + " " + c[1]);
  }
}

}  // namespace

int main() {
  exit_codes();
  report_shape();
  validation_commands();
  checks_and_builds();
  problem_files();
  garbage_inputs();
  verdict_witness_invariant();
  return finish("test_cli");
}
