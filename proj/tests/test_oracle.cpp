#include "daggercat/oracle.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "daggercat/exec.hpp"
#include "daggercat/fixtures.hpp"
#include "daggercat/monad.hpp"
#include "harness.hpp"

using namespace daggercat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void naive_category_verdicts() {
  for (const auto& c : {fixtures::one(), fixtures::z2(), fixtures::p2(),
                        fixtures::unit_iso(), fixtures::rel2()}) {
    expect(oracle::naive_check_category(describe(c)),
           c.name + ": oracle accepts the fixture");
  }
  auto bad = describe(fixtures::z2());
  bad.composition[1][2] = "1";  // 1.s := 1 kills the unit law
  expect(!oracle::naive_check_category(bad), "oracle rejects 1.s = 1");
  auto dangling = describe(fixtures::z2());
  dangling.morphisms.push_back({"t", "*", "gone"});
  expect(!oracle::naive_check_category(dangling),
         "oracle rejects dangling references");
}

void rel2_monads() {
  // Hand-checked: exactly two monads on the relations over a two-element
  // set. The identity monad, and conjugation by the swap r0110 with
  // mu = eta = r0110. Both are Frobenius and both carry one algebra.
  const auto r = fixtures::rel2();
  const int id = r.morphism_index("r1001");
  const int sw = r.morphism_index("r0110");

  const auto monads = oracle::enumerate_monads(r);
  expect(monads.size() == 2, "rel2 carries exactly two monads");

  bool saw_id = false;
  bool saw_conj = false;
  for (const auto& m : monads) {
    expect(m.frobenius, "every rel2 monad is Frobenius");
    const auto algs = oracle::enumerate_algebras(r, m);
    expect(algs.size() == 1 && algs[0].fem && algs[0].delta == m.mu[0],
           "each rel2 monad has the single algebra delta = mu");
    if (m.mu == std::vector<int>{id} && m.eta == std::vector<int>{id} &&
        m.T.mor_map[static_cast<std::size_t>(sw)] == sw)
      saw_id = true;
    if (m.mu == std::vector<int>{sw} && m.eta == std::vector<int>{sw}) {
      // conjugation swaps the two mixed singleton relations
      const int a = r.morphism_index("r0100");
      const int b = r.morphism_index("r0010");
      if (m.T.mor_map[static_cast<std::size_t>(a)] == b) saw_conj = true;
    }
  }
  expect(saw_id, "the identity monad is found");
  expect(saw_conj, "the conjugation monad is found");
}

void golden_report() {
  const auto rep = oracle::monads_report(fixtures::rel2());
  expect(rep.space == "monads(REL2)" && rep.count == 2,
         "rel2 monads report header");
  const std::string want = slurp(std::string(DCAT_GOLDEN_DIR) + "/rel2_monads.json");
  expect(!want.empty(), "golden file present");
  expect(rep.dump() == want, "rel2 monads report matches the golden file");
}

void cross_check_fixtures() {
  // Oracle enumerations against the main path, flag for flag.
  for (const auto& c : {fixtures::one(), fixtures::z2(), fixtures::p2(),
                        fixtures::unit_iso()}) {
    const auto main_fs = all_dagger_functors(c, c);
    const auto orc_fs = oracle::enumerate_dagger_functors(c, c);
    expect(main_fs.size() == orc_fs.size(),
           c.name + ": endofunctor counts agree");
    for (const auto& f : main_fs) {
      bool found = false;
      for (const auto& g : orc_fs)
        if (g.obj_map == f.obj_map && g.mor_map == f.mor_map) found = true;
      expect(found, c.name + ": oracle finds each main-path functor");
    }

    for (const auto& m : oracle::enumerate_monads(c)) {
      const auto T = validate_functor_indexed(c, c, m.T.obj_map, m.T.mor_map);
      bool ok = true;
      bool frob = false;
      try {
        frob = validate_monad(c, T, m.mu, m.eta).frobenius;
      } catch (const ValidationError&) {
        ok = false;
      }
      expect(ok, c.name + ": main path accepts each oracle monad");
      expect(frob == m.frobenius, c.name + ": frobenius flags agree");
      expect(oracle::naive_frobenius(c, m.T, m.mu) == m.frobenius,
             c.name + ": naive frobenius agrees with the enumerated flag");

      const auto main_algs =
          algebras_for(validate_monad(c, T, m.mu, m.eta));
      const auto orc_algs = oracle::enumerate_algebras(c, m);
      expect(main_algs.size() == orc_algs.size(),
             c.name + ": algebra counts agree");
      for (std::size_t i = 0;
           i < main_algs.size() && i < orc_algs.size(); ++i) {
        expect(main_algs[i].carrier == orc_algs[i].carrier &&
                   main_algs[i].structure == orc_algs[i].delta &&
                   main_algs[i].fem == orc_algs[i].fem,
               c.name + ": algebras agree entry for entry");
      }
    }
  }
}

void nats_and_morphisms() {
  const auto z2 = fixtures::z2();
  const auto fs = oracle::enumerate_dagger_functors(z2, z2);
  expect(fs.size() == 2, "oracle: two z2 endofunctors");
  int total_nats = 0;
  for (const auto& f : fs)
    for (const auto& g : fs)
      total_nats += static_cast<int>(oracle::enumerate_nat(z2, z2, f, g).size());
  expect(total_nats == 4, "oracle: four nats among z2 endofunctors");

  const auto monads = oracle::enumerate_monads(z2);
  expect(monads.size() == 2, "oracle: two z2 monads");
  const auto& a = monads[0];
  const auto& b = monads[1];
  // Monad morphisms between the z2 monads: for each of the two base
  // functors (identity and collapse) the twist component is forced, so
  // every ordered pair of monads has exactly two morphisms.
  expect(oracle::enumerate_monad_morphisms(z2, a, z2, a).size() == 2,
         "two endomorphisms of the first z2 monad");
  expect(oracle::enumerate_monad_morphisms(z2, b, z2, b).size() == 2,
         "two endomorphisms of the second z2 monad");
  expect(oracle::enumerate_monad_morphisms(z2, a, z2, b).size() == 2,
         "two morphisms between the distinct z2 monads");
}

void iso_search() {
  const auto z2 = fixtures::z2();
  const auto hit = oracle::iso_search_dagger(z2, z2);
  expect(hit.has_value(), "z2 is isomorphic to itself");
  expect(!oracle::iso_search_dagger(z2, fixtures::p2()).has_value(),
         "z2 is not isomorphic to p2");
  expect(!oracle::iso_search_dagger(z2, fixtures::one()).has_value(),
         "z2 is not isomorphic to one");
  expect(oracle::iso_search_dagger(fixtures::unit_iso(), fixtures::unit_iso())
             .has_value(),
         "unit_iso is isomorphic to itself");
}

void caps_and_determinism() {
  bool capped = false;
  try {
    oracle::enumerate_monads(fixtures::rel2(), 5);
  } catch (const SearchSpaceTooLarge& e) {
    capped = e.cap() == 5;
  }
  expect(capped, "tiny cap interrupts the monad enumeration");

  // Reports must not depend on the worker count.
  const int old = parallelism();
  set_parallelism(1);
  const auto serial = oracle::monads_report(fixtures::rel2()).dump();
  set_parallelism(4);
  const auto parallel = oracle::monads_report(fixtures::rel2()).dump();
  set_parallelism(old);
  expect(serial == parallel, "rel2 report is identical serial vs parallel");
  expect(!serial.empty() && serial.back() == '\n',
         "report dump is newline-terminated");
}

}  // namespace

int main() {
  naive_category_verdicts();
  rel2_monads();
  golden_report();
  cross_check_fixtures();
  nats_and_morphisms();
  iso_search();
  caps_and_determinism();
  return finish("test_oracle");
}
