// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every criterion is exact; the time limits are in the
// table at the bottom of this file.

#include <chrono>      // for steady_clock
#include <cstdio>      // for printf
#include <functional>  // for function
#include <set>         // for set
#include <string>      // for string
#include <vector>      // for vector

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"

#include "xmodlab/catalog.hpp"
#include "xmodlab/derived.hpp"

using namespace xmodlab;
using nlohmann::json;
using oracle::Row;

namespace {

  struct Outcome {
    bool ok = true;
    json findings = json::object();
    std::string failure;

    void require(bool condition, std::string const& what) {
      if (!condition && ok) {
        ok      = false;
        failure = what;
      }
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Helpers computed straight from tables
  ////////////////////////////////////////////////////////////////////////

  bool bijective(Row const& f) {
    std::set<Elem> image(f.begin(), f.end());
    return image.size() == f.size();
  }

  Row invert(Row const& f) {
    Row out(f.size());
    for (Elem i = 0; i < f.size(); ++i) {
      out[f[i]] = i;
    }
    return out;
  }

  // sigma(b) = alpha(d b) + b and theta(a) = d(alpha a) + a.
  Row sigma_of(CrossedModule const& x, Row const& d) {
    Row out(x.base()->order());
    for (Elem b = 0; b < out.size(); ++b) {
      out[b] = x.base()->add_table()(x.boundary().map[d[b]], b);
    }
    return out;
  }
  Row theta_of(CrossedModule const& x, Row const& d) {
    Row out(x.module()->order());
    for (Elem a = 0; a < out.size(); ++a) {
      out[a] = x.module()->add_table()(d[x.boundary().map[a]], a);
    }
    return out;
  }

  // (d1 o d2)(b) = d1(sigma_d2(b)) + d2(b).
  Row wcomp(CrossedModule const& x, Row const& d1, Row const& d2) {
    auto s2 = sigma_of(x, d2);
    Row  out(d1.size());
    for (Elem b = 0; b < out.size(); ++b) {
      out[b] = x.module()->add_table()(d1[s2[b]], d2[b]);
    }
    return out;
  }

  bool is_zero_row(Row const& r) {
    for (auto v : r) {
      if (v != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<Derivation> regular_catalog_derivations() {
    std::vector<Derivation> out;
    for (auto const& x : catalog_xmods()) {
      for (auto const& d : oracle::all_derivations(x)) {
        if (bijective(sigma_of(x, d))) {
          out.push_back(Derivation{x, d});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Action conditions versus semidirect products
  ////////////////////////////////////////////////////////////////////////

  Outcome action_equivalence() {
    Outcome out;
    auto sweep = [&](AlgebraPtr const& A, AlgebraPtr const& B, bool with_star,
                     std::string const& label) {
      std::size_t const cells = A->order() * B->order();
      std::size_t       total = 0, valid = 0;
      auto              one   = [&](Table dot, std::vector<Table> star) {
        ActionSet act(B, A, std::move(dot), std::move(star));
        bool      conditions = check_derived_action(act).valid();
        bool      product    = semidirect_product(act).report.valid();
        bool      brute      = oracle::semidirect_is_object(act);
        if (with_star) {
          // Star tables with 0*a != 0 can cancel in the product formula;
          // the product then has to give back the tables it was built from.
          bool recovers = product
                          && action_from_section(canonical_extension(act)) == act;
          product = recovers;
          brute   = brute && recovers;
        }
        out.require(conditions == product && product == brute,
                    label + ": verdicts disagree");
        ++total;
        valid += conditions;
      };
      oracle::for_each_map(cells, A->order(), [&](Row const& dot) {
        if (!with_star) {
          one(Table(B->order(), A->order(), dot), {});
          return;
        }
        oracle::for_each_map(cells, A->order(), [&](Row const& star) {
          one(Table(B->order(), A->order(), dot),
              {Table(B->order(), A->order(), star)});
        });
      });
      out.findings[label] = {{"candidates", total}, {"valid", valid}};
      return total;
    };
    auto z2 = cyclic_group(2), z3 = cyclic_group(3);
    out.require(sweep(z2, z2, false, "|A|=2,|B|=2") == 16, "expected 16 tables");
    out.require(sweep(z3, z2, false, "|A|=3,|B|=2") == 729, "expected 729 tables");
    out.require(sweep(z3, z3, false, "|A|=3,|B|=3") == 19683,
                "expected 19683 tables");
    sweep(z2, z3, false, "|A|=2,|B|=3");
    sweep(load_algebra("Z2-zero-ring"), load_algebra("Z2-zero-ring"), true,
          "zero ring Z2 on itself");
    sweep(load_algebra("Z2-ring"), load_algebra("Z2-ring"), true,
          "ring Z2 on itself");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. Crossed modules and internal groupoids round trip
  ////////////////////////////////////////////////////////////////////////

  bool commutes_xmod(XModMorphism const& m) {
    auto const& S = m.source;
    auto const& T = m.target;
    if (!oracle::is_morphism(*S.module(), *T.module(), m.top.map)
        || !oracle::is_morphism(*S.base(), *T.base(), m.bottom.map)) {
      return false;
    }
    for (Elem a = 0; a < S.module()->order(); ++a) {
      if (m.bottom.map[S.boundary().map[a]] != T.boundary().map[m.top.map[a]]) {
        return false;
      }
      for (Elem b = 0; b < S.base()->order(); ++b) {
        if (m.top.map[S.action().dot_table()(b, a)]
            != T.action().dot_table()(m.bottom.map[b], m.top.map[a])) {
          return false;
        }
        for (std::size_t k = 0; k < S.base()->signature().num_binary(); ++k) {
          if (m.top.map[S.action().star_table(k)(b, a)]
              != T.action().star_table(k)(m.bottom.map[b], m.top.map[a])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool commutes_groupoid(InternalFunctor const& f) {
    auto const& S = f.source;
    auto const& T = f.target;
    if (!oracle::is_morphism(*S.arrows, *T.arrows, f.on_arrows.map)
        || !oracle::is_morphism(*S.objects, *T.objects, f.on_objects.map)) {
      return false;
    }
    for (Elem c = 0; c < S.arrows->order(); ++c) {
      if (f.on_objects.map[S.source.map[c]] != T.source.map[f.on_arrows.map[c]]
          || f.on_objects.map[S.target.map[c]] != T.target.map[f.on_arrows.map[c]]) {
        return false;
      }
    }
    for (Elem x = 0; x < S.objects->order(); ++x) {
      if (f.on_arrows.map[S.identity.map[x]] != T.identity.map[f.on_objects.map[x]]) {
        return false;
      }
    }
    return true;
  }

  Outcome equivalence_round_trip() {
    Outcome     out;
    std::size_t xmods = 0, groupoids = 0;
    bool        s3    = false;
    for (auto const& x : catalog_xmods()) {
      auto iso = roundtrip(x);
      out.require(check_xmod_morphism(iso).valid(), x.name() + ": iso invalid");
      out.require(bijective(iso.top.map) && bijective(iso.bottom.map),
                  x.name() + ": not bijective");
      out.require(commutes_xmod(iso), x.name() + ": oracle rejects iso");
      s3 = s3 || x.name() == "S3-conj-xmod";
      ++xmods;
    }
    for (auto const& g : catalog_groupoids()) {
      auto iso = roundtrip(g);
      out.require(check_functor(iso).valid(), g.name + ": functor invalid");
      out.require(bijective(iso.on_arrows.map) && bijective(iso.on_objects.map),
                  g.name + ": not bijective");
      out.require(commutes_groupoid(iso), g.name + ": oracle rejects functor");
      ++groupoids;
    }
    out.require(xmods >= 6 && s3, "catalog lacks the required crossed modules");
    out.findings = {{"xmods", xmods}, {"groupoids", groupoids}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Interchange law and inverse formula
  ////////////////////////////////////////////////////////////////////////

  Outcome interchange() {
    Outcome     out;
    std::size_t pairs = 0, quadruples = 0, largest = 0;
    for (auto const& g : catalog_groupoids()) {
      out.require(validate_groupoid(g).valid(), g.name + ": validator rejects");
      auto c = oracle::check_groupoid(g);
      out.require(c.ok, g.name + ": oracle finds a violation");
      pairs += c.pairs;
      quadruples += c.quadruples;
      largest = std::max(largest, g.arrows->order());
    }
    out.require(largest == 36, "largest arrow algebra should have order 36");
    out.findings = {{"pairs", pairs}, {"quadruples", quadruples},
                    {"largest_C1", largest}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Homotopies versus natural isomorphisms
  ////////////////////////////////////////////////////////////////////////

  void homotopy_sweep(Outcome& out, CrossedModule const& x,
                      std::string const& label) {
    std::vector<XModMorphism> ends{identity_xmod_morphism(x)};
    for (auto const& d : enumerate_derivations(x)) {
      ends.push_back(endomorphism_of(d));
    }
    std::size_t tables = 0, valid = 0;
    for (auto const& f : ends) {
      for (auto const& g : ends) {
        auto F = to_functor(f), G = to_functor(g);
        oracle::for_each_map(x.base()->order(), x.module()->order(),
                             [&](Row const& d) {
          bool h = validate_xmod_homotopy(XModHomotopy{f, g, d}).valid();
          bool n = validate_groupoid_homotopy(natural_candidate(F, G, d)).valid();
          bool o = oracle::natural_iso_holds(f, g, d);
          out.require(h == n && n == o, label + ": verdicts disagree");
          ++tables;
          valid += h;
        });
      }
    }
    out.findings[label] = {{"morphism_pairs", ends.size() * ends.size()},
                           {"tables", tables},
                           {"valid", valid}};
  }

  Outcome homotopy_equivalence() {
    Outcome out;
    auto    z4 = load_xmod("Z4-id-trivial");
    homotopy_sweep(out, z4, "Z4-id-trivial");
    out.require(out.findings["Z4-id-trivial"]["morphism_pairs"] == 25,
                "expected 25 morphism pairs");
    out.require(out.findings["Z4-id-trivial"]["tables"] == 25 * 256,
                "expected 256 tables per pair");
    homotopy_sweep(out, load_xmod("A3-S3-inclusion"), "A3-S3-inclusion");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Whitehead structure of (Z_n, Z_n, id, trivial)
  ////////////////////////////////////////////////////////////////////////

  Outcome whitehead_structure() {
    Outcome                  out;
    std::vector<std::size_t> expected_order{1, 2, 2, 2};
    std::size_t              i = 0;
    for (std::size_t n : {2, 3, 4, 6}) {
      auto x     = load_xmod("Z" + std::to_string(n) + "-id-trivial");
      auto label = x.name();
      auto fast  = enumerate_derivations(x);
      auto brute = oracle::all_derivations(x);
      out.require(fast.size() == n && brute.size() == n,
                  label + ": expected n derivations");
      for (std::size_t k = 0; k < std::min(fast.size(), brute.size()); ++k) {
        out.require(fast[k].d == brute[k], label + ": tables differ");
      }
      std::size_t regular = 0;
      for (auto const& d : brute) {
        bool sigma = bijective(sigma_of(x, d));
        bool theta = bijective(theta_of(x, d));
        bool lib   = is_regular(Derivation{x, d}).regular;
        out.require(sigma == theta && theta == lib,
                    label + ": regularity tests disagree");
        regular += sigma;
        out.require(wcomp(x, d, Row(n, 0)) == d && wcomp(x, Row(n, 0), d) == d,
                    label + ": zero is not an identity");
        for (auto const& e : brute) {
          out.require(whitehead_compose(Derivation{x, d}, Derivation{x, e}).d
                          == wcomp(x, d, e),
                      label + ": composition differs from the oracle");
          for (auto const& f : brute) {
            out.require(wcomp(x, wcomp(x, d, e), f) == wcomp(x, d, wcomp(x, e, f)),
                        label + ": not associative");
          }
        }
      }
      auto w = whitehead_group(x);
      out.require(w.elements.size() == expected_order[i] && regular == expected_order[i],
                  label + ": wrong Whitehead group order");
      out.require(validate_algebra(*w.group).valid(), label + ": not a group");
      out.findings[label] = {{"derivations", fast.size()},
                             {"whitehead_order", w.elements.size()}};
      ++i;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Inverse formulas
  ////////////////////////////////////////////////////////////////////////

  Outcome inverse_formulas() {
    Outcome     out;
    std::size_t count = 0;
    for (auto const& der : regular_catalog_derivations()) {
      auto const& x     = der.base;
      auto const& A     = *x.module();
      auto        theta = invert(theta_of(x, der.d));
      auto        sigma = invert(sigma_of(x, der.d));
      Row         via_theta(der.d.size()), via_sigma(der.d.size());
      for (Elem b = 0; b < der.d.size(); ++b) {
        via_theta[b] = theta[A.neg_table()[der.d[b]]];
        via_sigma[b] = A.neg_table()[der.d[sigma[b]]];
      }
      out.require(via_theta == via_sigma, x.name() + ": formulas disagree");
      out.require(invert_derivation(der).d == via_theta,
                  x.name() + ": library inverse differs");
      out.require(is_zero_row(wcomp(x, der.d, via_theta))
                      && is_zero_row(wcomp(x, via_theta, der.d)),
                  x.name() + ": not a two-sided inverse");
      ++count;
    }
    out.findings = {{"regular_derivations", count}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Derived crossed modules and chains
  ////////////////////////////////////////////////////////////////////////

  Outcome derived_modules() {
    Outcome     out;
    std::size_t count = 0, stages = 0;
    for (auto const& der : regular_catalog_derivations()) {
      auto const& x     = der.base;
      auto const& A     = *x.module();
      auto        label = x.name();
      auto        sigma = sigma_of(x, der.d);
      auto        general = derived_action_general(der);
      auto        regular = derived_action_regular(der);
      out.require(general == regular, label + ": actions disagree");
      for (Elem b = 0; b < sigma.size(); ++b) {
        for (Elem a = 0; a < A.order(); ++a) {
          Elem conj = A.add_table()(A.add_table()(der.d[b], x.action().dot_table()(b, a)),
                                    A.neg_table()[der.d[b]]);
          out.require(regular.dot(b, a) == x.action().dot_table()(sigma[b], a)
                          && general.dot(b, a) == conj,
                      label + ": action tables differ from the oracle");
        }
      }
      auto y = derived_crossed_module(der);
      out.require(validate_crossed_module(y).valid(), label + ": derived invalid");
      auto inv = invert(sigma);
      for (Elem a = 0; a < A.order(); ++a) {
        out.require(y.boundary().map[a] == inv[x.boundary().map[a]],
                    label + ": wrong derived boundary");
      }
      auto iso = derived_iso(der);
      out.require(check_xmod_morphism(iso).valid() && commutes_xmod(iso),
                  label + ": (1, sigma^-1) is not a morphism");
      out.require(bijective(iso.top.map) && bijective(iso.bottom.map)
                      && is_covering(iso),
                  label + ": (1, sigma^-1) is not an isomorphism and covering");
      auto chain = iterate_chain(der);
      out.require(chain.period > 0
                      && oracle::permutation_order(sigma) % chain.period == 0,
                  label + ": period does not divide the order of sigma");
      for (auto const& s : chain.stages) {
        out.require(validate_crossed_module(s.xmod).valid(),
                    label + ": invalid chain stage");
      }
      stages += chain.stages.size();
      ++count;
    }
    out.findings = {{"regular_derivations", count}, {"chain_stages", stages}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. Derivation with image in the kernel of the boundary
  ////////////////////////////////////////////////////////////////////////

  Outcome kernel_probe() {
    Outcome     out;
    auto        x       = load_xmod("Z2-zero-trivial");
    std::size_t flagged = 0;
    for (auto const& d : oracle::all_derivations(x)) {
      bool in_kernel = true;
      for (auto v : d) {
        in_kernel = in_kernel && x.boundary().map[v] == 0;
      }
      Derivation der{x, d};
      out.require(image_in_kernel(der) == in_kernel, "kernel test disagrees");
      if (in_kernel && !is_zero_row(d)) {
        out.require(!is_zero(der), "nonzero derivation reported as zero");
        ++flagged;
      }
    }
    out.require(flagged == 1, "expected one nonzero derivation into the kernel");
    auto report = cli::run({"derivations", "--xmod", "Z2-zero-trivial", "--json"});
    out.require(report.exit_code == 0, "derivations command failed");
    out.require(report.findings["lemma_counterexamples"] == 1,
                "report does not flag the counterexample");
    out.require(report.text.find("FLAG") != std::string::npos,
                "text report lacks the flag");
    out.findings = {{"flagged", flagged}};
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Determinism
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<std::string>> cli_suite() {
    std::vector<std::vector<std::string>> out{{"catalog", "list"}};
    for (auto const& e : catalog()) {
      out.push_back({"catalog", "show", e.name});
      switch (e.kind) {
        case EntryKind::Algebra:
          out.push_back({"validate-algebra", "--algebra", e.name});
          break;
        case EntryKind::Action:
          out.push_back({"validate-action", "--action", e.name});
          break;
        case EntryKind::XMod:
          for (auto const* cmd : {"validate-xmod", "to-groupoid", "roundtrip",
                                  "derivations", "whitehead"}) {
            out.push_back({cmd, "--xmod", e.name});
          }
          for (std::size_t k = 0; k < 2; ++k) {
            out.push_back({"derive", "--xmod", e.name, "--index", std::to_string(k)});
            out.push_back({"derive-chain", "--xmod", e.name, "--index",
                           std::to_string(k)});
          }
          break;
        case EntryKind::Groupoid:
          for (auto const* cmd : {"validate-groupoid", "from-groupoid", "roundtrip"}) {
            out.push_back({cmd, "--groupoid", e.name});
          }
          break;
      }
    }
    for (auto& args : out) {
      args.push_back("--json");
    }
    return out;
  }

  json run_suite() {
    json all = json::array();
    for (auto const& args : cli_suite()) {
      auto j = cli::to_json(cli::run(args));
      j.erase("timing_ms");
      all.push_back(j);
    }
    return all;
  }

  struct Criterion {
    int                      id;
    char const*              title;
    double                   limit_ms;
    std::function<Outcome()> run;
  };

  std::vector<Criterion> const& criteria();

  Outcome determinism() {
    Outcome out;
    auto    first  = run_suite();
    auto    second = run_suite();
    out.require(first.dump() == second.dump(), "CLI reports differ between runs");
    for (auto const& c : criteria()) {
      if (c.id == 9) {
        continue;
      }
      auto a = c.run(), b = c.run();
      out.require(a.findings.dump() == b.findings.dump() && a.ok == b.ok,
                  "criterion " + std::to_string(c.id) + " differs between runs");
    }
    out.findings = {{"cli_reports", first.size()}};
    return out;
  }

  std::vector<Criterion> const& criteria() {
    static std::vector<Criterion> const all{
        {1, "action conditions <=> semidirect product", 10'000, action_equivalence},
        {2, "crossed module / groupoid round trips", 30'000, equivalence_round_trip},
        {3, "interchange law and inverse formula", 60'000, interchange},
        {4, "homotopy <=> natural isomorphism", 60'000, homotopy_equivalence},
        {5, "Whitehead structure on Z_n", 60'000, whitehead_structure},
        {6, "inverse formulas agree", 10'000, inverse_formulas},
        {7, "derived crossed modules and chains", 30'000, derived_modules},
        {8, "derivation into the kernel is flagged", 1'000, kernel_probe},
        {9, "deterministic reports", 0, determinism},
    };
    return all;
  }

}  // namespace

int main() {
  int failures = 0;
  for (auto const& c : criteria()) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok      = false;
      o.failure = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (c.limit_ms > 0 && ms >= c.limit_ms) {
      o.require(false, "time limit exceeded");
    }
    failures += !o.ok;
    std::printf("%s %d %s: %s [%.0f ms", o.ok ? "PASS" : "FAIL", c.id, c.title,
                o.ok ? o.findings.dump().c_str() : o.failure.c_str(), ms);
    if (c.limit_ms > 0) {
      std::printf(", limit %.0f ms", c.limit_ms);
    }
    std::printf("]\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
