#include "cli.hpp"

#include <chrono>      // for steady_clock
#include <cstdlib>     // for getenv
#include <filesystem>  // for exists
#include <optional>    // for optional
#include <sstream>     // for istringstream

#include "CLI11.hpp"
#include "xmodlab/catalog.hpp"
#include "xmodlab/derivation.hpp"
#include "xmodlab/derived.hpp"
#include "xmodlab/homotopy.hpp"
#include "xmodlab/text_format.hpp"

namespace xmodlab::cli {

  using nlohmann::json;

  namespace {

    struct Options {
      bool          json       = false;
      bool          seed_order = false;
      std::string   out;
      std::uint64_t budget = kDefaultBudget;
      std::string   file;
      std::string   algebra, action, xmod, groupoid, homotopy, derivation;
      std::string   d_row;
      std::optional<std::size_t> index;
      std::size_t   max_stages = 64;
      std::string   catalog_name;
    };

    // Error raised for an input object that fails its checks; reported with
    // status "invalid".
    struct Invalid {
      std::string message;
    };

    std::uint64_t default_budget() {
      if (char const* env = std::getenv("XMODLAB_BUDGET")) {
        try {
          return std::stoull(env);
        } catch (std::exception const&) {
          throw Error(ErrorCode::UsageError,
                      std::string("XMODLAB_BUDGET is not a number: ") + env);
        }
      }
      return kDefaultBudget;
    }

    ////////////////////////////////////////////////////////////////////////
    // Input resolution
    ////////////////////////////////////////////////////////////////////////

    template <typename T>
    T pick(std::map<std::string, T> const& items, Document const& doc,
           std::string_view kind) {
      return items.at(doc.last(kind));
    }

    // A --kind value is a file when one exists at that path, else a catalog
    // name; without it the positional file is used.
    template <typename T, typename Member, typename Load>
    T resolve(Options const& opt, std::string const& value, Member member,
              std::string_view kind, Load&& load) {
      if (!value.empty()) {
        if (std::filesystem::exists(value)) {
          auto doc = parse_file(value);
          return pick(doc.*member, doc, kind);
        }
        return load(value);
      }
      if (!opt.file.empty()) {
        auto doc = parse_file(opt.file);
        return pick(doc.*member, doc, kind);
      }
      throw Error(ErrorCode::UsageError,
                  "no " + std::string(kind) + " given: pass a file or --"
                      + std::string(kind) + " <file-or-catalog-name>");
    }

    AlgebraPtr algebra_input(Options const& o) {
      return resolve<AlgebraPtr>(o, o.algebra, &Document::algebras, "algebra",
                                 [](auto const& n) { return load_algebra(n); });
    }
    ActionSet action_input(Options const& o) {
      return resolve<ActionSet>(o, o.action, &Document::actions, "action",
                                [](auto const& n) { return load_action(n); });
    }
    // Files holding only derivations or homotopies supply their crossed
    // module too.
    CrossedModule xmod_input(Options const& o) {
      std::string const& path = o.xmod.empty() ? o.file : o.xmod;
      if (!path.empty() && std::filesystem::exists(path)) {
        auto doc = parse_file(path);
        if (doc.xmods.empty() && !doc.derivations.empty()) {
          return doc.derivations.at(doc.last("derivation")).base;
        }
        if (doc.xmods.empty() && !doc.homotopies.empty()) {
          return doc.homotopies.at(doc.last("homotopy")).from.source;
        }
      }
      return resolve<CrossedModule>(o, o.xmod, &Document::xmods, "xmod",
                                    [](auto const& n) { return load_xmod(n); });
    }
    InternalGroupoid groupoid_input(Options const& o) {
      return resolve<InternalGroupoid>(o, o.groupoid, &Document::groupoids,
                                       "groupoid",
                                       [](auto const& n) { return load_groupoid(n); });
    }
    XModHomotopy homotopy_input(Options const& o) {
      return resolve<XModHomotopy>(
          o, o.homotopy, &Document::homotopies, "homotopy",
          [](auto const& n) -> XModHomotopy {
            throw Error(ErrorCode::FileNotFound, "no such file '" + n + "'");
          });
    }

    std::vector<Elem> parse_row(std::string const& text) {
      std::istringstream in(text);
      std::vector<Elem>  row;
      for (std::string tok; in >> tok;) {
        try {
          std::size_t used = 0;
          auto        v    = std::stoul(tok, &used);
          if (used != tok.size()) {
            throw std::invalid_argument(tok);
          }
          row.push_back(static_cast<Elem>(v));
        } catch (std::exception const&) {
          throw Error(ErrorCode::UsageError, "--d: '" + tok + "' is not an index");
        }
      }
      return row;
    }

    // --derivation, or an xmod with --d or --index; a file holding a
    // derivation block may also be given positionally.
    Derivation derivation_input(Options const& o) {
      if (!o.derivation.empty()
          || (o.xmod.empty() && o.d_row.empty() && !o.index)) {
        return resolve<Derivation>(
            o, o.derivation, &Document::derivations, "derivation",
            [](auto const& n) -> Derivation {
              throw Error(ErrorCode::FileNotFound, "no such file '" + n + "'");
            });
      }
      auto x = xmod_input(o);
      if (!o.d_row.empty()) {
        auto row = parse_row(o.d_row);
        if (row.size() != x.base()->order()) {
          throw Error(ErrorCode::UsageError,
                      "--d needs " + std::to_string(x.base()->order())
                          + " entries");
        }
        check_range(row, x.module()->order(), "--d");
        return {x, std::move(row)};
      }
      auto all = enumerate_derivations(x, o.budget);
      std::size_t k = o.index.value_or(0);
      if (k >= all.size()) {
        throw Error(ErrorCode::UsageError,
                    "--index " + std::to_string(k) + " but there are only "
                        + std::to_string(all.size()) + " derivations");
      }
      return all[k];
    }

    ////////////////////////////////////////////////////////////////////////
    // JSON pieces
    ////////////////////////////////////////////////////////////////////////

    json table_json(Table const& t) {
      json rows = json::array();
      for (std::size_t r = 0; r < t.rows(); ++r) {
        rows.push_back(t.row(r));
      }
      return rows;
    }

    json report_json(ValidationReport const& rep) {
      json v = json::array();
      for (auto const& x : rep.violations()) {
        v.push_back({{"condition", x.condition},
                     {"op", x.op},
                     {"witness", x.witness},
                     {"detail", x.detail}});
      }
      return {{"valid", rep.valid()}, {"violations", v}, {"notes", rep.notes()}};
    }

    json action_json(ActionSet const& act) {
      json star = json::object();
      auto const& sig = act.actor()->signature();
      for (std::size_t k = 0; k < sig.num_binary(); ++k) {
        star[sig.binary_name(k)] = table_json(act.star_table(k));
      }
      return {{"actor", act.actor()->name()},
              {"acted", act.acted()->name()},
              {"dot", table_json(act.dot_table())},
              {"star", star},
              {"digest", action_digest(act)}};
    }

    json xmod_json(CrossedModule const& x) {
      return {{"name", x.name()},
              {"A", x.module()->name()},
              {"B", x.base()->name()},
              {"orders", {x.module()->order(), x.base()->order()}},
              {"alpha", x.boundary().map},
              {"action", action_json(x.action())}};
    }

    json groupoid_json(InternalGroupoid const& g) {
      return {{"name", g.name},
              {"C1", g.arrows->name()},
              {"C0", g.objects->name()},
              {"orders", {g.arrows->order(), g.objects->order()}},
              {"d0", g.source.map},
              {"d1", g.target.map},
              {"eps", g.identity.map}};
    }

    std::string row_text(std::vector<Elem> const& row) {
      std::string out = "[";
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? " " : "") + std::to_string(row[i]);
      }
      return out + "]";
    }

    std::string violations_text(ValidationReport const& rep) {
      std::string out;
      for (auto const& v : rep.violations()) {
        out += "  " + v.condition + (v.op.empty() ? "" : " [" + v.op + "]")
               + " witness " + row_text(v.witness)
               + (v.detail.empty() ? "" : " (" + v.detail + ")") + "\n";
      }
      for (auto const& n : rep.notes()) {
        out += "  note: " + n + "\n";
      }
      return out;
    }

    void validation(Report& r, ValidationReport const& rep, std::string const& what) {
      r.findings.update(report_json(rep));
      r.text += what + (rep.valid() ? ": valid\n" : ": INVALID\n")
                + violations_text(rep);
      if (!rep.valid()) {
        r.status    = "invalid";
        r.exit_code = 1;
      }
    }

    json derivation_json(Derivation const& d, bool regular) {
      return {{"d", d.d},
              {"theta", module_endomorphism(d)},
              {"sigma", base_endomorphism(d)},
              {"regular", regular},
              {"image_in_kernel", image_in_kernel(d)},
              {"lemma_counterexample", image_in_kernel(d) && !is_zero(d)}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    void cmd_validate_algebra(Report& r, Options const& o) {
      auto a = algebra_input(o);
      r.findings["name"]  = a->name();
      r.findings["order"] = a->order();
      validation(r, validate_algebra(*a), "algebra " + a->name());
    }

    void cmd_validate_action(Report& r, Options const& o) {
      auto act = action_input(o);
      r.findings["action"] = action_json(act);
      auto rep             = check_derived_action(act);
      auto sp              = semidirect_product(act);
      bool recovers = sp.report.valid()
                      && action_from_section(canonical_extension(act)) == act;
      r.findings["semidirect_valid"]    = sp.report.valid();
      r.findings["semidirect_recovers"] = recovers;
      validation(r, rep, "action of " + act.actor()->name() + " on "
                             + act.acted()->name());
      if (rep.valid() != recovers) {
        throw Error(ErrorCode::InternalInconsistency,
                    "action conditions and semidirect product disagree");
      }
    }

    void cmd_validate_xmod(Report& r, Options const& o) {
      auto x           = xmod_input(o);
      r.findings["xmod"] = xmod_json(x);
      validation(r, validate_crossed_module(x), "crossed module " + x.name());
    }

    void cmd_validate_groupoid(Report& r, Options const& o) {
      auto g = groupoid_input(o);
      r.findings["groupoid"] = groupoid_json(g);
      validation(r, validate_groupoid(g), "groupoid " + g.name);
    }

    void cmd_to_groupoid(Report& r, Options const& o) {
      auto   x = xmod_input(o);
      auto   g = to_groupoid(x);
      Writer w;
      w.groupoid(g);
      r.findings["groupoid"] = groupoid_json(g);
      r.findings["file"]     = w.text();
      r.text += w.text();
    }

    void cmd_from_groupoid(Report& r, Options const& o) {
      auto   g = groupoid_input(o);
      auto   x = to_crossed_module(g);
      Writer w;
      w.xmod(x);
      r.findings["xmod"] = xmod_json(x);
      r.findings["file"] = w.text();
      r.text += w.text();
    }

    void require_valid_xmod(CrossedModule const& x) {
      auto rep = validate_crossed_module(x);
      if (!rep.valid()) {
        throw Invalid{"crossed module " + x.name() + " is not valid:\n"
                      + violations_text(rep)};
      }
    }

    void cmd_roundtrip(Report& r, Options const& o) {
      if (!o.groupoid.empty()) {
        auto g   = groupoid_input(o);
        auto rep = validate_groupoid(g);
        if (!rep.valid()) {
          throw Invalid{"groupoid " + g.name + " is not valid:\n"
                        + violations_text(rep)};
        }
        auto f = roundtrip(g);
        r.findings["kind"]       = "groupoid";
        r.findings["name"]       = g.name;
        r.findings["on_arrows"]  = f.on_arrows.map;
        r.findings["on_objects"] = f.on_objects.map;
        r.text += "groupoid " + g.name + " round trip: isomorphism\n  arrows "
                  + row_text(f.on_arrows.map) + "\n  objects "
                  + row_text(f.on_objects.map) + "\n";
        return;
      }
      auto x = xmod_input(o);
      require_valid_xmod(x);
      auto m = roundtrip(x);
      r.findings["kind"]   = "xmod";
      r.findings["name"]   = x.name();
      r.findings["top"]    = m.top.map;
      r.findings["bottom"] = m.bottom.map;
      r.text += "crossed module " + x.name() + " round trip: isomorphism\n  top "
                + row_text(m.top.map) + "\n  bottom " + row_text(m.bottom.map)
                + "\n";
    }

    void cmd_derivations(Report& r, Options const& o) {
      auto x = xmod_input(o);
      require_valid_xmod(x);
      auto all = enumerate_derivations(x, o.budget);
      json items = json::array();
      std::size_t flagged = 0;
      r.text += "crossed module " + x.name() + ": " + std::to_string(all.size())
                + " derivations\n";
      for (auto const& d : all) {
        bool regular = is_regular(d, all).regular;
        items.push_back(derivation_json(d, regular));
        bool lemma = image_in_kernel(d) && !is_zero(d);
        flagged += lemma;
        r.text += "  " + row_text(d.d) + (regular ? " regular" : " singular")
                  + (lemma ? "  FLAG: nonzero with image in ker alpha" : "")
                  + "\n";
      }
      r.findings["xmod"]                  = x.name();
      r.findings["count"]                 = all.size();
      r.findings["derivations"]           = items;
      r.findings["lemma_counterexamples"] = flagged;
    }

    void cmd_whitehead(Report& r, Options const& o) {
      auto x = xmod_input(o);
      require_valid_xmod(x);
      auto all = enumerate_derivations(x, o.budget);
      auto w   = whitehead_group(x, o.budget);
      json elements = json::array();
      for (auto const& d : w.elements) {
        elements.push_back(d.d);
      }
      auto id = identify_group(w.group);
      r.findings["xmod"]        = x.name();
      r.findings["derivations"] = all.size();
      r.findings["order"]       = w.elements.size();
      r.findings["elements"]    = elements;
      r.findings["cayley"]      = table_json(w.cayley);
      r.findings["composition"] = "wcomp";
      r.findings["identified"]  = id ? json(*id) : json(nullptr);
      r.text += "crossed module " + x.name() + ": " + std::to_string(all.size())
                + " derivations, Whitehead group of order "
                + std::to_string(w.elements.size())
                + (id ? " (" + *id + ")" : "") + "\n";
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        r.text += "  " + std::to_string(i) + ": " + row_text(w.elements[i].d)
                  + "  wcomp row " + row_text(w.cayley.row(i)) + "\n";
      }
    }

    void cmd_homotopy_check(Report& r, Options const& o) {
      auto h   = homotopy_input(o);
      auto rep = validate_xmod_homotopy(h);
      bool endpoints_ok = check_xmod_morphism(h.from).valid()
                          && check_xmod_morphism(h.to).valid();
      if (endpoints_ok) {
        auto n   = natural_candidate(to_functor(h.from), to_functor(h.to), h.d);
        auto nat = validate_groupoid_homotopy(n);
        if (nat.valid() != rep.valid()) {
          throw Error(ErrorCode::InternalInconsistency,
                      "homotopy and natural isomorphism verdicts disagree");
        }
        r.findings["eta"]              = n.eta.map;
        r.findings["natural_iso"]      = report_json(nat);
      }
      validation(r, rep, "homotopy");
    }

    void cmd_derive(Report& r, Options const& o) {
      auto d = derivation_input(o);
      require_valid_xmod(d.base);
      auto rep = check_derivation(d.base, d.d);
      r.findings["xmod"] = d.base.name();
      r.findings["d"]    = d.d;
      if (!rep.valid()) {
        validation(r, rep, "derivation");
        return;
      }
      auto general = derived_action_general(d);
      bool regular = is_regular(d, o.budget).regular;
      r.findings["regular"]        = regular;
      r.findings["general_action"] = action_json(general);
      r.text += "derivation " + row_text(d.d) + " of " + d.base.name() + ": "
                + (regular ? "regular" : "singular") + "\n  derived action digest "
                + action_digest(general) + "\n";
      if (regular) {
        auto x   = derived_crossed_module(d);
        auto iso = derived_iso(d);
        auto t   = transport_derivation(d);
        r.findings["derived_xmod"] = xmod_json(x);
        r.findings["iso"] = {{"top", iso.top.map}, {"bottom", iso.bottom.map},
                             {"covering", is_covering(iso)}};
        r.findings["transported"] = t.d;
        r.text += "  derived boundary " + row_text(x.boundary().map)
                  + "\n  iso (1, sigma^-1) bottom " + row_text(iso.bottom.map)
                  + "\n  transported derivation " + row_text(t.d) + "\n";
      }
    }

    void cmd_derive_chain(Report& r, Options const& o) {
      auto d = derivation_input(o);
      require_valid_xmod(d.base);
      auto rep = check_derivation(d.base, d.d);
      if (!rep.valid()) {
        r.findings["d"] = d.d;
        validation(r, rep, "derivation");
        return;
      }
      auto chain  = iterate_chain(d, o.max_stages);
      json stages = json::array();
      r.text += "chain of " + d.base.name() + " from " + row_text(d.d) + ": period "
                + std::to_string(chain.period) + "\n";
      for (std::size_t k = 0; k < chain.stages.size(); ++k) {
        auto const& s = chain.stages[k];
        json        stage{{"stage", k},
                          {"boundary", s.xmod.boundary().map},
                          {"action_digest", action_digest(s.xmod.action())},
                          {"derivation", s.derivation.d}};
        if (s.link) {
          stage["iso"] = {{"top", s.link->top.map}, {"bottom", s.link->bottom.map}};
        }
        stages.push_back(stage);
        r.text += "  stage " + std::to_string(k) + ": boundary "
                  + row_text(s.xmod.boundary().map) + " action "
                  + action_digest(s.xmod.action()) + "\n";
      }
      r.findings["xmod"]   = d.base.name();
      r.findings["d"]      = d.d;
      r.findings["period"] = chain.period;
      r.findings["stages"] = stages;
    }

    void cmd_catalog_list(Report& r) {
      json entries = json::array();
      for (auto const& e : catalog()) {
        entries.push_back({{"name", e.name},
                           {"kind", std::string(to_string(e.kind))},
                           {"description", e.description}});
        r.text += e.name + "  (" + std::string(to_string(e.kind)) + ") "
                  + e.description + "\n";
      }
      r.findings["entries"] = entries;
    }

    void cmd_catalog_show(Report& r, Options const& o) {
      auto const& e = load(o.catalog_name);
      Writer      w;
      std::visit(
          [&](auto const& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, AlgebraPtr>) {
              w.algebra(payload);
            } else if constexpr (std::is_same_v<T, ActionSet>) {
              w.action(payload, e.name);
            } else if constexpr (std::is_same_v<T, CrossedModule>) {
              w.xmod(payload);
            } else {
              w.groupoid(payload);
            }
          },
          e.payload);
      r.findings["name"]        = e.name;
      r.findings["kind"]        = std::string(to_string(e.kind));
      r.findings["description"] = e.description;
      r.findings["file"]        = w.text();
      r.text += w.text();
    }

    bool invalid_input(ErrorCode c) {
      switch (c) {
        case ErrorCode::InvalidAction:
        case ErrorCode::InvalidMorphism:
        case ErrorCode::InvalidCrossedModule:
        case ErrorCode::InvalidGroupoid:
        case ErrorCode::InvalidHomotopy:
        case ErrorCode::InvalidDerivation:
        case ErrorCode::NotRegular:
        case ErrorCode::NotDeltaImage:
        case ErrorCode::EndpointMismatch:
        case ErrorCode::NotASection:
        case ErrorCode::NotKernel: return true;
        default: return false;
      }
    }

  }  // namespace

  Report run(std::vector<std::string> const& args) {
    Report  r;
    Options o;
    auto    start = std::chrono::steady_clock::now();

    CLI::App app{"Finite groups with operations, crossed modules and internal "
                 "groupoids.",
                 "xmodlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--budget", o.budget, "bound on enumeration candidates");
    app.add_option("--out", o.out, "write the report to this file");
    app.add_flag("--seed-order", o.seed_order,
                 "accepted for compatibility; output order is always fixed");

    auto sub = [&](char const* name, char const* help) {
      auto* s = app.add_subcommand(name, help);
      s->add_option("file", o.file, "input file");
      return s;
    };
    auto with = [&](CLI::App* s, char const* flag, std::string& into, char const* what) {
      s->add_option(flag, into, std::string(what) + " file or catalog name");
    };

    auto* va = sub("validate-algebra", "check the axioms of an algebra");
    with(va, "--algebra", o.algebra, "algebra");
    auto* vc = sub("validate-action", "check the derived-action conditions");
    with(vc, "--action", o.action, "action");
    auto* vx = sub("validate-xmod", "check a crossed module");
    with(vx, "--xmod", o.xmod, "crossed module");
    auto* vg = sub("validate-groupoid", "check an internal groupoid");
    with(vg, "--groupoid", o.groupoid, "groupoid");
    auto* tg = sub("to-groupoid", "internal groupoid of a crossed module");
    with(tg, "--xmod", o.xmod, "crossed module");
    auto* fg = sub("from-groupoid", "crossed module of an internal groupoid");
    with(fg, "--groupoid", o.groupoid, "groupoid");
    auto* rt = sub("roundtrip", "isomorphism to the double conversion");
    with(rt, "--xmod", o.xmod, "crossed module");
    with(rt, "--groupoid", o.groupoid, "groupoid");
    auto* dv = sub("derivations", "enumerate derivations");
    with(dv, "--xmod", o.xmod, "crossed module");
    auto* wh = sub("whitehead", "Whitehead group of regular derivations");
    with(wh, "--xmod", o.xmod, "crossed module");
    auto* hc = sub("homotopy-check", "check a homotopy and its natural isomorphism");
    with(hc, "--homotopy", o.homotopy, "homotopy");
    auto* de = sub("derive", "derived action and crossed module of a derivation");
    auto* dc = sub("derive-chain", "chain of derived crossed modules");
    for (auto* s : {de, dc}) {
      with(s, "--xmod", o.xmod, "crossed module");
      with(s, "--derivation", o.derivation, "derivation");
      s->add_option("--d", o.d_row, "derivation table, e.g. \"0 2 0 2\"");
      s->add_option("--index", o.index, "index into the enumerated derivations");
    }
    dc->add_option("--max-stages", o.max_stages, "stage limit")
        ->check(CLI::PositiveNumber);
    auto* cat  = app.add_subcommand("catalog", "built-in objects");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "list entries");
    auto* show = cat->add_subcommand("show", "print an entry in file format");
    show->add_option("name", o.catalog_name, "entry name")->required();

    for (auto const& a : args) {
      r.json = r.json || a == "--json";
    }
    try {
      o.budget = default_budget();
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      r.command   = args.empty() ? "" : args.front();
      r.exit_code = e.get_exit_code() == 0 ? 0 : 2;
      r.status    = r.exit_code == 0 ? "ok" : "error";
      r.text      = r.exit_code == 0 ? app.help() : std::string(e.what()) + "\n";
      if (r.exit_code != 0) {
        r.findings["error"] = {{"code", "UsageError"}, {"message", e.what()}};
      }
      return r;
    } catch (Error const& e) {
      r.exit_code         = 2;
      r.status            = "error";
      r.text              = std::string(e.what()) + "\n";
      r.findings["error"] = {{"code", std::string(to_string(e.code()))},
                             {"message", e.what()}};
      return r;
    }
    r.json = o.json;
    r.out  = o.out;

    try {
      CLI::App* chosen = app.get_subcommands().front();
      r.command        = chosen->get_name();
      if (chosen == va) cmd_validate_algebra(r, o);
      else if (chosen == vc) cmd_validate_action(r, o);
      else if (chosen == vx) cmd_validate_xmod(r, o);
      else if (chosen == vg) cmd_validate_groupoid(r, o);
      else if (chosen == tg) cmd_to_groupoid(r, o);
      else if (chosen == fg) cmd_from_groupoid(r, o);
      else if (chosen == rt) cmd_roundtrip(r, o);
      else if (chosen == dv) cmd_derivations(r, o);
      else if (chosen == wh) cmd_whitehead(r, o);
      else if (chosen == hc) cmd_homotopy_check(r, o);
      else if (chosen == de) cmd_derive(r, o);
      else if (chosen == dc) cmd_derive_chain(r, o);
      else if (list->parsed()) {
        r.command = "catalog list";
        cmd_catalog_list(r);
      } else if (show->parsed()) {
        r.command = "catalog show";
        cmd_catalog_show(r, o);
      }
    } catch (Invalid const& e) {
      r.status            = "invalid";
      r.exit_code         = 1;
      r.findings["error"] = {{"code", "InvalidInput"}, {"message", e.message}};
      r.text += e.message;
    } catch (Error const& e) {
      bool invalid        = invalid_input(e.code());
      r.status            = invalid ? "invalid" : "error";
      r.exit_code         = invalid ? 1 : 2;
      r.findings["error"] = {{"code", std::string(to_string(e.code()))},
                             {"message", e.what()}};
      r.text += std::string(e.what()) + "\n";
    }
    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
  }

  json to_json(Report const& r) {
    return {{"schema", 1},
            {"command", r.command},
            {"status", r.status},
            {"findings", r.findings},
            {"timing_ms", r.timing_ms}};
  }

  std::string render(Report const& r) {
    if (r.json) {
      return to_json(r).dump(2) + "\n";
    }
    return r.text;
  }

}  // namespace xmodlab::cli
