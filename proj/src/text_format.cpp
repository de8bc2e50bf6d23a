#include "xmodlab/text_format.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream
#include <optional>  // for optional
#include <sstream>   // for ostringstream, istringstream

#include "xmodlab/catalog.hpp"

namespace xmodlab {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line>  lines;
      std::istringstream in{std::string(text)};
      std::string        raw;
      std::size_t        number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::istringstream words(raw);
        Line               line{number, {}};
        for (std::string w; words >> w;) {
          line.tokens.push_back(std::move(w));
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
      }
      return lines;
    }

    class Parser {
     public:
      Parser(std::string_view text, std::string_view source)
          : lines_(tokenize(text)), source_(source) {}

      Document run() {
        while (pos_ < lines_.size()) {
          Line const& head = lines_[pos_];
          if (head.tokens.size() != 2) {
            fail(head.number, "expected a block header '<kind> <name>'");
          }
          auto const& kind = head.tokens[0];
          auto const& name = head.tokens[1];
          ++pos_;
          try {
            if (kind == "algebra") {
              add(doc_.algebras, name, head, parse_algebra(name));
            } else if (kind == "action") {
              add(doc_.actions, name, head, parse_action());
            } else if (kind == "xmod") {
              add(doc_.xmods, name, head, parse_xmod(name));
            } else if (kind == "xmorphism") {
              add(doc_.morphisms, name, head, parse_morphism());
            } else if (kind == "groupoid") {
              add(doc_.groupoids, name, head, parse_groupoid(name));
            } else if (kind == "homotopy") {
              add(doc_.homotopies, name, head, parse_homotopy());
            } else if (kind == "derivation") {
              add(doc_.derivations, name, head, parse_derivation());
            } else {
              fail(head.number, "unknown block kind '" + kind + "'");
            }
          } catch (Error const& e) {
            if (e.code() == ErrorCode::ParseError) {
              throw;
            }
            fail(head.number, kind + " '" + name + "': " + e.what());
          }
          doc_.blocks.emplace_back(kind, name);
        }
        return std::move(doc_);
      }

     private:
      std::vector<Line> lines_;
      std::size_t       pos_ = 0;
      std::string       source_;
      Document          doc_;

      [[noreturn]] void fail(std::size_t line, std::string const& msg) const {
        throw Error(ErrorCode::ParseError,
                    source_ + ":" + std::to_string(line) + ": " + msg);
      }

      std::size_t here() const {
        return pos_ < lines_.size() ? lines_[pos_].number
                                    : (lines_.empty() ? 1 : lines_.back().number);
      }

      template <typename T>
      void add(std::map<std::string, T>& into,
               std::string const&        name,
               Line const&               head,
               T                         value) {
        if (!into.emplace(name, std::move(value)).second) {
          fail(head.number, "duplicate block name '" + name + "'");
        }
      }

      Line const& next(std::string_view what) {
        if (pos_ >= lines_.size()) {
          fail(here(), "unexpected end of input, expected " + std::string(what));
        }
        return lines_[pos_++];
      }

      //! A line "kw arg1 .. argN"; returns the arguments.
      std::vector<std::string> keyword(std::string_view kw, std::size_t args) {
        Line const& line = next("'" + std::string(kw) + "'");
        if (line.tokens[0] != kw) {
          fail(line.number,
               "expected '" + std::string(kw) + "', found '" + line.tokens[0] + "'");
        }
        if (line.tokens.size() != args + 1) {
          fail(line.number, "'" + std::string(kw) + "' takes "
                                + std::to_string(args) + " argument(s)");
        }
        return {line.tokens.begin() + 1, line.tokens.end()};
      }

      std::size_t number(std::string const& tok, std::size_t line) const {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
          fail(line, "expected a non-negative integer, found '" + tok + "'");
        }
        return value;
      }

      std::vector<Elem> entries(Line const&  line,
                                std::size_t  first,
                                std::size_t  count,
                                std::size_t  bound) {
        if (line.tokens.size() - first != count) {
          fail(line.number, "expected " + std::to_string(count)
                                + " entries, found "
                                + std::to_string(line.tokens.size() - first));
        }
        std::vector<Elem> out;
        for (std::size_t i = first; i < line.tokens.size(); ++i) {
          std::size_t v = number(line.tokens[i], line.number);
          if (v >= bound) {
            fail(line.number, "entry " + line.tokens[i] + " is out of range 0.."
                                  + std::to_string(bound - 1));
          }
          out.push_back(static_cast<Elem>(v));
        }
        return out;
      }

      //! "kw" followed by a row, either on the same line or the next one.
      std::vector<Elem> row(std::string_view kw, std::size_t count, std::size_t bound) {
        Line const& line = next("'" + std::string(kw) + "'");
        if (line.tokens[0] != kw) {
          fail(line.number,
               "expected '" + std::string(kw) + "', found '" + line.tokens[0] + "'");
        }
        if (line.tokens.size() > 1) {
          return entries(line, 1, count, bound);
        }
        if (count == 0) {
          return {};
        }
        return entries(next("a row of " + std::to_string(count) + " entries"), 0,
                       count, bound);
      }

      //! "kw" followed by a table of rows x cols.
      Table table(std::string_view kw, std::size_t rows, std::size_t cols,
                  std::size_t bound) {
        keyword(kw, 0);
        std::vector<Elem> data;
        for (std::size_t r = 0; r < rows; ++r) {
          auto row = entries(next("a table row"), 0, cols, bound);
          data.insert(data.end(), row.begin(), row.end());
        }
        return Table(rows, cols, std::move(data));
      }

      AlgebraPtr algebra_ref(std::string_view kw) {
        std::size_t line = here();
        auto        name = keyword(kw, 1)[0];
        if (auto it = doc_.algebras.find(name); it != doc_.algebras.end()) {
          return it->second;
        }
        try {
          return load_algebra(name);
        } catch (Error const& e) {
          fail(line, e.what());
        }
      }

      template <typename T, typename Load>
      T ref(std::string_view kw, std::map<std::string, T> const& local, Load&& load) {
        std::size_t line = here();
        auto        name = keyword(kw, 1)[0];
        if (auto it = local.find(name); it != local.end()) {
          return it->second;
        }
        try {
          return load(name);
        } catch (Error const& e) {
          if (e.code() == ErrorCode::UnknownName) {
            fail(line, "unknown " + std::string(kw) + " '" + name + "'");
          }
          throw;
        }
      }

      AlgebraPtr parse_algebra(std::string const& name) {
        std::size_t const n = number(keyword("order", 1)[0], lines_[pos_ - 1].number);
        if (n == 0) {
          fail(lines_[pos_ - 1].number, "order must be positive");
        }
        std::size_t const k = number(keyword("binops", 1)[0], lines_[pos_ - 1].number);
        std::vector<std::pair<std::string, std::string>> binary;
        for (std::size_t i = 0; i < k; ++i) {
          Line const& line = next("a binary op line '<name> <opposite>'");
          if (line.tokens.size() != 2) {
            fail(line.number, "expected '<name> <opposite>'");
          }
          binary.emplace_back(line.tokens[0], line.tokens[1]);
        }
        std::size_t const m = number(keyword("unops", 1)[0], lines_[pos_ - 1].number);
        std::vector<std::string> unary;
        for (std::size_t i = 0; i < m; ++i) {
          Line const& line = next("a unary op name");
          if (line.tokens.size() != 1) {
            fail(line.number, "expected a single unary op name");
          }
          unary.push_back(line.tokens[0]);
        }
        auto sig = Signature::from_pairs(binary, unary);
        auto add = table("add", n, n, n);
        auto neg = row("neg", n, n);
        std::vector<Table> tables;
        for (auto const& op : sig.binary_names()) {
          tables.push_back(table(op, n, n, n));
        }
        std::vector<std::vector<Elem>> unops;
        for (auto const& op : sig.unary_names()) {
          unops.push_back(row(op, n, n));
        }
        auto a = make_algebra(name, std::move(sig), add, std::move(neg),
                              std::move(tables), std::move(unops));
        if (!(a->add_table() == add)) {
          throw Error(ErrorCode::ParseError,
                      source_ + ": algebra '" + name
                          + "': the additive identity must be element 0");
        }
        return a;
      }

      ActionSet parse_action() {
        auto B = algebra_ref("actor");
        auto A = algebra_ref("acted");
        auto dot = table("dot", B->order(), A->order(), A->order());
        std::vector<Table> star;
        for (auto const& op : B->signature().binary_names()) {
          star.push_back(table(op, B->order(), A->order(), A->order()));
        }
        return ActionSet(B, A, std::move(dot), std::move(star));
      }

      CrossedModule parse_xmod(std::string const& name) {
        auto A     = algebra_ref("A");
        auto B     = algebra_ref("B");
        auto alpha = row("alpha", A->order(), B->order());
        auto act   = ref("action", doc_.actions, [](auto const& n) {
          return load_action(n);
        });
        return CrossedModule(name, AlgMorphism{A, B, std::move(alpha)}, act);
      }

      XModMorphism parse_morphism() {
        auto load = [](auto const& n) { return load_xmod(n); };
        auto s  = ref("source", doc_.xmods, load);
        auto t  = ref("target", doc_.xmods, load);
        auto f1 = row("f1", s.module()->order(), t.module()->order());
        auto f0 = row("f0", s.base()->order(), t.base()->order());
        return {s, t, AlgMorphism{s.module(), t.module(), std::move(f1)},
                AlgMorphism{s.base(), t.base(), std::move(f0)}};
      }

      InternalGroupoid parse_groupoid(std::string const& name) {
        auto C1  = algebra_ref("C1");
        auto C0  = algebra_ref("C0");
        auto d0  = row("d0", C1->order(), C0->order());
        auto d1  = row("d1", C1->order(), C0->order());
        auto eps = row("eps", C0->order(), C1->order());
        return {name, C1, C0, AlgMorphism{C1, C0, std::move(d0)},
                AlgMorphism{C1, C0, std::move(d1)},
                AlgMorphism{C0, C1, std::move(eps)}};
      }

      XModMorphism morphism_ref(std::string_view kw) {
        return ref(kw, doc_.morphisms, [&](auto const& n) -> XModMorphism {
          throw Error(ErrorCode::UnknownName, n);
        });
      }

      XModHomotopy parse_homotopy() {
        auto f = morphism_ref("from");
        auto g = morphism_ref("to");
        auto d = row("d", f.source.base()->order(), f.target.module()->order());
        return {f, g, std::move(d)};
      }

      Derivation parse_derivation() {
        auto x = ref("xmod", doc_.xmods, [](auto const& n) { return load_xmod(n); });
        auto d = row("d", x.base()->order(), x.module()->order());
        return {x, std::move(d)};
      }
    };

    std::string join(std::vector<Elem> const& row) {
      std::string out;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += std::to_string(row[i]);
      }
      return out;
    }

    void put_table(std::string& out, std::string const& kw, Table const& t) {
      out += kw + "\n";
      for (std::size_t r = 0; r < t.rows(); ++r) {
        out += join(t.row(r)) + "\n";
      }
    }

    void put_row(std::string& out, std::string const& kw,
                 std::vector<Elem> const& row) {
      out += kw + "\n" + join(row) + "\n";
    }

    template <typename T, typename Same>
    std::optional<std::string>
    known(std::vector<std::pair<std::string, T>> const& seen,
          std::string const& name, T const& value, Same&& same,
          std::string& fresh) {
      fresh = name;
      for (int suffix = 2;; ++suffix) {
        bool taken = false;
        for (auto const& [n, v] : seen) {
          if (n == fresh) {
            if (same(v, value)) {
              return fresh;
            }
            taken = true;
          }
        }
        if (!taken) {
          return std::nullopt;
        }
        fresh = name + "-" + std::to_string(suffix);
      }
    }

  }  // namespace

  std::string const& Document::last(std::string_view kind) const {
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      if (it->first == kind) {
        return it->second;
      }
    }
    throw Error(ErrorCode::UsageError,
                "input contains no " + std::string(kind) + " block");
  }

  Document parse_document(std::string_view text, std::string_view source) {
    return Parser(text, source).run();
  }

  Document parse_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
  }

  std::string write_algebra(OmegaAlgebra const& a) {
    auto const& sig = a.signature();
    std::string out = "algebra " + a.name() + "\norder "
                      + std::to_string(a.order()) + "\nbinops "
                      + std::to_string(sig.num_binary()) + "\n";
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      out += sig.binary_name(k) + " " + sig.binary_name(sig.opposite(k)) + "\n";
    }
    out += "unops " + std::to_string(sig.num_unary()) + "\n";
    for (auto const& u : sig.unary_names()) {
      out += u + "\n";
    }
    put_table(out, "add", a.add_table());
    put_row(out, "neg", a.neg_table());
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      put_table(out, sig.binary_name(k), a.binary_table(k));
    }
    for (std::size_t u = 0; u < sig.num_unary(); ++u) {
      put_row(out, sig.unary_name(u), a.unary_table(u));
    }
    return out;
  }

  std::string Writer::algebra(AlgebraPtr const& a) {
    std::string name;
    auto        same = [](AlgebraPtr const& x, AlgebraPtr const& y) {
      return same_structure(x, y);
    };
    if (auto hit = known(algebras_, a->name(), a, same, name)) {
      return *hit;
    }
    algebras_.emplace_back(name, a);
    out_ += write_algebra(a->renamed(name)) + "\n";
    return name;
  }

  std::string Writer::action(ActionSet const& act, std::string const& name) {
    auto B = algebra(act.actor());
    auto A = algebra(act.acted());
    out_ += "action " + name + "\nactor " + B + "\nacted " + A + "\n";
    put_table(out_, "dot", act.dot_table());
    auto const& sig = act.actor()->signature();
    for (std::size_t k = 0; k < sig.num_binary(); ++k) {
      put_table(out_, sig.binary_name(k), act.star_table(k));
    }
    out_ += "\n";
    return name;
  }

  std::string Writer::xmod(CrossedModule const& x) {
    std::string name;
    auto        same = [](CrossedModule const& p, CrossedModule const& q) {
      return same_structure(p, q);
    };
    if (auto hit = known(xmods_, x.name(), x, same, name)) {
      return *hit;
    }
    xmods_.emplace_back(name, x);
    auto A   = algebra(x.module());
    auto B   = algebra(x.base());
    auto act = action(x.action(), name + "-action");
    out_ += "xmod " + name + "\nA " + A + "\nB " + B + "\n";
    put_row(out_, "alpha", x.boundary().map);
    out_ += "action " + act + "\n\n";
    return name;
  }

  std::string Writer::morphism(XModMorphism const& m, std::string const& name) {
    auto s = xmod(m.source);
    auto t = xmod(m.target);
    out_ += "xmorphism " + name + "\nsource " + s + "\ntarget " + t + "\n";
    put_row(out_, "f1", m.top.map);
    put_row(out_, "f0", m.bottom.map);
    out_ += "\n";
    return name;
  }

  std::string Writer::groupoid(InternalGroupoid const& g) {
    auto C1 = algebra(g.arrows);
    auto C0 = algebra(g.objects);
    out_ += "groupoid " + g.name + "\nC1 " + C1 + "\nC0 " + C0 + "\n";
    put_row(out_, "d0", g.source.map);
    put_row(out_, "d1", g.target.map);
    put_row(out_, "eps", g.identity.map);
    out_ += "\n";
    return g.name;
  }

  std::string Writer::homotopy(XModHomotopy const& h, std::string const& name) {
    auto f = morphism(h.from, name + "-from");
    auto g = morphism(h.to, name + "-to");
    out_ += "homotopy " + name + "\nfrom " + f + "\nto " + g + "\n";
    put_row(out_, "d", h.d);
    out_ += "\n";
    return name;
  }

  std::string Writer::derivation(Derivation const& d, std::string const& name) {
    auto x = xmod(d.base);
    out_ += "derivation " + name + "\nxmod " + x + "\n";
    put_row(out_, "d", d.d);
    out_ += "\n";
    return name;
  }

}  // namespace xmodlab
