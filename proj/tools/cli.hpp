#pragma once

// The coxrep command-line tool. run() is separate from main() so the test
// suite can drive it in-process.

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxrep/errors.hpp"
#include "coxrep/io.hpp"
#include "coxrep/linrep.hpp"
#include "coxrep/quiver.hpp"
#include "coxrep/roots.hpp"
#include "coxrep/torsion.hpp"
#include "coxrep/weyl.hpp"

namespace coxrep::cli {

using io::json;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string quiver_path;
  std::string rep_path;
  std::string rep2_path;
  std::string class_path;
  std::optional<std::string> word;
  std::string beta, gamma, vector;
  int field = 2;
  std::optional<long long> height_bound;
  std::optional<std::size_t> length_bound;
  std::string format = "json";
  std::size_t vertex = 0;
};

/// "1,2,3" -> {1,2,3}; "" and "e" are the empty word.
inline Word parse_word(const std::string& s) {
  Word w;
  if (s.empty() || s == "e") return w;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || v < 1) throw UsageError("bad letter \"" + tok + "\" in --word");
    w.push_back(static_cast<Vertex>(v));
  }
  return w;
}

inline IntVector parse_vector(const std::string& s, const char* flag) {
  IntVector v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      v.emplace_back(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad entry \"") + tok + "\" in " + flag);
    }
  }
  if (v.empty()) throw UsageError(std::string(flag) + " needs comma-separated integers");
  return v;
}

inline std::string roots_text(std::vector<IntVector> roots) {
  std::sort(roots.begin(), roots.end());
  if (roots.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < roots.size(); ++k) s += (k ? ", " : "") + to_string(roots[k]);
  return s + "}";
}

inline std::string word_text(const Word& w) { return to_string(w); }

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  Options opt;

  Quiver quiver() const { return io::quiver_from_json(io::read_json_file(opt.quiver_path)); }
  FieldSpec field() const { return FieldSpec(opt.field); }

  Representation rep(const Quiver& q, const std::string& path) const {
    return io::representation_from_json(io::read_json_file(path), q, opt.field);
  }

  Word word() const { return parse_word(opt.word.value_or("")); }
  bool table() const { return opt.format == "table"; }

  void emit(const json& j) { out_ << j.dump() << "\n"; }
  void line(const std::string& s) { out_ << s << "\n"; }

  // -- quiver ---------------------------------------------------------------

  void quiver_show() {
    auto q = quiver();
    json kinds = json::array();
    for (Vertex i = 1; i <= q.num_vertices(); ++i) kinds.push_back(to_string(vertex_kind(q, i)));
    auto c = coxeter_of_quiver(q).word;
    if (table()) {
      line("vertices: " + std::to_string(q.num_vertices()));
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        line("arrow " + std::to_string(a) + ": " + std::to_string(q.arrow(a).source) + " -> " +
             std::to_string(q.arrow(a).target));
      }
      for (Vertex i = 1; i <= q.num_vertices(); ++i) {
        line("vertex " + std::to_string(i) + ": " + to_string(vertex_kind(q, i)));
      }
      line("coxeter: " + word_text(c));
      line("type: " + to_string(dynkin_type(q)));
      return;
    }
    json j = io::to_json(q);
    j["kinds"] = kinds;
    j["coxeter"] = io::to_json(c);
    j["type"] = to_string(dynkin_type(q));
    emit(j);
  }

  void quiver_mutate() {
    auto m = mutate_at(quiver(), opt.vertex);
    if (table()) {
      for (const auto& a : m.arrows()) line(std::to_string(a.source) + " -> " + std::to_string(a.target));
      return;
    }
    emit(io::to_json(m));
  }

  void quiver_type() {
    auto t = dynkin_type(quiver());
    if (table()) return line(to_string(t));
    emit(json{{"type", to_string(t)}, {"dynkin", t.is_dynkin()}});
  }

  // -- form -----------------------------------------------------------------

  void form(bool symmetric) {
    auto q = quiver();
    auto b = parse_vector(opt.beta, "--beta");
    auto g = parse_vector(opt.gamma, "--gamma");
    check_length(q, b);
    check_length(q, g);
    Integer v = symmetric ? sym_form(q, b, g) : euler_form(q, b, g);
    if (table()) return line(v.str());
    emit(io::to_json(v));
  }

  // -- weyl -----------------------------------------------------------------

  void weyl_inv() {
    auto q = quiver();
    auto w = word();
    auto inv = inversion_set(q, w);
    if (table()) {
      line("w | inv(w)");
      line(word_text(w) + " | " + roots_text(inv.roots));
      return;
    }
    emit(io::to_json(inv.roots));
  }

  void weyl_reduce() {
    auto e = WeylElement::from_word(quiver(), word());
    if (table()) return line(word_text(e.word()));
    emit(io::to_json(e));
  }

  void weyl_descent() {
    auto q = quiver();
    bool d = left_descent(q, opt.vertex, WeylElement::from_word(q, word()));
    if (table()) return line(d ? "yes" : "no");
    emit(d);
  }

  // -- roots ----------------------------------------------------------------

  void roots_list() {
    auto q = quiver();
    RootSet rs;
    if (opt.height_bound) {
      rs = positive_real_roots(q, Integer(*opt.height_bound));
    } else if (dynkin_type(q).is_dynkin()) {
      rs = dynkin_positive_roots(q);
    } else {
      throw ScopeError("non-Dynkin quiver: pass --height-bound");
    }
    if (table()) {
      for (const auto& r : rs.roots) line(to_string(r));
      line(rs.complete ? "(complete)" : "(truncated at the height bound)");
      return;
    }
    emit(json{{"roots", io::to_json(rs.roots)}, {"complete", rs.complete}});
  }

  void roots_classify() {
    auto q = quiver();
    auto a = parse_vector(opt.vector, "--vector");
    auto c = classify_vector(q, a, Integer(opt.height_bound.value_or(10000)));
    if (table()) return line(to_string(a) + ": " + to_string(c));
    emit(to_string(c));
  }

  // -- sortable -------------------------------------------------------------

  void sortable_check() {
    auto q = quiver();
    bool s = is_c_sortable(q, WeylElement::from_word(q, word()));
    if (table()) return line(s ? "sortable" : "not sortable");
    emit(s);
  }

  void sortable_enumerate() {
    auto q = quiver();
    auto all = enumerate_c_sortable(q, opt.length_bound);
    if (table()) {
      line("w | inv(w)");
      for (const auto& w : all) line(word_text(w.word()) + " | " + roots_text(inversion_set(w).roots));
      return;
    }
    json arr = json::array();
    for (const auto& w : all) {
      arr.push_back(json{{"word", io::to_json(w.word())}, {"inversions", io::to_json(inversion_set(w).roots)}});
    }
    emit(arr);
  }

  void sortable_count() {
    auto n = enumerate_c_sortable(quiver(), opt.length_bound).size();
    if (table()) return line(std::to_string(n));
    emit(n);
  }

  // -- rep ------------------------------------------------------------------

  void rep_hom() {
    auto q = quiver();
    auto v = rep(q, opt.rep_path);
    auto w = rep(q, opt.rep2_path.empty() ? opt.rep_path : opt.rep2_path);
    auto h = hom_basis(v, w);
    if (table()) return line("dim Hom = " + std::to_string(h.dimension()));
    json basis = json::array();
    for (const auto& f : h.basis) {
      json comps = json::object();
      for (Vertex i = 1; i <= q.num_vertices(); ++i) comps[std::to_string(i)] = io::to_json(f.at(i));
      basis.push_back(comps);
    }
    emit(json{{"dimension", h.dimension()}, {"basis", basis}});
  }

  void rep_ext() {
    auto q = quiver();
    auto v = rep(q, opt.rep_path);
    auto w = rep(q, opt.rep2_path.empty() ? opt.rep_path : opt.rep2_path);
    auto e = ext1_dim(v, w);
    if (table()) return line("dim Ext1 = " + std::to_string(e));
    emit(json{{"dimension", e}});
  }

  void rep_reflect() {
    auto q = quiver();
    auto v = rep(q, opt.rep_path);
    auto kind = vertex_kind(q, opt.vertex);
    Representation r = kind == VertexKind::Source ? reflect_minus(v, opt.vertex) : reflect_plus(v, opt.vertex);
    if (table()) {
      line(to_string(v.dim_vector()) + " -> " + to_string(r.dim_vector()));
      return;
    }
    emit(json{{"functor", kind == VertexKind::Source ? "R-" : "R+"},
              {"quiver", io::to_json(r.quiver())},
              {"rep", io::to_json(r)}});
  }

  void rep_decompose() {
    auto q = quiver();
    auto d = decompose(rep(q, opt.rep_path));
    if (table()) {
      if (d.empty()) line("0");
      for (const auto& [root, m] : d) line(to_string(root) + " x" + std::to_string(m));
      return;
    }
    emit(io::to_json(d));
  }

  void rep_indec() {
    auto q = quiver();
    auto v = indec_of_real_root(q, parse_vector(opt.vector, "--vector"), field());
    if (table()) {
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        line("arrow " + std::to_string(a) + " (" + v.mat(a).shape() + "): " + io::to_json(v.mat(a)).dump());
      }
      return;
    }
    emit(io::to_json(v));
  }

  // -- tfc ------------------------------------------------------------------

  void tfc_of_word() {
    auto q = quiver();
    auto f = tfc_of_sortable(q, WeylElement::from_word(q, word()), field());
    if (table()) return line(word_text(word()) + " | " + roots_text(f.roots()));
    emit(io::to_json(f));
  }

  void tfc_to_word() {
    auto q = quiver();
    auto f = io::class_from_json(io::read_json_file(opt.class_path), q, field());
    auto w = sortable_of_tfc(q, f, /*checked=*/dynkin_type(q).is_dynkin());
    if (table()) return line(word_text(w.word()));
    emit(io::to_json(w));
  }

  void tfc_enumerate() {
    auto q = quiver();
    auto classes = enumerate_tfc(q, field());
    if (table()) {
      line("w | F(w)");
      for (const auto& f : classes) line(word_text(sortable_of_tfc(q, f).word()) + " | " + roots_text(f.roots()));
      return;
    }
    json arr = json::array();
    for (const auto& f : classes) arr.push_back(io::to_json(f.roots()));
    emit(json{{"quiver", io::to_json(q)}, {"count", classes.size()}, {"classes", arr}});
  }

  void tfc_verify() {
    auto q = quiver();
    auto r = verify_bijection(q, field());
    if (table()) {
      line("w | F(w)");
      for (const auto& row : r.rows) line(word_text(row.word) + " | " + roots_text(row.roots));
      line("sortable: " + std::to_string(r.sortable_count) + ", torsion-free: " +
           std::to_string(r.tfc_count) + ", " + (r.pass ? "PASS" : "FAIL"));
      for (const auto& g : r.gaps) line("gap: " + g);
      return;
    }
    emit(io::to_json(r));
  }

 private:
  std::ostream& out_;
};

}  // namespace detail

inline void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

/// Runs one command. Returns 0 on success, 2 on a usage error (message on
/// `err`), 1 on a domain error (error JSON on `err`).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Runner r(out);
  auto& o = r.opt;
  CLI::App app{"Quivers, Weyl groups, c-sortable elements and torsion-free classes", "coxrep"};
  app.require_subcommand(1);
  std::function<void()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<void()> fn) {
    auto* c = parent->add_subcommand(name, help);
    c->add_option("--quiver", o.quiver_path, "quiver JSON file")->required();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto word = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--word", o.word, "comma-separated letters, e.g. 1,2,1");
    if (required) opt->required();
  };
  auto field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "characteristic p")->check(CLI::IsMember({2, 3, 5}));
  };
  auto vertex = [&](CLI::App* c) { c->add_option("--vertex", o.vertex, "vertex number")->required(); };

  auto* gq = group("quiver", "inspect quivers");
  leaf(gq, "show", "arrows, vertex kinds, Coxeter element, type", [&] { r.quiver_show(); });
  vertex(leaf(gq, "mutate", "reverse the arrows at a sink or source", [&] { r.quiver_mutate(); }));
  leaf(gq, "type", "Dynkin type", [&] { r.quiver_type(); });

  auto* gf = group("form", "Euler and symmetric forms");
  for (bool sym : {false, true}) {
    auto* c = leaf(gf, sym ? "sym" : "euler", sym ? "(beta, gamma)" : "<beta, gamma>", [&r, sym] { r.form(sym); });
    c->add_option("--beta", o.beta, "e.g. 1,0")->required();
    c->add_option("--gamma", o.gamma, "e.g. 1,1")->required();
  }

  auto* gw = group("weyl", "Weyl group elements");
  word(leaf(gw, "inv", "inversion set of a reduced word", [&] { r.weyl_inv(); }));
  word(leaf(gw, "reduce", "reduced word and matrix", [&] { r.weyl_reduce(); }));
  {
    auto* c = leaf(gw, "descent", "is s_i a left descent", [&] { r.weyl_descent(); });
    word(c);
    vertex(c);
  }

  auto* gr = group("roots", "real and imaginary roots");
  leaf(gr, "list", "positive real roots", [&] { r.roots_list(); })
      ->add_option("--height-bound", o.height_bound, "maximum height")
      ->check(CLI::PositiveNumber);
  {
    auto* c = leaf(gr, "classify", "classify an integer vector", [&] { r.roots_classify(); });
    c->add_option("--vector", o.vector, "e.g. 1,1")->required();
    c->add_option("--height-bound", o.height_bound, "reflection step limit")->check(CLI::PositiveNumber);
  }

  auto* gs = group("sortable", "c-sortable elements");
  word(leaf(gs, "check", "is the element c-sortable", [&] { r.sortable_check(); }));
  for (auto [name, fn] : {std::pair<const char*, void (detail::Runner::*)()>{"enumerate", &detail::Runner::sortable_enumerate},
                          {"count", &detail::Runner::sortable_count}}) {
    leaf(gs, name, std::string(name) + " c-sortable elements", [&r, fn] { (r.*fn)(); })
        ->add_option("--length-bound", o.length_bound, "maximum length (required outside Dynkin type)");
  }

  auto* gp = group("rep", "representations over F_p");
  auto rep_leaf = [&](const std::string& name, const std::string& help, void (detail::Runner::*fn)(),
                      bool two) {
    auto* c = leaf(gp, name, help, [&r, fn] { (r.*fn)(); });
    field(c);
    c->add_option("--rep", o.rep_path, "representation JSON file")->required();
    if (two) c->add_option("--rep2", o.rep2_path, "second representation (default: --rep)");
    return c;
  };
  rep_leaf("hom", "Hom(V, W) basis", &detail::Runner::rep_hom, true);
  rep_leaf("ext", "dim Ext^1(V, W)", &detail::Runner::rep_ext, true);
  vertex(rep_leaf("reflect", "R+ at a sink or R- at a source", &detail::Runner::rep_reflect, false));
  rep_leaf("decompose", "indecomposable summands", &detail::Runner::rep_decompose, false);
  {
    auto* c = leaf(gp, "indec", "the indecomposable of a positive real root", [&] { r.rep_indec(); });
    field(c);
    c->add_option("--vector", o.vector, "dimension vector, e.g. 1,1,0")->required();
  }

  auto* gt = group("tfc", "torsion-free classes");
  {
    auto* c = leaf(gt, "of-word", "F(w)", [&] { r.tfc_of_word(); });
    word(c);
    field(c);
  }
  {
    auto* c = leaf(gt, "to-word", "the sortable element of a class", [&] { r.tfc_to_word(); });
    c->add_option("--class", o.class_path, "class JSON file")->required();
    field(c);
  }
  field(leaf(gt, "enumerate", "all torsion-free classes", [&] { r.tfc_enumerate(); }));
  field(leaf(gt, "verify", "check the sortable/torsion-free bijection", [&] { r.tfc_verify(); }));

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 consumes from the back
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    action();
  } catch (const detail::UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    write_error(err, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace coxrep::cli
