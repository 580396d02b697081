// Command-line front end: lattice queries, pattern calculus, tableaux,
// branching multiplicities, straightening, degeneration checks.
//
// Exit codes: 0 success, 2 bad input (precondition or parse failure),
// 3 internal consistency failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <branchlat/branchlat.hpp>

namespace bl = branchlat;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    try {
      std::size_t pos = 0;
      int v = std::stoi(cur, &pos);
      bl::require(pos == cur.size(), "bad integer '" + cur + "'");
      out.push_back(v);
    } catch (const std::invalid_argument&) {
      throw bl::ValidationError("bad integer '" + cur + "'");
    } catch (const std::out_of_range&) {
      throw bl::ValidationError("integer out of range '" + cur + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  flush();
  return out;
}

bl::YoungDiagram parse_diagram(const std::string& text) {
  return bl::YoungDiagram(parse_int_list(text));
}

bl::ColumnSet parse_column(const std::string& text) {
  bl::ColumnSet col = parse_int_list(text);
  bl::require(bl::is_column(col),
              "column '" + text + "' must be nonempty and strictly increasing");
  return col;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::pair<bl::ColumnSet, bl::ColumnSet> parse_pair(const std::string& text) {
  std::vector<std::string> parts = split_on(text, ';');
  bl::require(parts.size() == 2, "expected two columns separated by ';'");
  return {parse_column(parts[0]), parse_column(parts[1])};
}

bl::Monomial parse_columns(const std::string& text) {
  bl::Monomial cols;
  for (const std::string& part : split_on(text, '|'))
    cols.push_back(parse_column(part));
  return cols;
}

bl::LetterColumn parse_letter_column(const std::string& text) {
  bl::LetterColumn col;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) col.push_back(bl::Letter::parse(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  flush();
  bl::require(bl::is_letter_column(col),
              "letters in '" + text + "' must be strictly increasing");
  return col;
}

std::vector<bl::LetterColumn> parse_letter_columns(const std::string& text) {
  std::vector<bl::LetterColumn> cols;
  for (const std::string& part : split_on(text, '|'))
    cols.push_back(parse_letter_column(part));
  return cols;
}

struct GlobalOpts {
  bool json = false;
  std::uint64_t seed = 0;
  long long base = 0;  // 0 = family default (2m + 1)
  int jobs = 1;
};

bl::Integer effective_base(const GlobalOpts& g, int m) {
  return g.base == 0 ? bl::Integer(2 * m + 1) : bl::Integer(g.base);
}

void emit(const bl::Json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stable-range branching combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  if (const char* env = std::getenv("BRANCHLAT_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (...) {
      std::cerr << "error: BRANCHLAT_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "PRNG seed (default: BRANCHLAT_SEED or 0)");
  app.add_option("--base", g.base, "weight base (default: 2m + 1)");
  app.add_option("--jobs", g.jobs, "worker count (validated, run sequentially)")
      ->check(CLI::PositiveNumber);

  // ---- branch ----------------------------------------------------------
  auto* branch = app.add_subcommand("branch", "branching multiplicities");
  branch->require_subcommand(1);
  struct {
    int m = 0, n = 0, p = 0, q = 0;
    std::string outer, inner;
    bool list = false;
  } br;
  auto add_branch_common = [&](CLI::App* cmd, bool so) {
    if (so) {
      cmd->add_option("--p", br.p, "larger group parameter")->required();
      cmd->add_option("--q", br.q, "smaller group parameter")->required();
    } else {
      cmd->add_option("--m", br.m, "larger group rank")->required();
      cmd->add_option("--n", br.n, "smaller group rank")->required();
    }
    cmd->add_option("--outer", br.outer, "label of the larger group")
        ->required();
    cmd->add_option("--inner", br.inner, "label of the smaller group")
        ->required();
    cmd->add_flag("--list", br.list, "also list the counted patterns");
  };
  auto* branch_gl = branch->add_subcommand("gl", "general linear restriction");
  add_branch_common(branch_gl, false);
  auto* branch_sp = branch->add_subcommand("sp", "symplectic restriction");
  add_branch_common(branch_sp, false);
  auto* branch_so = branch->add_subcommand("so", "orthogonal restriction");
  add_branch_common(branch_so, true);

  // ---- lattice ---------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "column lattice queries");
  lattice->require_subcommand(1);
  struct {
    int m = 0, k = 0, n = 0;
    std::string pair;
  } la;
  auto add_family = [&](CLI::App* cmd, int& m, int& k, int& n) {
    cmd->add_option("--m", m, "number of rows")->required();
    cmd->add_option("--k", k, "maximum column length")->required();
    cmd->add_option("--n", n, "frozen band height")->required();
  };
  auto* lat_enum = lattice->add_subcommand("enumerate", "list all columns");
  add_family(lat_enum, la.m, la.k, la.n);
  auto* lat_meet = lattice->add_subcommand("meet", "greatest lower bound");
  add_family(lat_meet, la.m, la.k, la.n);
  lat_meet->add_option("--pair", la.pair, "two columns 'I;J'")->required();
  auto* lat_join = lattice->add_subcommand("join", "least upper bound");
  add_family(lat_join, la.m, la.k, la.n);
  lat_join->add_option("--pair", la.pair, "two columns 'I;J'")->required();
  auto* lat_leq = lattice->add_subcommand("leq", "tableau-order comparison");
  add_family(lat_leq, la.m, la.k, la.n);
  lat_leq->add_option("--pair", la.pair, "two columns 'I;J'")->required();

  // ---- patterns --------------------------------------------------------
  auto* patterns = app.add_subcommand("patterns", "interlacing pattern calculus");
  patterns->require_subcommand(1);
  struct {
    int m = 0, n = 0, k = 0;
    std::string outer, inner, rows, cols;
  } pa;
  auto* pat_enum = patterns->add_subcommand("enumerate", "patterns with given ends");
  pat_enum->add_option("--m", pa.m, "top level")->required();
  pat_enum->add_option("--n", pa.n, "bottom level")->required();
  pat_enum->add_option("--k", pa.k, "slot width")->required();
  pat_enum->add_option("--outer", pa.outer, "top row")->required();
  pat_enum->add_option("--inner", pa.inner, "bottom row")->required();
  auto* pat_dec = patterns->add_subcommand("decompose", "slice into level columns");
  pat_dec->add_option("--m", pa.m, "top level")->required();
  pat_dec->add_option("--n", pa.n, "bottom level")->required();
  pat_dec->add_option("--k", pa.k, "slot width")->required();
  pat_dec->add_option("--rows", pa.rows, "rows top to bottom, '|' separated")
      ->required();
  auto* pat_comp = patterns->add_subcommand("compose", "sum of column indicators");
  pat_comp->add_option("--m", pa.m, "number of rows")->required();
  pat_comp->add_option("--k", pa.k, "maximum column length")->required();
  pat_comp->add_option("--n", pa.n, "frozen band height")->required();
  pat_comp->add_option("--cols", pa.cols, "columns, '|' separated")->required();

  // ---- tableaux --------------------------------------------------------
  auto* tableaux = app.add_subcommand("tableaux", "chains as skew tableaux");
  tableaux->require_subcommand(1);
  struct {
    int m = 0, k = 0, n = 0;
    std::string outer, inner, cols;
  } ta;
  auto* tab_enum = tableaux->add_subcommand("enumerate", "chains of a shape");
  add_family(tab_enum, ta.m, ta.k, ta.n);
  tab_enum->add_option("--outer", ta.outer, "outer shape")->required();
  tab_enum->add_option("--inner", ta.inner, "inner shape")->required();
  auto* tab_render = tableaux->add_subcommand("render", "ASCII skew tableau");
  add_family(tab_render, ta.m, ta.k, ta.n);
  tab_render->add_option("--cols", ta.cols, "chain columns, '|' separated")
      ->required();

  // ---- straighten ------------------------------------------------------
  auto* straighten = app.add_subcommand("straighten", "standard-monomial expansion");
  struct {
    int m = 0, k = 0, n = 0;
    std::string pair, cols;
  } st;
  add_family(straighten, st.m, st.k, st.n);
  auto* st_pair =
      straighten->add_option("--pair", st.pair, "two columns 'I;J'");
  auto* st_cols = straighten->add_option(
      "--cols", st.cols, "monomial columns, '|' separated");
  st_pair->excludes(st_cols);

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "structure verification");
  verify->require_subcommand(1);
  struct {
    int m = 0, k = 0, n = 0;
    long long trials = 0;
    bool exhaustive = false;
  } ve;
  auto* ver_deg =
      verify->add_subcommand("degeneration", "weight-order straightening checks");
  add_family(ver_deg, ve.m, ve.k, ve.n);
  ver_deg->add_flag("--exhaustive", ve.exhaustive,
                    "check every incomparable pair");
  ver_deg->add_option("--trials", ve.trials,
                      "number of sampled pairs (0 = exhaustive)");

  // ---- hibi ------------------------------------------------------------
  auto* hibi = app.add_subcommand("hibi", "normal forms in the chain basis");
  hibi->require_subcommand(1);
  struct {
    int m = 0, k = 0, n = 0;
    std::string cols;
  } hi;
  auto* hibi_nf = hibi->add_subcommand("nf", "chain normal form of a monomial");
  add_family(hibi_nf, hi.m, hi.k, hi.n);
  hibi_nf->add_option("--cols", hi.cols, "columns, '|' separated")->required();

  // ---- classical -------------------------------------------------------
  auto* classical = app.add_subcommand("classical", "letter alphabets and isos");
  classical->require_subcommand(1);
  struct {
    int p = 0, q = 0, m = 0, n = 0;
    std::string group, col, cols;
  } cl;
  auto* cl_psi = classical->add_subcommand("psi", "crossing row relabeling");
  cl_psi->add_option("--p", cl.p, "alphabet size")->required();
  cl_psi->add_option("--col", cl.col, "letters, comma separated")->required();
  auto* cl_iso = classical->add_subcommand("iso", "flatten onto integer columns");
  cl_iso->add_option("--group", cl.group, "sp or so")->required();
  cl_iso->add_option("--m", cl.m, "symplectic rank (sp)");
  cl_iso->add_option("--n", cl.n, "smaller symplectic rank (sp)");
  cl_iso->add_option("--p", cl.p, "orthogonal parameter (so)");
  cl_iso->add_option("--q", cl.q, "smaller orthogonal parameter (so)");
  cl_iso->add_option("--col", cl.col, "letters, comma separated")->required();
  auto* cl_sp_std =
      classical->add_subcommand("sp-standard", "symplectic standardness");
  cl_sp_std->add_option("--m", cl.m, "isotropic pair count")->required();
  cl_sp_std->add_option("--cols", cl.cols, "letter columns, '|' separated")
      ->required();
  auto* cl_o_std =
      classical->add_subcommand("o-standard", "orthogonal standardness");
  cl_o_std->add_option("--m", cl.m, "isotropic pair count")->required();
  cl_o_std->add_option("--cols", cl.cols, "letter columns, '|' separated")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    // branch
    if (branch_gl->parsed() || branch_sp->parsed() || branch_so->parsed()) {
      bl::YoungDiagram f = parse_diagram(br.outer);
      bl::YoungDiagram d = parse_diagram(br.inner);
      bl::Integer mult;
      std::optional<bl::GTPoset> poset;
      if (branch_gl->parsed()) {
        mult = bl::gl_multiplicity(br.m, br.n, f, d);
        if (br.list && bl::contains(f, d))
          poset = bl::GTPoset(br.m, br.n, std::max(1, f.length()));
      } else if (branch_sp->parsed()) {
        mult = bl::sp_multiplicity(br.m, br.n, f, d);
        if (br.list && bl::contains(f, d))
          poset = bl::GTPoset(2 * br.m, 2 * br.n, br.n);
      } else {
        mult = bl::so_multiplicity(br.p, br.q, f, d);
        if (br.list && bl::contains(f, d))
          poset = bl::GTPoset(br.p, br.q, bl::so_width(br.q));
      }
      std::vector<bl::GTPattern> items;
      if (poset) items = bl::enumerate_patterns(*poset, f, d);
      if (br.list)
        bl::ensure(bl::Integer(items.size()) == mult,
                   "listed patterns disagree with the multiplicity");
      if (g.json) {
        bl::Json j;
        j["multiplicity"] = bl::integer_str(mult);
        if (br.list) {
          bl::Json arr = bl::Json::array();
          for (const auto& p : items) arr.push_back(bl::to_json(p));
          j["items"] = std::move(arr);
        }
        emit(j);
      } else {
        std::cout << mult << "\n";
        if (br.list)
          for (const auto& p : items) std::cout << p.str() << "\n";
      }
      return 0;
    }

    // lattice
    if (lat_enum->parsed()) {
      bl::LatticeFamily fam(la.m, la.k, la.n);
      auto elems = fam.elements();
      if (g.json) {
        bl::Json j = bl::Json::array();
        for (const auto& c : elems) j.push_back(c);
        emit(j);
      } else {
        for (const auto& c : elems) std::cout << bl::column_str(c) << "\n";
      }
      return 0;
    }
    if (lat_meet->parsed() || lat_join->parsed() || lat_leq->parsed()) {
      bl::LatticeFamily fam(la.m, la.k, la.n);
      auto [i, j] = parse_pair(la.pair);
      if (lat_leq->parsed()) {
        bool le = fam.leq(i, j);
        if (g.json)
          emit(bl::Json(le));
        else
          std::cout << (le ? "true" : "false") << "\n";
        return 0;
      }
      bl::ColumnSet r = lat_meet->parsed() ? fam.meet(i, j) : fam.join(i, j);
      if (g.json)
        emit(bl::Json(r));
      else
        std::cout << bl::column_str(r) << "\n";
      return 0;
    }

    // patterns
    if (pat_enum->parsed()) {
      bl::GTPoset poset(pa.m, pa.n, pa.k);
      auto items =
          bl::enumerate_patterns(poset, parse_diagram(pa.outer), parse_diagram(pa.inner));
      if (g.json) {
        bl::Json j = bl::Json::array();
        for (const auto& p : items) j.push_back(bl::to_json(p));
        emit(j);
      } else {
        for (const auto& p : items) std::cout << p.str() << "\n";
      }
      return 0;
    }
    if (pat_dec->parsed()) {
      bl::GTPoset poset(pa.m, pa.n, pa.k);
      std::vector<std::vector<int>> rows;
      for (const std::string& part : split_on(pa.rows, '|'))
        rows.push_back(parse_int_list(part));
      bl::GTPattern p(poset, std::move(rows));
      bl::Chain chain = bl::decompose_levels(p);
      if (g.json)
        emit(bl::to_json(chain));
      else
        for (const auto& c : chain) std::cout << bl::column_str(c) << "\n";
      return 0;
    }
    if (pat_comp->parsed()) {
      bl::LatticeFamily fam(pa.m, pa.k, pa.n);
      bl::GTPattern p = bl::compose_columns(parse_columns(pa.cols), fam);
      if (g.json)
        emit(bl::to_json(p));
      else
        std::cout << p.str() << "\n";
      return 0;
    }

    // tableaux
    if (tab_enum->parsed()) {
      bl::LatticeFamily fam(ta.m, ta.k, ta.n);
      auto chains = bl::enumerate_tableaux(fam, parse_diagram(ta.outer),
                                           parse_diagram(ta.inner));
      if (g.json) {
        bl::Json j = bl::Json::array();
        for (const auto& t : chains) j.push_back(bl::to_json(t));
        emit(j);
      } else {
        for (const auto& t : chains) std::cout << bl::monomial_str(t) << "\n";
      }
      return 0;
    }
    if (tab_render->parsed()) {
      bl::LatticeFamily fam(ta.m, ta.k, ta.n);
      std::string grid = bl::render_skew(parse_columns(ta.cols), fam);
      if (g.json)
        emit(bl::Json(grid));
      else
        std::cout << grid << "\n";
      return 0;
    }

    // straighten
    if (straighten->parsed()) {
      bl::LatticeFamily fam(st.m, st.k, st.n);
      bl::require(!st.pair.empty() || !st.cols.empty(),
                  "straighten needs --pair or --cols");
      if (!st.pair.empty()) {
        auto [i, j] = parse_pair(st.pair);
        bl::StraighteningExpansion exp = bl::straighten_pair(i, j, fam, g.seed);
        if (g.json) {
          emit(bl::to_json(exp));
        } else {
          for (const auto& term : exp.terms)
            std::cout << bl::rational_str(term.coeff) << " "
                      << bl::column_str(term.s) << " " << bl::column_str(term.t)
                      << "\n";
        }
      } else {
        auto terms = bl::straighten_monomial(parse_columns(st.cols), fam, g.seed);
        if (g.json) {
          bl::Json arr = bl::Json::array();
          for (const auto& [coeff, chain] : terms) {
            bl::Json t;
            t["coeff"] = bl::rational_str(coeff);
            t["chain"] = bl::to_json(chain);
            arr.push_back(std::move(t));
          }
          bl::Json j;
          j["terms"] = std::move(arr);
          emit(j);
        } else {
          for (const auto& [coeff, chain] : terms)
            std::cout << bl::rational_str(coeff) << " "
                      << bl::monomial_str(chain) << "\n";
        }
      }
      return 0;
    }

    // verify degeneration
    if (ver_deg->parsed()) {
      bl::require(!(ve.exhaustive && ve.trials > 0),
                  "--exhaustive and --trials exclude each other");
      bl::LatticeFamily fam(ve.m, ve.k, ve.n);
      bl::DegenerationReport report = bl::verify_degeneration(
          fam, ve.exhaustive ? 0 : ve.trials, g.seed, effective_base(g, ve.m));
      if (g.json)
        emit(bl::to_json(report));
      else
        std::cout << bl::render_report(report) << "\n";
      return report.violations.empty() ? 0 : 3;
    }

    // hibi nf
    if (hibi_nf->parsed()) {
      bl::LatticeFamily fam(hi.m, hi.k, hi.n);
      bl::Monomial cols = parse_columns(hi.cols);
      for (const auto& c : cols) fam.require_member(c);
      bl::Chain chain = bl::hibi_normal_form(cols, fam);
      if (g.json)
        emit(bl::to_json(chain));
      else
        for (const auto& c : chain) std::cout << bl::column_str(c) << "\n";
      return 0;
    }

    // classical
    if (cl_psi->parsed()) {
      std::vector<int> vals = bl::psi(parse_letter_column(cl.col), cl.p);
      if (g.json) {
        emit(bl::Json(vals));
      } else {
        for (std::size_t i = 0; i < vals.size(); ++i)
          std::cout << (i ? "," : "") << vals[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (cl_iso->parsed()) {
      bl::require(cl.group == "sp" || cl.group == "so",
                  "--group must be sp or so");
      bl::LetterFamily fam =
          cl.group == "sp" ? bl::LetterFamily::symplectic(cl.m, cl.n)
                           : bl::LetterFamily::orthogonal(cl.p, cl.q);
      bl::ColumnSet out = fam.iso(parse_letter_column(cl.col));
      if (g.json)
        emit(bl::Json(out));
      else
        std::cout << bl::column_str(out) << "\n";
      return 0;
    }
    if (cl_sp_std->parsed() || cl_o_std->parsed()) {
      auto cols = parse_letter_columns(cl.cols);
      bool ok = cl_sp_std->parsed() ? bl::is_sp_standard(cols, cl.m)
                                    : bl::is_o_standard(cols, cl.m);
      if (g.json)
        emit(bl::Json(ok));
      else
        std::cout << (ok ? "true" : "false") << "\n";
      return 0;
    }

    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const bl::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bl::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
