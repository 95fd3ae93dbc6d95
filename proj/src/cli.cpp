#include "syrt/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "syrt/json_io.hpp"

namespace syrt {

namespace {

int default_cap(const std::string& verb) {
  if (const char* env = std::getenv("SYRT_MAX_SIZE")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("SYRT_MAX_SIZE must be a positive integer, got '" + s + "'");
    int v = std::stoi(s);
    if (v < 1) throw ParseError("SYRT_MAX_SIZE must be a positive integer");
    return v;
  }
  if (verb == "certify" || verb == "sweep") return kDefaultCertifyLimit;
  // tsup and simple do no enumeration; only the global guard applies
  if (verb == "tsup" || verb == "simple") return kMaxCompositionSize;
  return kDefaultEnumLimit;
}

void check_cap(const Composition& alpha, int cap) {
  if (alpha.size() > cap)
    throw ResourceLimitError("shape size " + std::to_string(alpha.size()) +
                             " exceeds cap " + std::to_string(cap) +
                             " (raise with --max-size)");
}

std::string indent_block(const std::string& block) {
  std::istringstream in(block);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << "  " << line << "\n";
  return out.str();
}

std::string set_to_string(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : s) {
    if (!first) os << ",";
    first = false;
    os << x;
  }
  os << "}";
  return os.str();
}

std::string qsym_to_string(const QSymElement& element) {
  if (element.is_zero()) return "0";
  const char* letter = element.basis() == QSymBasis::F ? "F" : "M";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, coeff] : element.terms()) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff << "*";
    os << letter << "_(" << alpha.to_string() << ")";
  }
  return os.str();
}

int unique_source(const std::vector<Syrt>& basis, const std::vector<int>& members) {
  int found = -1;
  for (int idx : members)
    if (is_source(basis[idx])) {
      if (found >= 0) throw InternalError("class has two source tableaux");
      found = idx;
    }
  if (found < 0) throw InternalError("class has no source tableau");
  return found;
}

std::string run_enum(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  std::vector<Syrt> basis = enumerate_syrt(alpha, cap);
  if (format == "json") {
    Json tabs = Json::array();
    for (const Syrt& t : basis) {
      Json des = Json::array();
      for (int d : descent_set(t)) des.push_back(d);
      tabs.push_back(Json{{"tableau", to_json(t)}, {"descents", std::move(des)}});
    }
    return dump_sorted(Json{{"shape", to_json(alpha)},
                            {"count", basis.size()},
                            {"tableaux", std::move(tabs)}});
  }
  std::ostringstream os;
  os << "shape (" << alpha.to_string() << "): " << basis.size() << " tableaux\n";
  for (std::size_t k = 0; k < basis.size(); ++k) {
    os << "[" << k << "] Des = " << set_to_string(descent_set(basis[k])) << "\n";
    os << indent_block(basis[k].to_text());
  }
  return os.str();
}

std::string run_expand(const Composition& alpha, int cap, const std::string& basis,
                       const std::string& format) {
  check_cap(alpha, cap);
  QSymElement element = expand_R_in_F(alpha, cap);
  if (basis == "M") element = f_to_m(element);
  if (format == "json") return dump_sorted(to_json(element));
  return "R_(" + alpha.to_string() + ") = " + qsym_to_string(element) + "\n";
}

std::string run_classes(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  EnumeratedClasses ec = equivalence_classes(alpha, cap);
  if (format == "json") {
    Json classes = Json::array();
    for (std::size_t k = 0; k < ec.partition.classes.size(); ++k) {
      const auto& members = ec.partition.classes[k];
      Json sig = Json::array();
      for (const auto& col : column_signature(ec.basis[members.front()]).columns)
        sig.push_back(col);
      classes.push_back(Json{{"id", k},
                             {"members", members},
                             {"source", unique_source(ec.basis, members)},
                             {"signature", std::move(sig)}});
    }
    Json tabs = Json::array();
    for (const Syrt& t : ec.basis) tabs.push_back(to_json(t));
    return dump_sorted(Json{{"shape", to_json(alpha)},
                            {"count", ec.basis.size()},
                            {"basis", std::move(tabs)},
                            {"classes", std::move(classes)}});
  }
  std::ostringstream os;
  os << "shape (" << alpha.to_string() << "): " << ec.basis.size()
     << " tableaux, " << ec.partition.classes.size() << " classes\n";
  for (std::size_t k = 0; k < ec.partition.classes.size(); ++k) {
    const auto& members = ec.partition.classes[k];
    os << "class " << k << (k == 0 ? " (E_0)" : "") << ": size "
       << members.size() << ", members [";
    for (std::size_t j = 0; j < members.size(); ++j)
      os << (j ? " " : "") << members[j];
    os << "], source " << unique_source(ec.basis, members) << "\n";
  }
  return os.str();
}

std::string run_tsup(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  std::vector<Cell> boundary = boundary_cells(alpha);
  ThreadDecomposition decomposition = threads(alpha);
  Syrt sup = t_sup(alpha);
  if (format == "json") {
    Json b = Json::array();
    for (Cell cell : boundary) b.push_back(to_json(cell));
    Json des = Json::array();
    for (int d : descent_set(sup)) des.push_back(d);
    return dump_sorted(Json{{"shape", to_json(alpha)},
                            {"boundary", std::move(b)},
                            {"threads", to_json(decomposition)},
                            {"t_sup", to_json(sup)},
                            {"descents", std::move(des)}});
  }
  std::ostringstream os;
  os << "shape (" << alpha.to_string() << ")\n";
  os << "boundary cells:";
  for (Cell cell : boundary) os << " (" << cell.col << "," << cell.row << ")";
  os << "\nthreads:\n";
  for (std::size_t k = 0; k < decomposition.threads.size(); ++k) {
    os << "  " << k + 1 << ":";
    for (Cell cell : decomposition.threads[k])
      os << " (" << cell.col << "," << cell.row << ")";
    os << "\n";
  }
  os << "T_sup:\n" << indent_block(sup.to_text());
  os << "Des(T_sup) = " << set_to_string(descent_set(sup)) << "\n";
  return os.str();
}

std::string run_simple(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  bool simple = is_simple(alpha);
  if (format == "json")
    return dump_sorted(Json{{"shape", to_json(alpha)}, {"simple", simple}});
  return simple ? "simple\n" : "not simple\n";
}

std::string run_verify(const Composition& alpha, int cap, const std::string& format,
                       int& exit_code) {
  check_cap(alpha, cap);
  HeckeAction action = HeckeAction::build(alpha, cap);
  std::optional<RelationFailure> failure = verify_relations(action);
  if (format == "json") {
    Json out{{"shape", to_json(alpha)},
             {"dimension", action.dimension()},
             {"generators", action.generator_count()},
             {"ok", !failure.has_value()},
             {"action", to_json(action)}};
    if (failure) {
      out["relation"] = failure->relation;
      out["i"] = failure->i;
      out["j"] = failure->j;
      out["basis_index"] = failure->basis_index;
      exit_code = 1;
    }
    return dump_sorted(out);
  }
  if (failure) {
    exit_code = 1;
    std::ostringstream os;
    os << "FAIL: " << failure->relation << " relation broken at i=" << failure->i
       << " j=" << failure->j << " basis index " << failure->basis_index << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "ok: idempotent, commutation and braid relations hold (dimension "
     << action.dimension() << ", generators " << action.generator_count()
     << ")\n";
  return os.str();
}

std::string run_series(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  HeckeAction action = HeckeAction::build(alpha, cap);
  SeriesResult series = composition_series(action);
  if (format == "json") return dump_sorted(to_json(series, action));
  std::ostringstream os;
  const Filtration& f = series.filtration;
  os << "shape (" << alpha.to_string() << "): composition series of length "
     << f.order.size() << "\n";
  for (std::size_t p = 0; p < f.order.size(); ++p) {
    int idx = f.order[p];
    os << "  " << p + 1 << ": index " << idx << ", class " << f.class_ids[p]
       << ", rank " << f.ranks[p] << ", Des = "
       << set_to_string(descent_set(action.basis()[idx])) << ", quotient F_("
       << f.quotient_descents[p].to_string() << ")\n";
  }
  QSymElement ch(QSymBasis::F);
  for (const auto& [comp, count] : series.multiset) ch.add(comp, count);
  os << "characteristic: " << qsym_to_string(ch) << "\n";
  return os.str();
}

std::string certify_text(const EndoReport& report) {
  std::ostringstream os;
  auto line = [&](const std::string& name, const ClassEndoSummary& s) {
    os << name << ": dim " << s.dim << ", commutant " << s.commutant_dim
       << ", radical " << s.radical_dim << ", local "
       << (s.local ? "yes" : "no") << "\n";
  };
  os << "shape (" << report.alpha.to_string() << "): "
     << (report.simple ? "simple" : "not simple") << "; classes "
     << report.classes << "; verdict "
     << (report.indecomposable ? "indecomposable" : "decomposable") << "\n";
  line("full module", report.full);
  line("E_0", report.e0);
  for (const auto& s : report.other_classes)
    line("class " + std::to_string(s.class_id) + " (exploratory)", s);
  if (!report.idempotent_blocks.empty()) {
    os << "idempotent blocks:";
    for (const auto& block : report.idempotent_blocks) {
      os << " [";
      for (std::size_t j = 0; j < block.size(); ++j)
        os << (j ? " " : "") << block[j];
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

std::string run_certify(const Composition& alpha, int cap, const std::string& format) {
  check_cap(alpha, cap);
  EndoReport report = is_indecomposable_certified(alpha, cap);
  if (format == "json") return dump_sorted(to_json(report));
  return certify_text(report);
}

std::string run_sweep(int n, int cap, const std::string& format) {
  if (n < 1) throw DomainError("sweep needs --n >= 1");
  if (n > cap)
    throw ResourceLimitError("sweep size " + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap) + " (raise with --max-size)");
  std::vector<EndoReport> reports;
  for (const Composition& alpha : compositions_of(n))
    reports.push_back(is_indecomposable_certified(alpha, cap));
  bool all_match = true;
  for (const auto& r : reports) all_match &= (r.indecomposable == r.simple);
  if (format == "json") {
    Json rows = Json::array();
    for (const auto& r : reports)
      rows.push_back(Json{{"alpha", to_json(r.alpha)},
                          {"syrt", r.dimension},
                          {"classes", r.classes},
                          {"simple", r.simple},
                          {"verdict", r.indecomposable ? "indecomposable"
                                                       : "decomposable"}});
    return dump_sorted(Json{{"n", n}, {"rows", std::move(rows)},
                            {"all_match", all_match}});
  }
  std::size_t w = 5;
  for (const auto& r : reports) w = std::max(w, r.alpha.to_string().size());
  std::ostringstream os;
  os << "alpha" << std::string(w - 5 + 2, ' ') << "syrt  classes  simple  verdict\n";
  for (const auto& r : reports) {
    std::string a = r.alpha.to_string();
    std::string syrt = std::to_string(r.dimension);
    std::string cls = std::to_string(r.classes);
    os << a << std::string(w - a.size() + 2, ' ') << syrt
       << std::string(syrt.size() < 4 ? 4 - syrt.size() + 2 : 2, ' ') << cls
       << std::string(cls.size() < 7 ? 7 - cls.size() + 2 : 2, ' ')
       << (r.simple ? "yes " : "no  ") << "    "
       << (r.indecomposable ? "indecomposable" : "decomposable") << "\n";
  }
  os << reports.size() << " shapes, "
     << (all_match ? "all verdicts match simplicity"
                   : "VERDICT MISMATCH FOUND")
     << "\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact 0-Hecke module engine on standard Young row-strict tableaux"};
  app.require_subcommand(1);

  struct VerbOptions {
    std::string shape;
    int n = 0;
    std::string format = "text";
    int max_size = 0;
    std::string out_path;
    std::string basis = "F";
  };
  std::map<std::string, VerbOptions> opts;

  auto add_common = [&](CLI::App* sub, bool takes_shape) {
    VerbOptions& o = opts[sub->get_name()];
    if (takes_shape)
      sub->add_option("--shape", o.shape,
                      "composition, comma-separated positive parts, e.g. 3,2,2")
          ->required();
    else
      sub->add_option("--n", o.n, "total size; all compositions of n")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-size", o.max_size, "size cap for this run");
    sub->add_option("--out", o.out_path, "write output to this file");
  };

  add_common(app.add_subcommand("enum", "list the SYRT basis with descent sets"), true);
  CLI::App* expand =
      app.add_subcommand("expand", "expand R_alpha over the F (or M) basis");
  add_common(expand, true);
  expand->add_option("--basis", opts["expand"].basis, "target basis")
      ->check(CLI::IsMember({"F", "M"}))
      ->capture_default_str();
  add_common(app.add_subcommand("classes", "equivalence classes and their sources"), true);
  add_common(app.add_subcommand("tsup", "boundary cells, threads and T_sup"), true);
  add_common(app.add_subcommand("simple", "simplicity verdict for the shape"), true);
  add_common(app.add_subcommand("verify", "check the 0-Hecke relations"), true);
  add_common(app.add_subcommand("series", "composition series and characteristic"), true);
  add_common(app.add_subcommand("certify", "indecomposability certificate"), true);
  add_common(app.add_subcommand("sweep", "certify every composition of n"), false);

  std::vector<std::string> argv_storage = args;
  argv_storage.insert(argv_storage.begin(), "syrt");
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    VerbOptions& o = opts[verb];
    int cap = o.max_size > 0 ? o.max_size : default_cap(verb);

    int exit_code = 0;
    std::string payload;
    if (verb == "sweep") {
      payload = run_sweep(o.n, cap, o.format);
    } else {
      Composition alpha = Composition::parse(o.shape);
      if (verb == "enum") payload = run_enum(alpha, cap, o.format);
      else if (verb == "expand") payload = run_expand(alpha, cap, o.basis, o.format);
      else if (verb == "classes") payload = run_classes(alpha, cap, o.format);
      else if (verb == "tsup") payload = run_tsup(alpha, cap, o.format);
      else if (verb == "simple") payload = run_simple(alpha, cap, o.format);
      else if (verb == "verify") payload = run_verify(alpha, cap, o.format, exit_code);
      else if (verb == "series") payload = run_series(alpha, cap, o.format);
      else if (verb == "certify") payload = run_certify(alpha, cap, o.format);
      else throw InternalError("unhandled verb " + verb);
    }

    if (!o.out_path.empty()) {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) throw ParseError("cannot open output file '" + o.out_path + "'");
      file << payload;
    } else {
      out << payload;
    }
    return exit_code;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace syrt
