#include "syrt/json_io.hpp"

namespace syrt {

Json to_json(const Composition& alpha) { return Json(alpha.parts()); }

Json to_json(Cell cell) { return Json::array({cell.col, cell.row}); }

Json to_json(const ThreadDecomposition& decomposition) {
  Json out = Json::array();
  for (const auto& thread : decomposition.threads) {
    Json t = Json::array();
    for (Cell cell : thread) t.push_back(to_json(cell));
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const Tableau& tableau) {
  return Json{{"shape", to_json(tableau.shape())}, {"rows", tableau.rows()}};
}

Json to_json(const Syrt& tableau) { return to_json(tableau.tableau()); }

namespace {

long long to_int64(const Int& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min())
    throw InternalError("coefficient exceeds 64 bits in JSON output");
  return value.convert_to<long long>();
}

}  // namespace

Json to_json(const QSymElement& element) {
  Json terms = Json::array();
  for (const auto& [alpha, coeff] : element.terms())
    terms.push_back(Json{{"comp", to_json(alpha)}, {"coeff", to_int64(coeff)}});
  return Json{{"basis", element.basis() == QSymBasis::F ? "F" : "M"},
              {"terms", std::move(terms)}};
}

Json to_json(const HeckeAction& action) {
  Json basis = Json::array();
  for (const Syrt& t : action.basis()) basis.push_back(to_json(t));
  Json generators = Json::array();
  for (int i = 1; i <= action.generator_count(); ++i) {
    Json steps = Json::array();
    for (int k = 0; k < action.dimension(); ++k) {
      PiStep s = action.step(i, k);
      const char* kind = s.kind == PiKind::Zero    ? "zero"
                         : s.kind == PiKind::Fixed ? "fixed"
                                                   : "swap";
      Json target = s.kind == PiKind::Zero ? Json(nullptr) : Json(s.target);
      steps.push_back(Json{{"from", k}, {"to", std::move(target)}, {"kind", kind}});
    }
    generators.push_back(std::move(steps));
  }
  return Json{{"shape", to_json(action.shape())},
              {"basis", std::move(basis)},
              {"generators", std::move(generators)}};
}

Json to_json(const SeriesResult& series, const HeckeAction& action) {
  Json quotients = Json::array();
  const Filtration& f = series.filtration;
  for (std::size_t p = 0; p < f.order.size(); ++p) {
    Json des = Json::array();
    for (int d : descent_set(action.basis()[f.order[p]])) des.push_back(d);
    quotients.push_back(Json{{"basis_index", f.order[p]},
                             {"descents", std::move(des)},
                             {"composition", to_json(f.quotient_descents[p])},
                             {"class", f.class_ids[p]},
                             {"rank", f.ranks[p]}});
  }
  Json multiset = Json::array();
  for (const auto& [alpha, count] : series.multiset)
    multiset.push_back(Json{{"comp", to_json(alpha)}, {"count", count}});
  return Json{{"shape", to_json(action.shape())},
              {"quotients", std::move(quotients)},
              {"multiset", std::move(multiset)}};
}

namespace {

Json to_json(const ClassEndoSummary& s) {
  return Json{{"dim", s.dim},
              {"commutant_dim", s.commutant_dim},
              {"radical_dim", s.radical_dim},
              {"local", s.local}};
}

}  // namespace

Json to_json(const EndoReport& report) {
  Json out{{"alpha", to_json(report.alpha)},
           {"simple", report.simple},
           {"classes", report.classes},
           {"e0", to_json(report.e0)},
           {"full", to_json(report.full)},
           {"verdict", report.indecomposable ? "indecomposable" : "decomposable"}};
  if (!report.other_classes.empty()) {
    // exploratory output: only E_0 carries a normative locality claim
    Json others = Json::array();
    for (const auto& s : report.other_classes) {
      Json j = to_json(s);
      j["class"] = s.class_id;
      others.push_back(std::move(j));
    }
    out["exploratory_other_classes"] = std::move(others);
  }
  if (!report.idempotent_blocks.empty())
    out["idempotent_blocks"] = report.idempotent_blocks;
  return out;
}

std::string dump_sorted(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace syrt
