#include "mholo/serialize.hpp"

#include <sstream>

namespace mholo {

namespace {

// Desk-scale integers only; refuse silently lossy casts.
long long as_ll(const Int& v) {
  if (!v.fits_slong_p()) {
    throw InternalError("value too large for JSON number: " + v.get_str());
  }
  return v.get_si();
}

}  // namespace

Json params_json(const Int& p, unsigned m, unsigned n, unsigned r) {
  return Json{{"p", as_ll(p)}, {"m", m}, {"n", n}, {"r", r}};
}

Json count_row_json(const CountReport& report) {
  Json row;
  row["params"] = params_json(report.p, report.m, report.n, report.r);
  row["regime"] = regime_name(report.regime);
  if (report.error) {
    row["counts"] = nullptr;
    row["formula"] = nullptr;
    row["agreement"] = nullptr;
    row["error"] = *report.error;
    return row;
  }
  row["counts"] = Json{{"preadmissible", as_ll(report.n_preadmissible)},
                       {"admissible", as_ll(report.n_admissible)},
                       {"admissible_iso", as_ll(report.n_admissible_iso)}};
  row["formula"] =
      report.formula_value ? Json(as_ll(*report.formula_value)) : Json(nullptr);
  row["agreement"] = report.agreement ? Json(*report.agreement) : Json(nullptr);
  return row;
}

Json triplet_json(const RegularSubgroupReport& report) {
  Json t;
  t["a"] = as_ll(report.triplet.a);
  t["b"] = as_ll(report.triplet.b);
  t["d"] = as_ll(report.triplet.d);
  t["preadmissible"] = report.preadmissible;
  t["admissible"] = report.admissible;
  if (report.invariant) {
    t["s"] = report.invariant->s;
    t["j"] = as_ll(report.invariant->j);
    t["iso_to_G"] = report.iso_to_G;
    t["n_gamma"] = Json{{"abelian", report.abelian},
                        {"r", report.abelian ? Json(nullptr)
                                             : Json(report.r_presented)}};
  } else {
    t["s"] = nullptr;
    t["j"] = nullptr;
    t["iso_to_G"] = false;
    t["n_gamma"] = nullptr;
  }
  return t;
}

Json count_document(const CountReport& report,
                    const std::vector<RegularSubgroupReport>& triplets,
                    long long runtime_ms) {
  Json doc = count_row_json(report);
  doc["triplets"] = Json::array();
  for (const auto& t : triplets) doc["triplets"].push_back(triplet_json(t));
  doc["metadata"] = Json{{"runtime_ms", runtime_ms}, {"version", kVersion}};
  return doc;
}

Json sweep_document(const std::vector<CountReport>& rows,
                    long long runtime_ms) {
  Json doc;
  doc["rows"] = Json::array();
  for (const auto& row : rows) doc["rows"].push_back(count_row_json(row));
  doc["metadata"] = Json{{"runtime_ms", runtime_ms}, {"version", kVersion}};
  return doc;
}

std::string csv_header() {
  return "p,m,n,r,regime,n_pre,n_adm,n_iso,formula,agreement";
}

std::string csv_row(const CountReport& report) {
  std::ostringstream out;
  out << report.p << ',' << report.m << ',' << report.n << ',' << report.r
      << ',' << regime_name(report.regime) << ',';
  if (report.error) {
    // Counts never materialized; keep the fixed columns, surface the
    // formula when it exists.
    out << ",,,";
    if (report.formula_value) {
      out << *report.formula_value;
    } else {
      out << "n/a";
    }
    out << ",error";
    return out.str();
  }
  out << report.n_preadmissible << ',' << report.n_admissible << ','
      << report.n_admissible_iso << ',';
  if (report.formula_value) {
    out << *report.formula_value;
  } else {
    out << "n/a";
  }
  out << ',';
  if (report.agreement) {
    out << (*report.agreement ? "true" : "false");
  } else {
    out << "n/a";
  }
  return out.str();
}

std::string render_csv(const std::vector<CountReport>& rows) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& row : rows) out << csv_row(row) << '\n';
  return out.str();
}

std::string render_count_table(const CountReport& report,
                               const std::vector<RegularSubgroupReport>& ts) {
  std::ostringstream out;
  out << "G(p=" << report.p << ", m=" << report.m << ", n=" << report.n
      << ", r=" << report.r << ")  regime=" << regime_name(report.regime)
      << '\n';
  out << "  preadmissible  " << report.n_preadmissible << '\n';
  out << "  admissible     " << report.n_admissible << '\n';
  out << "  |T(G)|         " << report.n_admissible_iso << '\n';
  out << "  formula        ";
  if (report.formula_value) {
    out << *report.formula_value;
  } else {
    out << "n/a (open regime)";
  }
  out << '\n';
  out << "  agreement      ";
  if (report.agreement) {
    out << (*report.agreement ? "true" : "false");
  } else {
    out << "n/a";
  }
  out << '\n';
  if (!ts.empty()) {
    out << "  admissible triplets (a, b, d | s, j, iso):\n";
    for (const auto& t : ts) {
      if (!t.admissible) continue;
      out << "    (" << t.triplet.a << ", " << t.triplet.b << ", "
          << t.triplet.d << ")";
      if (t.invariant) {
        out << "  s=" << t.invariant->s << " j=" << t.invariant->j
            << (t.iso_to_G ? "  N ~ G" : "  N !~ G");
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string render_sweep_table(const std::vector<CountReport>& rows) {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& row : rows) out << csv_row(row) << '\n';
  return out.str();
}

Json strip_volatile(Json document) {
  if (document.contains("metadata") && document["metadata"].is_object()) {
    document["metadata"].erase("runtime_ms");
  }
  return document;
}

std::string dump_json(const Json& document) {
  return document.dump(2) + "\n";
}

}  // namespace mholo
