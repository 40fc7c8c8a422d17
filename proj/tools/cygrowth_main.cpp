#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cygrowth/cy_series.hpp"
#include "cygrowth/error.hpp"
#include "cygrowth/json_io.hpp"
#include "cygrowth/oracle.hpp"
#include "cygrowth/search.hpp"
#include "json.hpp"

namespace {

using namespace cygrowth;

constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitOracle = 4;
constexpr int kExitBounds = 5;

struct Output {
  std::string path;  // empty = stdout
  std::ostringstream buf;

  void flush() {
    if (path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream f(path);
      if (!f) throw Error(Errc::ParseError, "cannot write " + path);
      f << buf.str();
    }
  }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return kExitParse;
    case Errc::TauNotInjective:
    case Errc::TauImageNotArrowSpace:
    case Errc::DegreeMismatch:
    case Errc::NotWeakPotential:
    case Errc::TruncationTooLarge:
      return kExitOracle;
    case Errc::BoundsTooLarge:
      return kExitBounds;
    default:
      return kExitSemantic;
  }
}

std::string matrix_lines(const MatPoly& m, const std::string& indent) {
  std::ostringstream os;
  for (int i = 0; i < m.n(); ++i) {
    os << indent << "[ ";
    for (int j = 0; j < m.n(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j).str();
    }
    os << " ]\n";
  }
  return os.str();
}

std::string int_matrix_lines(const std::vector<std::vector<long>>& m, const std::string& indent) {
  std::ostringstream os;
  for (auto& row : m) {
    os << indent << "[ ";
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ", ";
      os << row[j];
    }
    os << " ]\n";
  }
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

CYSeriesModel model_from_file(const std::string& path) {
  QuiverFile qf = load_quiver_file(path);
  if (!qf.cy) throw Error(Errc::IncompatibleDatum, "quiver file has no cy datum");
  return build_q(qf.quiver, *qf.cy);
}

void run_analyze(const std::string& path, const std::string& format, double tol, Output& out) {
  CYSeriesModel model = model_from_file(path);
  GrowthReport rep = classify_algebra(model.q);
  FunctionalEquationReport fe = verify_functional_equation(model);

  // Total Hilbert series from the all-ones numerator column.
  ModuleSeriesSpec spec;
  spec.q = model.q;
  spec.v.assign(model.q.n(), Poly::one());
  ModuleGrowthResult totals = module_growth(spec);
  RatFun h_tot;
  for (auto& row : rep.entries)
    for (auto& e : row) h_tot = h_tot + e;

  std::optional<SpectralReport> spectral;
  if (model.cy.dimension == 2) {
    SpectralReport s = dim2_spectral_criterion(model, tol);
    if (s.verdict != CriterionVerdict::Inapplicable || !s.reason.empty()) spectral = s;
  } else if (model.cy.dimension == 3) {
    spectral = dim3_normal_criterion(model, tol);
  }

  if (format == "json") {
    nlohmann::json j;
    j["dimension"] = model.cy.dimension;
    j["q"] = model.q.entry_strings();
    j["det_q"] = rep.det_q.str();
    j["growth_class"] = rep.growth_str();
    if (rep.gk_dimension)
      j["gk_dimension"] = *rep.gk_dimension;
    else
      j["gk_dimension"] = nullptr;
    j["cyclotomic_factors"] = nlohmann::json::array();
    for (auto& [n, m] : rep.factorization.factors) j["cyclotomic_factors"].push_back({n, m});
    j["remainder"] = rep.factorization.remainder.str();
    j["eps_det"] = rat_str(rep.eps_det);
    j["pole_orders"] = rep.per_entry_pole_orders;
    j["functional_equation"] = fe.holds;
    j["commutes_with_PtL"] = fe.commutes;
    j["h_tot"] = h_tot.str();
    j["h_tot_eps"] = rat_str(totals.eps);
    if (rep.growth_class == GrowthClass::FiniteGK && totals.gk) j["h_tot_gk"] = *totals.gk;
    if (spectral) {
      j["criterion"] = spectral->verdict_str();
      j["spectral_radius"] = spectral->spectral_radius;
      if (!spectral->caveat.empty()) j["criterion_caveat"] = spectral->caveat;
    }
    out.buf << j.dump(2) << "\n";
    return;
  }

  out.buf << "quiver: " << model.quiver.n_vertices << " vertices, " << model.quiver.arrows.size()
          << " arrows\n";
  out.buf << "cy: dimension " << model.cy.dimension << ", mu = [" << join_ints(model.cy.mu)
          << "], ell = [" << join_longs(model.cy.ell) << "]\n";
  out.buf << "q(t):\n" << matrix_lines(model.q, "  ");
  out.buf << "det q = " << rep.det_q.str() << "\n";
  out.buf << "cyclotomic factorization: " << rep.factorization.str() << "\n";
  out.buf << "growth: " << rep.growth_str() << "\n";
  if (rep.gk_dimension)
    out.buf << "GK-dimension: " << *rep.gk_dimension << "\n";
  else
    out.buf << "GK-dimension: infinite (exponential growth)\n";
  out.buf << "eps(det q) = " << rat_str(rep.eps_det) << "\n";
  out.buf << "pole orders at t=1:\n" << int_matrix_lines(rep.per_entry_pole_orders, "  ");
  out.buf << "functional equation: " << (fe.holds ? "OK" : "FAILED " + fe.witness) << "\n";
  out.buf << "commutes with P t^L: " << (fe.commutes ? "OK" : "FAILED") << "\n";
  out.buf << "h_tot = " << h_tot.str() << "\n";
  if (rep.growth_class == GrowthClass::FiniteGK && totals.gk) {
    out.buf << "h_tot GK = " << *totals.gk << ", eps = " << rat_str(totals.eps) << "\n";
  } else if (rep.growth_class == GrowthClass::Exponential) {
    // Totals can cancel across entries; only the matrix-level verdict stands.
    out.buf << "h_tot note: entrywise growth is exponential, the summed series is not a bound\n";
  }
  if (spectral) {
    out.buf << "dim-" << model.cy.dimension << " criterion: " << spectral->verdict_str();
    if (spectral->verdict == CriterionVerdict::Fail && !spectral->reason.empty())
      out.buf << " (" << spectral->reason << ")";
    if (spectral->verdict == CriterionVerdict::Pass) {
      out.buf << " (rho = " << spectral->spectral_radius;
      if (spectral->perron_vector) {
        out.buf << ", eigenvector = [";
        for (size_t i = 0; i < spectral->perron_vector->size(); ++i) {
          if (i) out.buf << ",";
          out.buf << (*spectral->perron_vector)[i].get_str();
        }
        out.buf << "]";
      }
      out.buf << ")";
    }
    out.buf << "\n";
    if (!spectral->caveat.empty()) out.buf << "  caveat: " << spectral->caveat << "\n";
  }
}

void run_series(const std::string& path, long degree, Output& out) {
  CYSeriesModel model = model_from_file(path);
  MatSeries s = invert_as_series(model.q, degree);
  out.buf << "n,i,j,coeff\n";
  for (long k = 0; k <= s.truncation; ++k)
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        out.buf << k << "," << (i + 1) << "," << (j + 1) << "," << rat_str(s.at(i, j, k)) << "\n";
}

void run_check(const std::string& quiver_path, const std::string& relations_path, long degree,
               const std::string& format, Output& out) {
  QuiverFile qf = load_quiver_file(quiver_path);
  if (!qf.cy) throw Error(Errc::IncompatibleDatum, "quiver file has no cy datum");
  CYSeriesModel model = build_q(qf.quiver, *qf.cy);
  RelationsFile rf = load_relations_file(relations_path, qf.quiver);

  GradedPresentation pres;
  pres.quiver = qf.quiver;
  std::optional<GradedPresentation> column_side;
  std::ostringstream header;
  if (rf.mesh) {
    pres = build_mesh_relations(qf.quiver, *qf.cy, *rf.mesh);
    header << "mesh relations: " << pres.relations.size() << "\n";
  } else if (rf.semipotential) {
    SemipotentialRelations sr = build_semipotential_relations(qf.quiver, *qf.cy, *rf.semipotential);
    pres = sr.rows;
    column_side = sr.columns;
    header << "semipotential row relations: " << pres.relations.size()
           << ", column relations: " << sr.columns.relations.size() << "\n";
  } else {
    pres.relations = *rf.relations;
    validate_presentation(pres);
    header << "relations: " << pres.relations.size() << "\n";
  }

  DimTable table = graded_dims(pres, degree);
  if (format == "csv") {
    // Dimension table only; verdicts live in the text report.
    out.buf << table.csv();
    return;
  }
  out.buf << header.str();

  auto redundant = redundant_relations(pres);
  if (redundant.empty()) {
    out.buf << "relation minimality: no relation lies in the ideal of the others\n";
  } else {
    out.buf << "relation minimality: redundant indices";
    for (int k : redundant) out.buf << " " << k;
    out.buf << "\n";
  }
  SeriesComparison cmp = check_against_series(table, model.q);
  if (cmp.match) {
    out.buf << "series check: match up to degree " << degree << "\n";
  } else {
    auto [i, j, n] = *cmp.first_mismatch;
    out.buf << "series check: MISMATCH at (i=" << i << ", j=" << j << ", n=" << n
            << "): oracle " << cmp.oracle_value << " vs series " << rat_str(cmp.series_value)
            << "\n";
  }

  if (column_side) {
    DimTable col_table = graded_dims(*column_side, degree);
    bool same = true;
    for (auto& [key, value] : table.dims)
      if (col_table.at(std::get<0>(key), std::get<1>(key), std::get<2>(key)) != value) {
        same = false;
        break;
      }
    out.buf << "row/column relation ideals: " << (same ? "identical dims" : "DIFFERENT dims")
            << " up to degree " << degree << "\n";
  }

  for (Side side : {Side::Right, Side::Left}) {
    SocleReport soc = truncated_socle_trivial(pres, side, degree);
    out.buf << (side == Side::Right ? "right" : "left") << " socle: "
            << (soc.trivial_up_to_cutoff ? "trivial" : "NONTRIVIAL") << " in degrees <= "
            << soc.checked_up_to << " (truncation-limited certificate)\n";
    for (auto& w : soc.witnesses)
      out.buf << "  witness in degree " << w.degree << ": " << w.element << "\n";
  }
  out.buf << "note: verdicts only cover degrees up to the truncation bound\n";
}

void run_search(const SearchBounds& bounds, const std::string& format, Output& out) {
  std::vector<SearchHit> hits = search_candidates(bounds);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (auto& h : hits)
      j.push_back({{"vertices", h.n},
                   {"M", h.M_flat},
                   {"mu", h.mu},
                   {"ell", h.ell},
                   {"det_q", h.det_str},
                   {"factorization", h.factorization}});
    out.buf << j.dump(2) << "\n";
    return;
  }
  out.buf << "vertices,M,mu,ell,det_q,factorization\n";
  for (auto& h : hits) {
    out.buf << h.n << ",[" << join_longs(h.M_flat) << "],[" << join_ints(h.mu) << "]," << h.ell
            << "," << h.det_str << "," << h.factorization << "\n";
  }
}

void run_plot_data(int k, int samples, const std::string& quiver_path, Output& out) {
  auto boundary = hypocycloid_boundary(k, samples);
  out.buf << "theta,re,im\n";
  constexpr double kTau = 6.283185307179586;
  for (int s = 0; s < samples; ++s) {
    double theta = kTau * s / samples;
    out.buf << theta << "," << boundary[s].real() << "," << boundary[s].imag() << "\n";
  }
  if (k == 4) {
    // The criterion uses the half-scaled astroid; emit it alongside.
    for (int s = 0; s < samples; ++s) {
      double theta = kTau * s / samples;
      out.buf << theta << "," << 0.5 * boundary[s].real() << "," << 0.5 * boundary[s].imag()
              << "\n";
    }
  }
  if (!quiver_path.empty()) {
    CYSeriesModel model = model_from_file(quiver_path);
    SpectralReport rep = dim3_normal_criterion(model);
    out.buf << "re,im,verdict\n";
    for (auto& [delta, zeta] : rep.pairs) {
      bool ok = hypocycloid_contains(delta, k, zeta);
      out.buf << delta.real() << "," << delta.imag() << "," << (ok ? "in" : "out") << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix Hilbert series, growth and structure checks for graded quiver algebras"};
  app.require_subcommand(1);

  std::string quiver_path, relations_path, out_path, format = "text";
  long degree = 12;
  double tol = 1e-8;
  SearchBounds bounds;
  int plot_k = 3, plot_samples = 256;
  std::string plot_quiver;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text|json|csv");
    cmd->add_option("--out", out_path, "Write output to a file instead of stdout");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Growth report for a quiver file");
  analyze->add_option("quiver", quiver_path, "Quiver JSON file")->required();
  analyze->add_option("--tol", tol, "Numeric tolerance");
  add_common(analyze);

  CLI::App* series = app.add_subcommand("series", "Matrix Hilbert series coefficients (CSV)");
  series->add_option("quiver", quiver_path, "Quiver JSON file")->required();
  series->add_option("--degree", degree, "Truncation degree (default 12)");
  add_common(series);

  CLI::App* check = app.add_subcommand("check", "Compare oracle dimensions against q(t)^{-1}");
  check->add_option("quiver", quiver_path, "Quiver JSON file")->required();
  check->add_option("--relations", relations_path, "Relations JSON file")->required();
  check->add_option("--degree", degree, "Truncation degree (default 12)");
  add_common(check);

  CLI::App* search = app.add_subcommand("search", "Enumerate finite-growth candidate data");
  search->add_option("--dimension", bounds.dimension, "Homological dimension (1, 2 or 3)");
  search->add_option("--max-vertices", bounds.max_vertices, "Vertex bound (<= 4)");
  search->add_option("--max-mult", bounds.max_mult, "Arrow multiplicity bound (<= 6)");
  search->add_option("--ell-min", bounds.ell_min, "Smallest AS-index (dimension 3)");
  search->add_option("--ell-max", bounds.ell_max, "Largest AS-index (dimension 3)");
  add_common(search);

  CLI::App* plot = app.add_subcommand("plot-data", "Hypocycloid boundary and eigenvalue CSV");
  plot->add_option("--k", plot_k, "3 = deltoid, 4 = astroid");
  plot->add_option("--samples", plot_samples, "Boundary sample count");
  plot->add_option("quiver", plot_quiver, "Optional quiver file for eigenvalue overlay");
  add_common(plot);

  CLI11_PARSE(app, argc, argv);

  Output out;
  try {
    out.path = out_path;
    if (app.got_subcommand(analyze))
      run_analyze(quiver_path, format, tol, out);
    else if (app.got_subcommand(series))
      run_series(quiver_path, degree, out);
    else if (app.got_subcommand(check))
      run_check(quiver_path, relations_path, degree, format, out);
    else if (app.got_subcommand(search))
      run_search(bounds, format, out);
    else if (app.got_subcommand(plot))
      run_plot_data(plot_k, plot_samples, plot_quiver, out);
    out.flush();
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return 0;
}
