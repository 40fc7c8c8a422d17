#include "cygrowth/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "cygrowth/error.hpp"
#include "cygrowth/fp.hpp"

namespace cygrowth {

long DimTable::at(int i, int j, long deg) const {
  auto it = dims.find({i, j, deg});
  return it == dims.end() ? 0 : it->second;
}

std::string DimTable::csv() const {
  std::ostringstream os;
  os << "i,j,n,dim\n";
  for (auto& [key, value] : dims)
    os << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << "," << value
       << "\n";
  return os.str();
}

namespace {

struct CompiledTerm {
  Rat coeff;
  std::vector<int> arrows;
};

struct CompiledRel {
  int src = 0, tgt = 0;
  long weight = 0;
  std::vector<CompiledTerm> terms;
};

struct Path {
  int src = 0, tgt = 0;
  std::vector<int> arrows;
};

/// Degreewise path bases and ideal slices for one presentation. The scalar F
/// is a field; the default is Rat, the prime-field seam swaps in Fp31.
template <typename F>
class DegreeEngineT {
 public:
  DegreeEngineT(const GradedPresentation& p, long cap) : q_(p.quiver), cap_(cap) {
    validate_presentation(p);
    out_.resize(q_.n_vertices);
    for (size_t k = 0; k < q_.arrows.size(); ++k) out_[q_.arrows[k].source - 1].push_back((int)k);
    for (auto& r : p.relations) {
      CompiledRel cr;
      cr.src = r.source;
      cr.tgt = r.target;
      cr.weight = r.weight;
      for (auto& t : r.terms) {
        CompiledTerm ct;
        ct.coeff = t.coeff;
        for (auto& id : t.path) ct.arrows.push_back(q_.arrow_index(id));
        cr.terms.push_back(std::move(ct));
      }
      rels_.push_back(std::move(cr));
    }
  }

  const WeightedQuiver& quiver() const { return q_; }

  struct Block {
    std::map<std::vector<int>, int> col_of;  // path -> column, lexicographic order
    std::vector<const std::vector<int>*> path_of;
    RowSpaceT<F> ideal;
    std::vector<int> free_cols;  // quotient basis columns
    std::map<int, int> free_index;
  };

  struct Degree {
    std::vector<Path> paths;
    std::map<std::pair<int, int>, Block> blocks;  // (src, tgt), 1-based
    bool reduced = false;
  };

  /// Ensures degrees 0..n are enumerated and their ideal slices reduced.
  void ensure(long n) {
    for (long w = static_cast<long>(degrees_.size()); w <= n; ++w) {
      Degree deg;
      enumerate_paths(w, deg);
      index_paths(deg);
      fill_ideal(w, deg);
      finish_blocks(deg);
      degrees_.push_back(std::move(deg));
    }
  }

  const Degree& degree(long n) const { return degrees_.at(n); }

  long quotient_dim(long n, int i, int j) const {
    auto& deg = degrees_.at(n);
    auto it = deg.blocks.find({i, j});
    if (it == deg.blocks.end()) return 0;
    return static_cast<long>(it->second.free_cols.size());
  }

  /// Normal form of a path (given as arrow indices) in its block's quotient,
  /// as (free column -> coefficient).
  SparseRowT<F> normal_form(long n, int i, int j, const std::vector<int>& arrows) const {
    auto& deg = degrees_.at(n);
    auto it = deg.blocks.find({i, j});
    if (it == deg.blocks.end()) throw Error(Errc::Internal, "normal form in an empty block");
    auto cit = it->second.col_of.find(arrows);
    if (cit == it->second.col_of.end()) throw Error(Errc::Internal, "path missing from basis");
    SparseRowT<F> row{{cit->second, F(1)}};
    return it->second.ideal.reduce(std::move(row));
  }

  std::string render(long n, int i, int j, const std::vector<std::pair<int, Rat>>& combo) const;

  const std::vector<int>& arrows_out(int v) const { return out_[v - 1]; }
  const Arrow& arrow(int k) const { return q_.arrows[k]; }
  int arrow_count() const { return static_cast<int>(q_.arrows.size()); }

 private:
  void enumerate_paths(long w, Degree& deg) {
    std::vector<int> cur;
    for (int v = 1; v <= q_.n_vertices; ++v) walk(v, v, w, cur, deg);
  }

  void walk(int src, int at, long remaining, std::vector<int>& cur, Degree& deg) {
    if (remaining == 0) {
      if (static_cast<long>(deg.paths.size()) >= cap_)
        throw Error(Errc::TruncationTooLarge, "path count exceeds the per-degree cap");
      deg.paths.push_back({src, at, cur});
    }
    for (int k : out_[at - 1]) {
      const Arrow& a = q_.arrows[k];
      if (a.weight > remaining) continue;
      cur.push_back(k);
      walk(src, a.target, remaining - a.weight, cur, deg);
      cur.pop_back();
    }
  }

  void index_paths(Degree& deg) {
    for (auto& p : deg.paths) deg.blocks[{p.src, p.tgt}].col_of.emplace(p.arrows, 0);
    for (auto& [key, block] : deg.blocks) {
      int idx = 0;
      block.path_of.resize(block.col_of.size());
      for (auto& [arrows, col] : block.col_of) {
        col = idx;
        block.path_of[idx] = &arrows;
        ++idx;
      }
    }
  }

  void fill_ideal(long w, Degree& deg) {
    for (auto& r : rels_) {
      if (r.weight > w) continue;
      for (long wa = 0; wa + r.weight <= w; ++wa) {
        long wb = w - r.weight - wa;
        if (wa >= static_cast<long>(degrees_.size()) && wa != w) continue;
        const std::vector<Path>& lefts = (wa == w) ? deg.paths : degrees_[wa].paths;
        const std::vector<Path>& rights = (wb == w) ? deg.paths : degrees_[wb].paths;
        for (auto& a : lefts) {
          if (a.tgt != r.src) continue;
          for (auto& b : rights) {
            if (b.src != r.tgt) continue;
            Block& block = deg.blocks[{a.src, b.tgt}];
            SparseRowT<F> row;
            for (auto& t : r.terms) {
              std::vector<int> word;
              word.reserve(a.arrows.size() + t.arrows.size() + b.arrows.size());
              word.insert(word.end(), a.arrows.begin(), a.arrows.end());
              word.insert(word.end(), t.arrows.begin(), t.arrows.end());
              word.insert(word.end(), b.arrows.begin(), b.arrows.end());
              auto cit = block.col_of.find(word);
              if (cit == block.col_of.end())
                throw Error(Errc::Internal, "relation term leaves the path basis");
              row.emplace_back(cit->second, F(t.coeff));
            }
            std::sort(row.begin(), row.end(),
                      [](auto& x, auto& y) { return x.first < y.first; });
            SparseRowT<F> merged;
            for (auto& [c, v] : row) {
              if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
              else
                merged.emplace_back(c, v);
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](auto& e) { return e.second == F(0); }),
                         merged.end());
            block.ideal.add(std::move(merged));
          }
        }
      }
    }
  }

  void finish_blocks(Degree& deg) {
    for (auto& [key, block] : deg.blocks) {
      auto& pivots = block.ideal.pivot_rows();
      int cols = static_cast<int>(block.col_of.size());
      for (int c = 0; c < cols; ++c)
        if (pivots.find(c) == pivots.end()) {
          block.free_index[c] = static_cast<int>(block.free_cols.size());
          block.free_cols.push_back(c);
        }
    }
    deg.reduced = true;
  }

  const WeightedQuiver& q_;
  long cap_;
  std::vector<std::vector<int>> out_;
  std::vector<CompiledRel> rels_;
  std::vector<Degree> degrees_;
};

using DegreeEngine = DegreeEngineT<Rat>;

template <typename F>
std::string DegreeEngineT<F>::render(long n, int i, int j,
                                     const std::vector<std::pair<int, Rat>>& combo) const {
  auto& block = degrees_.at(n).blocks.at({i, j});
  std::ostringstream os;
  bool first = true;
  for (auto& [col, coeff] : combo) {
    Rat a = coeff;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << rat_str(a) << "*";
    const std::vector<int>& word = *block.path_of.at(col);
    if (word.empty()) {
      os << "e_" << i;
    } else {
      bool dot = false;
      for (int k : word) {
        if (dot) os << "*";
        os << q_.arrows[k].id;
        dot = true;
      }
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

void validate_presentation(const GradedPresentation& p) {
  auto diags = validate_quiver(p.quiver);
  if (!diags.empty()) throw Error(Errc::InvalidQuiver, diags.front());
  for (auto& r : p.relations) {
    if (r.terms.empty()) throw Error(Errc::DegreeMismatch, "relation with no terms");
    for (auto& t : r.terms) {
      if (t.path.size() < 2)
        throw Error(Errc::DegreeMismatch, "relation term is not a path of length >= 2");
      long w = 0;
      int at = r.source;
      for (auto& id : t.path) {
        const Arrow& a = p.quiver.arrow(id);
        if (a.source != at)
          throw Error(Errc::DegreeMismatch, "relation term is not composable at arrow " + id);
        at = a.target;
        w += a.weight;
      }
      if (at != r.target)
        throw Error(Errc::DegreeMismatch, "relation term does not end at the stated target");
      if (w != r.weight)
        throw Error(Errc::DegreeMismatch, "relation term is not homogeneous of the stated weight");
    }
  }
}

GradedPresentation build_mesh_relations(const WeightedQuiver& quiver, const CYDatum& cy,
                                        const MeshData& tau) {
  auto diags = validate_quiver(quiver);
  if (!diags.empty()) throw Error(Errc::InvalidQuiver, diags.front());
  auto cy_diags = validate_cy_datum(quiver, cy);
  if (!cy_diags.empty()) throw Error(Errc::IncompatibleDatum, cy_diags.front());
  std::vector<int> mu_inv_v = cy.mu_inverse();
  auto mu_inv = [&](int v) { return mu_inv_v[v - 1]; };

  int b = static_cast<int>(quiver.arrows.size());
  QMat T(b, b);
  for (auto& [xid, combo] : tau.tau)
    if (quiver.arrow_index(xid) < 0)
      throw Error(Errc::InvalidQuiver, "tau defined on unknown arrow: " + xid);
  for (int xi = 0; xi < b; ++xi) {
    const Arrow& x = quiver.arrows[xi];
    long want_weight = cy.ell[x.target - 1] - x.weight;
    int want_src = mu_inv(x.target);
    auto it = tau.tau.find(x.id);
    if (it != tau.tau.end()) {
      for (auto& [coeff, yid] : it->second) {
        int yi = quiver.arrow_index(yid);
        if (yi < 0) throw Error(Errc::InvalidQuiver, "tau image uses unknown arrow: " + yid);
        const Arrow& y = quiver.arrows[yi];
        if (y.source != want_src || y.target != x.source || y.weight != want_weight) {
          std::ostringstream os;
          os << "tau(" << x.id << ") must lie in arrows " << want_src << " -> " << x.source
             << " of weight " << want_weight << "; arrow " << yid << " does not";
          throw Error(Errc::DegreeMismatch, os.str());
        }
        T.at(yi, xi) += coeff;
      }
    }
    // Blockwise slot counting: the target block needs as many arrows as the source.
    int src_count = 0, tgt_count = 0;
    for (auto& a : quiver.arrows) {
      if (a.source == x.source && a.target == x.target && a.weight == x.weight) ++src_count;
      if (a.source == want_src && a.target == x.source && a.weight == want_weight) ++tgt_count;
    }
    if (tgt_count < src_count)
      throw Error(Errc::TauImageNotArrowSpace,
                  "no room for tau(" + x.id + "): " + std::to_string(src_count) +
                      " arrows map into a block with " + std::to_string(tgt_count));
  }
  if (T.rank() < b)
    throw Error(Errc::TauNotInjective, "tau is not injective on the arrow space");

  GradedPresentation out;
  out.quiver = quiver;
  for (int r = 1; r <= quiver.n_vertices; ++r) {
    Relation rel;
    rel.source = mu_inv(r);
    rel.target = r;
    rel.weight = cy.ell[r - 1];
    for (auto& x : quiver.arrows) {
      if (x.target != r) continue;
      auto it = tau.tau.find(x.id);
      if (it == tau.tau.end()) continue;
      for (auto& [coeff, yid] : it->second) {
        if (coeff == 0) continue;
        rel.terms.push_back({coeff, {yid, x.id}});
      }
    }
    if (!rel.terms.empty()) out.relations.push_back(std::move(rel));
  }
  return out;
}

SemipotentialRelations build_semipotential_relations(const WeightedQuiver& quiver,
                                                     const CYDatum& cy, const Semipotential& sp) {
  auto diags = validate_quiver(quiver);
  if (!diags.empty()) throw Error(Errc::InvalidQuiver, diags.front());
  auto cy_diags = validate_cy_datum(quiver, cy);
  if (!cy_diags.empty()) throw Error(Errc::IncompatibleDatum, cy_diags.front());
  std::vector<int> mu_inv_v = cy.mu_inverse();

  std::vector<std::string> ybasis = sp.y_basis;
  if (ybasis.empty())
    for (auto& a : quiver.arrows) ybasis.push_back(a.id);
  {
    std::vector<std::string> sorted_y = ybasis, sorted_a;
    for (auto& a : quiver.arrows) sorted_a.push_back(a.id);
    std::sort(sorted_y.begin(), sorted_y.end());
    std::sort(sorted_a.begin(), sorted_a.end());
    if (sorted_y != sorted_a)
      throw Error(Errc::InvalidQuiver, "y_basis must relabel the arrow set exactly");
  }

  for (auto& e : sp.entries) {
    const Arrow& y = quiver.arrow(e.y);
    const Arrow& x = quiver.arrow(e.x);
    int r = x.target;
    if (y.source != mu_inv_v[r - 1])
      throw Error(Errc::NotWeakPotential,
                  "term " + e.y + " ... " + e.x + " starts at vertex " +
                      std::to_string(y.source) + ", not at mu^{-1}(" + std::to_string(r) + ")");
    for (auto& g : e.g) {
      if (g.path.empty())
        throw Error(Errc::DegreeMismatch, "semipotential middle factor must be a nonempty path");
      long w = 0;
      int at = y.target;
      for (auto& id : g.path) {
        const Arrow& a = quiver.arrow(id);
        if (a.source != at)
          throw Error(Errc::DegreeMismatch, "middle factor not composable after " + e.y);
        at = a.target;
        w += a.weight;
      }
      if (at != x.source)
        throw Error(Errc::DegreeMismatch, "middle factor does not reach the source of " + e.x);
      if (y.weight + w + x.weight != cy.ell[r - 1])
        throw Error(Errc::DegreeMismatch, "semipotential term is not homogeneous of degree ell_r");
    }
  }

  SemipotentialRelations out;
  out.rows.quiver = quiver;
  out.columns.quiver = quiver;

  // h_y = sum_x g_{y,x} x, one relation per y arrow that appears.
  for (auto& yid : ybasis) {
    const Arrow& y = quiver.arrow(yid);
    Relation rel;
    rel.source = y.target;
    rel.target = cy.mu[y.source - 1];
    rel.weight = cy.ell[rel.target - 1] - y.weight;
    for (auto& e : sp.entries) {
      if (e.y != yid) continue;
      for (auto& g : e.g) {
        if (g.coeff == 0) continue;
        PathTerm t;
        t.coeff = g.coeff;
        t.path = g.path;
        t.path.push_back(e.x);
        rel.terms.push_back(std::move(t));
      }
    }
    if (!rel.terms.empty()) out.rows.relations.push_back(std::move(rel));
  }

  // h'_x = sum_y y g_{y,x}.
  for (auto& x : quiver.arrows) {
    Relation rel;
    rel.source = mu_inv_v[x.target - 1];
    rel.target = x.source;
    rel.weight = cy.ell[x.target - 1] - x.weight;
    for (auto& e : sp.entries) {
      if (e.x != x.id) continue;
      for (auto& g : e.g) {
        if (g.coeff == 0) continue;
        PathTerm t;
        t.coeff = g.coeff;
        t.path.push_back(e.y);
        t.path.insert(t.path.end(), g.path.begin(), g.path.end());
        rel.terms.push_back(std::move(t));
      }
    }
    if (!rel.terms.empty()) out.columns.relations.push_back(std::move(rel));
  }
  return out;
}

namespace {

template <typename F>
DimTable graded_dims_impl(const GradedPresentation& p, long D, long path_cap_per_degree) {
  if (D < 0) throw Error(Errc::DimensionMismatch, "negative truncation degree");
  DegreeEngineT<F> engine(p, path_cap_per_degree);
  engine.ensure(D);
  DimTable table;
  table.D = D;
  table.n = p.quiver.n_vertices;
  for (long w = 0; w <= D; ++w)
    for (int i = 1; i <= table.n; ++i)
      for (int j = 1; j <= table.n; ++j) table.dims[{i, j, w}] = engine.quotient_dim(w, i, j);
  return table;
}

}  // namespace

DimTable graded_dims(const GradedPresentation& p, long D, long path_cap_per_degree) {
  return graded_dims_impl<Rat>(p, D, path_cap_per_degree);
}

DimTable graded_dims_prime_field(const GradedPresentation& p, long D, long path_cap_per_degree) {
  return graded_dims_impl<Fp31>(p, D, path_cap_per_degree);
}

SeriesComparison check_against_series(const DimTable& table, const MatPoly& q) {
  if (q.n() != table.n) throw Error(Errc::DimensionMismatch, "series size does not match table");
  MatSeries s = invert_as_series(q, table.D);
  SeriesComparison out;
  for (long w = 0; w <= table.D && out.match; ++w)
    for (int i = 1; i <= table.n && out.match; ++i)
      for (int j = 1; j <= table.n; ++j) {
        Rat expected = s.at(i - 1, j - 1, w);
        long got = table.at(i, j, w);
        if (expected != Rat(got)) {
          out.match = false;
          out.first_mismatch = {i, j, w};
          out.oracle_value = got;
          out.series_value = expected;
          break;
        }
      }
  return out;
}

SocleReport truncated_socle_trivial(const GradedPresentation& p, Side side, long D,
                                    long path_cap_per_degree) {
  if (D < 1) throw Error(Errc::DimensionMismatch, "socle check needs D >= 1");
  DegreeEngine engine(p, path_cap_per_degree);
  engine.ensure(D);
  long maxw = 0;
  for (auto& a : p.quiver.arrows) maxw = std::max(maxw, a.weight);
  if (maxw == 0) maxw = 1;
  SocleReport rep;
  rep.checked_up_to = D - maxw;
  int n = p.quiver.n_vertices;

  for (long deg = 0; deg <= rep.checked_up_to; ++deg) {
    // Right socle: kernel of x -> (x * arrow) over all arrows; grouped by the
    // row vertex i so distinct idempotent slices stay independent. Left socle
    // is the mirror image grouped by the column vertex.
    for (int fixed = 1; fixed <= n; ++fixed) {
      struct DomSlot {
        int other;
        int free_col;
      };
      std::vector<DomSlot> domain;
      for (int other = 1; other <= n; ++other) {
        int i = (side == Side::Right) ? fixed : other;
        int j = (side == Side::Right) ? other : fixed;
        long dim = engine.quotient_dim(deg, i, j);
        for (long c = 0; c < dim; ++c) domain.push_back({other, static_cast<int>(c)});
      }
      if (domain.empty()) continue;

      // Codomain slots: one block per arrow.
      long codim = 0;
      std::vector<std::pair<int, long>> arrow_offsets;  // (arrow index, offset)
      for (int k = 0; k < engine.arrow_count(); ++k) {
        const Arrow& a = engine.arrow(k);
        int i = (side == Side::Right) ? fixed : a.source;
        int j = (side == Side::Right) ? a.target : fixed;
        arrow_offsets.push_back({k, codim});
        codim += engine.quotient_dim(deg + a.weight, i, j);
      }
      QMat map(static_cast<int>(codim == 0 ? 1 : codim), static_cast<int>(domain.size()));

      for (size_t dcol = 0; dcol < domain.size(); ++dcol) {
        int other = domain[dcol].other;
        int i = (side == Side::Right) ? fixed : other;
        int j = (side == Side::Right) ? other : fixed;
        auto& block = engine.degree(deg).blocks.at({i, j});
        const std::vector<int>& word = *block.path_of.at(block.free_cols[domain[dcol].free_col]);
        for (auto& [k, offset] : arrow_offsets) {
          const Arrow& a = engine.arrow(k);
          int ti, tj;
          std::vector<int> longer;
          if (side == Side::Right) {
            if (a.source != j) continue;
            ti = fixed;
            tj = a.target;
            longer = word;
            longer.push_back(k);
          } else {
            if (a.target != i) continue;
            ti = a.source;
            tj = fixed;
            longer.clear();
            longer.push_back(k);
            longer.insert(longer.end(), word.begin(), word.end());
          }
          SparseRow nf = engine.normal_form(deg + a.weight, ti, tj, longer);
          auto& tblock = engine.degree(deg + a.weight).blocks.at({ti, tj});
          for (auto& [col, coeff] : nf) {
            long row = offset + tblock.free_index.at(col);
            map.at(static_cast<int>(row), static_cast<int>(dcol)) = coeff;
          }
        }
      }

      auto kernel = map.kernel();
      for (auto& vec : kernel) {
        rep.trivial_up_to_cutoff = false;
        // Render the witness inside the block it came from.
        std::ostringstream os;
        bool first = true;
        for (size_t dcol = 0; dcol < vec.size(); ++dcol) {
          if (vec[dcol] == 0) continue;
          int other = domain[dcol].other;
          int i = (side == Side::Right) ? fixed : other;
          int j = (side == Side::Right) ? other : fixed;
          auto& block = engine.degree(deg).blocks.at({i, j});
          int col = block.free_cols[domain[dcol].free_col];
          if (!first) os << " + ";
          os << "(" << engine.render(deg, i, j, {{col, vec[dcol]}}) << ")";
          first = false;
        }
        rep.witnesses.push_back({deg, os.str()});
      }
    }
  }
  return rep;
}

std::vector<int> redundant_relations(const GradedPresentation& p, long path_cap_per_degree) {
  std::vector<int> redundant;
  for (size_t k = 0; k < p.relations.size(); ++k) {
    GradedPresentation others;
    others.quiver = p.quiver;
    for (size_t j = 0; j < p.relations.size(); ++j)
      if (j != k) others.relations.push_back(p.relations[j]);
    const Relation& r = p.relations[k];
    DegreeEngine engine(others, path_cap_per_degree);
    engine.ensure(r.weight);
    std::vector<int> word_template;
    SparseRow row;
    auto& block = engine.degree(r.weight).blocks.at({r.source, r.target});
    for (auto& t : r.terms) {
      std::vector<int> word;
      for (auto& id : t.path) word.push_back(p.quiver.arrow_index(id));
      row.emplace_back(block.col_of.at(word), t.coeff);
    }
    std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    // Merge duplicate columns.
    SparseRow merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, v);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](auto& e) { return e.second == 0; }),
                 merged.end());
    if (block.ideal.reduce(merged).empty()) redundant.push_back(static_cast<int>(k));
  }
  return redundant;
}

}  // namespace cygrowth
