#include "weylindex/polytope.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "weylindex/error.hpp"
#include "weylindex/linalg.hpp"

namespace weylindex {

namespace {

using Indices = std::vector<std::size_t>;

struct RawFacet {
  WeightVector normal;
  Rational offset;
  Indices incidence;
};

std::vector<WeightVector> pick(const std::vector<WeightVector>& pts, const Indices& idx) {
  std::vector<WeightVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

// Hyperplane through points spanning an affine (d-1)-space, oriented so that
// `inside` is strictly on the negative side. Normal is primitive integral.
Halfspace hyperplane_through(const std::vector<WeightVector>& pts, std::size_t d, const WeightVector& inside) {
  linalg::Matrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(sub(pts[i], pts[0]));
  auto ns = linalg::nullspace(rows, d);
  WeightVector n = primitive_integer(ns.at(0));
  Rational off = dot(n, pts[0]);
  if (dot(n, inside) > off) {
    n = scale(n, -1);
    off = -off;
  }
  return {std::move(n), std::move(off)};
}

// Incremental hull of full-dimensional points in R^d, d >= 1.
std::vector<RawFacet> full_hull(const std::vector<WeightVector>& pts, std::size_t d) {
  Indices simplex{0};
  for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
    auto trial = simplex;
    trial.push_back(i);
    if (linalg::affine_dimension(pick(pts, trial)) == static_cast<int>(trial.size()) - 1) simplex = trial;
  }

  WeightVector inside(d, Rational(0));
  for (auto i : simplex) inside = add(inside, pts[i]);
  inside = scale(inside, Rational(1, static_cast<long>(simplex.size())));

  Indices inserted = simplex;
  auto incidence_of = [&](const Halfspace& h) {
    Indices inc;
    for (auto i : inserted)
      if (h.saturated_by(pts[i])) inc.push_back(i);
    return inc;
  };

  std::vector<RawFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    Indices others;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != skip) others.push_back(simplex[j]);
    auto h = hyperplane_through(pick(pts, others), d, inside);
    facets.push_back({h.normal, h.offset, incidence_of(h)});
  }

  std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex.count(p)) continue;
    std::vector<bool> visible(facets.size());
    bool any = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      visible[f] = dot(facets[f].normal, pts[p]) > facets[f].offset;
      any = any || visible[f];
    }
    if (!any) continue;
    inserted.push_back(p);

    std::vector<Halfspace> next;
    auto push_unique = [&](Halfspace h) {
      if (std::find(next.begin(), next.end(), h) == next.end()) next.push_back(std::move(h));
    };
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (!visible[f]) push_unique({facets[f].normal, facets[f].offset});

    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (visible[g]) continue;
        Indices ridge;
        std::set_intersection(facets[f].incidence.begin(), facets[f].incidence.end(), facets[g].incidence.begin(),
                              facets[g].incidence.end(), std::back_inserter(ridge));
        auto ridge_pts = pick(pts, ridge);
        if (linalg::affine_dimension(ridge_pts) != static_cast<int>(d) - 2) continue;
        ridge_pts.push_back(pts[p]);
        push_unique(hyperplane_through(ridge_pts, d, inside));
      }
    }

    std::sort(inserted.begin(), inserted.end());
    facets.clear();
    for (auto& h : next) {
      auto inc = incidence_of(h);
      facets.push_back({std::move(h.normal), std::move(h.offset), std::move(inc)});
    }
  }
  return facets;
}

// Vertices among `pts` given full-dimensional facets: points whose saturated
// facet normals have full rank.
Indices vertices_from_facets(const std::vector<WeightVector>& pts, const std::vector<Halfspace>& facets,
                             std::size_t d) {
  Indices out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    linalg::Matrix normals;
    for (const auto& f : facets)
      if (f.saturated_by(pts[i])) normals.push_back(f.normal);
    if (normals.size() >= d && linalg::rank(normals) == d) out.push_back(i);
  }
  return out;
}

std::vector<WeightVector> unique_sorted(std::vector<WeightVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void finalize(Polytope& p) {
  std::sort(p.vertices.begin(), p.vertices.end());
  for (auto& f : p.facets) f = p.lattice.primitive(f);
  for (auto& e : p.equations) e = p.lattice.primitive(e);
  std::sort(p.facets.begin(), p.facets.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  p.facets.erase(std::unique(p.facets.begin(), p.facets.end()), p.facets.end());
}

}  // namespace

bool Polytope::contains(const WeightVector& x) const {
  if (empty()) return false;
  for (const auto& e : equations)
    if (!e.saturated_by(x)) return false;
  for (const auto& f : facets)
    if (!f.contains(x)) return false;
  return true;
}

std::vector<std::size_t> Polytope::facet_vertices(std::size_t f) const {
  Indices out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (facets[f].saturated_by(vertices[i])) out.push_back(i);
  return out;
}

WeightVector Polytope::vertex_barycenter() const {
  WeightVector c(ambient_dim, Rational(0));
  for (const auto& v : vertices) c = add(c, v);
  return scale(c, Rational(1, static_cast<long>(vertices.size())));
}

Simplex make_simplex(std::vector<WeightVector> points) {
  if (points.empty()) throw Error(Errc::degenerate_simplex, "simplex without points");
  const std::size_t k = points[0].size();
  if (points.size() != k + 1 || linalg::affine_dimension(points) != static_cast<int>(k))
    throw Error(Errc::degenerate_simplex, "points are not " + std::to_string(k + 1) + " affinely independent points");
  return Simplex{std::move(points)};
}

Polytope convex_hull(const std::vector<WeightVector>& points) {
  if (points.empty()) throw Error(Errc::not_full_dimensional, "convex hull of no points");
  return convex_hull(points, LatticeSpec::standard(points[0].size()));
}

Polytope convex_hull(const std::vector<WeightVector>& points, const LatticeSpec& lattice) {
  Polytope p;
  p.lattice = lattice;
  p.ambient_dim = lattice.rank();
  if (points.empty()) return p;
  for (const auto& x : points)
    if (x.size() != p.ambient_dim) throw Error(Errc::length_mismatch, "point " + to_string(x) + " has wrong length");

  auto pts = unique_sorted(points);
  const std::size_t k = p.ambient_dim;
  const int d = linalg::affine_dimension(pts);
  p.dim = d;

  if (d == static_cast<int>(k)) {
    if (k == 0) {
      p.vertices = pts;
      return p;
    }
    for (auto& f : full_hull(pts, k)) p.facets.push_back({std::move(f.normal), std::move(f.offset)});
    for (auto i : vertices_from_facets(pts, p.facets, k)) p.vertices.push_back(pts[i]);
    finalize(p);
    return p;
  }

  // Lower-dimensional: hull in affine coordinates t with x = base + U t.
  const WeightVector& base = pts[0];
  linalg::Matrix dirs;  // rows are spanning directions
  for (std::size_t i = 1; i < pts.size() && dirs.size() < static_cast<std::size_t>(d); ++i) {
    auto trial = dirs;
    trial.push_back(sub(pts[i], base));
    if (linalg::rank(trial) == trial.size()) dirs = std::move(trial);
  }
  for (auto& e : linalg::nullspace(dirs, k)) p.equations.push_back({e, dot(e, base)});

  if (d == 0) {
    p.vertices = {base};
    finalize(p);
    return p;
  }

  // Left inverse L = (U^T U)^{-1} U^T with U = dirs^T.
  auto gram = linalg::multiply(dirs, linalg::transpose(dirs));
  auto left = linalg::multiply(*linalg::inverse(gram), dirs);  // d x k
  std::vector<WeightVector> local;
  for (const auto& x : pts) local.push_back(linalg::apply(left, sub(x, base)));

  std::vector<Halfspace> local_facets;
  for (auto& f : full_hull(local, d)) local_facets.push_back({std::move(f.normal), std::move(f.offset)});
  for (auto i : vertices_from_facets(local, local_facets, d)) p.vertices.push_back(pts[i]);
  for (const auto& f : local_facets) {
    WeightVector n(k, Rational(0));
    for (int r = 0; r < d; ++r)
      for (std::size_t c = 0; c < k; ++c) n[c] += f.normal[r] * left[r][c];
    p.facets.push_back({n, f.offset + dot(n, base)});
  }
  finalize(p);
  return p;
}

Polytope intersect(const Polytope& p, const std::vector<Halfspace>& halfspaces) {
  Polytope out;
  out.lattice = p.lattice;
  out.ambient_dim = p.ambient_dim;
  if (p.empty()) return out;
  const std::size_t k = p.ambient_dim;

  std::vector<Halfspace> ineq = p.facets;
  ineq.insert(ineq.end(), halfspaces.begin(), halfspaces.end());
  linalg::Matrix eq_rows;
  WeightVector eq_rhs;
  for (const auto& e : p.equations) {
    eq_rows.push_back(e.normal);
    eq_rhs.push_back(e.offset);
  }

  auto feasible = [&](const WeightVector& x) {
    for (const auto& h : ineq)
      if (!h.contains(x)) return false;
    for (const auto& e : p.equations)
      if (!e.saturated_by(x)) return false;
    return true;
  };

  // Every vertex is cut out by the equations plus k - eq_rank independent
  // tight inequalities.
  std::set<WeightVector> found;
  Indices chosen;
  std::function<void(std::size_t, linalg::Matrix, WeightVector)> search = [&](std::size_t start, linalg::Matrix rows,
                                                                              WeightVector rhs) {
    const std::size_t r = rows.empty() ? 0 : linalg::rank(rows);
    if (r == k) {
      auto x = linalg::solve(rows, rhs);
      if (x && feasible(*x)) found.insert(*x);
      return;
    }
    for (std::size_t i = start; i < ineq.size(); ++i) {
      auto next_rows = rows;
      next_rows.push_back(ineq[i].normal);
      if (linalg::rank(next_rows) != r + 1) continue;
      auto next_rhs = rhs;
      next_rhs.push_back(ineq[i].offset);
      search(i + 1, std::move(next_rows), std::move(next_rhs));
    }
  };
  if (k == 0) {
    if (feasible({})) found.insert(WeightVector{});
  } else {
    search(0, eq_rows, eq_rhs);
  }
  if (found.empty()) return out;
  return convex_hull({found.begin(), found.end()}, p.lattice);
}

Polytope intersect_chamber(const Polytope& p, const RootSystem& rs) {
  if (p.ambient_dim != static_cast<std::size_t>(rs.total_rank))
    throw Error(Errc::length_mismatch, "polytope and root system ranks differ");
  return intersect(p, chamber_inequalities(rs));
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  std::vector<WeightVector> sums;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(add(a, b));
  return convex_hull(sums, p.lattice);
}

namespace {

// Vertex-index sets of facets.
std::vector<Indices> facet_incidences(const Polytope& p) {
  std::vector<Indices> out;
  for (std::size_t f = 0; f < p.facets.size(); ++f) out.push_back(p.facet_vertices(f));
  return out;
}

// Pulling triangulation of the face with vertex set `s` (sorted) of
// dimension d.
std::vector<Indices> pull(const Polytope& p, const std::vector<Indices>& incidences, const Indices& s, int d) {
  if (d == 0) return {{s.front()}};
  const std::size_t apex = s.front();
  std::set<Indices> subfaces;
  for (const auto& inc : incidences) {
    Indices t;
    std::set_intersection(s.begin(), s.end(), inc.begin(), inc.end(), std::back_inserter(t));
    if (t.size() < static_cast<std::size_t>(d) || std::binary_search(t.begin(), t.end(), apex)) continue;
    if (linalg::affine_dimension(pick(p.vertices, t)) == d - 1) subfaces.insert(std::move(t));
  }
  std::vector<Indices> out;
  for (const auto& t : subfaces)
    for (auto& simplex : pull(p, incidences, t, d - 1)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  return out;
}

void require_full_dimensional(const Polytope& p) {
  if (!p.full_dimensional())
    throw Error(Errc::not_full_dimensional,
                "polytope of dimension " + std::to_string(p.dim) + " in rank " + std::to_string(p.ambient_dim));
}

}  // namespace

std::vector<Simplex> triangulate(const Polytope& p) {
  require_full_dimensional(p);
  Indices all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<Simplex> out;
  for (const auto& s : pull(p, facet_incidences(p), all, p.dim)) out.push_back(Simplex{pick(p.vertices, s)});
  return out;
}

std::vector<Simplex> triangulate_from(const Polytope& p, const WeightVector& apex) {
  require_full_dimensional(p);
  if (!p.contains(apex)) throw Error(Errc::not_full_dimensional, "apex " + to_string(apex) + " outside polytope");
  auto incidences = facet_incidences(p);
  std::vector<Simplex> out;
  for (std::size_t f = 0; f < p.facets.size(); ++f) {
    if (p.facets[f].saturated_by(apex)) continue;
    for (const auto& s : pull(p, incidences, incidences[f], p.dim - 1)) {
      auto pts = pick(p.vertices, s);
      pts.push_back(apex);
      out.push_back(Simplex{std::move(pts)});
    }
  }
  return out;
}

Rational lattice_volume(const Simplex& s, const LatticeSpec& lattice) {
  const std::size_t k = lattice.rank();
  if (s.points.size() != k + 1) throw Error(Errc::degenerate_simplex, "simplex has wrong number of points");
  linalg::Matrix edges;
  for (std::size_t i = 1; i <= k; ++i) edges.push_back(sub(s.points[i], s.points[0]));
  return abs(linalg::determinant(std::move(edges))) / (factorial(static_cast<long>(k)) * lattice.covolume);
}

Rational volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  Rational total = 0;
  for (const auto& s : triangulate(p)) total += lattice_volume(s, p.lattice);
  return total;
}

Rational support_number(const Polytope& p, const WeightVector& covector) {
  if (p.empty()) throw Error(Errc::not_full_dimensional, "support number of the empty polytope");
  Rational best = dot(covector, p.vertices.front());
  for (const auto& v : p.vertices) best = std::max(best, Rational(dot(covector, v)));
  return best;
}

std::vector<Face> faces(const Polytope& p) {
  if (p.empty()) return {};
  auto incidences = facet_incidences(p);
  Indices all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<Indices> found{all};
  std::deque<Indices> queue(incidences.begin(), incidences.end());
  for (const auto& inc : incidences) found.insert(inc);
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (const auto& inc : incidences) {
      Indices t;
      std::set_intersection(s.begin(), s.end(), inc.begin(), inc.end(), std::back_inserter(t));
      if (!t.empty() && found.insert(t).second) queue.push_back(std::move(t));
    }
  }

  std::vector<Face> out;
  for (const auto& s : found) {
    Face face;
    face.vertex_indices = s;
    auto pts = pick(p.vertices, s);
    face.codim = p.dim - linalg::affine_dimension(pts);
    for (std::size_t f = 0; f < incidences.size(); ++f)
      if (std::includes(incidences[f].begin(), incidences[f].end(), s.begin(), s.end()))
        face.saturated_facets.push_back(f);
    WeightVector c(p.ambient_dim, Rational(0));
    for (const auto& x : pts) c = add(c, x);
    face.sample_point = scale(c, Rational(1, static_cast<long>(pts.size())));
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::tie(a.codim, a.vertex_indices) < std::tie(b.codim, b.vertex_indices);
  });
  return out;
}

namespace {

// Permutation of vertex indices induced by each simple reflection, or empty
// when the vertex set is not invariant.
std::vector<Indices> reflection_permutations(const Polytope& p, const RootSystem& rs) {
  std::vector<Indices> perms;
  for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
    Indices perm;
    for (const auto& v : p.vertices) {
      auto image = reflect(rs, i, v);
      auto it = std::lower_bound(p.vertices.begin(), p.vertices.end(), image);
      if (it == p.vertices.end() || *it != image) return {};
      perm.push_back(static_cast<std::size_t>(it - p.vertices.begin()));
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

}  // namespace

bool is_weyl_invariant(const Polytope& p, const RootSystem& rs) {
  return rs.simple_roots.empty() || !reflection_permutations(p, rs).empty();
}

std::vector<CensusRow> face_census(const Polytope& p, const RootSystem& rs) {
  if (!is_weyl_invariant(p, rs)) throw Error(Errc::not_weyl_invariant, "vertex set is not closed under reflections");
  auto perms = reflection_permutations(p, rs);
  auto all = faces(p);

  std::map<Indices, int> codim_of;
  for (const auto& f : all) codim_of[f.vertex_indices] = f.codim;

  std::map<int, CensusRow> rows;
  std::set<Indices> visited;
  for (const auto& f : all) {
    auto& row = rows.try_emplace(f.codim, CensusRow{f.codim, 0, 0}).first->second;
    ++row.faces;
    if (visited.count(f.vertex_indices)) continue;
    ++row.orbits;
    std::deque<Indices> queue{f.vertex_indices};
    visited.insert(f.vertex_indices);
    while (!queue.empty()) {
      auto s = std::move(queue.front());
      queue.pop_front();
      for (const auto& perm : perms) {
        Indices image;
        for (auto v : s) image.push_back(perm[v]);
        std::sort(image.begin(), image.end());
        if (visited.insert(image).second) queue.push_back(std::move(image));
      }
    }
  }
  std::vector<CensusRow> out;
  for (const auto& [codim, row] : rows) out.push_back(row);
  return out;
}

RegularityVerdict is_regular(const Polytope& p, const RootSystem& rs, const LatticeSpec& lattice) {
  const std::size_t k = p.ambient_dim;
  if (!p.full_dimensional()) return {false, "polytope is not full-dimensional"};
  if (!is_weyl_invariant(p, rs)) return {false, "polytope is not Weyl-invariant"};

  for (const auto& v : p.vertices)
    for (const auto& alpha : rs.positive_roots)
      if (inner_product(rs, v, alpha) == 0)
        return {false, "vertex " + to_string(v) + " lies on the wall of root " + to_string(alpha)};

  std::vector<Halfspace> facets;
  for (const auto& f : p.facets) facets.push_back(lattice.primitive(f));

  for (const auto& v : p.vertices) {
    Indices at;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (facets[f].saturated_by(v)) at.push_back(f);
    if (at.size() != k)
      return {false, "vertex " + to_string(v) + " lies on " + std::to_string(at.size()) + " facets, polytope is not simple"};

    linalg::Matrix edges;
    for (std::size_t skip = 0; skip < k; ++skip) {
      linalg::Matrix others;
      for (std::size_t j = 0; j < k; ++j)
        if (j != skip) others.push_back(facets[at[j]].normal);
      auto dir = linalg::nullspace(others, k).at(0);
      if (dot(facets[at[skip]].normal, dir) > 0) dir = scale(dir, -1);
      edges.push_back(primitive_integer(lattice.coordinates(dir)));
    }
    Rational det = abs(linalg::determinant(edges));
    if (det != 1)
      return {false, "edges at vertex " + to_string(v) + " span a sublattice of index " + to_string(det)};
  }
  return {true, "integrally simple, no vertex on a Weyl wall"};
}

std::vector<FlagChain> flag_subdivision(const Polytope& p, const RootSystem& rs, const LatticeSpec& lattice) {
  auto verdict = is_regular(p, rs, lattice);
  if (!verdict.regular) throw Error(Errc::not_regular, verdict.reason);

  const std::size_t k = p.ambient_dim;
  const Polytope truncated = intersect_chamber(p, rs);
  std::vector<Halfspace> facets;
  for (const auto& f : p.facets) facets.push_back(lattice.primitive(f));
  auto ginv = *linalg::inverse(rs.gram);

  auto on_all = [&](const WeightVector& x, const Indices& s) {
    return std::all_of(s.begin(), s.end(), [&](std::size_t f) { return facets[f].saturated_by(x); });
  };
  auto truncated_vertices = [&](const Indices& s) {
    std::vector<WeightVector> out;
    for (const auto& v : truncated.vertices)
      if (on_all(v, s)) out.push_back(v);
    return out;
  };

  // lambda_F for the face cut out by the facet set s.
  std::map<Indices, WeightVector> chosen;
  auto choose_point = [&](Indices s) -> const WeightVector& {
    std::sort(s.begin(), s.end());
    if (auto it = chosen.find(s); it != chosen.end()) return it->second;
    auto verts = truncated_vertices(s);
    bool meets_wall = false;
    for (const auto& u : verts)
      for (int i = 0; i < rs.semisimple_rank(); ++i) meets_wall = meets_wall || u[i] == 0;

    WeightVector point;
    if (!meets_wall) {
      point.assign(k, Rational(0));
      for (const auto& u : verts) point = add(point, u);
      point = scale(point, Rational(1, static_cast<long>(verts.size())));
    } else {
      // Orthogonal projection of the origin onto the affine span of the
      // face: x = G^{-1} H^T mu with H G^{-1} H^T mu = offsets.
      linalg::Matrix h;
      WeightVector off;
      for (auto f : s) {
        h.push_back(facets[f].normal);
        off.push_back(facets[f].offset);
      }
      auto ght = linalg::multiply(ginv, linalg::transpose(h));
      auto mu = linalg::solve(linalg::multiply(h, ght), off);
      point = linalg::apply(ght, *mu);
      if (!truncated.contains(point))
        throw Error(Errc::orthogonal_point_not_found,
                    "orthogonal point " + to_string(point) + " of a wall-meeting face lies outside P cap D");
    }
    return chosen.emplace(s, std::move(point)).first->second;
  };

  std::vector<FlagChain> out;
  Indices sequence;
  std::function<void()> extend = [&]() {
    if (sequence.size() == k) {
      FlagChain chain;
      chain.facet_sequence = sequence;
      std::vector<WeightVector> simplex_pts{WeightVector(k, Rational(0))};
      Rational coeff = 1;
      WeightVector previous(k, Rational(0));
      for (std::size_t j = 1; j <= k; ++j) {
        const auto& h = facets[sequence[j - 1]];
        coeff *= h.offset - dot(h.normal, previous);
        previous = choose_point(Indices(sequence.begin(), sequence.begin() + j));
        chain.points.push_back(previous);
        simplex_pts.push_back(previous);
      }
      // Flags whose points are affinely dependent carry c_F = 0 and add
      // nothing to the tiling.
      if (coeff == 0) return;
      chain.coefficient = coeff;
      chain.simplex = make_simplex(std::move(simplex_pts));
      if (coeff != factorial(static_cast<long>(k)) * lattice_volume(chain.simplex, lattice))
        throw Error(Errc::tiling_mismatch, "flag coefficient disagrees with k! Vol(simplex)");
      out.push_back(std::move(chain));
      return;
    }
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (std::find(sequence.begin(), sequence.end(), f) != sequence.end()) continue;
      sequence.push_back(f);
      std::vector<WeightVector> face_pts;
      for (const auto& v : p.vertices)
        if (on_all(v, sequence)) face_pts.push_back(v);
      const int expected = static_cast<int>(k - sequence.size());
      if (!face_pts.empty() && linalg::affine_dimension(face_pts) == expected && !truncated_vertices(sequence).empty())
        extend();
      sequence.pop_back();
    }
  };
  extend();

  Rational tiled = 0;
  for (const auto& c : out) tiled += lattice_volume(c.simplex, lattice);
  Rational target = 0;
  if (truncated.full_dimensional()) {
    for (const auto& s : triangulate(truncated)) target += lattice_volume(s, lattice);
  }
  if (tiled != target)
    throw Error(Errc::tiling_mismatch,
                "flag simplices cover volume " + to_string(tiled) + " but P cap D has volume " + to_string(target));
  return out;
}

}  // namespace weylindex
