#include "quasinv/harmonic.hpp"

#include "quasinv/poly_io.hpp"

#include "json.hpp"

#include <algorithm>

namespace quasinv {

std::vector<Rational> homogeneous_coeffs(const BiPoly &p, int d) {
  std::vector<Rational> v(static_cast<std::size_t>(d + 1));
  for (const auto &[mono, c] : p.terms()) {
    if (mono.degree() != d)
      throw std::invalid_argument("homogeneous_coeffs: degree mismatch");
    v[static_cast<std::size_t>(mono.zb)] = c;
  }
  return v;
}

namespace {

BiPoly poly_from_coeffs(const std::vector<Rational> &v, int d) {
  BiPoly p;
  for (int b = 0; b <= d; ++b)
    if (!v[static_cast<std::size_t>(b)].is_zero())
      p += BiPoly::monomial(d - b, b, v[static_cast<std::size_t>(b)]);
  return p;
}

/// Stacks the linear conditions "op(monomial_b) has identically zero
/// numerator" over b = 0..d into matrix rows (one row per monomial of the
/// lifted numerators).
void append_kernel_rows(const DihedralConfig &cfg, int d,
                        const std::vector<LocalElement> &images,
                        std::vector<std::vector<Rational>> &rows) {
  int max_k = 0;
  for (const auto &e : images) max_k = std::max(max_k, e.delta_power());
  const BiPoly delta = delta_poly(cfg.N);
  std::map<Monomial, std::size_t, GradedLess> row_of;
  std::vector<std::vector<Rational>> block;
  for (int b = 0; b <= d; ++b) {
    const auto &e = images[static_cast<std::size_t>(b)];
    const BiPoly lifted =
        e.numerator() * delta.pow(static_cast<unsigned>(max_k - e.delta_power()));
    for (const auto &[mono, c] : lifted.terms()) {
      auto [it, fresh] = row_of.try_emplace(mono, block.size());
      if (fresh) block.emplace_back(static_cast<std::size_t>(d + 1), Rational(0));
      block[it->second][static_cast<std::size_t>(b)] = c;
    }
  }
  for (auto &r : block) rows.push_back(std::move(r));
}

std::vector<BiPoly> kernel_of(const DihedralConfig &cfg, int d, bool include_l2) {
  std::vector<LocalElement> l_images;
  std::vector<LocalElement> l2_images;
  for (int b = 0; b <= d; ++b) {
    const LocalElement mono =
        LocalElement::from_poly(BiPoly::monomial(d - b, b), cfg.N);
    l_images.push_back(apply_L(cfg, mono));
    if (include_l2) l2_images.push_back(apply_L2(cfg, mono));
  }
  std::vector<std::vector<Rational>> rows;
  append_kernel_rows(cfg, d, l_images, rows);
  if (include_l2) append_kernel_rows(cfg, d, l2_images, rows);

  RatMatrix m(static_cast<int>(rows.size()), d + 1);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  std::vector<BiPoly> out;
  for (const auto &v : nullspace(m)) out.push_back(poly_from_coeffs(v, d));
  return out;
}

} // namespace

std::vector<BiPoly> harmonic_component(const DihedralConfig &cfg, int d) {
  return kernel_of(cfg, d, true);
}

std::vector<BiPoly> laplacian_kernel_component(const DihedralConfig &cfg, int d) {
  return kernel_of(cfg, d, false);
}

GradedBasis harmonic_space(const DihedralConfig &cfg) {
  GradedBasis space{cfg, {}, 0};
  for (int d = 0; d <= cfg.top_degree(); ++d) {
    auto comp = harmonic_component(cfg, d);
    if (!comp.empty()) {
      space.total_dim += static_cast<int>(comp.size());
      space.components.emplace(d, std::move(comp));
    }
  }
  if (space.total_dim != cfg.group_order())
    throw TheoremViolation("harmonic_space: dimension " +
                           std::to_string(space.total_dim) + ", expected " +
                           std::to_string(cfg.group_order()));
  for (int d = cfg.top_degree() + 1; d <= cfg.top_degree() + cfg.N + 2; ++d)
    if (!harmonic_component(cfg, d).empty())
      throw TheoremViolation("harmonic_space: unexpected kernel at degree " +
                             std::to_string(d));

  // Graded span equality with the quasi basis (the explicit description of
  // the m-harmonic space).
  const QuasiBasis qb = build_quasi_basis(cfg);
  const auto gens = qb.ordered();
  const auto degs = qb.degrees();
  std::map<int, std::vector<const BiPoly *>> gens_by_degree;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gens_by_degree[degs[i]].push_back(gens[i]);
  for (const auto &[d, comp] : space.components) {
    auto it = gens_by_degree.find(d);
    const std::size_t expected = it == gens_by_degree.end() ? 0 : it->second.size();
    if (comp.size() != expected)
      throw TheoremViolation("harmonic_space: degree " + std::to_string(d) +
                             " has dimension " + std::to_string(comp.size()) +
                             ", quasi basis has " + std::to_string(expected));
    if (expected == 0) continue;
    std::vector<std::vector<Rational>> span;
    for (const auto &h : comp) span.push_back(homogeneous_coeffs(h, d));
    for (const BiPoly *g : it->second)
      if (!in_span(span, homogeneous_coeffs(*g, d)))
        throw TheoremViolation("harmonic_space: generator of degree " +
                               std::to_string(d) + " escapes the kernel span");
  }
  for (const auto &[d, g] : gens_by_degree)
    if (!space.components.contains(d))
      throw TheoremViolation("harmonic_space: missing kernel at generator degree " +
                             std::to_string(d));
  return space;
}

std::vector<int> GradedBasis::degree_multiset() const {
  std::vector<int> out;
  for (const auto &[d, comp] : components)
    out.insert(out.end(), comp.size(), d);
  return out;
}

std::string GradedBasis::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = cfg.N;
  j["m"] = cfg.m;
  nlohmann::ordered_json comp = nlohmann::ordered_json::object();
  for (const auto &[d, polys] : components) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &p : polys) arr.push_back(render_poly(p));
    comp[std::to_string(d)] = std::move(arr);
  }
  j["components"] = std::move(comp);
  j["total_dim"] = total_dim;
  return j.dump();
}

std::vector<int> harmonic_poincare(const GradedBasis &space) {
  std::vector<int> h(static_cast<std::size_t>(space.cfg.top_degree() + 1), 0);
  for (const auto &[d, comp] : space.components)
    h[static_cast<std::size_t>(d)] = static_cast<int>(comp.size());
  return h;
}

std::vector<int> harmonic_poincare(const DihedralConfig &cfg) {
  return harmonic_poincare(harmonic_space(cfg));
}

namespace {

std::vector<Rational> residue_projection(const BiPoly &p, int d, int residue, int n) {
  std::vector<Rational> v(static_cast<std::size_t>(d + 1));
  for (const auto &[mono, c] : p.terms()) {
    const int r = ((mono.z - mono.zb) % n + n) % n;
    if (r == residue) v[static_cast<std::size_t>(mono.zb)] = c;
  }
  return v;
}

} // namespace

RepReport regular_rep_check(const GradedBasis &space) {
  const DihedralConfig &cfg = space.cfg;
  RepReport rep;
  rep.residue_dims.assign(static_cast<std::size_t>(cfg.N), 0);
  rep.reflection_trace = Rational(0);
  rep.residues_all_two = true;
  rep.trace_zero = true;
  rep.swap_pairs_residues = true;

  // Rotation eigenspace dimensions: project each graded slice per residue
  // and accumulate ranks (slices of distinct degrees are independent).
  for (int r = 0; r < cfg.N; ++r) {
    int dim = 0;
    for (const auto &[d, comp] : space.components) {
      std::vector<std::vector<Rational>> proj;
      for (const auto &h : comp) proj.push_back(residue_projection(h, d, r, cfg.N));
      dim += span_rank(proj);
    }
    rep.residue_dims[static_cast<std::size_t>(r)] = dim;
    if (dim != 2) rep.residues_all_two = false;
  }

  // Reflection: trace over each graded slice (the involution preserves
  // degree), via exact coordinates in the slice basis.
  for (const auto &[d, comp] : space.components) {
    RatMatrix basis_cols(d + 1, static_cast<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto v = homogeneous_coeffs(comp[i], d);
      for (int row = 0; row <= d; ++row)
        basis_cols.at(row, static_cast<int>(i)) = v[static_cast<std::size_t>(row)];
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto image = homogeneous_coeffs(comp[i].conjugate_swap(), d);
      const auto coords = solve(basis_cols, image);
      if (!coords) {
        rep.swap_pairs_residues = false;
        rep.trace_zero = false;
        return rep;
      }
      rep.reflection_trace += (*coords)[i];
    }
  }
  rep.trace_zero = rep.reflection_trace.is_zero();

  // Reflection must carry the residue-r slice onto the residue-(N-r) slice.
  for (int r = 0; r < cfg.N; ++r) {
    const int rr = (cfg.N - r) % cfg.N;
    for (const auto &[d, comp] : space.components) {
      std::vector<std::vector<Rational>> target;
      for (const auto &h : comp) target.push_back(residue_projection(h, d, rr, cfg.N));
      for (const auto &h : comp) {
        const BiPoly swapped = h.conjugate_swap();
        if (!in_span(target, residue_projection(swapped, d, rr, cfg.N))) {
          rep.swap_pairs_residues = false;
          break;
        }
      }
    }
    if (rep.residue_dims[static_cast<std::size_t>(r)] !=
        rep.residue_dims[static_cast<std::size_t>(rr)])
      rep.swap_pairs_residues = false;
  }
  return rep;
}

RepReport regular_rep_check(const DihedralConfig &cfg) {
  return regular_rep_check(harmonic_space(cfg));
}

} // namespace quasinv
