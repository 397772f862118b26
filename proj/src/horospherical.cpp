#include "hv/horospherical.hpp"

#include <map>
#include <mutex>

namespace hv {

std::string HorosphericalCase::display() const {
  return family_name(family) + std::to_string(rank);
}

HorosphericalCase make_case(const std::string& id) {
  HorosphericalCase c;
  c.id = id;
  if (id == "f4") {
    c.family = Family::F;
    c.rank = 4;
    c.grading_root = 2;
    c.module_node = 4;
    c.dim_v = 3;
    c.dim_w = 2;
    return c;
  }
  if (id.size() == 2 && id[0] == 'b' && id[1] >= '3' && id[1] <= '9') {
    int m = id[1] - '0';
    c.family = Family::B;
    c.rank = m;
    c.grading_root = m - 1;
    c.module_node = m;
    c.dim_v = 2;
    c.dim_w = m - 1;
    return c;
  }
  throw Error("UNSUPPORTED_FAMILY", "unknown case '" + id + "'");
}

std::vector<std::string> all_case_ids() { return {"b3", "b4", "b5", "f4"}; }

std::vector<std::size_t> CaseData::l_range(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_l; ++i)
    if (g.grade[i] >= lo && g.grade[i] <= hi) out.push_back(i);
  return out;
}

std::vector<std::size_t> CaseData::u_range(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (std::size_t i = u_offset; i < g.dim(); ++i)
    if (g.grade[i] >= lo && g.grade[i] <= hi) out.push_back(i);
  return out;
}

std::vector<std::size_t> CaseData::l_all() const { return l_range(-mu, mu); }
std::vector<std::size_t> CaseData::u_all() const { return u_range(-1, nu); }

std::vector<std::size_t> CaseData::g_all() const {
  std::vector<std::size_t> out(g.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> CaseData::m_all() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.grade[i] < 0) out.push_back(i);
  return out;
}

GradedLieAlgebra horospherical_extend(const GradedLieAlgebra& l, const LieModule& u, int z_weight) {
  std::size_t dl = l.dim();
  std::size_t z = dl;
  std::size_t off = dl + 1;
  GradedLieAlgebra g(dl + 1 + u.dim);
  std::size_t wdim = l.weight.front().size();
  for (std::size_t i = 0; i < dl; ++i) {
    g.labels[i] = l.labels[i];
    g.grade[i] = l.grade[i];
    g.weight[i] = l.weight[i];
    for (std::size_t j = i + 1; j < dl; ++j)
      if (!l.bracket(i, j).empty()) g.set_bracket(i, j, l.bracket(i, j));
  }
  g.labels[z] = "z";
  g.grade[z] = 0;
  g.weight[z] = WeightKey(wdim, 0);
  for (std::size_t k = 0; k < u.dim; ++k) {
    g.labels[off + k] = u.labels[k];
    g.grade[off + k] = u.grade[k];
    WeightKey w(wdim, 0);
    for (std::size_t c = 0; c + 1 < wdim; ++c) {
      RationalScalar twice = 2 * u.weight[k][c];
      w[c] = static_cast<int>(twice.get_num().get_si());
    }
    w[wdim - 1] = 1;
    g.weight[off + k] = w;
    g.set_bracket(z, off + k, {{off + k, RationalScalar(z_weight)}});
  }
  for (std::size_t i = 0; i < dl; ++i) {
    std::vector<SparseVec> cols(u.dim);
    for (const auto& e : u.action[i].entries()) cols[e.col].emplace_back(off + e.row, e.value);
    for (std::size_t k = 0; k < u.dim; ++k)
      if (!cols[k].empty()) g.set_bracket(i, off + k, cols[k]);
  }
  return g;
}

CaseData build_case(const std::string& id, int z_weight) {
  CaseData c;
  c.hc = make_case(id);
  c.rs = build_root_system(c.hc.family, c.hc.rank);
  c.chevalley = ChevalleyConstants(c.rs);
  c.e = characteristic_element(c.rs, c.hc.grading_root);
  c.l = build_semisimple(c.rs, c.chevalley);
  apply_grading(c.l, c.rs, c.e);
  GeneratorAction gens;
  if (c.hc.family == Family::F) {
    gens = f4_module_26();
  } else {
    std::vector<int> hw(static_cast<std::size_t>(c.hc.rank), 0);
    hw[static_cast<std::size_t>(c.hc.module_node - 1)] = 1;
    gens = minuscule_module(c.rs.cartan_matrix, hw);
  }
  c.u = module_from_generators(c.rs, c.chevalley, gens);
  grade_module(c.u, c.e);
  c.z_weight = z_weight;
  c.g = horospherical_extend(c.l, c.u, z_weight);
  c.dim_l = c.l.dim();
  c.z_index = c.dim_l;
  c.u_offset = c.dim_l + 1;
  c.mu = -c.g.min_grade();
  c.nu = 0;
  for (int gr : c.u.grade) c.nu = std::max(c.nu, gr);
  return c;
}

std::shared_ptr<const CaseData> get_case(const std::string& id) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CaseData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  auto c = std::make_shared<const CaseData>(build_case(id, 1));
  cache[id] = c;
  return c;
}

bool check_p0(const CaseData& c) {
  for (std::size_t i : c.l_all())
    if (!c.g.bracket(i, c.z_index).empty()) return false;
  for (std::size_t i : c.l_range(-c.mu, -1))
    for (std::size_t k : c.u_range(-1, -1))
      if (!c.g.bracket(i, k).empty()) return false;
  return true;
}

bool verify_p1(const CaseData& c) {
  auto xs = c.l_range(-c.mu + 1, c.mu);
  for (std::size_t k : c.u_range(0, c.nu)) xs.push_back(k);
  auto lm = c.l_range(-c.mu, -1);
  std::size_t n = c.g.dim();
  QMatrixBuilder b(lm.size() * n, xs.size());
  for (std::size_t a = 0; a < lm.size(); ++a)
    for (std::size_t j = 0; j < xs.size(); ++j)
      for (const auto& [k, v] : c.g.bracket(lm[a], xs[j])) b.add(a * n + k, j, v);
  return certified_rank(b.build()) == xs.size();
}

}  // namespace hv
