#include "lfd/quiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "lfd/errors.hpp"
#include "lfd/linalg.hpp"

namespace lfd {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) throw InputError("duplicate vertex id '" + vertices_[i] + "'");
  }
  for (const auto& a : arrows_) {
    if (a.source >= vertices_.size() || a.target >= vertices_.size())
      throw InputError("arrow endpoint is not a declared vertex");
  }
}

Quiver Quiver::from_names(std::vector<std::string> vertices,
                          const std::vector<std::pair<std::string, std::string>>& arrows) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], i);
  std::vector<Arrow> as;
  for (const auto& [s, t] : arrows) {
    auto is = idx.find(s), it = idx.find(t);
    if (is == idx.end() || it == idx.end()) throw InputError("arrow " + s + "->" + t + " uses an undeclared vertex");
    as.push_back({is->second, it->second});
  }
  return Quiver(std::move(vertices), std::move(as));
}

Quiver Quiver::numbered(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  std::vector<Arrow> as;
  for (auto [s, t] : arrows) as.push_back({s, t});
  return Quiver(std::move(names), std::move(as));
}

std::size_t Quiver::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

bool Quiver::has_loop_at(std::size_t v) const {
  return std::any_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.source == v && a.target == v; });
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices_.size();
  for (const auto& a : arrows_) {
    auto ra = find(a.source), rb = find(a.target);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

std::vector<std::size_t> Quiver::incident_arrows(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v || arrows_[a].target == v) out.push_back(a);
  return out;
}

// --- DimVector -------------------------------------------------------------

bool DimVector::is_sincere() const {
  return !v_.empty() && std::all_of(v_.begin(), v_.end(), [](long long x) { return x >= 1; });
}
bool DimVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](long long x) { return x >= 0; });
}
bool DimVector::is_positive() const { return is_nonnegative() && !is_zero(); }
bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](long long x) { return x == 0; });
}
long long DimVector::sum() const { return std::accumulate(v_.begin(), v_.end(), 0LL); }
long long DimVector::max_entry() const { return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end()); }

bool DimVector::leq(const DimVector& other) const {
  if (other.size() != size()) throw DimensionMismatch("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (v_[i] > other.v_[i]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  if (o.size() != size()) throw DimensionMismatch("dimension vector length mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.v_[i] += o.v_[i];
  return r;
}
DimVector DimVector::operator-(const DimVector& o) const {
  if (o.size() != size()) throw DimensionMismatch("dimension vector length mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.v_[i] -= o.v_[i];
  return r;
}
DimVector DimVector::operator-() const { return *this * -1; }
DimVector DimVector::operator*(long long s) const {
  DimVector r = *this;
  for (auto& x : r.v_) x *= s;
  return r;
}

std::string DimVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

std::size_t DimVectorHash::operator()(const DimVector& d) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (long long x : d.entries()) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
  return h;
}

// --- forms -------------------------------------------------------------------

void require_same_length(const Quiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count())
    throw DimensionMismatch("vector of length " + std::to_string(d.size()) + " for a quiver with " +
                            std::to_string(q.vertex_count()) + " vertices");
}

QuiverInput support_subquiver(const Quiver& q, const DimVector& d) {
  require_same_length(q, d);
  std::vector<std::size_t> index(q.vertex_count(), q.vertex_count());
  std::vector<std::string> names;
  std::vector<long long> dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (d[v] != 0) {
      index[v] = names.size();
      names.push_back(q.name(v));
      dims.push_back(d[v]);
    }
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    if (d[a.source] != 0 && d[a.target] != 0) arrows.push_back({index[a.source], index[a.target]});
  return {Quiver(names, arrows), DimVector(dims)};
}

IntMatrix euler_matrix(const Quiver& q) {
  IntMatrix e = int_identity(q.vertex_count());
  for (const auto& a : q.arrows()) e(a.source, a.target) -= 1;
  return e;
}

IntMatrix cartan_matrix(const Quiver& q) {
  const auto e = euler_matrix(q);
  return e + e.transposed();
}

long long euler_form(const Quiver& q, const DimVector& m, const DimVector& n) {
  require_same_length(q, m);
  require_same_length(q, n);
  long long s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * n[i];
  for (const auto& a : q.arrows()) s -= m[a.source] * n[a.target];
  return s;
}

long long sym_form(const Quiver& q, const DimVector& m, const DimVector& n) {
  return euler_form(q, m, n) + euler_form(q, n, m);
}

long long tits_form(const Quiver& q, const DimVector& d) { return euler_form(q, d, d); }

long long rep_dimension(const Quiver& q, const DimVector& d) {
  require_same_length(q, d);
  long long s = 0;
  for (const auto& a : q.arrows()) s += d[a.source] * d[a.target];
  return s;
}

// --- classification ----------------------------------------------------------

namespace {

bool positive_definite(const IntMatrix& c) {
  // Leading principal minors via fraction-free elimination without pivoting:
  // the k-th pivot equals the k-th leading minor divided by the previous one.
  const std::size_t n = c.rows();
  Matrix<mpz_class> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(c(i, j));
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return true;
}

std::vector<std::vector<std::size_t>> neighbours(const Quiver& q) {
  std::vector<std::vector<std::size_t>> nb(q.vertex_count());
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) continue;
    nb[a.source].push_back(a.target);
    nb[a.target].push_back(a.source);
  }
  return nb;
}

// Length of the arm leaving `branch` through `first` (number of vertices).
std::size_t arm_length(const std::vector<std::vector<std::size_t>>& nb, std::size_t branch, std::size_t first) {
  std::size_t len = 1, prev = branch, cur = first;
  while (nb[cur].size() == 2) {
    std::size_t next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return nb[cur].size() == 1 ? len : 0;
}

void name_shape(const Quiver& q, GraphClass& g) {
  const std::size_t n = q.vertex_count();
  const auto nb = neighbours(q);
  if (!is_tree(q)) {
    // Connected non-trees among Dynkin/affine graphs are the cycles.
    if (g.kind == GraphClass::Kind::Tame) g.family = 'A';
    return;
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (nb[v].size() >= 3) branch.push_back(v);
  if (branch.empty()) {
    g.family = 'A';
    return;
  }
  if (branch.size() == 2) {
    g.family = 'D';
    return;
  }
  if (branch.size() != 1) return;
  std::vector<std::size_t> arms;
  for (auto w : nb[branch[0]]) arms.push_back(arm_length(nb, branch[0], w));
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 4) {
    g.family = 'D';
    return;
  }
  if (arms.size() != 3) return;
  if (arms[0] == 1 && arms[1] == 1) {
    g.family = 'D';
  } else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 5) {
    g.family = 'E';
  } else if ((arms[0] == 2 && arms[1] == 2 && arms[2] == 2) || (arms[0] == 1 && arms[1] == 3 && arms[2] == 3)) {
    g.family = 'E';
  }
}

}  // namespace

std::string GraphClass::name() const {
  switch (kind) {
    case Kind::Dynkin:
      return std::string(1, family) + std::to_string(rank);
    case Kind::Tame:
      return "~" + std::string(1, family) + std::to_string(rank);
    case Kind::Wild:
      break;
  }
  return "wild";
}

GraphClass classify_graph(const Quiver& q) {
  if (!q.is_connected()) throw DisconnectedQuiver("classification needs a connected quiver");
  const auto c = cartan_matrix(q);
  GraphClass g;
  if (positive_definite(c)) {
    g.kind = GraphClass::Kind::Dynkin;
    g.rank = q.vertex_count();
    name_shape(q, g);
    return g;
  }
  // A connected graph is affine iff its Cartan matrix has a strictly positive
  // null vector; then the radical is one-dimensional.
  RationalField k;
  auto kernel = nullspace(k, to_field(k, c));
  if (kernel.cols() == 1) {
    std::vector<mpq_class> v(kernel.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = kernel(i, 0);
    mpz_class den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class gcd = 0;
    for (const auto& x : v) {
      ints.push_back(x.get_num() * (den / x.get_den()));
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
    }
    const int sign = ints[0] < 0 ? -1 : 1;
    bool all_positive = true;
    std::vector<long long> delta;
    for (auto& x : ints) {
      x = x / gcd * sign;
      if (x <= 0) all_positive = false;
      delta.push_back(x.get_si());
    }
    if (all_positive) {
      g.kind = GraphClass::Kind::Tame;
      g.rank = q.vertex_count() - 1;
      g.delta = DimVector(std::move(delta));
      name_shape(q, g);
      return g;
    }
  }
  g.kind = GraphClass::Kind::Wild;
  return g;
}

bool is_tree(const Quiver& q) { return q.is_connected() && q.arrow_count() + 1 == q.vertex_count(); }

std::vector<std::size_t> sources(const Quiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    bool incoming = std::any_of(q.arrows().begin(), q.arrows().end(), [v](const Arrow& a) { return a.target == v; });
    if (!incoming) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> sinks(const Quiver& q) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    bool outgoing = std::any_of(q.arrows().begin(), q.arrows().end(), [v](const Arrow& a) { return a.source == v; });
    if (!outgoing) out.push_back(v);
  }
  return out;
}

Stages stages(const Quiver& q) {
  if (!q.is_connected()) throw DisconnectedQuiver("stages need a connected quiver");
  const std::size_t n = q.vertex_count();
  std::vector<std::optional<long long>> h(n);
  std::vector<std::vector<std::pair<std::size_t, long long>>> adj(n);
  for (const auto& a : q.arrows()) {
    adj[a.source].push_back({a.target, 1});
    adj[a.target].push_back({a.source, -1});
  }
  h[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto [w, step] : adj[v]) {
      const long long want = *h[v] + step;
      if (!h[w]) {
        h[w] = want;
        queue.push_back(w);
      } else if (*h[w] != want) {
        throw CyclicQuiver("no grading with h(t)-h(s)=1 exists: the quiver has a cycle of nonzero net orientation");
      }
    }
  }
  long long lo = 0;
  for (const auto& x : h) lo = std::min(lo, *x);
  Stages s;
  for (const auto& x : h) s.level.push_back(*x - lo);
  const auto hi = *std::max_element(s.level.begin(), s.level.end());
  s.groups.resize(static_cast<std::size_t>(hi) + 1);
  for (std::size_t v = 0; v < n; ++v) s.groups[static_cast<std::size_t>(s.level[v])].push_back(v);
  return s;
}

// --- JSON --------------------------------------------------------------------

QuiverInput parse_quiver_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("quiver JSON must be an object");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw InputError("each arrow must be a [source, target] pair");
      auto name = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      arrows.emplace_back(name(a[0]), name(a[1]));
    }
    auto q = Quiver::from_names(vertices, arrows);
    DimVector d = DimVector::zero(q.vertex_count());
    if (j.contains("dim")) {
      const auto& dim = j.at("dim");
      if (dim.is_object()) {
        for (auto it = dim.begin(); it != dim.end(); ++it) d[q.index_of(it.key())] = it.value().get<long long>();
      } else if (dim.is_array()) {
        if (dim.size() != q.vertex_count()) throw DimensionMismatch("dim array length differs from vertex count");
        for (std::size_t i = 0; i < dim.size(); ++i) d[i] = dim[i].get<long long>();
      } else {
        throw InputError("dim must be an object or an array");
      }
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] < 0) throw InputError("negative dimension at vertex " + q.name(i));
    return {std::move(q), std::move(d)};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed quiver JSON: ") + e.what());
  }
}

QuiverInput parse_quiver_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_quiver_json(j);
}

Json dim_to_json(const Quiver& q, const DimVector& d) {
  require_same_length(q, d);
  Json dim = Json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) dim[q.name(i)] = d[i];
  return dim;
}

Json quiver_to_json(const Quiver& q, const DimVector& d) {
  Json j;
  j["vertices"] = q.vertices();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({q.name(a.source), q.name(a.target)});
  j["arrows"] = arrows;
  j["dim"] = dim_to_json(q, d);
  return j;
}

}  // namespace lfd
