#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lfd/matrix.hpp"

namespace lfd {

using Json = nlohmann::ordered_json;

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver. Vertex order and arrow order are fixed at construction and
/// define the coordinate order of every downstream object (Rep(Q,d),
/// Saito matrix columns, c-matrix blocks).
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  /// Convenience: arrows given by vertex names.
  static Quiver from_names(std::vector<std::string> vertices,
                           const std::vector<std::pair<std::string, std::string>>& arrows);
  /// Vertices named "1".."n", arrows as 0-based index pairs.
  static Quiver numbered(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::string& name(std::size_t v) const { return vertices_.at(v); }
  std::size_t index_of(const std::string& name) const;

  bool has_loop_at(std::size_t v) const;
  bool has_loops() const;
  bool is_connected() const;
  /// Arrows incident to v (loops counted once), in arrow order.
  std::vector<std::size_t> incident_arrows(std::size_t v) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Integer vector indexed by vertices: dimension vectors, characters, roots.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<long long> entries) : v_(std::move(entries)) {}
  DimVector(std::initializer_list<long long> entries) : v_(entries) {}
  static DimVector zero(std::size_t n) { return DimVector(std::vector<long long>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t k) {
    auto d = zero(n);
    d[k] = 1;
    return d;
  }

  std::size_t size() const { return v_.size(); }
  long long& operator[](std::size_t i) { return v_[i]; }
  long long operator[](std::size_t i) const { return v_[i]; }
  const std::vector<long long>& entries() const { return v_; }

  bool is_sincere() const;
  bool is_positive() const;
  bool is_nonnegative() const;
  bool is_zero() const;
  long long sum() const;
  long long max_entry() const;
  /// Componentwise <=.
  bool leq(const DimVector& other) const;
  /// Componentwise <= and different.
  bool less(const DimVector& other) const { return leq(other) && *this != other; }

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  DimVector operator-() const;
  DimVector operator*(long long s) const;

  std::string to_string() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector& a, const DimVector& b) { return a.v_ <=> b.v_; }

 private:
  std::vector<long long> v_;
};

struct DimVectorHash {
  std::size_t operator()(const DimVector& d) const noexcept;
};

/// E = I - A, A[i][j] = number of arrows i -> j.
IntMatrix euler_matrix(const Quiver& q);
/// C = E + E^T.
IntMatrix cartan_matrix(const Quiver& q);
/// <m,n>_Q = m^T E n.
long long euler_form(const Quiver& q, const DimVector& m, const DimVector& n);
/// (m,n)_Q = m^T C n.
long long sym_form(const Quiver& q, const DimVector& m, const DimVector& n);
/// q_Q(d) = <d,d>_Q.
long long tits_form(const Quiver& q, const DimVector& d);
/// dim Rep(Q,d) = sum over arrows of d_s * d_t.
long long rep_dimension(const Quiver& q, const DimVector& d);

struct GraphClass {
  enum class Kind { Dynkin, Tame, Wild };
  Kind kind = Kind::Wild;
  /// 'A', 'D', 'E' for Dynkin and Tame (affine) shapes; '?' when the shape
  /// could not be named.
  char family = '?';
  /// Dynkin: #Q0. Tame: #Q0 - 1 (the affine index).
  std::size_t rank = 0;
  std::optional<DimVector> delta;

  std::string name() const;
};

GraphClass classify_graph(const Quiver& q);

bool is_tree(const Quiver& q);
std::vector<std::size_t> sources(const Quiver& q);
std::vector<std::size_t> sinks(const Quiver& q);

/// Grading h with h(t a) - h(s a) = 1 for every arrow, normalized to min h = 0.
struct Stages {
  std::vector<long long> level;
  std::vector<std::vector<std::size_t>> groups;
  /// Index of the last stage (m in Q_0 = Q_0^0 u ... u Q_0^m).
  std::size_t top() const { return groups.empty() ? 0 : groups.size() - 1; }
};

Stages stages(const Quiver& q);

/// The single input format: {"vertices":[...],"arrows":[[s,t],...],"dim":{v:n}}.
struct QuiverInput {
  Quiver quiver;
  DimVector dim;
};

QuiverInput parse_quiver_json(const Json& j);
QuiverInput parse_quiver_text(const std::string& text);
Json quiver_to_json(const Quiver& q, const DimVector& d);
Json dim_to_json(const Quiver& q, const DimVector& d);

void require_same_length(const Quiver& q, const DimVector& d);

/// Full subquiver on the vertices with d_i != 0, with d restricted to it.
QuiverInput support_subquiver(const Quiver& q, const DimVector& d);

}  // namespace lfd
