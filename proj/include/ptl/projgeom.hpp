#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptl/linalg.hpp"

namespace ptl {

/// Point of a projective space, an index into ProjSpace's canonical point list.
using point_t = std::uint32_t;

/// Projective subspace in canonical form: basis rows in reduced echelon form
/// over the field of the ambient space. Equality of subspaces is byte equality
/// of the basis. The empty subspace (projdim -1) has zero rows; the full space
/// has d+1 rows.
struct Subspace {
  Mat basis;  // rows are representative vectors, RREF
  int projdim() const { return int(basis.rows) - 1; }
  bool operator==(const Subspace& o) const { return basis == o.basis; }
};

/// Ordered tuple of pairwise-distinct points.
struct Config {
  std::vector<point_t> pts;
  std::size_t size() const { return pts.size(); }
};

struct ConfigInfo {
  bool collinear = false;
  bool general = false;
  std::vector<std::size_t> i_disjoint;  // indices i with p_i outside span of the rest
  bool disjoint = false;
};

/// Canonical model of PG(d, q): the full point enumeration in lexicographic
/// order on normalized coordinate vectors, plus incidence and configuration
/// queries. Immutable after make(); queries are pure.
class ProjSpace {
public:
  /// d >= 2 normally; d = 1 only with allow_line (parity experiments).
  static ProjSpace make(FieldPtr f, std::uint32_t d, bool allow_line = false);

  const Field& field() const { return *f_; }
  const FieldPtr& field_ptr() const { return f_; }
  std::uint32_t dim() const { return d_; }
  std::uint32_t size() const { return std::uint32_t(pts_.size()); }

  const std::vector<felem>& point(point_t id) const { return pts_[id]; }
  point_t index_of(const std::vector<felem>& v) const;

  /// Scales v so its first nonzero coordinate is 1. Idempotent.
  static std::vector<felem> normalize(const Field& f, std::vector<felem> v);

  Subspace span(std::span<const point_t> pts) const;
  Subspace span_vectors(const Mat& rows) const;
  bool contains(const Subspace& s, point_t p) const;
  Subspace meet(const Subspace& a, const Subspace& b) const;
  Subspace line_through(point_t p, point_t q) const;
  /// All points lying in s, ascending.
  std::vector<point_t> points_of(const Subspace& s) const;

  std::vector<Subspace> lines() const;        // all projdim-1 subspaces
  std::vector<Subspace> hyperplanes() const;  // all projdim d-1 subspaces

  ConfigInfo config_predicates(const Config& t) const;

  std::string point_literal(point_t id) const;  // "[x0:x1:...:xd]"
  point_t parse_point(const std::string& text) const;
  Config parse_config(const std::string& text) const;

private:
  FieldPtr f_;
  std::uint32_t d_ = 0;
  std::vector<std::vector<felem>> pts_;
  std::unordered_map<std::uint64_t, point_t> index_;
  std::uint64_t encode(const std::vector<felem>& v) const;
};

/// (q^(d+1) - 1)/(q - 1), the number of points of PG(d, q).
std::uint64_t pg_size(std::uint64_t q, std::uint32_t d);

}  // namespace ptl
