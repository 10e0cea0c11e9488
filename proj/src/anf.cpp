#include "zhegalkin/anf.hpp"

#include <utility>

#include "zhegalkin/errors.hpp"
#include "zhegalkin/kernels.hpp"

namespace zhegalkin {

ModMatrix::ModMatrix(Modulus k, std::size_t dim, std::vector<Digit> entries)
    : k_(k), dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw ContractError("matrix of dimension " + std::to_string(dim_) + " needs " +
                        std::to_string(dim_ * dim_) + " entries");
  }
  for (auto& e : entries_) e %= k_.value();
}

ModMatrix ModMatrix::identity(Modulus k, std::size_t dim) {
  std::vector<Digit> e(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1;
  return ModMatrix(k, dim, std::move(e));
}

std::vector<Digit> ModMatrix::column(std::size_t c) const {
  std::vector<Digit> col(dim_);
  for (std::size_t r = 0; r < dim_; ++r) col[r] = at(r, c);
  return col;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.k_ != b.k_ || a.dim_ != b.dim_) throw ContractError("matrix shape or modulus mismatch");
  const auto n = a.dim_;
  std::vector<Digit> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Digit acc = 0;
      for (std::size_t t = 0; t < n; ++t) acc = a.k_.add(acc, a.k_.mul(a.at(i, t), b.at(t, j)));
      out[i * n + j] = acc;
    }
  }
  return ModMatrix(a.k_, n, std::move(out));
}

ModMatrix invert(const ModMatrix& a) {
  const auto& k = a.modulus();
  const auto n = a.dim();
  std::vector<Digit> left(a.entries().begin(), a.entries().end());
  auto right = ModMatrix::identity(k, n);
  std::vector<Digit> inv(right.entries().begin(), right.entries().end());

  auto swap_rows = [n](std::vector<Digit>& m, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m[r1 * n + c], m[r2 * n + c]);
  };

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && left[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw ContractError("matrix is singular mod " + std::to_string(k.value()));
    if (pivot != col) {
      swap_rows(left, pivot, col);
      swap_rows(inv, pivot, col);
    }
    const Digit scale = k.inverse(left[col * n + col]);
    for (std::size_t c = 0; c < n; ++c) {
      left[col * n + c] = k.mul(left[col * n + c], scale);
      inv[col * n + c] = k.mul(inv[col * n + c], scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Digit factor = left[r * n + col];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        left[r * n + c] = k.sub(left[r * n + c], k.mul(factor, left[col * n + c]));
        inv[r * n + c] = k.sub(inv[r * n + c], k.mul(factor, inv[col * n + c]));
      }
    }
  }
  return ModMatrix(k, n, std::move(inv));
}

namespace {

void require_transform_size(const Modulus& k) {
  if (k.value() > kMaxTransformModulus) {
    throw SizeLimitError("transform matrices for k=" + std::to_string(k.value()) +
                         " exceed the limit of k <= " + std::to_string(kMaxTransformModulus));
  }
}

}  // namespace

ModMatrix power_matrix(Modulus k) {
  require_transform_size(k);
  const std::size_t n = k.value();
  std::vector<Digit> e(n * n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t d = 0; d < n; ++d) e[v * n + d] = k.pow(static_cast<Digit>(v), d);
  }
  return ModMatrix(k, n, std::move(e));
}

TransformPair build_transform_pair(Modulus k) {
  auto q = power_matrix(k);
  auto p = invert(q);
  const auto id = ModMatrix::identity(k, k.value());
  if (q * p != id || p * q != id) {
    throw ContractError("QP = PQ = I failed for k=" + std::to_string(k.value()));
  }
  return TransformPair{k, std::move(q), std::move(p)};
}

namespace {

std::vector<Digit> transformed_cells(const DigitGrid& grid, const ModMatrix& matrix) {
  std::vector<Digit> cells(grid.cells().begin(), grid.cells().end());
  kernels::omp::axis_transform(cells, grid.modulus(), grid.n(), grid.m(), matrix.entries());
  return cells;
}

}  // namespace

Polynomial anf_transform(const TruthTable& table) {
  const auto pair = build_transform_pair(table.modulus());
  return Polynomial(table.modulus(), table.n(), table.m(), transformed_cells(table, pair.p));
}

Polynomial anf_transform_kronecker(const TruthTable& table) {
  const auto& k = table.modulus();
  checked_power(k.value(), 2 * table.n(), 100'000'000);
  const auto pair = build_transform_pair(k);
  const auto rows = table.rows();
  const auto m = table.m();

  std::vector<Digit> cells(rows * m, 0);
  std::vector<Digit> tensor;
  std::vector<Digit> next;
  for (std::uint64_t r = 0; r < rows; ++r) {
    auto f = table.row(r);
    bool any = false;
    for (Digit v : f) any = any || v != 0;
    if (!any) continue;

    // p_{x_1} (x) p_{x_2} (x) ... (x) p_{x_n}
    const auto x = assignment_at(k, table.n(), r);
    tensor.assign(1, 1);
    for (Digit xi : x.digits()) {
      const auto p = pair.p_column(xi);
      next.assign(tensor.size() * p.size(), 0);
      for (std::size_t i = 0; i < tensor.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) next[i * p.size() + j] = k.mul(tensor[i], p[j]);
      }
      tensor.swap(next);
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (f[c] == 0) continue;
      for (std::size_t i = 0; i < rows; ++i) {
        cells[i * m + c] = k.add(cells[i * m + c], k.mul(f[c], tensor[i]));
      }
    }
  }
  return Polynomial(k, table.n(), m, std::move(cells));
}

TruthTable inverse_transform(const Polynomial& poly) {
  const auto q = power_matrix(poly.modulus());
  return TruthTable(poly.modulus(), poly.n(), poly.m(), transformed_cells(poly, q));
}

std::vector<Digit> evaluate(const Polynomial& poly, const Assignment& point) {
  if (point.modulus() != poly.modulus() || point.size() != poly.n()) {
    throw ContractError("evaluation point does not match the polynomial's k and n");
  }
  const auto& k = poly.modulus();
  std::vector<Digit> result(poly.m(), 0);
  for (std::uint64_t mono = 0; mono < poly.rows(); ++mono) {
    const auto degrees = assignment_at(k, poly.n(), mono);
    Digit term = 1;
    for (std::size_t i = 0; i < poly.n(); ++i) term = k.mul(term, k.pow(point[i], degrees[i]));
    for (std::size_t c = 0; c < poly.m(); ++c) {
      result[c] = k.add(result[c], k.mul(poly.at(mono, c), term));
    }
  }
  return result;
}

std::string render(const Polynomial& poly, std::size_t out) {
  std::string text;
  for (std::uint64_t mono = 0; mono < poly.rows(); ++mono) {
    const Digit coeff = poly.at(mono, out);
    if (coeff == 0) continue;
    const auto degrees = assignment_at(poly.modulus(), poly.n(), mono);

    std::string vars;
    for (std::size_t i = 0; i < poly.n(); ++i) {
      if (degrees[i] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += "x" + std::to_string(i + 1);
      if (degrees[i] > 1) vars += "^" + std::to_string(degrees[i]);
    }

    if (!text.empty()) text += " + ";
    if (vars.empty()) {
      text += std::to_string(coeff);
    } else if (coeff == 1) {
      text += vars;
    } else {
      text += std::to_string(coeff) + "*" + vars;
    }
  }
  return text.empty() ? "0" : text;
}

Polynomial parse_polynomial(std::string_view text) { return Polynomial(text::parse_grid(text)); }

std::string serialize(const Polynomial& poly, std::span<const std::string> comments) {
  return text::serialize_grid(poly, comments);
}

}  // namespace zhegalkin
