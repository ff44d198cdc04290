#include "hyperperron/tensor_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperperron {

namespace {

void check_vector(std::span<const double> x, std::size_t expected) {
  if (x.size() != expected) {
    throw std::invalid_argument("vector has length " + std::to_string(x.size()) + ", expected " +
                                std::to_string(expected));
  }
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("vector has a non-finite entry");
}

void check_vertex(const Hypergraph& h, Vertex j) {
  if (j >= h.n()) throw std::out_of_range("vertex " + std::to_string(j + 1) + " out of range");
}

double ipow(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// prod_{l in e, l != skip} x_l
double product_except(const Edge& e, std::span<const double> x, Vertex skip) {
  double p = 1.0;
  for (Vertex l : e)
    if (l != skip) p *= x[l];
  return p;
}

}  // namespace

double laplacian_form(const Hypergraph& h, std::span<const double> x) {
  check_vector(x, h.n());
  const auto k = h.k();
  double total = 0.0;
  for (const auto& e : h.edges()) {
    double powers = 0.0;
    double product = 1.0;
    for (Vertex i : e) {
      powers += ipow(x[i], k);
      product *= x[i];
    }
    total += powers - static_cast<double>(k) * product;
  }
  return total;
}

std::vector<double> laplacian_apply(const Hypergraph& h, std::span<const double> x) {
  check_vector(x, h.n());
  const auto k = h.k();
  std::vector<double> out(h.n(), 0.0);
  for (Vertex i = 0; i < h.n(); ++i) {
    double acc = static_cast<double>(h.degree(i)) * ipow(x[i], k - 1);
    for (auto e : h.incident(i)) acc -= product_except(h.edge(e), x, i);
    out[i] = acc;
  }
  return out;
}

std::vector<double> embed_without(Vertex j, std::span<const double> y) {
  if (j > y.size()) throw std::out_of_range("vertex " + std::to_string(j + 1) + " out of range");
  std::vector<double> x(y.size() + 1, 0.0);
  std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(j), x.begin());
  std::copy(y.begin() + static_cast<std::ptrdiff_t>(j), y.end(),
            x.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  return x;
}

std::vector<double> restrict_without(Vertex j, std::span<const double> x) {
  if (j >= x.size()) throw std::out_of_range("vertex " + std::to_string(j + 1) + " out of range");
  std::vector<double> y;
  y.reserve(x.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (i != j) y.push_back(x[i]);
  return y;
}

std::vector<double> principal_apply(const Hypergraph& h, Vertex j, std::span<const double> y) {
  check_vertex(h, j);
  check_vector(y, h.n() - 1);
  // Setting x_j = 0 kills every product over an edge through j, which is
  // exactly the principal restriction.
  return restrict_without(j, laplacian_apply(h, embed_without(j, y)));
}

HEigenResidual h_eigen_residual(const Hypergraph& h, Vertex j, double lambda,
                                std::span<const double> y) {
  check_vertex(h, j);
  check_vector(y, h.n() - 1);
  double ymax = 0.0;
  for (double v : y) {
    if (v < 0.0) throw std::invalid_argument("eigenvector candidate has a negative entry");
    ymax = std::max(ymax, v);
  }
  if (ymax == 0.0) throw std::invalid_argument("eigenvector candidate is the zero vector");

  const auto ly = principal_apply(h, j, y);
  HEigenResidual out;
  out.lambda = lambda;
  const double cutoff = kSupportTolerance * ymax;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] <= cutoff) continue;
    out.support.push_back(i < j ? i : i + 1);
    double r = std::abs(ly[i] - lambda * ipow(y[i], h.k() - 1));
    out.residual_inf = std::max(out.residual_inf, r);
  }
  return out;
}

}  // namespace hyperperron
